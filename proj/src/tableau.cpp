#include "crystal/tableau.hpp"

#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "crystal/errors.hpp"

namespace crystal {

Partition Tableau::shape() const {
  Partition p;
  for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
  return p;
}

bool Tableau::is_semistandard(int max_entry) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int x = rows[r][c];
      if (x < 1 || x > max_entry) return false;
      if (c > 0 && rows[r][c - 1] > x) return false;
      if (r > 0 && rows[r - 1][c] >= x) return false;
    }
  }
  return true;
}

std::string Tableau::to_string() const {
  std::string s = "(";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    if (r > 0) s += "/";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      // entries above 9 would run together
      if (c > 0 && (rows[r][c] > 9 || rows[r][c - 1] > 9)) s += ",";
      s += std::to_string(rows[r][c]);
    }
  }
  return s + ")";
}

Tableau highest_weight_tableau(const Partition& shape) {
  Tableau t;
  for (std::size_t r = 0; r < shape.size(); ++r)
    if (shape[r] > 0) t.rows.emplace_back(shape[r], static_cast<int>(r + 1));
  return t;
}

Weight weight_tab(const Tableau& t, int n) {
  std::vector<int> content(n + 1, 0);
  for (const auto& row : t.rows)
    for (int x : row) {
      if (x < 1 || x > n + 1) throw DomainError("tableau entry out of range");
      ++content[x - 1];
    }
  return from_epsilon(content);
}

namespace {

struct Cell {
  std::size_t r, c;
};

// Unmatched i's (openers) and i+1's (closers) in reading order: right to
// left along each row, rows top to bottom.
struct Signature {
  std::vector<Cell> open;
  std::vector<Cell> close;
};

Signature signature(const Tableau& t, int i) {
  Signature s;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = t.rows[r].size(); c-- > 0;) {
      if (t.rows[r][c] == i) {
        s.open.push_back({r, c});
      } else if (t.rows[r][c] == i + 1) {
        if (!s.open.empty())
          s.open.pop_back();
        else
          s.close.push_back({r, c});
      }
    }
  return s;
}

}  // namespace

std::optional<Tableau> f_tab(const Tableau& t, int i) {
  const auto s = signature(t, i);
  if (s.open.empty()) return std::nullopt;
  // leftmost unmatched i in the reading word: the first one still open
  Tableau out = t;
  ++out.rows[s.open.front().r][s.open.front().c];
  return out;
}

std::optional<Tableau> e_tab(const Tableau& t, int i) {
  const auto s = signature(t, i);
  if (s.close.empty()) return std::nullopt;
  Tableau out = t;
  --out.rows[s.close.back().r][s.close.back().c];
  return out;
}

int epsilon_tab(const Tableau& t, int i) { return static_cast<int>(signature(t, i).close.size()); }
int phi_tab(const Tableau& t, int i) { return static_cast<int>(signature(t, i).open.size()); }

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n) {
  Tableau t;
  for (int len : shape)
    if (len > 0) t.rows.emplace_back(len, 0);
  std::vector<Tableau> out;
  const int top = n + 1;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == t.rows.size()) {
      out.push_back(t);
      return;
    }
    if (c == t.rows[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
    for (int x = lo; x <= top; ++x) {
      t.rows[r][c] = x;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return out;
}

std::uint64_t kostka(const Partition& shape, const std::vector<int>& mu) {
  const int size = std::accumulate(shape.begin(), shape.end(), 0);
  if (size != std::accumulate(mu.begin(), mu.end(), 0)) throw DomainError("shape and content sizes differ");
  if (mu.empty()) return size == 0 ? 1 : 0;
  const int n = static_cast<int>(mu.size()) - 1;
  std::uint64_t count = 0;
  for (const auto& t : enumerate_ssyt(shape, n)) {
    std::vector<int> content(mu.size(), 0);
    for (const auto& row : t.rows)
      for (int x : row) ++content[x - 1];
    if (content == mu) ++count;
  }
  return count;
}

TableauGraph generate_tableau_crystal(const RootDatum& d, const Partition& shape) {
  const int n = d.n;
  if (static_cast<int>(shape.size()) > n + 1) throw DomainError("shape has more than n+1 rows");
  for (std::size_t k = 1; k < shape.size(); ++k)
    if (shape[k] > shape[k - 1] || shape[k] < 0) throw DomainError("shape is not a partition");
  TableauGraph out{CrystalGraph(n), {}};
  auto decorate = [&](const Tableau& t) {
    CrystalNode node{t.to_string(), weight_tab(t, n), std::vector<int>(n), std::vector<int>(n)};
    for (int i = 1; i <= n; ++i) {
      node.eps[i - 1] = epsilon_tab(t, i);
      node.phi[i - 1] = phi_tab(t, i);
    }
    return node;
  };
  std::map<Tableau, std::size_t> index;
  const auto root = highest_weight_tableau(shape);
  out.graph.add_node(decorate(root));
  out.elements.push_back(root);
  index.emplace(root, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const auto k = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      auto next = f_tab(out.elements[k], i);
      if (!next) continue;
      auto it = index.find(*next);
      if (it == index.end()) {
        const auto id = out.graph.add_node(decorate(*next));
        out.elements.push_back(*next);
        it = index.emplace(*next, id).first;
        queue.push_back(id);
      }
      out.graph.add_edge(k, i, it->second);
    }
  }
  return out;
}

Partition shape_of_weight(const RootDatum& d, const Weight& w) {
  auto p = partition_of_weight(d, w);
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace crystal
