#include "crystal/bridge.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "crystal/errors.hpp"

namespace crystal {

Multisegment tableau_to_multisegment(const Tableau& t, int n) {
  if (!t.is_semistandard(n + 1)) throw DomainError("not a semistandard tableau with entries <= " + std::to_string(n + 1));
  std::vector<Segment> segs;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const int i = static_cast<int>(r) + 1;
    for (int j : t.rows[r])
      if (j - 1 >= i) segs.push_back({i, j - 1});
  }
  return Multisegment(n, std::move(segs));
}

Tableau multisegment_to_tableau(const Multisegment& m, const DimVector& wdims) {
  const int n = m.rank();
  if (static_cast<int>(wdims.size()) != n) throw DomainError("framing vector has the wrong length");
  const auto d = RootDatum::type_a(n);
  const auto shape = shape_of_weight(d, Weight(wdims));
  Tableau t;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const int i = static_cast<int>(r) + 1;
    std::vector<int> tail;
    for (const auto& s : m.segments())
      if (s.i == i) tail.push_back(s.j + 1);
    if (static_cast<int>(tail.size()) > shape[r])
      throw DomainError(m.to_string() + " has too many segments starting at " + std::to_string(i));
    std::sort(tail.begin(), tail.end());
    std::vector<int> row(shape[r] - tail.size(), i);
    row.insert(row.end(), tail.begin(), tail.end());
    t.rows.push_back(std::move(row));
  }
  for (const auto& s : m.segments())
    if (s.i > static_cast<int>(shape.size()))
      throw DomainError(m.to_string() + " has a segment starting below the last row");
  if (!t.is_semistandard(n + 1)) throw DomainError(m.to_string() + " does not give a semistandard tableau");
  return t;
}

IsoResult crystal_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2) {
  IsoResult out;
  auto fail = [&](std::string why) {
    out.isomorphic = false;
    out.mismatch = std::move(why);
    return out;
  };
  if (g1.rank() != g2.rank()) return fail("ranks differ");
  if (g1.nodes().size() != g2.nodes().size())
    return fail("node counts differ: " + std::to_string(g1.nodes().size()) + " vs " +
                std::to_string(g2.nodes().size()));
  if (g1.nodes().empty()) {
    out.isomorphic = true;
    return out;
  }
  std::vector<std::optional<std::size_t>> to2(g1.nodes().size()), to1(g2.nodes().size());
  auto same = [&](std::size_t a, std::size_t b) {
    const auto &x = g1.node(a), &y = g2.node(b);
    return x.wt == y.wt && x.eps == y.eps && x.phi == y.phi;
  };
  auto describe = [&](std::size_t a, std::size_t b) { return g1.node(a).label + " / " + g2.node(b).label; };
  if (!same(g1.root(), g2.root())) return fail("root decorations differ at " + describe(g1.root(), g2.root()));
  to2[g1.root()] = g2.root();
  to1[g2.root()] = g1.root();
  out.matching.emplace_back(g1.root(), g2.root());
  std::deque<std::size_t> queue{g1.root()};
  while (!queue.empty()) {
    const auto a = queue.front();
    queue.pop_front();
    const auto b = *to2[a];
    for (int i = 1; i <= g1.rank(); ++i) {
      for (bool down : {true, false}) {
        const auto x = down ? g1.f(a, i) : g1.e(a, i);
        const auto y = down ? g2.f(b, i) : g2.e(b, i);
        const std::string op = (down ? "f_" : "e_") + std::to_string(i);
        if (x.has_value() != y.has_value()) return fail(op + " defined on one side only at " + describe(a, b));
        if (!x) continue;
        if (to2[*x] || to1[*y]) {
          if (to2[*x] != *y || to1[*y] != *x) return fail(op + " targets disagree at " + describe(a, b));
          continue;
        }
        if (!same(*x, *y)) return fail("decorations differ at " + describe(*x, *y));
        to2[*x] = *y;
        to1[*y] = *x;
        out.matching.emplace_back(*x, *y);
        queue.push_back(*x);
      }
    }
  }
  if (out.matching.size() != g1.nodes().size()) return fail("not every node is reachable from the root");
  out.isomorphic = true;
  return out;
}

}  // namespace crystal
