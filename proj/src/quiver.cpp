#include "crystal/quiver.hpp"

#include <algorithm>

#include "crystal/errors.hpp"

namespace crystal {

bool Quiver::has_vertex(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Quiver::has_loops() const {
  return std::any_of(arrows.begin(), arrows.end(), [](const Arrow& a) { return a.src == a.dst; });
}

void Quiver::validate(bool allow_loops) const {
  for (const auto& a : arrows) {
    if (!has_vertex(a.src) || !has_vertex(a.dst))
      throw DomainError("arrow '" + a.id + "' has an endpoint outside the vertex set");
    if (!allow_loops && a.src == a.dst) throw DomainError("arrow '" + a.id + "' is a loop");
  }
  for (std::size_t i = 0; i < arrows.size(); ++i)
    for (std::size_t j = i + 1; j < arrows.size(); ++j)
      if (arrows[i].id == arrows[j].id) throw DomainError("duplicate arrow id '" + arrows[i].id + "'");
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& id) const {
  for (std::size_t k = 0; k < arrows.size(); ++k)
    if (arrows[k].id == id) return k;
  return std::nullopt;
}

Quiver Quiver::linear_a(int n) {
  if (n < 1) throw DomainError("rank must be at least 1");
  Quiver q;
  for (int v = 1; v <= n; ++v) q.vertices.push_back(v);
  for (int k = 1; k < n; ++k) q.arrows.push_back({"a" + std::to_string(k), k + 1, k});
  return q;
}

Quiver Quiver::jordan() { return Quiver{{1}, {{"t", 1, 1}}}; }

DoubleQuiver DoubleQuiver::type_a(int n, bool left_oriented) {
  if (n < 1) throw DomainError("rank must be at least 1");
  DoubleQuiver d;
  for (int v = 1; v <= n; ++v) d.quiver.vertices.push_back(v);
  for (int k = 1; k < n; ++k) {
    const std::size_t base = d.quiver.arrows.size();
    d.quiver.arrows.push_back({"a" + std::to_string(k), k + 1, k});
    d.quiver.arrows.push_back({"a" + std::to_string(k) + "bar", k, k + 1});
    d.bar.push_back(base + 1);
    d.bar.push_back(base);
    d.in_omega.push_back(left_oriented);
    d.in_omega.push_back(!left_oriented);
  }
  return d;
}

bool DoubleQuiver::is_left_oriented_type_a() const {
  const int n = static_cast<int>(num_vertices());
  return n >= 1 && *this == type_a(n, true);
}

Path Path::of_arrow(const Quiver& q, std::size_t a) {
  return Path{q.arrows.at(a).src, q.arrows.at(a).dst, {a}};
}

std::optional<Path> path_product(const Path& p, const Path& q) {
  if (q.target != p.source) return std::nullopt;
  Path r{q.source, p.target, q.arrows};
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  return r;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len) {
  if (max_len < 0) throw DomainError("max_len must be nonnegative");
  std::vector<Path> all;
  std::vector<Path> layer;
  for (int v : q.vertices) layer.push_back(Path::trivial(v));
  std::sort(layer.begin(), layer.end(), [](const Path& a, const Path& b) { return a.source < b.source; });
  all = layer;
  for (int len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : layer)
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (auto r = path_product(Path::of_arrow(q, a), p)) next.push_back(*r);
    auto written = [&](const Path& p) {
      std::vector<std::string> ids;
      for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) ids.push_back(q.arrows[*it].id);
      return ids;
    };
    std::sort(next.begin(), next.end(), [&](const Path& a, const Path& b) { return written(a) < written(b); });
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.source);
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += ' ';
    s += q.arrows[*it].id;
  }
  return s;
}

}  // namespace crystal
