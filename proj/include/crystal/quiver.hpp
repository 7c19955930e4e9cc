#pragma once

// Quivers, double quivers with an orientation, and the path algebra product.
// Vertices are 1-based Dynkin labels.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace crystal {

struct Arrow {
  std::string id;
  int src = 0;
  int dst = 0;
  bool operator==(const Arrow&) const = default;
};

struct Quiver {
  std::vector<int> vertices;
  std::vector<Arrow> arrows;

  bool has_vertex(int v) const;
  bool has_loops() const;
  // Throws DomainError on a loop or an arrow with an unknown endpoint.
  void validate(bool allow_loops = false) const;
  std::optional<std::size_t> arrow_index(const std::string& id) const;

  // Vertices 1..n, arrows a_k : k+1 -> k (the left-pointing A_n quiver).
  static Quiver linear_a(int n);
  // One vertex with a loop "t". Only used for path algebra checks; the
  // representation layer rejects loops.
  static Quiver jordan();

  bool operator==(const Quiver&) const = default;
};

// Each Dynkin edge doubled into (a, a-bar); `omega` picks one of each pair.
struct DoubleQuiver {
  Quiver quiver;
  std::vector<std::size_t> bar;  // involution on arrow indices
  std::vector<bool> in_omega;

  std::size_t num_vertices() const { return quiver.vertices.size(); }
  int sign(std::size_t a) const { return in_omega[a] ? 1 : -1; }

  // Type A_n with Omega = {a_k : k+1 -> k}; ids "a{k}" and "a{k}bar".
  // With left_oriented = false, Omega is the right-pointing half instead.
  static DoubleQuiver type_a(int n, bool left_oriented = true);

  // True for type_a(n) with the default orientation (arrow order included).
  bool is_left_oriented_type_a() const;

  // Index of a_k (k+1 -> k) and of a_k-bar (k -> k+1) in a type-A double quiver.
  static std::size_t left_arrow(int k) { return 2 * static_cast<std::size_t>(k - 1); }
  static std::size_t right_arrow(int k) { return 2 * static_cast<std::size_t>(k - 1) + 1; }

  bool operator==(const DoubleQuiver&) const = default;
};

// beta = a_l ... a_1, stored in application order (arrows[0] = a_1).
struct Path {
  int source = 0;
  int target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  static Path trivial(int vertex) { return Path{vertex, vertex, {}}; }
  static Path of_arrow(const Quiver& q, std::size_t a);
  bool operator==(const Path&) const = default;
};

// p * q: first q, then p. Empty optional is the formal zero.
std::optional<Path> path_product(const Path& p, const Path& q);

// All paths of length <= max_len, trivial ones included, ordered by length and
// then lexicographically on the written arrow ids (a_l first).
std::vector<Path> enumerate_paths(const Quiver& q, int max_len);

std::string path_to_string(const Quiver& q, const Path& p);

}  // namespace crystal
