#pragma once

// Root and weight arithmetic for sl_{n+1}. Weights live in the
// fundamental-weight basis, so <h_i, w> is a coordinate read.

#include <cstdint>
#include <string>
#include <vector>

namespace crystal {

using Partition = std::vector<int>;

struct RootDatum {
  int n = 0;                              // rank; the algebra is sl_{n+1}
  std::vector<std::vector<int>> cartan;   // n x n, symmetric

  static RootDatum type_a(int n);
  // Parses "A3" style labels.
  static RootDatum parse(const std::string& label);

  std::string label() const { return "A" + std::to_string(n); }
};

struct Weight {
  std::vector<int> coords;  // omega-basis, length n

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(int n) { return Weight(std::vector<int>(n, 0)); }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(int k) const;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;

  bool dominant() const;
  std::string to_string() const;
};

Weight fundamental_weight(const RootDatum& d, int i);
Weight simple_root(const RootDatum& d, int i);

// sum_i v_i alpha_i for a dimension vector v (length n).
Weight root_combination(const RootDatum& d, const std::vector<int>& v);

// <h_i, w>, 1 <= i <= n.
int pairing(const RootDatum& d, int i, const Weight& w);

// epsilon-basis view with the normalization eps_{n+1} coefficient = 0.
std::vector<int> to_epsilon(const Weight& w);
// Inverse of to_epsilon, modulo eps_1 + ... + eps_{n+1} = 0; accepts n+1 entries.
Weight from_epsilon(const std::vector<int>& eps);

Partition partition_of_weight(const RootDatum& d, const Weight& w);
Weight weight_of_partition(const RootDatum& d, const Partition& lambda);

// Weyl dimension formula; the independent oracle for |B(lambda)|.
std::uint64_t weyl_dim(const RootDatum& d, const Weight& w);

}  // namespace crystal
