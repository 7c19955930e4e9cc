#pragma once

// Segments [i,j] (the indecomposable V^{i,j} of the left-pointing A_n
// quiver, i.e. the positive root alpha_i + ... + alpha_j) and multisets of
// them, which label orbits in E_{V,Omega} and hence irreducible components.

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace crystal {

using DimVector = std::vector<int>;

struct Segment {
  int i = 1;
  int j = 1;
  int length() const { return j - i + 1; }
  bool contains(int k) const { return i <= k && k <= j; }
  bool operator==(const Segment&) const = default;
  auto operator<=>(const Segment&) const = default;
};

// Canonical form keeps segments sorted by (i desc, j desc).
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(int n) : n_(n) {}
  Multisegment(int n, std::vector<Segment> segments);

  int rank() const { return n_; }
  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  std::size_t size() const { return segs_.size(); }

  DimVector dimvec() const;
  int total() const;  // sum of the dimension vector
  int count(const Segment& s) const;

  Multisegment with(const Segment& s) const;
  std::optional<Multisegment> without(const Segment& s) const;

  // Multiset union; ranks must agree.
  Multisegment operator+(const Multisegment& o) const;

  // r_{i,j} = #{[a,b] : a <= i, b >= j}: the rank of the composite V_j -> V_i
  // in the canonical representation. Out-of-range indices give 0.
  int composite_rank(int i, int j) const;

  std::string key() const;        // compact and unique, e.g. "3|4,9;3,7;2,4"
  std::string to_string() const;  // "{[4,9],[3,7],[2,4]}"

  bool operator==(const Multisegment&) const = default;
  auto operator<=>(const Multisegment&) const = default;

 private:
  void normalize();

  int n_ = 0;
  std::vector<Segment> segs_;
};

// All multisegments of rank n with the given dimension vector.
std::vector<Multisegment> enumerate_multisegments(int n, const DimVector& v);

// All multisegments with sum(dimvec) <= max_total, ordered by total, then
// canonically.
std::vector<Multisegment> enumerate_multisegments_up_to(int n, int max_total);

// Every dimension vector of length n with entries >= 0 and total <= max_total.
std::vector<DimVector> enumerate_dimvecs(int n, int max_total);

}  // namespace crystal
