#pragma once

// Points of E_V (and of E_V x Hom(V,W)) for a double quiver, with exact
// rational matrices, plus the rank computations built on them.

#include <cstddef>
#include <string>
#include <vector>

#include "crystal/linalg.hpp"
#include "crystal/multisegment.hpp"
#include "crystal/quiver.hpp"
#include "crystal/random.hpp"

namespace crystal {

struct RepPoint {
  DoubleQuiver quiver;
  DimVector dims;            // dims[v - 1] = dim V_v
  std::vector<Matrix> maps;  // one per arrow, dims[dst] x dims[src]

  static RepPoint zero(const DoubleQuiver& q, const DimVector& dims);

  int dim(int vertex) const { return dims.at(vertex - 1); }
  Matrix& map(const std::string& id);
  const Matrix& map(const std::string& id) const;

  // Throws DomainError when a map has the wrong shape or the quiver has loops.
  void validate() const;

  // Same point with every Omega-bar map set to zero.
  RepPoint omega_part() const;
};

struct FramedPoint {
  RepPoint rep;
  DimVector wdims;
  std::vector<Matrix> framing;  // t_v : V_v -> W_v, shape wdims[v-1] x dims[v-1]

  static FramedPoint zero(const RepPoint& rep, const DimVector& wdims);
  void validate() const;
};

// g = (g_v) in G_V, one invertible matrix per vertex.
using GroupElement = std::vector<Matrix>;

GroupElement random_group_element(const DimVector& dims, Rng& rng, long range = 1000);
// x_a -> g_{t(a)} x_a g_{s(a)}^{-1}
RepPoint act(const GroupElement& g, const RepPoint& p);
// additionally t_v -> t_v g_v^{-1}
FramedPoint act(const GroupElement& g, const FramedPoint& fp);

// Block-diagonal sum; throws DomainError on a quiver mismatch.
RepPoint direct_sum(const RepPoint& p, const RepPoint& q);

// The indecomposable V^{i,j} of the left-pointing A_n quiver (Omega-bar maps zero).
RepPoint segment_rep(int n, const Segment& s);

// Direct sum of V^{i,j} over the segments, basis at each vertex ordered by
// the canonical segment order.
RepPoint segment_sum(const Multisegment& m);

// psi_v(x) = sum_{t(a)=v} sign(a) x_a x_{a-bar}, one square matrix per vertex.
std::vector<Matrix> moment_map(const RepPoint& p);
bool moment_map_vanishes(const RepPoint& p);

// dim V_i - rank of [x_a : t(a) = i], both orientations included.
int epsilon_point(const RepPoint& p, int i);

// Segment multiplicities of the Omega part via rank inclusion-exclusion.
// Requires the left-oriented type-A double quiver.
Multisegment decompose_segments(const RepPoint& p);

// All composites along paths of length 1 + sum(dims) vanish.
bool is_nilpotent_point(const RepPoint& p);

// Graded dimension of the largest x-invariant S with S_v in ker t_v.
DimVector max_invariant_in_kernel(const FramedPoint& fp);

// ker(all maps out of k) meets ker t_k trivially at every vertex k. Matches
// stability on points with vanishing moment map in type A.
bool kernel_criterion(const FramedPoint& fp);

// Stability via the invariant-subspace fixpoint. For left-oriented type A
// with vanishing moment map the kernel criterion is evaluated as well and
// a disagreement throws InternalError.
bool is_stable(const FramedPoint& fp);

}  // namespace crystal
