#pragma once

// Tableaux <-> stable components: a box with entry j in row i is the segment
// [i, j-1] (nothing when j = i). Plus the rooted isomorphism check.

#include <string>
#include <utility>
#include <vector>

#include "crystal/crystal_graph.hpp"
#include "crystal/multisegment.hpp"
#include "crystal/tableau.hpp"

namespace crystal {

Multisegment tableau_to_multisegment(const Tableau& t, int n);

// Inverse on stable components. Row i holds lambda_i - #{segments starting at
// i} copies of i followed by the entries j+1 in increasing order; rows of an
// SSYT are weakly increasing, so this arrangement is the only candidate.
// Throws DomainError when the result is not semistandard of shape lambda(w).
Tableau multisegment_to_tableau(const Multisegment& m, const DimVector& wdims);

struct IsoResult {
  bool isomorphic = false;
  std::vector<std::pair<std::size_t, std::size_t>> matching;  // (node in g1, node in g2), BFS order
  std::string mismatch;
};

// Parallel BFS from the roots along equal colors, comparing wt, eps and phi.
IsoResult crystal_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2);

}  // namespace crystal
