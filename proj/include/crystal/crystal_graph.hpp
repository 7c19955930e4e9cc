#pragma once

// Rooted, edge-colored crystal graphs with per-node wt / eps / phi, shared by
// the geometric and tableau models.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/multisegment.hpp"

namespace crystal {

struct CrystalNode {
  std::string label;
  Weight wt;
  std::vector<int> eps;  // eps[i-1]
  std::vector<int> phi;
};

struct CrystalEdge {
  std::size_t src = 0;
  int color = 1;
  std::size_t dst = 0;
  bool operator==(const CrystalEdge&) const = default;
  auto operator<=>(const CrystalEdge&) const = default;
};

class CrystalGraph {
 public:
  CrystalGraph() = default;
  explicit CrystalGraph(int n) : n_(n) {}

  int rank() const { return n_; }
  std::size_t root() const { return root_; }
  const std::vector<CrystalNode>& nodes() const { return nodes_; }
  const std::vector<CrystalEdge>& edges() const { return edges_; }
  const CrystalNode& node(std::size_t k) const { return nodes_.at(k); }

  // Optional framing header (B(lambda) graphs).
  const std::optional<DimVector>& wdims() const { return wdims_; }
  void set_wdims(DimVector w) { wdims_ = std::move(w); }

  std::size_t add_node(CrystalNode node);
  // Throws InternalError if src already has an outgoing edge of this color or
  // dst an incoming one.
  void add_edge(std::size_t src, int color, std::size_t dst);

  std::optional<std::size_t> f(std::size_t node, int i) const;
  std::optional<std::size_t> e(std::size_t node, int i) const;

  std::optional<std::size_t> find_label(const std::string& label) const;

  std::string to_dot(const std::string& name = "crystal") const;
  std::string to_json() const;

 private:
  int n_ = 0;
  std::size_t root_ = 0;
  std::vector<CrystalNode> nodes_;
  std::vector<CrystalEdge> edges_;
  std::vector<std::vector<std::optional<std::size_t>>> out_, in_;
  std::optional<DimVector> wdims_;
};

struct AxiomOptions {
  // Every f-string is complete inside the graph, so phi_i can be checked
  // against string lengths (true for B(lambda), false for truncated B(infinity)).
  bool closed_under_f = true;
};

// Crystal axioms: wt(f_i X) = wt X - alpha_i, eps/phi shift by +1/-1,
// phi - eps = <h_i, wt>, eps_i (and phi_i when closed) equal string lengths,
// every node reachable from the root. Returns the list of violations.
std::vector<std::string> check_crystal_axioms(const CrystalGraph& g, const RootDatum& d,
                                              const AxiomOptions& options = {});

}  // namespace crystal
