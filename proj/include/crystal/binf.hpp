#pragma once

// B(infinity) on irreducible components of Lusztig's quiver variety in type
// A. A component is named by the multisegment of its dense G_V-orbit in
// E_{V,Omega}; its generic points are sampled from the conormal fiber over
// the canonical representation of that orbit.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/crystal_graph.hpp"
#include "crystal/multisegment.hpp"
#include "crystal/random.hpp"
#include "crystal/rep.hpp"

namespace crystal {

struct FiberEntry {
  std::size_t arrow = 0;  // index of an Omega-bar arrow
  std::size_t row = 0;
  std::size_t col = 0;
  Rational value;
};

// x_Omega fixed to the canonical sum of V^{i,j}; the moment map is then linear
// in x_Omega-bar and this is a basis of its kernel.
struct ConormalFiber {
  Multisegment m;
  RepPoint base;
  std::vector<std::vector<FiberEntry>> basis;

  std::size_t dimension() const { return basis.size(); }
  RepPoint point(std::span<const Rational> coeffs) const;
  RepPoint sample(Rng& rng, long range) const;
};

// The equations decouple over ordered pairs of segment copies; solved block
// by block.
ConormalFiber conormal_fiber(const Multisegment& m);
// One unknown per entry of every Omega-bar matrix, one equation per entry of
// psi. Slow; kept as an independent check of the block solver.
ConormalFiber conormal_fiber_dense(const Multisegment& m);

// Rank sum used to order degenerations: a point in a bigger orbit has larger
// composite ranks.
int genericity_score(const Multisegment& m);

class GeometricBinf {
 public:
  explicit GeometricBinf(int n, Genericity g = {});

  int rank() const { return n_; }
  const RootDatum& datum() const { return datum_; }
  const Genericity& genericity() const { return gen_; }

  // Generic points of the component (one point when the fiber is a single point).
  std::shared_ptr<const std::vector<RepPoint>> sample_points(const Multisegment& m) const;

  // Generic value of epsilon_point on the component: the minimum over samples.
  int epsilon(const Multisegment& m, int i) const;
  std::vector<int> epsilons(const Multisegment& m) const;

  // (m-bar, c): the component of Lambda(v - c e^i)_{i,0} the stratum projects to.
  std::pair<Multisegment, int> e_max(const Multisegment& m, int i) const;

  Multisegment f(const Multisegment& m, int i) const;
  std::optional<Multisegment> e(const Multisegment& m, int i) const;

  Weight wt(const Multisegment& m) const;  // -alpha_v
  std::vector<int> phi(const Multisegment& m) const;

  // Number of f/e calls that needed the exhaustive search.
  std::size_t fallback_count() const;

 private:
  std::optional<Multisegment> pick(const std::vector<Multisegment>& candidates, const DimVector& target,
                                   const std::pair<Multisegment, int>& want, int i, const char* op) const;

  int n_;
  RootDatum datum_;
  Genericity gen_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::shared_ptr<const std::vector<RepPoint>>> points_;
  mutable std::map<std::string, std::vector<int>> eps_;
  mutable std::map<std::string, std::pair<Multisegment, int>> emax_;
  mutable std::map<std::string, Multisegment> f_;
  mutable std::size_t fallbacks_ = 0;
};

// Single vertex-i moves used as the first candidate set for f and e.
std::vector<Multisegment> raising_candidates(const Multisegment& m, int i);
std::vector<Multisegment> lowering_candidates(const Multisegment& m, int i);

// A signature rule on the segments touching vertex i. Which segments enter the
// word, how it is ordered and which bracket is which are not known a priori,
// so the rule is a parameter set fixed by calibration against the geometry.
struct FastRule {
  bool right_ends = true;      // [k,i-1] / [k,i] keyed by k, else [i+1,j] / [i,j] keyed by j
  bool ascending = true;       // word order by key
  bool movable_first = false;  // on equal keys, the extendable class comes first
  bool movable_opens = true;   // the extendable class is the opening bracket
  bool leftmost = true;        // f acts on the leftmost unmatched extendable symbol

  std::string describe() const;
  static std::vector<FastRule> all();

  Multisegment f(const Multisegment& m, int i) const;
  std::optional<Multisegment> e(const Multisegment& m, int i) const;
  int epsilon(const Multisegment& m, int i) const;
};

struct CalibrationReport {
  FastRule rule;
  std::size_t table_size = 0;   // (m, i) pairs in the exhaustive table
  std::size_t spot_checks = 0;
  std::vector<std::string> survivors;  // conventions agreeing on the whole table
  std::vector<std::string> rejected;   // conventions ruled out, with a witness
};

struct CalibrationOptions {
  int max_rank = 3;
  int table_total = 6;
  int spot_total = 8;
  int spot_checks = 500;
};

// Scores every convention against GeometricBinf::f on the whole table, keeps
// the first survivor and spot checks it on random larger multisegments. Throws
// InternalError when no convention survives or a spot check fails.
// `oracle(n)` must return the geometric model of rank n.
CalibrationReport calibrate_fast_rule(const std::function<const GeometricBinf&(int)>& oracle,
                                      const CalibrationOptions& options = {});

struct MultisegmentGraph {
  CrystalGraph graph;
  std::vector<Multisegment> elements;  // by node id
};

struct ExpandOptions {
  int jobs = 1;
  std::size_t node_budget = 200000;
};

// Breadth-first expansion from the empty multisegment. `step(m, i)` returns
// the i-successor or nothing; `decorate` fills wt/eps/phi. Successors of a
// layer are computed in parallel and merged in a fixed order, so the result
// does not depend on the job count. Throws DomainError past the node budget.
MultisegmentGraph expand_from_empty(
    int n, const std::function<std::optional<Multisegment>(const Multisegment&, int)>& step,
    const std::function<CrystalNode(const Multisegment&)>& decorate, const ExpandOptions& options);

// Every component with total dimension <= depth and the f-edges among them.
MultisegmentGraph generate_binf(const GeometricBinf& model, int depth, const ExpandOptions& options = {});

// Same, with the calibrated rule in place of the geometric operators.
MultisegmentGraph generate_binf_fast(const RootDatum& d, const FastRule& rule, int depth,
                                     const ExpandOptions& options = {});

}  // namespace crystal
