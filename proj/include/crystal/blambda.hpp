#pragma once

// Highest-weight crystals B(lambda) as the stable part of B(infinity):
// a component survives when its generic framed point is stable.

#include <map>
#include <mutex>
#include <string>

#include "crystal/binf.hpp"

namespace crystal {

class GeometricBlambda {
 public:
  GeometricBlambda(const GeometricBinf& binf, DimVector wdims);

  const GeometricBinf& binf() const { return binf_; }
  const DimVector& wdims() const { return w_; }

  // Stability is open, so one stable sample (x, t) certifies the component.
  bool is_stable_component(const Multisegment& m) const;

  // f in B(infinity), cut to zero when the image is not stable.
  std::optional<Multisegment> f(const Multisegment& m, int i) const;

  Weight wt(const Multisegment& m) const;  // omega_w - alpha_v
  std::vector<int> phi(const Multisegment& m) const;

 private:
  const GeometricBinf& binf_;
  DimVector w_;
  mutable std::mutex mu_;
  mutable std::map<std::string, bool> stable_;
};

bool is_stable_component(const GeometricBinf& binf, const Multisegment& m, const DimVector& wdims);

// Stable components for w = e^r: left endpoints r, r-1, ... with strictly
// decreasing right endpoints.
bool staircase_check(const Multisegment& m, int r);

// All stable components with dimension vector v.
std::vector<Multisegment> stable_components(const GeometricBinf& binf, const DimVector& v, const DimVector& wdims);

// Whether some component at v is stable for w = N e^n.
bool flag_nonempty_check(const GeometricBinf& binf, int N, const DimVector& v);

MultisegmentGraph generate_blambda(const GeometricBinf& binf, const DimVector& wdims, const ExpandOptions& options = {});

}  // namespace crystal
