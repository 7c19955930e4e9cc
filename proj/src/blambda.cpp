#include "crystal/blambda.hpp"

#include <algorithm>

#include "crystal/errors.hpp"

namespace crystal {

namespace {

std::string wkey(const DimVector& w) {
  std::string s;
  for (int x : w) s += std::to_string(x) + ",";
  return s;
}

}  // namespace

GeometricBlambda::GeometricBlambda(const GeometricBinf& binf, DimVector wdims) : binf_(binf), w_(std::move(wdims)) {
  if (static_cast<int>(w_.size()) != binf_.rank()) throw DomainError("framing vector has the wrong length");
  if (std::any_of(w_.begin(), w_.end(), [](int x) { return x < 0; }))
    throw DomainError("framing dimensions must be non-negative");
}

bool GeometricBlambda::is_stable_component(const Multisegment& m) const {
  const auto key = m.key();
  {
    std::lock_guard lock(mu_);
    if (auto it = stable_.find(key); it != stable_.end()) return it->second;
  }
  const auto& gen = binf_.genericity();
  bool stable = false;
  const auto pts = binf_.sample_points(m);
  // x may repeat when the fiber is a point; t is drawn fresh every time.
  for (int s = 0; s < gen.samples && !stable; ++s) {
    FramedPoint fp = FramedPoint::zero((*pts)[s % pts->size()], w_);
    auto rng = stream(gen.seed, "t|" + key + "|" + wkey(w_) + "|" + std::to_string(s));
    for (auto& t : fp.framing)
      for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t c = 0; c < t.cols(); ++c) t(r, c) = uniform(rng, gen.range);
    stable = is_stable(fp);
  }
  std::lock_guard lock(mu_);
  return stable_.emplace(key, stable).first->second;
}

std::optional<Multisegment> GeometricBlambda::f(const Multisegment& m, int i) const {
  auto next = binf_.f(m, i);
  if (!is_stable_component(next)) return std::nullopt;
  return next;
}

Weight GeometricBlambda::wt(const Multisegment& m) const {
  const auto& d = binf_.datum();
  Weight w = Weight::zero(d.n);
  for (int i = 1; i <= d.n; ++i) w = w + fundamental_weight(d, i) * w_[i - 1];
  return w - root_combination(d, m.dimvec());
}

std::vector<int> GeometricBlambda::phi(const Multisegment& m) const {
  auto out = binf_.epsilons(m);
  const auto w = wt(m);
  for (int i = 1; i <= binf_.rank(); ++i) out[i - 1] += pairing(binf_.datum(), i, w);
  return out;
}

bool is_stable_component(const GeometricBinf& binf, const Multisegment& m, const DimVector& wdims) {
  return GeometricBlambda(binf, wdims).is_stable_component(m);
}

bool staircase_check(const Multisegment& m, int r) {
  const auto& segs = m.segments();  // i descending already
  for (std::size_t l = 0; l < segs.size(); ++l) {
    if (segs[l].i != r - static_cast<int>(l)) return false;
    if (l > 0 && segs[l].j >= segs[l - 1].j) return false;
  }
  return true;
}

std::vector<Multisegment> stable_components(const GeometricBinf& binf, const DimVector& v, const DimVector& wdims) {
  GeometricBlambda bl(binf, wdims);
  std::vector<Multisegment> out;
  for (auto& m : enumerate_multisegments(binf.rank(), v))
    if (bl.is_stable_component(m)) out.push_back(std::move(m));
  return out;
}

bool flag_nonempty_check(const GeometricBinf& binf, int N, const DimVector& v) {
  DimVector w(binf.rank(), 0);
  w.back() = N;
  GeometricBlambda bl(binf, w);
  for (const auto& m : enumerate_multisegments(binf.rank(), v))
    if (bl.is_stable_component(m)) return true;
  return false;
}

MultisegmentGraph generate_blambda(const GeometricBinf& binf, const DimVector& wdims, const ExpandOptions& options) {
  GeometricBlambda bl(binf, wdims);
  auto out = expand_from_empty(
      binf.rank(), [&](const Multisegment& m, int i) { return bl.f(m, i); },
      [&](const Multisegment& m) { return CrystalNode{m.to_string(), bl.wt(m), binf.epsilons(m), bl.phi(m)}; },
      options);
  out.graph.set_wdims(wdims);
  return out;
}

}  // namespace crystal
