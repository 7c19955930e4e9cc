#include "crystal/multisegment.hpp"

#include <algorithm>
#include <functional>

#include "crystal/errors.hpp"

namespace crystal {

Multisegment::Multisegment(int n, std::vector<Segment> segments) : n_(n), segs_(std::move(segments)) {
  for (const auto& s : segs_)
    if (s.i < 1 || s.i > s.j || s.j > n_)
      throw DomainError("segment [" + std::to_string(s.i) + "," + std::to_string(s.j) +
                        "] is not valid for rank " + std::to_string(n_));
  normalize();
}

void Multisegment::normalize() { std::sort(segs_.begin(), segs_.end(), std::greater<>()); }

DimVector Multisegment::dimvec() const {
  DimVector v(n_, 0);
  for (const auto& s : segs_)
    for (int k = s.i; k <= s.j; ++k) ++v[k - 1];
  return v;
}

int Multisegment::total() const {
  int t = 0;
  for (const auto& s : segs_) t += s.length();
  return t;
}

int Multisegment::count(const Segment& s) const {
  return static_cast<int>(std::count(segs_.begin(), segs_.end(), s));
}

Multisegment Multisegment::with(const Segment& s) const {
  auto segs = segs_;
  segs.push_back(s);
  return Multisegment(n_, std::move(segs));
}

std::optional<Multisegment> Multisegment::without(const Segment& s) const {
  auto it = std::find(segs_.begin(), segs_.end(), s);
  if (it == segs_.end()) return std::nullopt;
  Multisegment r(*this);
  r.segs_.erase(r.segs_.begin() + (it - segs_.begin()));
  return r;
}

Multisegment Multisegment::operator+(const Multisegment& o) const {
  if (n_ != o.n_) throw DomainError("multisegment rank mismatch");
  auto segs = segs_;
  segs.insert(segs.end(), o.segs_.begin(), o.segs_.end());
  return Multisegment(n_, std::move(segs));
}

int Multisegment::composite_rank(int i, int j) const {
  if (i < 1 || j > n_ || i > j) return 0;
  int r = 0;
  for (const auto& s : segs_)
    if (s.i <= i && s.j >= j) ++r;
  return r;
}

std::string Multisegment::key() const {
  std::string k = std::to_string(n_) + "|";
  for (std::size_t p = 0; p < segs_.size(); ++p)
    k += (p ? ";" : "") + std::to_string(segs_[p].i) + "," + std::to_string(segs_[p].j);
  return k;
}

std::string Multisegment::to_string() const {
  std::string s = "{";
  for (std::size_t p = 0; p < segs_.size(); ++p)
    s += (p ? "," : "") + ("[" + std::to_string(segs_[p].i) + "," + std::to_string(segs_[p].j) + "]");
  return s + "}";
}

std::vector<Multisegment> enumerate_multisegments(int n, const DimVector& v) {
  if (static_cast<int>(v.size()) != n) throw DomainError("dimension vector has wrong length");
  for (int x : v)
    if (x < 0) throw DomainError("dimension vector has a negative entry");

  std::vector<Multisegment> out;
  std::vector<Segment> chosen;
  DimVector rest = v;
  // Segments are generated lowest vertex first; a segment covering the
  // lowest nonzero vertex must start there. Within one start, right ends are
  // non-increasing so each multiset appears once.
  std::function<void(int, int)> go = [&](int last_i, int last_j) {
    int k = 0;
    while (k < n && rest[k] == 0) ++k;
    if (k == n) {
      out.emplace_back(n, chosen);
      return;
    }
    const int start = k + 1;
    int max_j = start;
    while (max_j < n && rest[max_j] > 0) ++max_j;
    if (start == last_i) max_j = std::min(max_j, last_j);
    for (int j = max_j; j >= start; --j) {
      for (int p = start; p <= j; ++p) --rest[p - 1];
      chosen.push_back({start, j});
      go(start, j);
      chosen.pop_back();
      for (int p = start; p <= j; ++p) ++rest[p - 1];
    }
  };
  go(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DimVector> enumerate_dimvecs(int n, int max_total) {
  std::vector<DimVector> out;
  DimVector cur(n, 0);
  std::function<void(int, int)> go = [&](int k, int left) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[k] = x;
      go(k + 1, left - x);
    }
    cur[k] = 0;
  };
  go(0, max_total);
  return out;
}

std::vector<Multisegment> enumerate_multisegments_up_to(int n, int max_total) {
  std::vector<Multisegment> out;
  for (const auto& v : enumerate_dimvecs(n, max_total)) {
    auto part = enumerate_multisegments(n, v);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::stable_sort(out.begin(), out.end(), [](const Multisegment& a, const Multisegment& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  return out;
}

}  // namespace crystal
