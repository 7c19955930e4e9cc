#include "crystal/cartan.hpp"

#include <gmpxx.h>

#include "crystal/errors.hpp"

namespace crystal {

RootDatum RootDatum::type_a(int n) {
  if (n < 1) throw DomainError("rank must be at least 1");
  RootDatum d;
  d.n = n;
  d.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    d.cartan[i][i] = 2;
    if (i + 1 < n) d.cartan[i][i + 1] = d.cartan[i + 1][i] = -1;
  }
  return d;
}

RootDatum RootDatum::parse(const std::string& label) {
  if (label.size() < 2 || (label[0] != 'A' && label[0] != 'a'))
    throw DomainError("unsupported type '" + label + "' (only A{n})");
  int n = 0;
  for (std::size_t k = 1; k < label.size(); ++k) {
    if (label[k] < '0' || label[k] > '9') throw DomainError("malformed type '" + label + "'");
    n = n * 10 + (label[k] - '0');
    if (n > 64) throw DomainError("rank too large in '" + label + "'");
  }
  return type_a(n);
}

Weight Weight::operator+(const Weight& o) const {
  if (coords.size() != o.coords.size()) throw DomainError("weight rank mismatch");
  Weight r(*this);
  for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] += o.coords[k];
  return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + o * -1; }

Weight Weight::operator*(int k) const {
  Weight r(*this);
  for (auto& c : r.coords) c *= k;
  return r;
}

bool Weight::dominant() const {
  for (int c : coords)
    if (c < 0) return false;
  return true;
}

std::string Weight::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coords.size(); ++k) s += (k ? "," : "") + std::to_string(coords[k]);
  return s + "]";
}

static void check_vertex(const RootDatum& d, int i) {
  if (i < 1 || i > d.n)
    throw DomainError("vertex " + std::to_string(i) + " out of range 1.." + std::to_string(d.n));
}

Weight fundamental_weight(const RootDatum& d, int i) {
  check_vertex(d, i);
  Weight w = Weight::zero(d.n);
  w.coords[i - 1] = 1;
  return w;
}

Weight simple_root(const RootDatum& d, int i) {
  check_vertex(d, i);
  // alpha_i = sum_j a_{ji} omega_j
  Weight w = Weight::zero(d.n);
  for (int j = 0; j < d.n; ++j) w.coords[j] = d.cartan[j][i - 1];
  return w;
}

Weight root_combination(const RootDatum& d, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != d.n) throw DomainError("dimension vector has wrong length");
  Weight w = Weight::zero(d.n);
  for (int i = 1; i <= d.n; ++i) w = w + simple_root(d, i) * v[i - 1];
  return w;
}

int pairing(const RootDatum& d, int i, const Weight& w) {
  check_vertex(d, i);
  if (static_cast<int>(w.coords.size()) != d.n) throw DomainError("weight rank mismatch");
  return w.coords[i - 1];
}

std::vector<int> to_epsilon(const Weight& w) {
  const std::size_t n = w.coords.size();
  std::vector<int> eps(n + 1, 0);
  for (std::size_t k = n; k-- > 0;) eps[k] = eps[k + 1] + w.coords[k];
  return eps;
}

Weight from_epsilon(const std::vector<int>& eps) {
  if (eps.empty()) throw DomainError("empty epsilon vector");
  Weight w = Weight::zero(static_cast<int>(eps.size()) - 1);
  for (std::size_t k = 0; k + 1 < eps.size(); ++k) w.coords[k] = eps[k] - eps[k + 1];
  return w;
}

Partition partition_of_weight(const RootDatum& d, const Weight& w) {
  if (static_cast<int>(w.coords.size()) != d.n) throw DomainError("weight rank mismatch");
  if (!w.dominant()) throw DomainError("weight " + w.to_string() + " is not dominant");
  auto eps = to_epsilon(w);
  eps.pop_back();
  return eps;
}

Weight weight_of_partition(const RootDatum& d, const Partition& lambda) {
  if (static_cast<int>(lambda.size()) > d.n + 1) throw DomainError("partition has too many parts");
  std::vector<int> eps(d.n + 1, 0);
  for (std::size_t k = 0; k < lambda.size(); ++k) eps[k] = lambda[k];
  for (std::size_t k = 0; k + 1 < eps.size(); ++k)
    if (eps[k] < eps[k + 1] || eps[k + 1] < 0) throw DomainError("not a partition");
  return from_epsilon(eps);
}

std::uint64_t weyl_dim(const RootDatum& d, const Weight& w) {
  Partition lambda = partition_of_weight(d, w);
  lambda.push_back(0);
  mpz_class num = 1, den = 1;
  for (int i = 0; i <= d.n; ++i)
    for (int j = i + 1; j <= d.n; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  mpz_class q = num / den;
  if (q * den != num) throw InternalError("Weyl dimension is not an integer");
  return q.get_ui();
}

}  // namespace crystal
