#include "crystal/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "crystal/errors.hpp"

namespace crystal {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix out(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
  return out;
}

Matrix Matrix::columns(std::span<const std::size_t> which) const {
  Matrix out(rows_, which.size());
  for (std::size_t k = 0; k < which.size(); ++k)
    for (std::size_t r = 0; r < rows_; ++r) out(r, k) = (*this)(r, which[k]);
  return out;
}

Matrix Matrix::rows_subset(std::span<const std::size_t> which) const {
  Matrix out(which.size(), cols_);
  for (std::size_t k = 0; k < which.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) out(k, c) = (*this)(which[k], c);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw InternalError("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InternalError("matrix sum shape mismatch");
  Matrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& q : out.data_) q = -q;
  return out;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out(*this);
  for (auto& q : out.data_) q *= s;
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Matrix Matrix::hstack(std::size_t rows, std::span<const Matrix> blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows_ != rows) throw InternalError("hstack row mismatch");
    cols += b.cols_;
  }
  Matrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, offset + c) = b(r, c);
    offset += b.cols_;
  }
  return out;
}

Matrix Matrix::vstack(std::size_t cols, std::span<const Matrix> blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols_ != cols) throw InternalError("vstack column mismatch");
    rows += b.rows_;
  }
  Matrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < cols; ++c) out(offset + r, c) = b(r, c);
    offset += b.rows_;
  }
  return out;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) out(a.rows_ + r, a.cols_ + c) = b(r, c);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << format_rational((*this)(r, c));
  }
  os << ']';
  return os.str();
}

Rref rref(const Matrix& input) {
  Rref out{input, {}};
  Matrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

namespace {

// Rank modulo the prime 2^61 - 1. Never exceeds the rank over Q, so a full
// rank answer here is exact.
std::size_t rank_mod_p(const std::vector<Integer>& a, std::size_t rows, std::size_t cols) {
  constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  auto mul = [](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
  };
  auto inv = [&](std::uint64_t x) {
    std::uint64_t r = 1;
    for (std::uint64_t e = p - 2; e; e >>= 1, x = mul(x, x))
      if (e & 1) r = mul(r, x);
    return r;
  };
  std::vector<std::uint64_t> b(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) b[k] = mpz_fdiv_ui(a[k].get_mpz_t(), p);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && b[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < cols; ++c) std::swap(b[pivot * cols + c], b[rank * cols + c]);
    const std::uint64_t scale = inv(b[rank * cols + col]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t factor = mul(b[r * cols + col], scale);
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols; ++c)
        b[r * cols + c] = (b[r * cols + c] + p - mul(factor, b[rank * cols + c])) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c)
      a[r * cols + c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
  }
  if (rank_mod_p(a, rows, cols) == std::min(rows, cols)) return std::min(rows, cols);
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * cols + c]; };

  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(at(pivot, col)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        at(r, c) = at(rank, col) * at(r, c) - at(r, col) * at(rank, c);
        mpz_divexact(at(r, c).get_mpz_t(), at(r, c).get_mpz_t(), prev.get_mpz_t());
      }
      at(r, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

Matrix nullspace(const Matrix& m) {
  if (rank(m) == m.cols()) return Matrix(m.cols(), 0);
  const Rref red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);

  Matrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) basis(red.pivots[r], k) = -red.reduced(r, free[k]);
  }
  return basis;
}

Matrix column_basis(const Matrix& m) {
  if (m.cols() > 0 && rank(m) == m.cols()) return m;
  const Rref red = rref(m);
  return m.columns(red.pivots);
}

Matrix row_basis(const Matrix& m) {
  // full column rank: the reduced form is the identity
  if (m.rows() > 0) {
    const std::size_t r = rank(m);
    if (r == m.cols()) return Matrix::identity(m.cols());
    // independent rows already form a basis
    if (r == m.rows()) return m;
  }
  const Rref red = rref(m);
  std::vector<std::size_t> nonzero(red.pivots.size());
  for (std::size_t r = 0; r < nonzero.size(); ++r) nonzero[r] = r;
  return red.reduced.rows_subset(nonzero);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Matrix> blocks{m, Matrix::identity(n)};
  const Rref red = rref(Matrix::hstack(n, blocks));
  if (red.pivots.size() < n || (n > 0 && red.pivots[n - 1] != n - 1))
    throw DomainError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

Matrix solve_in_basis(const Matrix& b, const Matrix& rhs) {
  if (b.rows() != rhs.rows()) throw InternalError("solve_in_basis row mismatch");
  const std::size_t k = b.cols();
  std::vector<Matrix> blocks{b, rhs};
  const Rref red = rref(Matrix::hstack(b.rows(), blocks));
  if (red.pivots.size() < k || (k > 0 && red.pivots[k - 1] != k - 1))
    throw InternalError("basis matrix is not of full column rank");
  for (std::size_t r = k; r < red.pivots.size(); ++r)
    if (red.pivots[r] >= k) throw InternalError("right-hand side leaves the column space");
  Matrix y(k, rhs.cols());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < rhs.cols(); ++c) y(r, c) = red.reduced(r, k + c);
  return y;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw DomainError("malformed rational '" + s + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num), d(den[0] == '+' ? den.substr(1) : den);
  if (sgn(d) == 0) throw DomainError("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

}  // namespace crystal
