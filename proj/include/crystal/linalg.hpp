#pragma once

// Dense matrices over the rationals. Everything downstream (epsilon values,
// stability, segment decomposition) is a rank statement, so no floating point
// is used anywhere.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace crystal {

using Rational = mpq_class;
using Integer = mpz_class;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix columns(std::span<const std::size_t> which) const;
  Matrix rows_subset(std::span<const std::size_t> which) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const Rational& s) const;
  bool operator==(const Matrix& rhs) const;

  // Concatenation. `rows`/`cols` fixes the shared dimension when the list is
  // empty or every block is degenerate.
  static Matrix hstack(std::size_t rows, std::span<const Matrix> blocks);
  static Matrix vstack(std::size_t cols, std::span<const Matrix> blocks);
  static Matrix block_diag(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form over Q.
Rref rref(const Matrix& m);

// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank(const Matrix& m);

// Columns form a basis of {x : m x = 0}. Shape cols() x nullity.
Matrix nullspace(const Matrix& m);

// A subset of the columns of m forming a basis of its column space.
Matrix column_basis(const Matrix& m);

// Rows form a basis of the row space (nonzero rows of the RREF).
Matrix row_basis(const Matrix& m);

// Throws DomainError if m is not square and invertible.
Matrix inverse(const Matrix& m);

// Solves b * y = rhs for y when b has full column rank and the columns of rhs
// lie in its column space. Throws InternalError otherwise.
Matrix solve_in_basis(const Matrix& b, const Matrix& rhs);

// "p/q" or "p"; throws DomainError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

}  // namespace crystal
