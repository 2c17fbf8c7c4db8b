#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contractkit/rational.hpp"

namespace contractkit {

/// Raised whenever two linear objects are combined with incompatible sizes.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(const std::string& what, std::size_t expected, std::size_t actual);

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. Zero rows or zero columns are
/// legal and are used for "no constraints" / "no driving variable".
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix column(const Vector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;

  Matrix transpose() const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  Matrix select_rows(const std::vector<std::size_t>& indices) const;

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& x);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// [a b]
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a; b]
Matrix vstack(const Matrix& a, const Matrix& b);
/// [a 0; 0 b]
Matrix block_diag(const Matrix& a, const Matrix& b);

/// Result of Gauss-Jordan elimination.
struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x | Mx = 0} as columns, one per free variable (standard
/// nullspace basis read off the reduced row echelon form).
Matrix nullspace(const Matrix& m);

/// Some x with Mx = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Some X with MX = B column by column, or nullopt.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

std::vector<double> to_double(const Vector& v);

}  // namespace contractkit
