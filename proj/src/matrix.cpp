#include "contractkit/matrix.hpp"

#include <sstream>
#include <utility>

namespace contractkit {

DimensionMismatch::DimensionMismatch(const std::string& what, std::size_t expected,
                                     std::size_t actual)
    : std::invalid_argument(what + ": expected " + std::to_string(expected) + ", got " +
                            std::to_string(actual)),
      expected_(expected),
      actual_(actual) {}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("row " + std::to_string(r) + " length", cols_, row.size());
    data_.insert(data_.end(), row.begin(), row.end());
    ++r;
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row " + std::to_string(r) + " length", cols, rows[r].size());
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::column(const Vector& v) {
  Matrix m(v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r) m(r, 0) = v[r];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
  if (row0 + nrows > rows_) throw DimensionMismatch("block rows", rows_, row0 + nrows);
  if (col0 + ncols > cols_) throw DimensionMismatch("block cols", cols_, col0 + ncols);
  Matrix b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(row0 + r, col0 + c);
  return b;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& indices) const {
  Matrix s(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw DimensionMismatch("row index", rows_, indices[i]);
    for (std::size_t c = 0; c < cols_; ++c) s(i, c) = (*this)(indices[i], c);
  }
  return s;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw DimensionMismatch("sum rows", a.rows_, b.rows_);
  if (a.cols_ != b.cols_) throw DimensionMismatch("sum cols", a.cols_, b.cols_);
  Matrix s(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = a.data_[i] + b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a) {
  Matrix n(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) n.data_[i] = -a.data_[i];
  return n;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("product inner dimension", a.cols_, b.rows_);
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  }
  return p;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix p(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) p.data_[i] = s * a.data_[i];
  return p;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector length", a.cols_, x.size());
  Vector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) y[i] += a(i, k) * x[k];
  return y;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << to_string((*this)(r, c));
    os << "]\n";
  }
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack rows", a.rows(), b.rows());
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack cols", a.cols(), b.cols());
  Matrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && sgn(a(pivot, c)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(lead_row, j));

    const Rational inv = 1 / a(lead_row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead_row, j) *= inv;

    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || sgn(a(r, c)) == 0) continue;
      const Rational factor = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= factor * a(lead_row, j);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -reduced(i, f);
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw DimensionMismatch("solve rhs rows", m.rows(), b.rows());
  const auto [reduced, pivots] = rref(hstack(m, b));
  const std::size_t n = m.cols();
  // inconsistent iff a pivot lands in the augmented block
  for (auto p : pivots)
    if (p >= n) return std::nullopt;
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[i], c) = reduced(i, n + c);
  return x;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  auto x = solve(m, Matrix::column(b));
  if (!x) return std::nullopt;
  return x->col(0);
}

std::vector<double> to_double(const Vector& v) {
  std::vector<double> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i].get_d();
  return d;
}

}  // namespace contractkit
