#include "contractkit/subspace.hpp"

namespace contractkit {

namespace {

void require_same_ambient(const Subspace& v, const Subspace& w, const char* op) {
  if (v.ambient_dim() != w.ambient_dim())
    throw DimensionMismatch(std::string(op) + " ambient dimension", v.ambient_dim(), w.ambient_dim());
}

}  // namespace

Subspace Subspace::span(const Matrix& generators) {
  Subspace s;
  s.ambient_ = generators.rows();
  const auto [reduced, pivots] = rref(generators.transpose());
  s.basis_ = reduced.block(0, 0, pivots.size(), reduced.cols()).transpose();
  s.pivots_ = pivots;
  return s;
}

Subspace Subspace::zero(std::size_t ambient_dim) { return span(Matrix(ambient_dim, 0)); }

Subspace Subspace::full(std::size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

Matrix Subspace::annihilator() const { return nullspace(basis_.transpose()).transpose(); }

bool Subspace::contains_vector(const Vector& x) const {
  if (x.size() != ambient_) throw DimensionMismatch("vector length", ambient_, x.size());
  // Canonical basis has identity rows at the pivots, so the only candidate
  // coefficients are x restricted to those rows.
  Vector residual = x;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rational coeff = x[pivots_[k]];
    if (sgn(coeff) == 0) continue;
    for (std::size_t r = 0; r < ambient_; ++r) residual[r] -= coeff * basis_(r, k);
  }
  for (const auto& e : residual)
    if (sgn(e) != 0) return false;
  return true;
}

Subspace kernel(const Matrix& m) { return Subspace::span(nullspace(m)); }

Subspace image(const Matrix& m) { return Subspace::span(m); }

Subspace sum(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w, "sum");
  return Subspace::span(hstack(v.basis(), w.basis()));
}

Subspace intersect(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w, "intersect");
  // (a, b) with B_V a = B_W b  <=>  [B_V  -B_W] (a; b) = 0
  const Matrix coeffs = nullspace(hstack(v.basis(), -w.basis()));
  return Subspace::span(v.basis() * coeffs.block(0, 0, v.dim(), coeffs.cols()));
}

Subspace preimage(const Matrix& m, const Subspace& v) {
  if (m.rows() != v.ambient_dim()) throw DimensionMismatch("preimage codomain", v.ambient_dim(), m.rows());
  return kernel(v.annihilator() * m);
}

Subspace apply(const Matrix& m, const Subspace& v) {
  if (m.cols() != v.ambient_dim()) throw DimensionMismatch("apply domain", v.ambient_dim(), m.cols());
  return Subspace::span(m * v.basis());
}

bool contains(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w, "contains");
  if (w.dim() > v.dim()) return false;
  for (std::size_t k = 0; k < w.dim(); ++k)
    if (!v.contains_vector(w.basis().col(k))) return false;
  return true;
}

bool equals(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w, "equals");
  return v == w;
}

Subspace project(const Subspace& v, CoordRange range) {
  if (range.first + range.count > v.ambient_dim())
    throw DimensionMismatch("projection range end", v.ambient_dim(), range.first + range.count);
  return Subspace::span(v.basis().block(range.first, 0, range.count, v.dim()));
}

Subspace project(const Subspace& v, const std::vector<std::size_t>& coords) {
  return Subspace::span(v.basis().select_rows(coords));
}

Subspace product(const Subspace& v, const Subspace& w) {
  return Subspace::span(block_diag(v.basis(), w.basis()));
}

Subspace embed(const Subspace& v, std::size_t offset, std::size_t total) {
  if (offset + v.ambient_dim() > total)
    throw DimensionMismatch("embedding size", total, offset + v.ambient_dim());
  Matrix b(total, v.dim());
  for (std::size_t r = 0; r < v.ambient_dim(); ++r)
    for (std::size_t c = 0; c < v.dim(); ++c) b(offset + r, c) = v.basis()(r, c);
  return Subspace::span(b);
}

}  // namespace contractkit
