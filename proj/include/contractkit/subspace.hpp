#pragma once

#include <cstddef>
#include <vector>

#include "contractkit/matrix.hpp"

namespace contractkit {

/// Half-open coordinate interval [first, first + count).
struct CoordRange {
  std::size_t first = 0;
  std::size_t count = 0;
};

/// Linear subspace of Q^n stored by a canonical basis.
///
/// The basis is kept in reduced column echelon form: the columns are the
/// nonzero rows of rref(B^T), so every subspace has exactly one
/// representation and `equals` reduces to matrix identity. The zero
/// subspace has an n x 0 basis.
class Subspace {
 public:
  Subspace() = default;

  /// Span of the columns of `generators`; the columns need not be independent.
  static Subspace span(const Matrix& generators);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  bool is_zero() const noexcept { return dim() == 0; }
  const Matrix& basis() const noexcept { return basis_; }

  /// Row indices where each canonical basis column has its leading 1.
  /// Coordinates of x in the canonical basis are x at these rows.
  const std::vector<std::size_t>& pivot_rows() const noexcept { return pivots_; }

  /// Rows spanning the annihilator: V = kernel(annihilator()).
  Matrix annihilator() const;

  bool contains_vector(const Vector& x) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

Subspace sum(const Subspace& v, const Subspace& w);
Subspace intersect(const Subspace& v, const Subspace& w);

/// {x | Mx in V}
Subspace preimage(const Matrix& m, const Subspace& v);
/// M V
Subspace apply(const Matrix& m, const Subspace& v);

/// W subset of V
bool contains(const Subspace& v, const Subspace& w);
bool equals(const Subspace& v, const Subspace& w);

/// Projection onto the coordinate block `range`, expressed in Q^range.count.
Subspace project(const Subspace& v, CoordRange range);
/// Projection onto an arbitrary ordered list of coordinates.
Subspace project(const Subspace& v, const std::vector<std::size_t>& coords);

/// V x W in Q^(n+m).
Subspace product(const Subspace& v, const Subspace& w);

/// Embeds V into Q^total at coordinate offset `offset` (other coordinates zero).
Subspace embed(const Subspace& v, std::size_t offset, std::size_t total);

}  // namespace contractkit
