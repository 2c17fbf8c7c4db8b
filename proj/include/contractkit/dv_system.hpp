#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "contractkit/matrix.hpp"
#include "contractkit/subspace.hpp"

namespace contractkit {

/// Linear system in driving-variable form
///
///   x' = A x + G d,   w = C x,   0 = H x
///
/// with state x (n), driving variable d (m), external variable w (p) and
/// q algebraic constraints. q = 0 and m = 0 are both legal.
struct DVSystem {
  Matrix A;  // n x n
  Matrix G;  // n x m
  Matrix C;  // p x n
  Matrix H;  // q x n
  std::string name;

  std::size_t state_dim() const noexcept { return A.rows(); }
  std::size_t driving_dim() const noexcept { return G.cols(); }
  std::size_t external_dim() const noexcept { return C.rows(); }
  std::size_t constraint_count() const noexcept { return H.rows(); }

  friend bool operator==(const DVSystem& a, const DVSystem& b) {
    return a.A == b.A && a.G == b.G && a.C == b.C && a.H == b.H && a.name == b.name;
  }
};

/// Throws DimensionMismatch naming the first inconsistent pair of sizes.
void validate(const DVSystem& sys);

/// Thrown when a fixed-point iteration exceeds its cap (see max_iterations).
class IterationLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iteration cap for a fixed point in an n-dimensional space: n + 1, unless
/// CONTRACTKIT_MAX_ITER is set to a positive integer.
std::size_t max_iterations(std::size_t ambient_dim);

/// Largest V subset of K with A V subset of V + im G (the invariant subspace
/// algorithm). Iterates V0 = K, V_{k+1} = K cap A^{-1}(V_k + im G) until
/// V_{k+1} = V_k. If `trace` is non-null, every iterate is appended to it.
Subspace largest_controlled_invariant(const Matrix& A, const Matrix& G, const Subspace& K,
                                      std::vector<Subspace>* trace = nullptr);

/// Consistent subspace: initial states admitting a trajectory with H x = 0.
Subspace consistent_subspace(const DVSystem& sys);

bool is_consistent_state(const DVSystem& sys, const Vector& x0);

}  // namespace contractkit
