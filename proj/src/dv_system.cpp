#include "contractkit/dv_system.hpp"

#include <cstdlib>
#include <string>

namespace contractkit {

void validate(const DVSystem& sys) {
  const std::size_t n = sys.A.rows();
  if (sys.A.cols() != n) throw DimensionMismatch("A must be square (rows vs cols)", n, sys.A.cols());
  if (sys.G.rows() != n) throw DimensionMismatch("G rows vs state dimension", n, sys.G.rows());
  if (sys.C.cols() != n) throw DimensionMismatch("C cols vs state dimension", n, sys.C.cols());
  if (sys.H.cols() != n) throw DimensionMismatch("H cols vs state dimension", n, sys.H.cols());
}

std::size_t max_iterations(std::size_t ambient_dim) {
  if (const char* env = std::getenv("CONTRACTKIT_MAX_ITER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return ambient_dim + 1;
}

Subspace largest_controlled_invariant(const Matrix& A, const Matrix& G, const Subspace& K,
                                      std::vector<Subspace>* trace) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw DimensionMismatch("A must be square", n, A.cols());
  if (G.rows() != n) throw DimensionMismatch("G rows", n, G.rows());
  if (K.ambient_dim() != n) throw DimensionMismatch("constraint subspace ambient", n, K.ambient_dim());

  const Subspace driven = image(G);
  const std::size_t cap = max_iterations(n);
  Subspace current = K;
  if (trace) trace->push_back(current);
  for (std::size_t iter = 0; iter < cap; ++iter) {
    Subspace next = intersect(K, preimage(A, sum(current, driven)));
    if (trace) trace->push_back(next);
    // iterates are nested, so equal dimension means equal subspace
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
  throw IterationLimitExceeded("invariant subspace iteration did not converge within " +
                               std::to_string(cap) + " steps");
}

Subspace consistent_subspace(const DVSystem& sys) {
  validate(sys);
  return largest_controlled_invariant(sys.A, sys.G, kernel(sys.H));
}

bool is_consistent_state(const DVSystem& sys, const Vector& x0) {
  if (x0.size() != sys.state_dim()) throw DimensionMismatch("initial state length", sys.state_dim(), x0.size());
  return consistent_subspace(sys).contains_vector(x0);
}

}  // namespace contractkit
