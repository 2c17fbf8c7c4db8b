#include "contractkit/composition.hpp"

namespace contractkit {

void require_shared_external(const DVSystem& s1, const DVSystem& s2) {
  if (s1.external_dim() != s2.external_dim()) throw ExternalDimMismatch(s1.external_dim(), s2.external_dim());
}

DVSystem compose(const DVSystem& s1, const DVSystem& s2) {
  validate(s1);
  validate(s2);
  require_shared_external(s1, s2);

  DVSystem out;
  out.A = block_diag(s1.A, s2.A);
  out.G = block_diag(s1.G, s2.G);
  out.C = Rational(1, 2) * hstack(s1.C, s2.C);
  out.H = vstack(block_diag(s1.H, s2.H), hstack(s1.C, -s2.C));
  if (!s1.name.empty() || !s2.name.empty()) out.name = "(" + s1.name + " o " + s2.name + ")";
  return out;
}

Subspace composed_consistent_subspace(const DVSystem& s1, const DVSystem& s2) {
  return consistent_subspace(compose(s1, s2));
}

}  // namespace contractkit
