#pragma once

#include "contractkit/dv_system.hpp"

namespace contractkit {

class ExternalDimMismatch : public DimensionMismatch {
 public:
  ExternalDimMismatch(std::size_t left, std::size_t right)
      : DimensionMismatch("external variable dimension", left, right) {}
};

void require_shared_external(const DVSystem& s1, const DVSystem& s2);

/// Interconnection by variable sharing (w1 = w2). State and driving variable
/// are stacked (S1 block first):
///
///   A = diag(A1, A2), G = diag(G1, G2), C = 1/2 [C1 C2],
///   H = [H1 0; 0 H2; C1 -C2].
DVSystem compose(const DVSystem& s1, const DVSystem& s2);

/// consistent_subspace(compose(s1, s2))
Subspace composed_consistent_subspace(const DVSystem& s1, const DVSystem& s2);

}  // namespace contractkit
