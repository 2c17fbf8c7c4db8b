#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "contractkit/composition.hpp"
#include "contractkit/dv_system.hpp"
#include "contractkit/subspace.hpp"

namespace contractkit {

/// Subspace of X_left x X_right; left coordinates come first.
struct SimulationRelation {
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  Subspace relation;

  SimulationRelation() = default;
  SimulationRelation(std::size_t left, std::size_t right, Subspace rel);

  Subspace left_projection() const { return project(relation, CoordRange{0, left_dim}); }
  Subspace right_projection() const { return project(relation, CoordRange{left_dim, right_dim}); }
};

enum class FailureReason {
  StateCondition,    // A S not within S + im G
  DrivingCondition,  // left driving freedom cannot be matched on the right
  OutputCondition,   // S not within ker [H1 0; 0 H2; C1 -C2]
  NotFull,           // left projection is a proper subspace of V1*
};

std::string_view to_string(FailureReason reason);

struct SimulationVerdict {
  bool holds = false;
  /// Present whenever the relation satisfies all three conditions, even if
  /// it is not full.
  std::optional<SimulationRelation> witness;
  std::optional<FailureReason> failure_reason;
};

/// Checks that `rel` is a simulation relation of s1 by s2 and that it is full.
/// Conditions are checked in the order output, state, driving, fullness; the
/// first violated one is reported.
SimulationVerdict check_relation(const SimulationRelation& rel, const DVSystem& s1, const DVSystem& s2);

/// Largest subspace of X1 x X2 satisfying the state and output conditions.
/// Contains every simulation relation of s1 by s2.
SimulationRelation largest_simulation_relation(const DVSystem& s1, const DVSystem& s2);

/// Decides s1 <= s2 (s2 simulates s1).
SimulationVerdict simulates(const DVSystem& s1, const DVSystem& s2);

/// {(x1, x3) | exists x2: (x1, x2) in s12, (x2, x3) in s23}
SimulationRelation transitive_witness(const SimulationRelation& s12, const SimulationRelation& s23);

enum class Side { Left = 1, Right = 2 };

/// Relation {((x1, x2), x_side) | x_side equals the `side` block, (x1, x2) in
/// V*(s1 o s2)} certifying compose(s1, s2) <= s_side.
SimulationRelation composition_upper_witness(const DVSystem& s1, const DVSystem& s2, Side side);

/// {(x, (x1, x2)) | (x, x1) in sa, (x, x2) in sb}; certifies
/// sys <= compose(s1, s2) when sa, sb are full relations of sys by s1, s2.
SimulationRelation infimum_witness(const SimulationRelation& sa, const SimulationRelation& sb);

/// Diagonal {(x, x) | x in V} on V x V.
SimulationRelation diagonal_relation(const Subspace& v);

}  // namespace contractkit
