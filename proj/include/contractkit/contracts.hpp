#pragma once

#include "contractkit/dv_system.hpp"
#include "contractkit/simulation.hpp"

namespace contractkit {

/// Assume/guarantee contract over a shared external variable space.
struct Contract {
  DVSystem assumptions;
  DVSystem guarantees;

  Contract() = default;
  Contract(DVSystem a, DVSystem g);
};

void validate(const Contract& c);

/// E is compatible with C iff C.assumptions simulates E.
SimulationVerdict is_compatible_environment(const DVSystem& environment, const Contract& c);

/// sigma implements C iff compose(C.assumptions, sigma) <= C.guarantees.
SimulationVerdict implements(const DVSystem& sigma, const Contract& c);

struct RefinementVerdict {
  bool holds = false;
  SimulationVerdict env_part;   // C.assumptions <= C'.assumptions
  SimulationVerdict guar_part;  // C.assumptions o C'.guarantees <= C.guarantees
};

/// Does `refined` refine `base`?
RefinementVerdict refines(const Contract& refined, const Contract& base);

/// (A, A o G): same implementations, guarantees made explicit about assumptions.
Contract saturate(const Contract& c);

}  // namespace contractkit
