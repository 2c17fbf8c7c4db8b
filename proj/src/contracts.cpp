#include "contractkit/contracts.hpp"

#include "contractkit/composition.hpp"

namespace contractkit {

Contract::Contract(DVSystem a, DVSystem g) : assumptions(std::move(a)), guarantees(std::move(g)) {
  validate(*this);
}

void validate(const Contract& c) {
  validate(c.assumptions);
  validate(c.guarantees);
  require_shared_external(c.assumptions, c.guarantees);
}

SimulationVerdict is_compatible_environment(const DVSystem& environment, const Contract& c) {
  validate(c);
  return simulates(environment, c.assumptions);
}

SimulationVerdict implements(const DVSystem& sigma, const Contract& c) {
  validate(c);
  return simulates(compose(c.assumptions, sigma), c.guarantees);
}

RefinementVerdict refines(const Contract& refined, const Contract& base) {
  validate(refined);
  validate(base);
  require_shared_external(refined.assumptions, base.assumptions);
  RefinementVerdict v;
  v.env_part = simulates(base.assumptions, refined.assumptions);
  v.guar_part = simulates(compose(base.assumptions, refined.guarantees), base.guarantees);
  v.holds = v.env_part.holds && v.guar_part.holds;
  return v;
}

Contract saturate(const Contract& c) {
  validate(c);
  return Contract(c.assumptions, compose(c.assumptions, c.guarantees));
}

}  // namespace contractkit
