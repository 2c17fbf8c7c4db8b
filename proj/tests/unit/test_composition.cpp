#include <doctest.h>

#include "contractkit/composition.hpp"
#include "support/generators.hpp"

using namespace contractkit;
namespace t = contractkit::testing;

TEST_CASE("compose assembles the block maps") {
  const DVSystem one{Matrix{{1}}, Matrix{{1}}, Matrix{{1}}, Matrix(0, 1), "one"};
  const DVSystem c = compose(one, one);
  CHECK(c.A == Matrix{{1, 0}, {0, 1}});
  CHECK(c.G == Matrix{{1, 0}, {0, 1}});
  CHECK(c.C == Matrix{{Rational(1, 2), Rational(1, 2)}});
  CHECK(c.H == Matrix{{1, -1}});

  const DVSystem as = compose(t::assumptions_system(), t::controlled_vehicle_system());
  CHECK(as.state_dim() == 8);
  CHECK(as.driving_dim() == 5);
  CHECK(as.constraint_count() == 4);
  CHECK(as.external_dim() == 4);

  const DVSystem bad{Matrix{{1}}, Matrix{{1}}, Matrix{{1}, {1}}, Matrix(0, 1), ""};
  CHECK_THROWS_AS(compose(one, bad), ExternalDimMismatch);
}

TEST_CASE("composed consistent subspace") {
  const DVSystem z{Matrix{{1, 0}, {1, 1}}, Matrix(2, 1), Matrix(2, 2), Matrix(0, 2), ""};
  const DVSystem w{Matrix{{2}}, Matrix{{0}}, Matrix(2, 1), Matrix(0, 1), ""};
  CHECK(equals(composed_consistent_subspace(z, w), Subspace::full(3)));

  // assumptions o sigma: the diagonal of Q^8
  const Subspace vc = composed_consistent_subspace(t::assumptions_system(), t::controlled_vehicle_system());
  CHECK(vc.dim() == 4);
  CHECK(equals(vc, t::diagonal_of(Subspace::full(4))));

  // guarantees o guarantees: C = I forces x = y, both in ker H^g
  const DVSystem g = t::guarantees_system();
  const Subspace gg = composed_consistent_subspace(g, g);
  CHECK(gg.dim() == 3);
  CHECK(equals(gg, t::diagonal_of(kernel(g.H))));
}

TEST_CASE("projection of the composed consistent subspace stays in each factor's") {
  t::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t p = static_cast<std::size_t>(t::uniform_int(rng, 1, 2));
    const DVSystem s1 = t::random_system(rng, p);
    const DVSystem s2 = t::random_system(rng, p);
    const Subspace vc = composed_consistent_subspace(s1, s2);
    CHECK(contains(consistent_subspace(s1), project(vc, CoordRange{0, s1.state_dim()})));
    CHECK(contains(consistent_subspace(s2), project(vc, CoordRange{s1.state_dim(), s2.state_dim()})));
  }
}
