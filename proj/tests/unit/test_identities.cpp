#include "doctest.h"

#include <cmath>

#include "tfu/errors.hpp"
#include "tfu/hermite.hpp"
#include "tfu/identities.hpp"
#include "unit/helpers.hpp"

using namespace tfu;

TEST_CASE("identity parameters") {
  const Grid g = default_grid(1);
  std::mt19937_64 rng(31);
  const Signal u = test::superposition(rng, g, 5), v = test::superposition(rng, g, 5);
  const Lem0Report r = verify_lem0(u, v, OperatorParams{});
  CHECK(r.max_error() < 1e-12);
  for (std::size_t c : r.compared) CHECK(c > 0);
  CHECK_FALSE(r.dilation_lossy);
}

TEST_CASE("shift identity for the gaussian") {
  const Grid g = default_grid(1);
  const Signal h0 = hermite_function(HermiteIndex::of(0), g);
  OperatorParams p;
  p.shift_u[0] = 4 * g.spacing();
  p.shift_v[0] = 4 * g.spacing();
  CHECK(verify_lem0(h0, h0, p).shift < 1e-9);
}

TEST_CASE("fourier and hermitian identities for h0, h1") {
  const Grid g = default_grid(1);
  const Lem0Report r =
      verify_lem0(hermite_function(HermiteIndex::of(0), g), hermite_function(HermiteIndex::of(1), g), OperatorParams{});
  CHECK(r.fourier < 1e-9);
  CHECK(r.hermitian < 1e-9);
}

TEST_CASE("all identities on random on-lattice parameters") {
  const Grid g = make_grid(1, 8.0, 512);
  const double dx = g.spacing(), dy = 1.0 / 16.0;
  std::mt19937_64 rng(32);
  for (double lambda : {1.0, 0.5, 2.0}) {
    const Signal u = test::superposition(rng, g, 3), v = test::superposition(rng, g, 3);
    OperatorParams p;
    p.shift_u[0] = 7 * dx;
    p.shift_v[0] = p.shift_u[0] - 2 * 5 * dx;
    p.modulation_v[0] = 3 * dy;
    p.modulation_u[0] = p.modulation_v[0] - 11 * dy;
    p.dilation = lambda;
    const Lem0Report r = verify_lem0(u, v, p);
    CHECK(r.max_error() < 1e-9);
    CHECK_FALSE(r.dilation_lossy);
  }
}

TEST_CASE("interpolated dilation is flagged") {
  const Grid g = default_grid(1);
  const Signal h0 = hermite_function(HermiteIndex::of(0), g).without_closed_form();
  OperatorParams p;
  p.dilation = 0.5;
  CHECK(verify_lem0(h0, h0, p).dilation_lossy);
}

TEST_CASE("off-lattice parameters are rejected") {
  const Grid g = default_grid(1);
  const Signal h0 = hermite_function(HermiteIndex::of(0), g);
  OperatorParams p;
  p.shift_v[0] = g.spacing();
  CHECK_THROWS_AS(verify_lem0(h0, h0, p), PreconditionError);
  OperatorParams q;
  q.modulation_u[0] = 0.01;
  CHECK_THROWS_AS(verify_lem0(h0, h0, q), PreconditionError);
  OperatorParams r;
  r.dilation = -1.0;
  CHECK_THROWS_AS(verify_lem0(h0, h0, r), PreconditionError);
}

TEST_CASE("fouramb") {
  const Grid g = default_grid(1);
  const Signal h0 = hermite_function(HermiteIndex::of(0), g), h1 = hermite_function(HermiteIndex::of(1), g);
  const FourambReport a = verify_fouramb(h0, h0, h0);
  CHECK(a.max_error < 1e-6);
  CHECK(a.compared > 0);
  CHECK(verify_fouramb(h0, h0, h1).max_error < 1e-6);
  CHECK(verify_fouramb(h0, h0, Signal::zeros(g)).max_error == 0.0);
}

TEST_CASE("wigner relation") {
  const Grid g = default_grid(1);
  std::mt19937_64 rng(33);
  for (int i = 0; i < 3; ++i) {
    const IdentityCheck c = verify_wigner_relation(test::superposition(rng, g, 6), test::superposition(rng, g, 6));
    CHECK(c.max_error < 1e-8);
    CHECK(c.compared > 0);
  }
}
