#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "subgauss/fixtures.hpp"
#include "subgauss/random_vector.hpp"
#include "subgauss/scalar_dist.hpp"

using namespace subgauss;

TEST_CASE("scalar dist validates and normalizes") {
  CHECK_THROWS_AS(ScalarDist({}), DomainError);
  CHECK_THROWS_AS(ScalarDist({{0.0, 0.5}, {1.0, 0.4}}), DomainError);
  CHECK_THROWS_AS(ScalarDist({{0.0, -0.1}, {1.0, 1.1}}), DomainError);

  const ScalarDist d({{0.5, 0.25}, {0.5, 0.25}, {-0.5, 0.5}});
  CHECK(d.support_size() == 2);
  CHECK(d.atoms()[0].value == doctest::Approx(-0.5));
  CHECK(d.atoms()[1].prob == doctest::Approx(0.5));
}

TEST_CASE("scalar dist accessors") {
  const ScalarDist d = ScalarDist::uniform({-1.0, 0.0, 1.0});
  CHECK(d.max_abs() == 1.0);
  CHECK(d.mean() == doctest::Approx(0.0));
  CHECK(d.tail_prob_geq(0.5) == doctest::Approx(2.0 / 3.0));
  CHECK(d.tail_prob_geq(1.5) == 0.0);
  CHECK(d.abs_magnitudes() == std::vector<double>{1.0});

  const ScalarDist s = d.scaled(-2.0);
  CHECK(s.max_abs() == 2.0);
}

TEST_CASE("convolution of two rademachers") {
  const ScalarDist c = convolve(ScalarDist::rademacher(), ScalarDist::rademacher());
  REQUIRE(c.support_size() == 3);
  CHECK(c.atoms()[0].value == doctest::Approx(-2.0));
  CHECK(c.atoms()[1].prob == doctest::Approx(0.5));
  CHECK(c.atoms()[2].prob == doctest::Approx(0.25));
}

TEST_CASE("product vector keeps marginals and enumerates the joint") {
  ProductSpec spec;
  spec.marginals = {ScalarDist::rademacher(), ScalarDist::uniform({-1.0, 0.0, 1.0})};
  const RandomVector X = build_random_vector({spec});
  CHECK(X.dim() == 2);
  CHECK(X.atoms().size() == 6);
  REQUIRE(X.product_marginals().has_value());
  CHECK(X.marginal(1).support_size() == 3);
}

TEST_CASE("product capacity cap") {
  ProductSpec spec;
  for (int i = 0; i < 16; ++i) {
    spec.marginals.push_back(ScalarDist::uniform({-1.0, -0.5, 0.0, 0.5, 1.0}));
  }
  CHECK_THROWS_AS(build_random_vector({spec}), CapacityError);
}

TEST_CASE("entries outside [-1,1] rejected") {
  CHECK_THROWS_AS(RandomVector(1, {{1.0, {1.5}}}), DomainError);
}

TEST_CASE("cancellation vector annihilates the split direction") {
  CancellationSpec spec{ScalarDist::rademacher(), 4, {1, 3}};
  const RandomVector X = build_random_vector({spec});
  // +Z on {1,3}, -Z elsewhere: theta = (1,1,1,1) pairs them off
  const ScalarDist push = pushforward_linear(X, std::vector<double>{1, 1, 1, 1});
  CHECK(push.support_size() == 1);
  CHECK(push.atoms()[0].value == doctest::Approx(0.0));
}

TEST_CASE("tilted fixture pushforward vanishes for every base") {
  FixtureRng rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.uniform_int(2, 10);
    Example42Spec spec{n, random_scalar_dist(rng, 8)};
    const RandomVector X = build_random_vector({spec});
    std::vector<double> theta(n + 1, 1.0);
    theta[0] = n;
    // cancellation is exact up to accumulation rounding of n*z
    const ScalarDist push = pushforward_linear(X, theta);
    for (const Atom& a : push.atoms()) CHECK(std::fabs(a.value) < 1e-12);
  }
}

TEST_CASE("convex combination stays inside the cube") {
  ProductSpec a;
  a.marginals = {ScalarDist::rademacher(), ScalarDist::rademacher()};
  ExplicitSpec b;
  b.dim = 2;
  b.atoms = {{0.5, {1.0, 0.0}}, {0.5, {0.0, -1.0}}};
  ConvexCombinationSpec spec{{0.25, 0.75}, {{a}, {b}}};
  const RandomVector X = build_random_vector({spec});
  CHECK(X.dim() == 2);
  for (const VectorAtom& atom : X.atoms()) {
    for (double v : atom.point) CHECK(std::fabs(v) <= 1.0);
  }
}

TEST_CASE("restricted pushforward agrees between product and generic paths") {
  ProductSpec spec;
  spec.marginals = {ScalarDist::rademacher(), ScalarDist::uniform({-1.0, 1.0, 0.5}),
                    ScalarDist::rademacher()};
  const RandomVector prod = build_random_vector({spec});
  const RandomVector generic(prod.dim(), prod.atoms());  // drops marginals
  const std::vector<double> theta = {0.3, -0.7, 1.0};
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    const ScalarDist a = pushforward_restricted(prod, theta, mask);
    const ScalarDist b = pushforward_restricted(generic, theta, mask);
    REQUIRE(a.support_size() == b.support_size());
    for (std::size_t i = 0; i < a.atoms().size(); ++i) {
      CHECK(a.atoms()[i].value == doctest::Approx(b.atoms()[i].value).epsilon(1e-12));
      CHECK(a.atoms()[i].prob == doctest::Approx(b.atoms()[i].prob).epsilon(1e-12));
    }
  }
}
