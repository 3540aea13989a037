#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "subgauss/directional.hpp"
#include "subgauss/fixtures.hpp"
#include "subgauss/psi2.hpp"

using namespace subgauss;

namespace {

RandomVector paired_cancellation() {
  CancellationSpec spec{ScalarDist::rademacher(), 2, {1}};
  return build_random_vector({spec});
}

}  // namespace

TEST_CASE("directional constant closed forms") {
  ProductSpec spec;
  spec.marginals = {ScalarDist::rademacher(), ScalarDist::rademacher()};
  const RandomVector X = build_random_vector({spec});
  const Direction theta{{1.0, 1.0}};
  CHECK(directional_constant(X, theta) ==
        doctest::Approx(2.0 / std::sqrt(std::log(3.0)) / std::sqrt(2.0))
            .epsilon(1e-11));
  CHECK(directional_constant(X, Direction{{0.0, 0.0}}) == 0.0);
}

TEST_CASE("spectrum of the paired cancellation vector") {
  const RandomVector X = paired_cancellation();
  const Direction theta{{1.0, 1.0}};
  const SubsetMeasure m = SubsetMeasure::exact(2, 0.5);
  const Spectrum s = subvector_spectrum(X, theta, m);
  REQUIRE(s.records.size() == 4);
  CHECK(s.records[0].psi2 == 0.0);   // empty mask
  CHECK(s.records[3].psi2 == doctest::Approx(0.0));  // Z - Z
  CHECK(s.records[1].kstar == doctest::Approx(kInvSqrtLn2));
  CHECK(s.records[2].kstar == doctest::Approx(kInvSqrtLn2));
  CHECK(good_set_measure(s, 1.0) == doctest::Approx(0.5));
  CHECK(good_set_measure(X, theta, m, 1.0) == doctest::Approx(0.5));
}

TEST_CASE("spectrum parallel equals serial bitwise") {
  FixtureRng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.uniform_int(2, 9);
    const RandomVector X = random_random_vector(rng, n, 24);
    const Direction theta = random_direction(rng, n);
    const SubsetMeasure m = SubsetMeasure::exact(n, random_bias(rng));
    const Spectrum a = subvector_spectrum(X, theta, m);
    const Spectrum b = subvector_spectrum_serial(X, theta, m);
    REQUIRE(a.records.size() == b.records.size());
    CHECK(a.mean_psi2 == b.mean_psi2);
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].psi2 == b.records[i].psi2);
      CHECK(a.records[i].kstar == b.records[i].kstar);
    }
  }
}

TEST_CASE("decomposition identity and its norm consequence") {
  FixtureRng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(2, 8);
    const RandomVector X = random_random_vector(rng, n, 16);
    const Direction theta = random_direction(rng, n);
    for (const BoundReport& r :
         decomposition_identity_check(X, theta, random_bias(rng))) {
      CHECK(r.holds);
    }
  }
}

TEST_CASE("constant chain is internally consistent") {
  HereditaryParams params;
  params.K = 1.3;
  params.p = 0.4;
  params.gamma = 0.25;
  params.eta = 0.05;
  const HereditaryConstants c = hereditary_constants(params);
  CHECK(c.C_part2 == doctest::Approx((1.3 + std::sqrt(std::log(8.0))) / 0.4));
  CHECK(c.C_part1 == doctest::Approx(18.0 * 2.3 / 0.4 * std::log2(80.0)));
  CHECK(c.lambda_41 == doctest::Approx(std::sqrt(std::log2(80.0) / 2.0) / 2.3));
  CHECK(c.alpha_41 == doctest::Approx(0.4 / std::sqrt(2.0 * std::log(80.0))));
  CHECK_THROWS_AS(hereditary_constants({1.0, 0.5, 0.5, 0.7, 0, kLambdaMin, 1, 1}),
                  DomainError);  // eta >= p
}

TEST_CASE("concentration and theorem rows hold on random fixtures") {
  FixtureRng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform_int(3, 9);
    const RandomVector X = random_random_vector(rng, n, 32);
    const Direction theta = random_direction(rng, n, 0.2);
    const double p = random_bias(rng);
    const SubsetMeasure m = SubsetMeasure::exact(n, p);
    const Spectrum s = subvector_spectrum(X, theta, m);

    HereditaryParams params;
    params.p = p;
    params.K = std::max(s.records.back().kstar, 1.0 / std::sqrt(2.0)) +
               rng.uniform(0.0, 1.0);
    params.lambda = trial % 2 == 0 ? kLambdaMin : 16.0;
    params.eta = std::min(0.1, 0.9 * p);
    params.gamma = rng.uniform(0.1, 1.0);
    params.alpha = rng.uniform(0.1, 1.0);
    params.t = rng.uniform(0.05, 1.0);

    for (const BoundReport& r : concentration_report(s, X, theta, m, params)) {
      INFO(r.name);
      CHECK(r.holds);
    }
    for (const BoundReport& r :
         hereditary_theorem_check(s, X, theta, m, params)) {
      INFO(r.name);
      CHECK(r.holds);
    }
  }
}

TEST_CASE("flat-direction corollary on a product of sign variables") {
  const int n = 10;
  ProductSpec spec;
  for (int i = 0; i < n; ++i) spec.marginals.push_back(ScalarDist::rademacher());
  const RandomVector X = build_random_vector({spec});
  const Direction theta = Direction::flat(n);
  const SubsetMeasure m = SubsetMeasure::exact(n, 0.5);
  const Spectrum s = subvector_spectrum(X, theta, m);
  HereditaryParams params;
  params.p = 0.5;
  params.lambda = 2.0;
  params.K = s.records.back().kstar;
  bool found = false;
  for (const BoundReport& r : hereditary_theorem_check(s, X, theta, m, params)) {
    if (r.name == "cor4_11") {
      found = true;
      CHECK_FALSE(r.skipped);
      CHECK(r.holds);
    }
  }
  CHECK(found);
}
