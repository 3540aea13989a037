#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "subgauss/biased.hpp"
#include "subgauss/fixtures.hpp"

using namespace subgauss;

TEST_CASE("exact weights form a probability measure") {
  const SubsetMeasure m = SubsetMeasure::exact(10, 0.3);
  double sum = 0.0;
  for (std::uint32_t h = 0; h < 1024; ++h) sum += m.weight(h);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.weight(0) == doctest::Approx(std::pow(0.7, 10)));
  CHECK(m.weight(1023) == doctest::Approx(std::pow(0.3, 10)));
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(SubsetMeasure::exact(25, 0.5), CapacityError);
  CHECK_THROWS_AS(SubsetMeasure::exact(0, 0.5), DomainError);
  CHECK_THROWS_AS(SubsetMeasure::exact(5, 0.0), DomainError);
  CHECK_THROWS_AS(SubsetMeasure::exact(5, 1.0), DomainError);
  CHECK_THROWS_AS(SubsetMeasure::sampled(5, 0.5, 0, 1), DomainError);
}

TEST_CASE("counter rng is schedule independent and stable") {
  CHECK(counter_hash(1, 2) == counter_hash(1, 2));
  CHECK(counter_hash(1, 2) != counter_hash(1, 3));
  CHECK(counter_hash(2, 2) != counter_hash(1, 2));
  const double u = counter_uniform01(9, 9);
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
}

TEST_CASE("exact measure of a popcount event matches the binomial") {
  const SubsetMeasure m = SubsetMeasure::exact(12, 0.4);
  const auto pred = [](std::uint32_t h) { return std::popcount(h) <= 3; };
  double expect = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= 3; ++k) {
    expect += binom * std::pow(0.4, k) * std::pow(0.6, 12 - k);
    binom = binom * (12 - k) / (k + 1);
  }
  CHECK(measure_of(m, pred) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(measure_of(m, pred) == measure_of_serial(m, pred));
}

TEST_CASE("sampled measure converges at the 3-sigma scale") {
  const int n = 8;
  const double p = 0.35;
  const auto pred = [](std::uint32_t h) { return std::popcount(h) % 2 == 0; };
  const double exact = measure_of(SubsetMeasure::exact(n, p), pred);
  const std::uint64_t count = 200000;
  const double sampled = measure_of(SubsetMeasure::sampled(n, p, count, 17), pred);
  const double sigma = std::sqrt(exact * (1.0 - exact) / count);
  CHECK(std::fabs(sampled - exact) <= 3.0 * sigma);
}

TEST_CASE("sampled mode is deterministic in the seed") {
  const SubsetMeasure m = SubsetMeasure::sampled(10, 0.5, 5000, 99);
  const auto pred = [](std::uint32_t h) { return (h & 1u) != 0; };
  CHECK(measure_of(m, pred) == measure_of(m, pred));
  CHECK(measure_of(m, pred) == measure_of_serial(m, pred));
}

TEST_CASE("tail inequality for biased linear sums holds on random instances") {
  FixtureRng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform_int(2, 12);
    std::vector<double> c(n);
    for (double& v : c) v = rng.uniform(-1.0, 1.0);
    c[0] = c[0] == 0.0 ? 1.0 : c[0];
    double cc = 0.0;
    for (double v : c) cc += v * v;
    const double p = random_bias(rng);
    const double t = rng.uniform(0.1, 1.5) * std::sqrt(cc);
    const BoundReport r = hoeffding_check(c, p, t);
    CHECK(r.holds);
  }
}

TEST_CASE("bounded differences inequality on random tables") {
  FixtureRng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(2, 10);
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<double> table(size);
    for (double& v : table) v = rng.uniform(-1.0, 1.0);
    std::vector<double> lip(n, 0.0);
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      for (std::uint64_t h = 0; h < size; ++h) {
        if (h & bit) continue;
        lip[i] = std::max(lip[i], std::fabs(table[h | bit] - table[h]));
      }
    }
    double lc = 0.0;
    for (double v : lip) lc += v * v;
    const double p = random_bias(rng);
    const double t = rng.uniform(0.1, 1.5) * std::sqrt(std::max(lc, 1e-12));
    const BoundReport r = bounded_differences_check(table, lip, p, t);
    CHECK(r.holds);
  }
}

TEST_CASE("bounded differences rejects an understated Lipschitz vector") {
  std::vector<double> table = {0.0, 1.0, 0.0, 1.0};
  std::vector<double> lip = {0.1, 0.1};
  CHECK_THROWS_AS(bounded_differences_check(table, lip, 0.5, 0.5), DomainError);
}
