#pragma once

#include <cstdint>

#include "subgauss/biased.hpp"
#include "subgauss/directional.hpp"
#include "subgauss/hypergraph.hpp"
#include "subgauss/random_vector.hpp"
#include "subgauss/scalar_dist.hpp"

namespace subgauss {

// Deterministic stream of uniforms built on the counter hash; identical on
// every platform and independent of call-site threading.
class FixtureRng {
 public:
  explicit FixtureRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() { return counter_hash(seed_, counter_++); }
  double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }
  // inclusive range
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Derived stream for a sub-fixture; decouples consumption counts.
  FixtureRng fork() { return FixtureRng(next_u64()); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

ScalarDist random_scalar_dist(FixtureRng& rng, int max_atoms);

// Mix of explicit, product and cancellation vectors on [-1,1]^n.
RandomVector random_random_vector(FixtureRng& rng, int n, int max_atoms);

// Generic direction; flat with probability flat_prob.
Direction random_direction(FixtureRng& rng, int n, double flat_prob = 0.0);

Hypergraph random_hypergraph(FixtureRng& rng, int n, int d);

// p bounded into [0.15, 0.85] so tail constants stay sane.
double random_bias(FixtureRng& rng);

}  // namespace subgauss
