#include "subgauss/fixtures.hpp"

#include <bit>
#include <cmath>

namespace subgauss {

ScalarDist random_scalar_dist(FixtureRng& rng, int max_atoms) {
  const int k = rng.uniform_int(1, max_atoms);
  std::vector<Atom> atoms;
  atoms.reserve(k);
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    const double w = 0.05 + rng.u01();
    atoms.push_back({rng.uniform(-1.0, 1.0), w});
    sum += w;
  }
  double acc = 0.0;
  for (int i = 0; i + 1 < k; ++i) {
    atoms[i].prob /= sum;
    acc += atoms[i].prob;
  }
  atoms[k - 1].prob = 1.0 - acc;  // exact unit mass
  return ScalarDist(std::move(atoms));
}

RandomVector random_random_vector(FixtureRng& rng, int n, int max_atoms) {
  const int kind = rng.uniform_int(0, 2);
  if (kind == 0) {
    // independent product with a small per-coordinate support so the joint
    // stays under the atom cap
    int per = 2;
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= per;
    while (total > static_cast<std::size_t>(max_atoms) && per > 1) {
      per = 1;
      total = 1;
    }
    ProductSpec spec;
    for (int i = 0; i < n; ++i) {
      spec.marginals.push_back(random_scalar_dist(rng, per));
    }
    return build_random_vector({spec});
  }
  if (kind == 1) {
    CancellationSpec spec{random_scalar_dist(rng, max_atoms), n, {}};
    for (int i = 1; i <= n; ++i) {
      if (rng.u01() < 0.5) spec.members.push_back(i);
    }
    return build_random_vector({spec});
  }
  const int k = rng.uniform_int(1, max_atoms);
  std::vector<VectorAtom> atoms;
  atoms.reserve(k);
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    VectorAtom a;
    a.prob = 0.05 + rng.u01();
    sum += a.prob;
    a.point.resize(n);
    for (double& v : a.point) v = rng.uniform(-1.0, 1.0);
    atoms.push_back(std::move(a));
  }
  double acc = 0.0;
  for (int i = 0; i + 1 < k; ++i) {
    atoms[i].prob /= sum;
    acc += atoms[i].prob;
  }
  atoms[k - 1].prob = 1.0 - acc;
  return RandomVector(n, std::move(atoms));
}

Direction random_direction(FixtureRng& rng, int n, double flat_prob) {
  if (rng.u01() < flat_prob) return Direction::flat(n);
  Direction d;
  d.coords.resize(n);
  for (double& v : d.coords) v = rng.uniform(-1.0, 1.0);
  bool zero = true;
  for (double v : d.coords) zero = zero && v == 0.0;
  if (zero) d.coords[0] = 1.0;
  return d;
}

Hypergraph random_hypergraph(FixtureRng& rng, int n, int d) {
  std::vector<std::pair<std::uint32_t, double>> edges;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != d) continue;
    if (rng.u01() < 0.6) edges.emplace_back(mask, rng.uniform(-3.0, 3.0));
  }
  if (edges.empty()) {
    edges.emplace_back((std::uint32_t{1} << d) - 1, rng.uniform(0.5, 3.0));
  }
  return Hypergraph::from_edges(n, d, std::move(edges));
}

double random_bias(FixtureRng& rng) { return rng.uniform(0.15, 0.85); }

}  // namespace subgauss
