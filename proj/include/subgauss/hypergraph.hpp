#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "subgauss/biased.hpp"
#include "subgauss/directional.hpp"
#include "subgauss/random_vector.hpp"
#include "subgauss/report.hpp"

namespace subgauss {

// Weighted d-uniform hypergraph on [n]; edges stored as sorted
// (vertex-mask, weight) pairs, absent edges have weight 0.
struct Hypergraph {
  int n = 0;
  int d = 1;
  std::vector<std::pair<std::uint32_t, double>> edges;

  static Hypergraph from_edges(int n, int d,
                               std::vector<std::pair<std::uint32_t, double>> edges);
  // 1-based vertex lists paired with weights.
  static Hypergraph from_vertex_lists(int n, int d,
                                      const std::vector<std::vector<int>>& edges,
                                      const std::vector<double>& weights);
  static Hypergraph complete(int n, int d, double weight = 1.0);

  double weight_of(std::uint32_t edge_mask) const;
};

// hom_W(x) = sum_e W(e) prod_{i in e} x_i; x must lie in [-1,1]^n.
double hom_eval(const Hypergraph& W, std::span<const double> x);

// Keeps exactly the edges contained in H.
Hypergraph restrict_hypergraph(const Hypergraph& W, std::uint32_t mask);

enum class DeltaMode { ExactVertex, UpperBound };

inline constexpr int kDeltaExactCap = 21;

struct DeltaProfile {
  std::vector<double> per_vertex;
  double seminorm = 0.0;
  DeltaMode mode = DeltaMode::ExactVertex;
};

// Per-coordinate oscillation of hom_W. ExactVertex evaluates the sup at cube
// vertices (attained there by multilinearity); for d <= 2 the slice in the
// remaining variables is linear, so the maximum is the absolute weight sum.
// UpperBound is 2 sum_{e in i} |W(e)| for any n.
DeltaProfile delta_seminorm(const Hypergraph& W, DeltaMode mode);

ScalarDist pushforward_hom(const RandomVector& X, const Hypergraph& W);

// ||hom_W(X)||_psi2 / ||hom_W||_Delta; 0 when hom_W(X) vanishes.
double f_subgaussian_constant(const RandomVector& X, const Hypergraph& W);

// Averaging identity p^d hom_W(x) = E_H hom_W[H](x), verified by subset
// enumeration; when X is supplied, the psi2 consequence
// p^d psi2(hom_W(X)) <= E_H psi2(hom_W[H](X)) is reported as well.
std::vector<BoundReport> averaging_identity_check(const Hypergraph& W,
                                                  std::span<const double> x,
                                                  double p,
                                                  const RandomVector* X = nullptr);

// g(H) = psi2(hom_W[H](X)) over all subset masks.
std::vector<double> psi2_table(const RandomVector& X, const Hypergraph& W);
std::vector<double> psi2_table_serial(const RandomVector& X,
                                      const Hypergraph& W);

// Cube Lipschitz profile of a table over {0,1}^n:
// Delta_i = max_{H without i} |g(H+i) - g(H)|.
DeltaProfile cube_delta(std::span<const double> table, int n);

// ||g||_Delta <= ||hom_W||_Delta / sqrt(ln 2) for g(H) = psi2(hom_W[H](X)).
BoundReport spectrum_lipschitz_check(const RandomVector& X, const Hypergraph& W);

std::vector<BoundReport> hyper_concentration_report(const RandomVector& X,
                                                    const Hypergraph& W,
                                                    const SubsetMeasure& m,
                                                    const HereditaryParams& params);

std::vector<BoundReport> hyper_theorem_check(const RandomVector& X,
                                             const Hypergraph& W,
                                             const SubsetMeasure& m,
                                             const HereditaryParams& params);

// The tight example: weight C(n,d) on {1..d}, -1 on every d-subset of
// {d+1..n+d}; X has all n+d coordinates equal to the base variable, and
// hom_E(X) vanishes atomwise.
std::pair<Hypergraph, RandomVector> build_example_5_1(int n, int d,
                                                      const ScalarDist& base);

// Pseudorandomness condition: for every i and every H with |H| >= p n,
// sum of weights of edges through i inside H is at least (p^(d-1)/2) times
// the total weight through i. Reports the worst margin.
BoundReport pseudorandomness_check(const Hypergraph& W, double p);

}  // namespace subgauss
