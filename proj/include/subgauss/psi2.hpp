#pragma once

#include <vector>

#include "subgauss/report.hpp"
#include "subgauss/scalar_dist.hpp"

namespace subgauss {

struct Psi2Result {
  double norm = 0.0;
  int iterations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

// E[exp((X/s)^2)] with the exponent clamped at 700 so bracket probing cannot
// overflow; the clamp only fires where the comparison against 2 is already
// decided.
double exp_moment(const ScalarDist& d, double s);

// inf{s > 0 : E[exp((X/s)^2)] <= 2}, by bisection on the strictly decreasing
// moment map. Upper bracket max|X| / sqrt(ln 2); relative tolerance 1e-12.
// The zero random variable has norm 0.
Psi2Result psi2_norm_full(const ScalarDist& d);
double psi2_norm(const ScalarDist& d);

// Tail duality: (a) P(|X| >= t) <= 2 exp(-t^2 / psi2^2) at every support
// magnitude t; (b) if P(|X| >= t) <= 2 exp(-t^2 / K^2) at every magnitude
// (sufficient, the tail is piecewise constant), then psi2 <= sqrt(3) K.
std::vector<BoundReport> tail_duality_check(const ScalarDist& d, double K);

struct DyadicTailResult {
  bool hypothesis_holds = false;
  double bound = 0.0;
};

// Dyadic tail criterion: if P(|X| >= 2^j R) <= 2 exp(-(2^j R)^2 / C^2) for
// every j with 2^j R <= max|X|, then psi2 <= sqrt(3) max{2C, R / sqrt(ln 2)}.
DyadicTailResult psi2_from_dyadic_tails(const ScalarDist& d, double R, double C);

}  // namespace subgauss
