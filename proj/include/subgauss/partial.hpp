#pragma once

#include <vector>

#include "subgauss/biased.hpp"
#include "subgauss/directional.hpp"
#include "subgauss/random_vector.hpp"
#include "subgauss/report.hpp"

namespace subgauss {

struct PartialParams {
  double K = 1.0;
  double tau = 2.0;
  double p = 0.5;
  double alpha = 1.0;
};

// Least K >= 0 with P(|<theta,X>| >= t) <= 2 exp(-t^2 / (K^2 ||theta||_2^2))
// for all t >= tau. The tail is piecewise constant, so the constraint binds
// only at support magnitudes >= tau; 0 when no magnitude reaches tau.
double partial_constant(const RandomVector& X, const Direction& theta,
                        double tau);

// Partial hereditary rows: the l_inf dichotomy for partially subgaussian
// vectors, plus the flat-direction instantiation when theta is flat. Inputs
// are normalized to ||theta||_2 = 1 (tau rescales with theta).
std::vector<BoundReport> prop_5_3_check(const RandomVector& X,
                                        const Direction& theta,
                                        const SubsetMeasure& m,
                                        const PartialParams& params);

// 1 - 3 exp(-p^2 eta^2 n / 2K^2) - 2 exp(-p^2 n / 2)
double flat_partial_good_measure_bound(double K, double eta, double p, double n);

}  // namespace subgauss
