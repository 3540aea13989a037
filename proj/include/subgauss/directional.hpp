#pragma once

#include <cstdint>
#include <vector>

#include "subgauss/biased.hpp"
#include "subgauss/random_vector.hpp"
#include "subgauss/report.hpp"

namespace subgauss {

struct Direction {
  std::vector<double> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  double norm2() const;
  double norm_inf() const;
  bool is_zero() const;
  // (1,...,1)
  static Direction flat(int n);
};

Direction restrict_direction(const Direction& theta, std::uint32_t mask);

struct SpectrumRecord {
  std::uint32_t mask = 0;
  double weight = 0.0;           // mu_p({H})
  double psi2 = 0.0;             // ||<theta_H, X>||_psi2
  double restricted_norm = 0.0;  // ||theta_H||_2
  double kstar = 0.0;            // psi2 / restricted_norm, 0 when theta_H = 0
};

struct Spectrum {
  std::vector<SpectrumRecord> records;  // ascending mask order
  double mean_psi2 = 0.0;               // M = E_H psi2(H)
};

// K*(theta) = ||<theta,X>||_psi2 / ||theta||_2; 0 for the zero direction.
double directional_constant(const RandomVector& X, const Direction& theta);

Spectrum subvector_spectrum(const RandomVector& X, const Direction& theta,
                            const SubsetMeasure& m);
Spectrum subvector_spectrum_serial(const RandomVector& X,
                                   const Direction& theta,
                                   const SubsetMeasure& m);

// mu_p({H : K*(theta_H) <= C}); membership uses <= with a 1e-12 tolerance
// toward inclusion.
double good_set_measure(const Spectrum& s, double C);
double good_set_measure(const RandomVector& X, const Direction& theta,
                        const SubsetMeasure& m, double C);

// Atomwise identity <theta,x> = p^-1 sum_H mu_p(H) <theta_H,x>, plus the
// psi2 consequence p ||<theta,X>||_psi2 <= M.
std::vector<BoundReport> decomposition_identity_check(const RandomVector& X,
                                                      const Direction& theta,
                                                      double p);

struct HereditaryParams {
  double K = 1.0;
  double p = 0.5;
  double gamma = 1.0;
  double eta = 0.1;
  double C_target = 0.0;
  double lambda = kLambdaMin;
  double alpha = 1.0;
  double t = 1.0;
};

struct HereditaryConstants {
  double C_part2 = 0.0;    // p^-1 (K + sqrt(ln(2/gamma)))
  double C_part1 = 0.0;    // 18 (K+1)/p log2(4/eta)
  double lambda_41 = 0.0;  // (1/(K+1)) sqrt(log2(4/eta)/2)
  double alpha_41 = 0.0;   // p / sqrt(2 ln(4/eta))
};

// Closed-form constants; also asserts the chain
// sqrt(2/p)(12+lambda)(K+1) <= (12+lambda)(K+1)/alpha <= C_part1.
HereditaryConstants hereditary_constants(const HereditaryParams& params);

// Concentration rows: deviation of the spectrum around its mean, the large
// deviation inequality and its reverse-triangle consequences, the dyadic
// lower-tail threshold, and the exact second-moment identity
// E ||theta_H||_2^2 = p ||theta||_2^2.
std::vector<BoundReport> concentration_report(const RandomVector& X,
                                              const Direction& theta,
                                              const SubsetMeasure& m,
                                              const HereditaryParams& params);
std::vector<BoundReport> concentration_report(const Spectrum& spectrum,
                                              const RandomVector& X,
                                              const Direction& theta,
                                              const SubsetMeasure& m,
                                              const HereditaryParams& params);

// Hereditary theorem rows: good-set lower bound at the explicit constant,
// the converse constant bound under its measure premise, the l_inf dichotomy
// (both branches), and the flat-direction corollary when theta is flat.
std::vector<BoundReport> hereditary_theorem_check(const RandomVector& X,
                                                  const Direction& theta,
                                                  const SubsetMeasure& m,
                                                  const HereditaryParams& params);
std::vector<BoundReport> hereditary_theorem_check(const Spectrum& spectrum,
                                                  const RandomVector& X,
                                                  const Direction& theta,
                                                  const SubsetMeasure& m,
                                                  const HereditaryParams& params);

}  // namespace subgauss
