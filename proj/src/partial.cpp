#include "subgauss/partial.hpp"

#include <cmath>

#include "subgauss/parallel.hpp"
#include "subgauss/psi2.hpp"

namespace subgauss {

double partial_constant(const RandomVector& X, const Direction& theta,
                        double tau) {
  if (!(tau > 0.0)) throw DomainError("partial_constant: tau must be positive");
  if (theta.dim() != X.dim()) {
    throw DomainError("partial_constant: dimension mismatch");
  }
  if (theta.is_zero()) return 0.0;
  const double nrm = theta.norm2();
  const ScalarDist d = pushforward_linear(X, theta.coords);
  // The tail is piecewise constant with jumps at support magnitudes, and the
  // target bound decreases in t, so the constraint binds exactly at the
  // magnitudes >= tau.
  double best = 0.0;
  for (double t : d.abs_magnitudes()) {
    if (t < tau) continue;
    const double tail = d.tail_prob_geq(t);
    if (tail <= 0.0) continue;
    best = std::max(best, t / (nrm * std::sqrt(std::log(2.0 / tail))));
  }
  return best;
}

std::vector<BoundReport> prop_5_3_check(const RandomVector& X,
                                        const Direction& theta,
                                        const SubsetMeasure& m,
                                        const PartialParams& params) {
  if (m.mode != SubsetMeasure::Mode::Exact) {
    throw DomainError("prop_5_3_check: exact measure required");
  }
  if (theta.dim() != X.dim() || m.n != X.dim()) {
    throw DomainError("prop_5_3_check: dimension mismatch");
  }
  const double p = m.p;
  const double K = params.K;
  const double alpha = params.alpha;
  const int n = m.n;
  std::vector<BoundReport> out;

  if (theta.is_zero()) {
    out.push_back(make_skipped("prop5_3", {{"K", K}}, "zero direction"));
    return out;
  }

  // Normalize: the statement assumes a unit direction, tau scales along.
  const double nrm = theta.norm2();
  Direction unit = theta;
  for (double& v : unit.coords) v /= nrm;
  const double tau = params.tau / nrm;

  std::map<std::string, double> base_params = {
      {"p", p}, {"K", K}, {"tau", tau}, {"alpha", alpha}, {"n", double(n)}};

  if (!(K >= 1.0 / std::sqrt(2.0) - kReportTol) ||
      !(tau >= std::max(1.0 / p, std::sqrt(2.0) * K) - kReportTol) ||
      !(alpha > 0.0 && alpha <= 1.0)) {
    out.push_back(make_skipped(
        "prop5_3", base_params,
        "requires K >= 1/sqrt(2), tau >= max(1/p, sqrt(2) K), alpha in (0,1]"));
    return out;
  }
  if (partial_constant(X, unit, tau) > K + kReportTol) {
    out.push_back(make_skipped("prop5_3", base_params,
                               "premise not satisfied: direction is not "
                               "(K,tau)-partially subgaussian"));
    return out;
  }

  const double tail_tau = 3.0 * std::exp(-p * p * tau * tau / (2.0 * K * K));
  const double new_tau = 2.0 * p * tau;
  const auto good_measure = [&](double new_K) {
    return chunked_sum(m.subset_count(), [&](std::uint64_t mask) {
      const Direction rest =
          restrict_direction(unit, static_cast<std::uint32_t>(mask));
      const bool good =
          rest.is_zero() ||
          partial_constant(X, rest, new_tau) <= new_K + kReportTol;
      return good ? m.weight(static_cast<std::uint32_t>(mask)) : 0.0;
    });
  };

  const double linf = unit.norm_inf();
  double small_measure = -1.0;
  if (linf <= alpha + kReportTol) {
    small_measure = good_measure(2.0 * K / p);
    const double bound =
        1.0 - tail_tau - 2.0 * std::exp(-p * p / (2.0 * alpha * alpha));
    out.push_back(make_report("prop5_3_small_linf", base_params, bound,
                              small_measure,
                              "lower bound: guaranteed measure on the left"));
  }
  if (linf >= alpha - kReportTol) {
    const double measured = good_measure(2.0 * std::sqrt(2.0) * K / alpha);
    out.push_back(make_report("prop5_3_large_linf", base_params, p - tail_tau,
                              measured,
                              "lower bound: guaranteed measure on the left"));
  }

  // Flat instantiation with tau = eta n
  bool flat = true;
  for (int i = 1; flat && i < n; ++i) {
    if (std::fabs(theta.coords[i] - theta.coords[0]) >
        1e-12 * std::fabs(theta.coords[0])) {
      flat = false;
    }
  }
  if (flat) {
    const double eta = tau / n;
    if (n >= std::max(2.0 * K * K, 1.0 / (p * p)) / (eta * eta) - kReportTol) {
      if (small_measure < 0.0) small_measure = good_measure(2.0 * K / p);
      base_params["eta"] = eta;
      out.push_back(make_report(
          "eq5_10", base_params, flat_partial_good_measure_bound(K, eta, p, n),
          small_measure, "lower bound: guaranteed measure on the left"));
    }
  }

  return out;
}

double flat_partial_good_measure_bound(double K, double eta, double p, double n) {
  return 1.0 - 3.0 * std::exp(-p * p * eta * eta * n / (2.0 * K * K)) -
         2.0 * std::exp(-p * p * n / 2.0);
}

}  // namespace subgauss
