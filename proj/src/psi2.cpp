#include "subgauss/psi2.hpp"

#include <algorithm>
#include <cmath>

namespace subgauss {

double exp_moment(const ScalarDist& d, double s) {
  double m = 0.0;
  for (const Atom& a : d.atoms()) {
    const double r = a.value / s;
    m += a.prob * std::exp(std::min(r * r, 700.0));
  }
  return m;
}

Psi2Result psi2_norm_full(const ScalarDist& d) {
  const double maxabs = d.max_abs();
  if (maxabs == 0.0) return {0.0, 0, 0.0, 0.0};

  // E[exp((X/s)^2)] <= 2 at s = max|X|/sqrt(ln 2), so the norm lies below.
  double hi = maxabs * kInvSqrtLn2;
  double lo = hi * 0.5;
  int iters = 0;
  while (exp_moment(d, lo) <= 2.0) {
    hi = lo;
    lo *= 0.5;
    if (++iters > 4096) break;  // cannot happen for a nonzero variable
  }
  const double bracket_lo = lo;
  const double bracket_hi = hi;
  while (hi - lo > 1e-12 * hi && iters < 200 + 4096) {
    const double mid = 0.5 * (lo + hi);
    if (exp_moment(d, mid) > 2.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iters;
  }
  // hi is the smallest probed s with moment <= 2
  return {hi, iters, bracket_lo, bracket_hi};
}

double psi2_norm(const ScalarDist& d) { return psi2_norm_full(d).norm; }

std::vector<BoundReport> tail_duality_check(const ScalarDist& d, double K) {
  if (!(K > 0.0)) throw DomainError("tail_duality_check: K must be positive");
  std::vector<BoundReport> out;
  const double psi2 = psi2_norm(d);
  const auto mags = d.abs_magnitudes();

  int idx = 0;
  for (double t : mags) {
    const double lhs = d.tail_prob_geq(t);
    const double rhs = 2.0 * std::exp(-(t * t) / (psi2 * psi2));
    out.push_back(make_report("prop2_1a[" + std::to_string(idx++) + "]",
                              {{"t", t}, {"psi2", psi2}}, lhs, rhs));
  }

  // Hypothesis at the magnitudes decides all t > 0: the tail is constant on
  // each piece and the bound is smallest at the right endpoint.
  bool hypothesis = true;
  for (double t : mags) {
    if (d.tail_prob_geq(t) > 2.0 * std::exp(-(t * t) / (K * K)) + kReportTol) {
      hypothesis = false;
      break;
    }
  }
  if (hypothesis) {
    out.push_back(make_report("prop2_1b", {{"K", K}}, psi2,
                              std::sqrt(3.0) * K));
  } else {
    out.push_back(make_skipped("prop2_1b", {{"K", K}},
                               "tail hypothesis not satisfied at K"));
  }
  return out;
}

DyadicTailResult psi2_from_dyadic_tails(const ScalarDist& d, double R, double C) {
  if (!(R > 0.0) || !(C > 0.0)) {
    throw DomainError("psi2_from_dyadic_tails: R, C must be positive");
  }
  const double maxabs = d.max_abs();
  for (double t = R; t <= maxabs; t *= 2.0) {
    if (d.tail_prob_geq(t) > 2.0 * std::exp(-(t * t) / (C * C)) + kReportTol) {
      return {false, 0.0};
    }
  }
  return {true, std::sqrt(3.0) * std::max(2.0 * C, R * kInvSqrtLn2)};
}

}  // namespace subgauss
