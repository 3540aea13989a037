#include "subgauss/directional.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "subgauss/parallel.hpp"
#include "subgauss/psi2.hpp"

namespace subgauss {

double Direction::norm2() const {
  double s = 0.0;
  for (double v : coords) s += v * v;
  return std::sqrt(s);
}

double Direction::norm_inf() const {
  double m = 0.0;
  for (double v : coords) m = std::max(m, std::fabs(v));
  return m;
}

bool Direction::is_zero() const {
  for (double v : coords) {
    if (v != 0.0) return false;
  }
  return true;
}

Direction Direction::flat(int n) { return {std::vector<double>(n, 1.0)}; }

Direction restrict_direction(const Direction& theta, std::uint32_t mask) {
  Direction out = theta;
  for (int i = 0; i < theta.dim(); ++i) {
    if (!(mask >> i & 1u)) out.coords[i] = 0.0;
  }
  return out;
}

double directional_constant(const RandomVector& X, const Direction& theta) {
  if (theta.dim() != X.dim()) {
    throw DomainError("directional_constant: dimension mismatch");
  }
  if (theta.is_zero()) return 0.0;
  return psi2_norm(pushforward_linear(X, theta.coords)) / theta.norm2();
}

namespace {

void check_spectrum_inputs(const RandomVector& X, const Direction& theta,
                           const SubsetMeasure& m) {
  if (m.mode != SubsetMeasure::Mode::Exact) {
    throw DomainError("subvector_spectrum: exact measure required");
  }
  if (theta.dim() != X.dim() || m.n != X.dim()) {
    throw DomainError("subvector_spectrum: dimension mismatch");
  }
}

SpectrumRecord spectrum_record(const RandomVector& X, const Direction& theta,
                               const SubsetMeasure& m, std::uint32_t mask) {
  SpectrumRecord r;
  r.mask = mask;
  r.weight = m.weight(mask);
  double nrm2 = 0.0;
  for (int i = 0; i < theta.dim(); ++i) {
    if (mask >> i & 1u) nrm2 += theta.coords[i] * theta.coords[i];
  }
  r.restricted_norm = std::sqrt(nrm2);
  if (nrm2 > 0.0) {
    r.psi2 = psi2_norm(pushforward_restricted(X, theta.coords, mask));
    r.kstar = r.psi2 / r.restricted_norm;
  }
  return r;
}

}  // namespace

Spectrum subvector_spectrum(const RandomVector& X, const Direction& theta,
                            const SubsetMeasure& m) {
  check_spectrum_inputs(X, theta, m);
  const std::uint64_t total = m.subset_count();
  Spectrum s;
  s.records.resize(total);
  parallel_for_index(total, [&](std::uint64_t mask) {
    s.records[mask] = spectrum_record(X, theta, m, static_cast<std::uint32_t>(mask));
  });
  s.mean_psi2 = chunked_sum(total, [&](std::uint64_t i) {
    return s.records[i].weight * s.records[i].psi2;
  });
  return s;
}

Spectrum subvector_spectrum_serial(const RandomVector& X, const Direction& theta,
                                   const SubsetMeasure& m) {
  check_spectrum_inputs(X, theta, m);
  const std::uint64_t total = m.subset_count();
  Spectrum s;
  s.records.resize(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    s.records[mask] = spectrum_record(X, theta, m, static_cast<std::uint32_t>(mask));
  }
  s.mean_psi2 = chunked_sum_serial(total, [&](std::uint64_t i) {
    return s.records[i].weight * s.records[i].psi2;
  });
  return s;
}

double good_set_measure(const Spectrum& s, double C) {
  return chunked_sum(s.records.size(), [&](std::uint64_t i) {
    return s.records[i].kstar <= C + kReportTol ? s.records[i].weight : 0.0;
  });
}

double good_set_measure(const RandomVector& X, const Direction& theta,
                        const SubsetMeasure& m, double C) {
  if (m.mode == SubsetMeasure::Mode::Exact) {
    return good_set_measure(subvector_spectrum(X, theta, m), C);
  }
  if (theta.dim() != X.dim() || m.n != X.dim()) {
    throw DomainError("good_set_measure: dimension mismatch");
  }
  return measure_of(m, [&](std::uint32_t mask) {
    double nrm2 = 0.0;
    for (int i = 0; i < theta.dim(); ++i) {
      if (mask >> i & 1u) nrm2 += theta.coords[i] * theta.coords[i];
    }
    if (nrm2 == 0.0) return true;
    const double psi2 = psi2_norm(pushforward_restricted(X, theta.coords, mask));
    return psi2 / std::sqrt(nrm2) <= C + kReportTol;
  });
}

std::vector<BoundReport> decomposition_identity_check(const RandomVector& X,
                                                      const Direction& theta,
                                                      double p) {
  const SubsetMeasure m = SubsetMeasure::exact(X.dim(), p);
  if (theta.dim() != X.dim()) {
    throw DomainError("decomposition_identity_check: dimension mismatch");
  }
  const std::uint64_t total = m.subset_count();
  const int n = X.dim();

  double max_err = 0.0;
  for (const VectorAtom& a : X.atoms()) {
    long double inner = 0.0L;
    for (int i = 0; i < n; ++i) inner += static_cast<long double>(theta.coords[i]) * a.point[i];
    long double avg = 0.0L;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      long double restricted = 0.0L;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) {
          restricted += static_cast<long double>(theta.coords[i]) * a.point[i];
        }
      }
      avg += static_cast<long double>(m.weight(static_cast<std::uint32_t>(mask))) *
             restricted;
    }
    const double err = static_cast<double>(std::fabs(inner - avg / p));
    max_err = std::max(max_err, err);
  }

  std::vector<BoundReport> out;
  out.push_back(make_identity_report("fact3_3_identity",
                                     {{"p", p}, {"n", double(n)}}, max_err, 1e-12));

  const Spectrum s = subvector_spectrum(X, theta, m);
  const double psi2_full = theta.is_zero()
                               ? 0.0
                               : psi2_norm(pushforward_linear(X, theta.coords));
  out.push_back(make_report("eq3_4", {{"p", p}}, p * psi2_full, s.mean_psi2));
  return out;
}

HereditaryConstants hereditary_constants(const HereditaryParams& params) {
  const double K = params.K;
  const double p = params.p;
  const double gamma = params.gamma;
  const double eta = params.eta;
  if (!(K > 0.0)) throw DomainError("hereditary_constants: K must be positive");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("hereditary_constants: p outside (0,1)");
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw DomainError("hereditary_constants: gamma outside (0,1]");
  }
  if (!(eta > 0.0 && eta < p)) {
    throw DomainError("hereditary_constants: eta outside (0,p)");
  }
  HereditaryConstants c;
  c.C_part2 = (K + std::sqrt(std::log(2.0 / gamma))) / p;
  const double L = std::log2(4.0 / eta);
  c.C_part1 = 18.0 * (K + 1.0) / p * L;
  c.lambda_41 = std::sqrt(L / 2.0) / (K + 1.0);
  c.alpha_41 = p / std::sqrt(2.0 * std::log(4.0 / eta));
  const double chain_a = std::sqrt(2.0 / p) * (12.0 + c.lambda_41) * (K + 1.0);
  const double chain_b = (12.0 + c.lambda_41) * (K + 1.0) / c.alpha_41;
  if (chain_a > chain_b + kReportTol || chain_b > c.C_part1 + kReportTol) {
    throw std::logic_error("hereditary_constants: constant chain violated");
  }
  return c;
}

std::vector<BoundReport> concentration_report(const RandomVector& X,
                                              const Direction& theta,
                                              const SubsetMeasure& m,
                                              const HereditaryParams& params) {
  return concentration_report(subvector_spectrum(X, theta, m), X, theta, m,
                              params);
}

namespace {

double spectrum_measure(const Spectrum& s, const std::function<bool(const SpectrumRecord&)>& pred) {
  return chunked_sum(s.records.size(), [&](std::uint64_t i) {
    return pred(s.records[i]) ? s.records[i].weight : 0.0;
  });
}

}  // namespace

std::vector<BoundReport> concentration_report(const Spectrum& spectrum,
                                              const RandomVector& X,
                                              const Direction& theta,
                                              const SubsetMeasure& m,
                                              const HereditaryParams& params) {
  std::vector<BoundReport> out;
  const double p = m.p;
  const double theta_norm = theta.norm2();
  const double kstar_full = spectrum.records.back().kstar;
  const double M = spectrum.mean_psi2;
  const double K = params.K;
  const double lambda = params.lambda;

  // lemma3_4 row: Lipschitz vector from the actual marginals.
  {
    const double t = params.t;
    double cc = 0.0;
    for (int i = 0; i < X.dim(); ++i) {
      if (theta.coords[i] == 0.0) continue;
      const double ci = std::fabs(theta.coords[i]) * psi2_norm(X.marginal(i));
      cc += ci * ci;
    }
    const double lhs = spectrum_measure(spectrum, [&](const SpectrumRecord& r) {
      return std::fabs(r.psi2 - M) >= t - kReportTol;
    });
    const double rhs = cc > 0.0 ? 2.0 * std::exp(-2.0 * t * t / cc) : 0.0;
    out.push_back(make_report("lemma3_4", {{"p", p}, {"t", t}}, lhs, rhs));
  }

  const bool deviation_rows_ok =
      !theta.is_zero() && K >= std::max(kstar_full, 1.0 / std::sqrt(2.0)) - kReportTol;

  // prop4_3 row
  if (deviation_rows_ok && lambda >= kLambdaMin - kReportTol) {
    const double thr = lambda * K * theta_norm;
    const double lhs = spectrum_measure(
        spectrum, [&](const SpectrumRecord& r) { return r.psi2 >= thr; });
    const double rhs = 3.0 * std::exp(-(kLn2 / 32.0) * lambda * lambda);
    out.push_back(
        make_report("prop4_3", {{"p", p}, {"K", K}, {"lambda", lambda}}, lhs, rhs));
  } else {
    out.push_back(make_skipped("prop4_3", {{"K", K}, {"lambda", lambda}},
                               "requires theta != 0, K >= max(K*, 1/sqrt(2)), "
                               "lambda >= 8 sqrt(2)"));
  }

  // cor4_4 row
  if (deviation_rows_ok) {
    out.push_back(make_report("cor4_4", {{"p", p}, {"K", K}}, M,
                              12.0 * K * theta_norm));
  } else {
    out.push_back(make_skipped("cor4_4", {{"K", K}},
                               "requires theta != 0 and K >= max(K*, 1/sqrt(2))"));
  }

  // cor4_5 row
  if (deviation_rows_ok && lambda > 0.0) {
    const double thr = (12.0 + lambda) * K * theta_norm;
    const double lhs = spectrum_measure(
        spectrum, [&](const SpectrumRecord& r) { return r.psi2 >= thr; });
    const double rhs = 2.0 * std::exp(-2.0 * kLn2 * lambda * lambda * K * K);
    out.push_back(
        make_report("cor4_5", {{"p", p}, {"K", K}, {"lambda", lambda}}, lhs, rhs));
  } else {
    out.push_back(make_skipped("cor4_5", {{"K", K}, {"lambda", lambda}},
                               "requires theta != 0, K >= max(K*, 1/sqrt(2)), "
                               "lambda > 0"));
  }

  // lemma4_6 row at the threshold M_param
  if (!theta.is_zero() && K >= kstar_full - kReportTol) {
    const double M_param =
        std::max(4.0 * std::sqrt(2.0 * kLn2) * p * K, 4.0 * kSqrtLn2);
    const double Q = std::max(2.0 * p * K, std::sqrt(2.0));
    const double thr = std::sqrt(3.0 / kLn2) * M_param * theta_norm;
    const double measured = spectrum_measure(spectrum, [&](const SpectrumRecord& r) {
      return r.psi2 <= thr + kReportTol;
    });
    const double bound = 1.0 - 3.0 * std::exp(-M_param * M_param / (2.0 * Q * Q));
    out.push_back(make_report("lemma4_6",
                              {{"p", p}, {"K", K}, {"M", M_param}, {"Q", Q}},
                              bound, measured,
                              "lower bound: guaranteed measure on the left"));
  } else {
    out.push_back(make_skipped("lemma4_6", {{"K", K}},
                               "requires theta != 0 and K >= K*(theta)"));
  }

  // Eq 4.36: exact second-moment identity
  {
    long double acc = 0.0L;
    for (const SpectrumRecord& r : spectrum.records) {
      acc += static_cast<long double>(r.weight) * r.restricted_norm * r.restricted_norm;
    }
    const double expected = p * theta_norm * theta_norm;
    out.push_back(make_identity_report(
        "eq4_36", {{"p", p}}, static_cast<double>(acc - expected), 1e-12));
  }

  return out;
}

std::vector<BoundReport> hereditary_theorem_check(const RandomVector& X,
                                                  const Direction& theta,
                                                  const SubsetMeasure& m,
                                                  const HereditaryParams& params) {
  return hereditary_theorem_check(subvector_spectrum(X, theta, m), X, theta, m,
                                  params);
}

std::vector<BoundReport> hereditary_theorem_check(const Spectrum& spectrum,
                                                  const RandomVector& X,
                                                  const Direction& theta,
                                                  const SubsetMeasure& m,
                                                  const HereditaryParams& params) {
  (void)X;
  std::vector<BoundReport> out;
  const double p = m.p;
  const int n = m.n;
  const double kstar_full = spectrum.records.back().kstar;
  const double lambda = params.lambda;

  // thm4_1 row at the least valid K
  if (params.eta > 0.0 && params.eta < p) {
    const double K = kstar_full;
    const double C = 18.0 * (K + 1.0) / p * std::log2(4.0 / params.eta);
    const double measured = good_set_measure(spectrum, C);
    out.push_back(make_report("thm4_1",
                              {{"p", p}, {"eta", params.eta}, {"K", K}, {"C", C}},
                              p - params.eta, measured,
                              "lower bound: guaranteed measure on the left"));
  } else {
    out.push_back(make_skipped("thm4_1", {{"eta", params.eta}, {"p", p}},
                               "requires 0 < eta < p"));
  }

  // prop3_1 row under its measure premise
  {
    const double K = params.K;
    const double gamma = params.gamma;
    if (!(gamma > 0.0 && gamma <= 1.0) || !(K > 0.0)) {
      out.push_back(make_skipped("prop3_1", {{"K", K}, {"gamma", gamma}},
                                 "requires K > 0 and gamma in (0,1]"));
    } else {
      const double premise = good_set_measure(spectrum, K);
      if (premise >= gamma - kReportTol) {
        const double C = (K + std::sqrt(std::log(2.0 / gamma))) / p;
        out.push_back(make_report(
            "prop3_1", {{"p", p}, {"K", K}, {"gamma", gamma}, {"premise", premise}},
            kstar_full, C));
      } else {
        out.push_back(make_skipped(
            "prop3_1", {{"K", K}, {"gamma", gamma}, {"premise", premise}},
            "premise not satisfied"));
      }
    }
  }

  // prop4_8 rows: the l_inf dichotomy at the normalized direction
  if (!theta.is_zero() && lambda > 0.0 &&
      params.alpha > 0.0 && params.alpha <= 1.0) {
    const double K = std::max(kstar_full, 1.0 / std::sqrt(2.0));
    const double linf_hat = theta.norm_inf() / theta.norm2();
    const double tail = 2.0 * std::exp(-2.0 * kLn2 * lambda * lambda * K * K);
    if (linf_hat <= params.alpha + kReportTol) {
      const double C = std::sqrt(2.0 / p) * (12.0 + lambda) * K;
      const double bound =
          1.0 - tail - 2.0 * std::exp(-p * p / (2.0 * params.alpha * params.alpha));
      out.push_back(make_report(
          "prop4_8_small_linf",
          {{"p", p}, {"K", K}, {"lambda", lambda}, {"alpha", params.alpha}, {"C", C}},
          bound, good_set_measure(spectrum, C),
          "lower bound: guaranteed measure on the left"));
    }
    if (linf_hat >= params.alpha - kReportTol) {
      const double C = (12.0 + lambda) * K / params.alpha;
      out.push_back(make_report(
          "prop4_8_large_linf",
          {{"p", p}, {"K", K}, {"lambda", lambda}, {"alpha", params.alpha}, {"C", C}},
          p - tail, good_set_measure(spectrum, C),
          "lower bound: guaranteed measure on the left"));
    }
  } else {
    out.push_back(make_skipped("prop4_8", {{"alpha", params.alpha}, {"lambda", lambda}},
                               "requires theta != 0, lambda > 0, alpha in (0,1]"));
  }

  // cor4_11 row for flat directions
  {
    bool flat = !theta.is_zero();
    for (int i = 1; flat && i < theta.dim(); ++i) {
      if (std::fabs(theta.coords[i] - theta.coords[0]) >
          1e-12 * std::fabs(theta.coords[0])) {
        flat = false;
      }
    }
    if (flat && lambda > 0.0) {
      const double K = kstar_full;
      const double C = std::sqrt(2.0 / p) * (12.0 + lambda) * (K + 1.0);
      const double bound =
          1.0 -
          2.0 * std::exp(-2.0 * kLn2 * lambda * lambda * (K + 1.0) * (K + 1.0)) -
          2.0 * std::exp(-p * p * n / 2.0);
      out.push_back(make_report("cor4_11",
                                {{"p", p}, {"K", K}, {"lambda", lambda}, {"C", C}},
                                bound, good_set_measure(spectrum, C),
                                "lower bound: guaranteed measure on the left"));
    } else {
      out.push_back(
          make_skipped("cor4_11", {{"lambda", lambda}}, "direction not flat"));
    }
  }

  return out;
}

}  // namespace subgauss
