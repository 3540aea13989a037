#include "subgauss/scenarios.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "subgauss/fixtures.hpp"
#include "subgauss/parallel.hpp"
#include "subgauss/partial.hpp"
#include "subgauss/psi2.hpp"

namespace subgauss {

namespace {

template <class T>
T value_or(const std::optional<T>& v, T dflt) {
  return v ? *v : dflt;
}

void add(ScenarioResult& res, const std::string& scenario,
         std::vector<BoundReport> reports) {
  for (BoundReport& r : reports) {
    res.reports.emplace_back(scenario, std::move(r));
  }
}

void add(ScenarioResult& res, const std::string& scenario, BoundReport report) {
  res.reports.emplace_back(scenario, std::move(report));
}

std::string idx_tag(int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "[i=%03d]", i);
  return buf;
}

std::vector<BoundReport> with_suffix(std::vector<BoundReport> reports,
                                     const std::string& suffix) {
  for (BoundReport& r : reports) r.name += suffix;
  return reports;
}

std::vector<BoundReport> filter_prefix(std::vector<BoundReport> reports,
                                       const std::string& prefix) {
  std::erase_if(reports, [&](const BoundReport& r) {
    return r.name.compare(0, prefix.size(), prefix) != 0;
  });
  return reports;
}

// Smallest threshold whose good set has measure >= gamma.
double kstar_quantile(const Spectrum& s, double gamma) {
  std::vector<std::pair<double, double>> kw;
  kw.reserve(s.records.size());
  for (const SpectrumRecord& r : s.records) kw.emplace_back(r.kstar, r.weight);
  std::sort(kw.begin(), kw.end());
  double acc = 0.0;
  for (const auto& [k, w] : kw) {
    acc += w;
    if (acc >= gamma - kReportTol) return k;
  }
  return kw.back().first;
}

double ratio_quantile(std::span<const double> num, std::span<const double> den,
                      const SubsetMeasure& m, double gamma) {
  std::vector<std::pair<double, double>> rw;
  rw.reserve(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    const double ratio = den[i] > 0.0 ? num[i] / den[i] : 0.0;
    rw.emplace_back(ratio, m.weight(static_cast<std::uint32_t>(i)));
  }
  std::sort(rw.begin(), rw.end());
  double acc = 0.0;
  for (const auto& [k, w] : rw) {
    acc += w;
    if (acc >= gamma - kReportTol) return std::max(k, 1e-6);
  }
  return std::max(rw.back().first, 1e-6);
}

struct DirectionalFixture {
  RandomVector X;
  Direction theta;
  double p;
};

DirectionalFixture directional_fixture(FixtureRng& rng, int min_n, int max_n,
                                       int max_atoms, double flat_prob) {
  const int n = rng.uniform_int(min_n, max_n);
  RandomVector X = random_random_vector(rng, n, max_atoms);
  Direction theta = random_direction(rng, n, flat_prob);
  return {std::move(X), std::move(theta), random_bias(rng)};
}

BoundReport eq436_report(const Spectrum& s, const Direction& theta, double p) {
  long double acc = 0.0L;
  for (const SpectrumRecord& r : s.records) {
    acc += static_cast<long double>(r.weight) * r.restricted_norm *
           r.restricted_norm;
  }
  const double expected = p * theta.norm2() * theta.norm2();
  return make_identity_report("eq4_36", {{"p", p}},
                              static_cast<double>(acc - expected), 1e-12);
}

// ---- example4_2 closed forms: X on R^{n+1} with X_1=-Z, X_i=Z otherwise,
// theta = (n,1,...,1), Z Rademacher.

struct Ex42 {
  RandomVector X;
  Direction theta;
};

Ex42 build_ex42(int n) {
  Example42Spec spec{n, ScalarDist::rademacher()};
  RandomVector X = build_random_vector({spec});
  Direction theta;
  theta.coords.assign(n + 1, 1.0);
  theta.coords[0] = static_cast<double>(n);
  return {std::move(X), std::move(theta)};
}

double ex42_closed_kstar(int n, std::uint32_t mask) {
  const int h = std::popcount(mask >> 1);
  if (mask & 1u) {
    return (n - h) / (kSqrtLn2 * std::sqrt(double(n) * n + h));
  }
  return std::sqrt(double(h)) * kInvSqrtLn2;
}

double ex42_closed_measure(int n, double p, double C) {
  double out = 0.0;
  double binom = 1.0;
  for (int h = 0; h <= n; ++h) {
    const double wh =
        binom * std::pow(p, h) * std::pow(1.0 - p, n - h);
    const double k_out = std::sqrt(double(h)) * kInvSqrtLn2;
    const double k_in = (n - h) / (kSqrtLn2 * std::sqrt(double(n) * n + h));
    if (k_out <= C + kReportTol) out += (1.0 - p) * wh;
    if (k_in <= C + kReportTol) out += p * wh;
    binom = binom * (n - h) / (h + 1);
  }
  return out;
}

std::vector<BoundReport> example42_rows(int n, double p, double C,
                                        const Spectrum& s) {
  double max_err = 0.0;
  for (const SpectrumRecord& r : s.records) {
    max_err = std::max(max_err,
                       std::fabs(r.kstar - ex42_closed_kstar(n, r.mask)));
  }
  std::vector<BoundReport> out;
  out.push_back(make_identity_report("example4_2_closed_form",
                                     {{"n", double(n)}, {"p", p}}, max_err, 1e-9));
  const double measured = good_set_measure(s, C);
  out.push_back(make_identity_report(
      "example4_2_measure", {{"n", double(n)}, {"p", p}, {"C", C}, {"measured", measured}},
      measured - ex42_closed_measure(n, p, C), 1e-9));
  return out;
}

// ---- example5_1 checks on the distinguished subset family.

std::vector<BoundReport> example51_rows(int n, int d, double p,
                                        const ScalarDist& base) {
  auto [W, X] = build_example_5_1(n, d, base);
  double max_hom = 0.0;
  for (const VectorAtom& a : X.atoms()) {
    max_hom = std::max(max_hom, std::fabs(hom_eval(W, a.point)));
  }
  std::vector<BoundReport> out;
  out.push_back(make_identity_report(
      "example5_1_hom_zero", {{"n", double(n)}, {"d", double(d)}}, max_hom, 1e-12));

  // family: the head block {1..d} is not fully contained and the tail
  // intersection has at least p n/2 elements
  const std::uint32_t head = (std::uint32_t{1} << d) - 1;
  const std::uint32_t limit = std::uint32_t{1} << (n + d);
  double max_head_delta = 0.0;
  double max_norm = 0.0;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if ((mask & head) == head) continue;
    if (std::popcount(mask >> d) < p * n / 2.0 - kReportTol) continue;
    const DeltaProfile prof = delta_seminorm(restrict_hypergraph(W, mask),
                                             DeltaMode::ExactVertex);
    for (int i = 0; i < d; ++i) {
      max_head_delta = std::max(max_head_delta, prof.per_vertex[i]);
    }
    max_norm = std::max(max_norm, prof.seminorm);
  }
  out.push_back(make_identity_report("example5_1_head_delta_zero",
                                     {{"n", double(n)}, {"d", double(d)}, {"p", p}},
                                     max_head_delta, 1e-12));
  out.push_back(make_report("example5_1_delta_norm",
                            {{"n", double(n)}, {"d", double(d)}, {"p", p}},
                            max_norm, 2.0 * std::pow(double(n), d - 0.5)));
  return out;
}

// ---- suite battery ----------------------------------------------------

void suite_oracles(ScenarioResult& res) {
  add(res, "suite",
      make_identity_report("oracle_psi2_rademacher", {},
                           psi2_norm(ScalarDist::rademacher()) - kInvSqrtLn2,
                           1e-9));
  add(res, "suite",
      make_identity_report(
          "oracle_psi2_uniform3", {},
          psi2_norm(ScalarDist::uniform({-1.0, 0.0, 1.0})) -
              1.0 / std::sqrt(std::log(2.5)),
          1e-9));
  add(res, "suite",
      make_identity_report("oracle_psi2_constant", {{"c", 0.37}},
                           psi2_norm(ScalarDist::point_mass(0.37)) -
                               0.37 * kInvSqrtLn2,
                           1e-9));
}

void suite_identities(ScenarioResult& res, std::uint64_t seed, int count) {
  for (int i = 0; i < count; ++i) {
    FixtureRng rng(counter_hash(seed, 1000 + i));
    DirectionalFixture f = directional_fixture(rng, 2, 8, 16, 0.1);
    add(res, "suite",
        with_suffix(decomposition_identity_check(f.X, f.theta, f.p), idx_tag(i)));
    const SubsetMeasure m = SubsetMeasure::exact(f.X.dim(), f.p);
    const Spectrum s = subvector_spectrum(f.X, f.theta, m);
    BoundReport r = eq436_report(s, f.theta, f.p);
    r.name += idx_tag(i);
    add(res, "suite", std::move(r));
  }
}

void suite_hyper_identities(ScenarioResult& res, std::uint64_t seed, int count) {
  for (int i = 0; i < count; ++i) {
    FixtureRng rng(counter_hash(seed, 2000 + i));
    const int n = rng.uniform_int(2, 8);
    const Hypergraph W = random_hypergraph(rng, n, 2);
    std::vector<double> x(n);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
    const double p = random_bias(rng);
    const RandomVector X = random_random_vector(rng, n, 16);
    add(res, "suite",
        with_suffix(averaging_identity_check(W, x, p, &X), idx_tag(i)));
  }
}

void suite_directional(ScenarioResult& res, std::uint64_t seed, int count) {
  for (int i = 0; i < count; ++i) {
    FixtureRng rng(counter_hash(seed, 3000 + i));
    DirectionalFixture f = directional_fixture(rng, 3, 12, 64, 0.15);
    const int n = f.X.dim();

    // scalar inequalities on independent fixtures
    {
      std::vector<double> c(n);
      for (double& v : c) v = rng.uniform(-1.0, 1.0);
      c[0] = c[0] == 0.0 ? 0.5 : c[0];
      double cc = 0.0;
      for (double v : c) cc += v * v;
      add(res, "suite",
          with_suffix({hoeffding_check(c, f.p, 0.5 * std::sqrt(cc))}, idx_tag(i)));

      const std::uint64_t size = std::uint64_t{1} << std::min(n, 10);
      std::vector<double> table(size);
      for (double& v : table) v = rng.uniform(-1.0, 1.0);
      std::vector<double> lip(std::min(n, 10), 0.0);
      for (std::size_t bi = 0; bi < lip.size(); ++bi) {
        const std::uint64_t bit = std::uint64_t{1} << bi;
        for (std::uint64_t h = 0; h < size; ++h) {
          if (h & bit) continue;
          lip[bi] = std::max(lip[bi], std::fabs(table[h | bit] - table[h]));
        }
      }
      double lc = 0.0;
      for (double v : lip) lc += v * v;
      add(res, "suite",
          with_suffix(
              {bounded_differences_check(table, lip, f.p, 0.5 * std::sqrt(lc))},
              idx_tag(i)));
    }

    const SubsetMeasure m = SubsetMeasure::exact(n, f.p);
    const Spectrum s = subvector_spectrum(f.X, f.theta, m);
    HereditaryParams params;
    params.p = f.p;
    params.K = std::max(s.records.back().kstar, 1.0 / std::sqrt(2.0)) +
               rng.uniform(0.0, 0.5);
    params.lambda = i % 2 == 0 ? kLambdaMin : 16.0;
    params.eta = std::min(i % 2 == 0 ? 0.05 : 0.1, 0.9 * f.p);
    params.gamma = rng.uniform(0.1, 1.0);
    params.alpha = rng.uniform(0.1, 1.0);
    params.t = rng.uniform(0.05, 1.0) * (1.0 + f.theta.norm2());
    add(res, "suite",
        with_suffix(concentration_report(s, f.X, f.theta, m, params), idx_tag(i)));

    // converse row at a premise-satisfying threshold
    HereditaryParams thm_params = params;
    thm_params.K = kstar_quantile(s, params.gamma);
    add(res, "suite",
        with_suffix(hereditary_theorem_check(s, f.X, f.theta, m, thm_params),
                    idx_tag(i)));
  }
}

void suite_hyper(ScenarioResult& res, std::uint64_t seed, int count) {
  for (int i = 0; i < count; ++i) {
    FixtureRng rng(counter_hash(seed, 4000 + i));
    const int d = rng.uniform_int(1, 3);
    const int n = rng.uniform_int(std::max(d, 3), 9);
    const Hypergraph W = random_hypergraph(rng, n, d);
    const RandomVector X = random_random_vector(rng, n, 32);
    const double p = random_bias(rng);
    const SubsetMeasure m = SubsetMeasure::exact(n, p);

    add(res, "suite",
        with_suffix({spectrum_lipschitz_check(X, W)}, idx_tag(i)));

    HereditaryParams params;
    params.p = p;
    params.K = std::max(f_subgaussian_constant(X, W), 1.0 / std::sqrt(2.0)) +
               rng.uniform(0.0, 0.5);
    params.lambda = i % 2 == 0 ? kLambdaMin : 16.0;
    params.eta = 0.5 * std::pow(p, d);
    params.gamma = rng.uniform(0.1, 1.0);
    params.t = rng.uniform(0.05, 2.0);
    add(res, "suite",
        with_suffix(hyper_concentration_report(X, W, m, params), idx_tag(i)));

    // premise-satisfying converse threshold from the ratio quantile
    const std::vector<double> table = psi2_table(X, W);
    std::vector<double> delta(table.size());
    for (std::size_t mask = 0; mask < delta.size(); ++mask) {
      delta[mask] = delta_seminorm(
                        restrict_hypergraph(W, static_cast<std::uint32_t>(mask)),
                        DeltaMode::ExactVertex)
                        .seminorm;
    }
    HereditaryParams thm_params = params;
    thm_params.K = ratio_quantile(table, delta, m, params.gamma);
    add(res, "suite",
        with_suffix(hyper_theorem_check(X, W, m, thm_params), idx_tag(i)));
  }
}

void suite_partial(ScenarioResult& res, std::uint64_t seed, int count) {
  for (int i = 0; i < count; ++i) {
    FixtureRng rng(counter_hash(seed, 5000 + i));
    const int n = rng.uniform_int(6, 12);
    const RandomVector X = random_random_vector(rng, n, 64);
    const Direction theta = random_direction(rng, n, 0.5);
    const double p = random_bias(rng);
    const double nrm = theta.norm2();

    Direction unit = theta;
    for (double& v : unit.coords) v /= nrm;
    double tau_hat = std::max(1.0 / p, 1.0) + rng.uniform(0.0, 3.0);
    const double K =
        std::max(partial_constant(X, unit, tau_hat), 1.0 / std::sqrt(2.0));
    tau_hat = std::max(tau_hat, std::sqrt(2.0) * K);

    PartialParams params;
    params.K = K;
    params.p = p;
    params.tau = tau_hat * nrm;
    params.alpha = rng.uniform(0.1, 1.0);
    add(res, "suite",
        with_suffix(
            prop_5_3_check(X, theta, SubsetMeasure::exact(n, p), params),
            idx_tag(i)));
  }
}

void run_suite(ScenarioResult& res, std::uint64_t seed) {
  suite_oracles(res);
  suite_identities(res, seed, 100);
  suite_hyper_identities(res, seed, 100);
  suite_directional(res, seed, 500);
  suite_hyper(res, seed, 200);
  suite_partial(res, seed, 200);
  add(res, "suite",
      with_suffix(example42_rows(
                      14, 0.5, 3.0,
                      [] {
                        Ex42 e = build_ex42(14);
                        return subvector_spectrum(e.X, e.theta,
                                                  SubsetMeasure::exact(15, 0.5));
                      }()),
                  ""));
  add(res, "suite", example51_rows(8, 2, 0.5, ScalarDist::rademacher()));
  add(res, "suite",
      pseudorandomness_check(Hypergraph::complete(10, 2), 0.5));
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_table() {
  static const std::vector<ScenarioInfo> table = {
      {"fact3_3", "Eq (3.3)", "vector_spec, direction, --n --p"},
      {"eq4_36", "Eq (4.36)", "vector_spec, direction, --n --p"},
      {"prop2_2", "Prop 2.2", "--n --p"},
      {"prop2_3", "Prop 2.3", "--n --p"},
      {"prop4_3", "Eq (4.5)", "vector_spec, direction, --n --p --K --lambda"},
      {"cor4_4", "Eq (4.6)", "vector_spec, direction, --n --p --K"},
      {"cor4_5", "Eq (4.8)", "vector_spec, direction, --n --p --K --lambda"},
      {"prop4_8", "Prop 4.8", "vector_spec, direction, --n --p --lambda --alpha"},
      {"thm4_1", "Eq (4.2)", "vector_spec, direction, --n --p --eta"},
      {"prop3_1", "Prop 3.1", "vector_spec, direction, --n --p --K --gamma"},
      {"example4_2", "Example 4.2", "--n --p --C"},
      {"cor4_11", "Eq (4.31)", "--n --p --lambda"},
      {"factA_1", "Eq (A.1)", "hypergraph, --n --d --p"},
      {"factA_2", "Eq (A.3)", "vector_spec, hypergraph, --n --d"},
      {"propA_4", "Eq (A.9)", "vector_spec, hypergraph, --n --d --p --K --lambda"},
      {"thmA_7", "Eq (A.25)", "vector_spec, hypergraph, --n --d --p --eta --gamma"},
      {"example5_1", "Example 5.1", "--n --d --p"},
      {"remarkA_9", "Remark A.9", "hypergraph, --n --d --p"},
      {"prop5_3", "Eq (5.8)", "vector_spec, direction, --n --p --K --tau --alpha"},
      {"suite", "all of the above", "--seed"},
  };
  return table;
}

bool known_scenario(const std::string& name) {
  for (const ScenarioInfo& s : scenario_table()) {
    if (s.name == name) return true;
  }
  return false;
}

std::string render_scenario_list() {
  std::string out = "scenario      anchor          required inputs\n";
  for (const ScenarioInfo& s : scenario_table()) {
    std::string line = s.name;
    line.resize(14, ' ');
    std::string anchor = s.anchor;
    anchor.resize(16, ' ');
    out += line + anchor + s.fields + '\n';
  }
  return out;
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  if (!known_scenario(config.scenario)) {
    throw DomainError("unknown scenario \"" + config.scenario + "\"");
  }
  ScenarioResult res;
  const std::string& sc = config.scenario;
  FixtureRng rng(config.seed);
  const double p = value_or(config.p, 0.5);

  const auto directional_inputs = [&](int default_n, int max_atoms,
                                      double flat_prob) {
    DirectionalFixture f = [&] {
      if (config.vector_spec) {
        RandomVector X = build_random_vector(*config.vector_spec);
        Direction theta = config.direction
                              ? *config.direction
                              : random_direction(rng, X.dim(), flat_prob);
        return DirectionalFixture{std::move(X), std::move(theta), p};
      }
      const int n = value_or(config.n, default_n);
      RandomVector X = random_random_vector(rng, n, max_atoms);
      Direction theta = config.direction ? *config.direction
                                         : random_direction(rng, n, flat_prob);
      return DirectionalFixture{std::move(X), std::move(theta), p};
    }();
    if (f.theta.dim() != f.X.dim()) {
      throw DomainError("config: direction dimension mismatch");
    }
    return f;
  };

  const auto hyper_inputs = [&](int default_n, int default_d) {
    const int d = value_or(config.d, default_d);
    const int n = value_or(config.n, default_n);
    Hypergraph W = config.hypergraph ? *config.hypergraph
                                     : random_hypergraph(rng, n, d);
    RandomVector X = config.vector_spec ? build_random_vector(*config.vector_spec)
                                        : random_random_vector(rng, W.n, 32);
    if (X.dim() != W.n) throw DomainError("config: hypergraph dimension mismatch");
    return std::make_pair(std::move(W), std::move(X));
  };

  if (sc == "suite") {
    run_suite(res, config.seed);
  } else if (sc == "fact3_3") {
    DirectionalFixture f = directional_inputs(6, 16, 0.1);
    add(res, sc, decomposition_identity_check(f.X, f.theta, f.p));
    res.spectrum =
        subvector_spectrum(f.X, f.theta, SubsetMeasure::exact(f.X.dim(), f.p));
  } else if (sc == "eq4_36") {
    DirectionalFixture f = directional_inputs(8, 32, 0.1);
    const SubsetMeasure m = config.measure ? *config.measure
                                           : SubsetMeasure::exact(f.X.dim(), f.p);
    Spectrum s = subvector_spectrum(f.X, f.theta, m);
    add(res, sc, eq436_report(s, f.theta, m.p));
    res.spectrum = std::move(s);
  } else if (sc == "prop2_2") {
    const int n = value_or(config.n, 12);
    std::vector<double> c(n);
    for (double& v : c) v = rng.uniform(-1.0, 1.0);
    if (config.direction) c = config.direction->coords;
    double cc = 0.0;
    for (double v : c) cc += v * v;
    if (cc == 0.0) throw DomainError("config: zero coefficient vector");
    int k = 0;
    for (double frac : {0.25, 0.5, 1.0}) {
      const double t = value_or(config.t, frac * std::sqrt(cc));
      add(res, sc, with_suffix({hoeffding_check(c, p, t)}, idx_tag(k++)));
      if (config.t) break;
    }
  } else if (sc == "prop2_3") {
    const int n = value_or(config.n, 10);
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<double> table(size);
    for (double& v : table) v = rng.uniform(-1.0, 1.0);
    std::vector<double> lip(n, 0.0);
    for (int bi = 0; bi < n; ++bi) {
      const std::uint64_t bit = std::uint64_t{1} << bi;
      for (std::uint64_t h = 0; h < size; ++h) {
        if (h & bit) continue;
        lip[bi] = std::max(lip[bi], std::fabs(table[h | bit] - table[h]));
      }
    }
    double lc = 0.0;
    for (double v : lip) lc += v * v;
    int k = 0;
    for (double frac : {0.25, 0.5, 1.0}) {
      const double t = value_or(config.t, frac * std::sqrt(lc));
      add(res, sc,
          with_suffix({bounded_differences_check(table, lip, p, t)}, idx_tag(k++)));
      if (config.t) break;
    }
  } else if (sc == "prop4_3" || sc == "cor4_4" || sc == "cor4_5") {
    DirectionalFixture f = directional_inputs(10, 32, 0.1);
    const SubsetMeasure m = SubsetMeasure::exact(f.X.dim(), f.p);
    Spectrum s = subvector_spectrum(f.X, f.theta, m);
    HereditaryParams params;
    params.p = f.p;
    params.K = value_or(config.K,
                        std::max(s.records.back().kstar, 1.0 / std::sqrt(2.0)));
    params.lambda = value_or(config.lambda, sc == "cor4_5" ? 2.0 : kLambdaMin);
    params.t = value_or(config.t, 0.25 * (1.0 + f.theta.norm2()));
    add(res, sc,
        filter_prefix(concentration_report(s, f.X, f.theta, m, params), sc));
    res.spectrum = std::move(s);
  } else if (sc == "thm4_1" || sc == "prop3_1" || sc == "prop4_8" ||
             sc == "cor4_11") {
    DirectionalFixture f = [&] {
      if (sc == "cor4_11" && !config.vector_spec && !config.direction) {
        const int n = value_or(config.n, 16);
        ProductSpec spec;
        for (int i = 0; i < n; ++i) spec.marginals.push_back(ScalarDist::rademacher());
        return DirectionalFixture{build_random_vector({spec}), Direction::flat(n), p};
      }
      return directional_inputs(10, 32, sc == "cor4_11" ? 1.0 : 0.2);
    }();
    const SubsetMeasure m = SubsetMeasure::exact(f.X.dim(), f.p);
    Spectrum s = subvector_spectrum(f.X, f.theta, m);
    HereditaryParams params;
    params.p = f.p;
    params.eta = value_or(config.eta, std::min(0.1, 0.9 * f.p));
    params.gamma = value_or(config.gamma, 0.5);
    params.K = value_or(config.K, kstar_quantile(s, params.gamma));
    params.lambda = value_or(config.lambda, 2.0);
    params.alpha = value_or(config.alpha, 0.5);
    add(res, sc,
        filter_prefix(hereditary_theorem_check(s, f.X, f.theta, m, params), sc));
    res.spectrum = std::move(s);
  } else if (sc == "example4_2") {
    const int n = value_or(config.n, 20);
    const double C = value_or(config.C, 3.0);
    Ex42 e = build_ex42(n);
    Spectrum s =
        subvector_spectrum(e.X, e.theta, SubsetMeasure::exact(n + 1, p));
    add(res, sc, example42_rows(n, p, C, s));
    res.spectrum = std::move(s);
  } else if (sc == "factA_1") {
    auto [W, X] = hyper_inputs(8, 2);
    std::vector<double> x(W.n);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
    add(res, sc, averaging_identity_check(W, x, p, &X));
  } else if (sc == "factA_2") {
    auto [W, X] = hyper_inputs(8, 2);
    add(res, sc, spectrum_lipschitz_check(X, W));
  } else if (sc == "propA_4") {
    auto [W, X] = hyper_inputs(8, 2);
    const SubsetMeasure m = SubsetMeasure::exact(W.n, p);
    HereditaryParams params;
    params.p = p;
    params.K = value_or(
        config.K, std::max(f_subgaussian_constant(X, W), 1.0 / std::sqrt(2.0)));
    params.lambda = value_or(config.lambda, kLambdaMin);
    params.t = value_or(config.t, 0.5);
    add(res, sc, hyper_concentration_report(X, W, m, params));
  } else if (sc == "thmA_7") {
    auto [W, X] = hyper_inputs(8, 2);
    const SubsetMeasure m = SubsetMeasure::exact(W.n, p);
    HereditaryParams params;
    params.p = p;
    params.eta = value_or(config.eta, 0.5 * std::pow(p, W.d));
    params.gamma = value_or(config.gamma, 0.5);
    if (config.K) {
      params.K = *config.K;
    } else {
      const std::vector<double> table = psi2_table(X, W);
      std::vector<double> delta(table.size());
      for (std::size_t mask = 0; mask < delta.size(); ++mask) {
        delta[mask] =
            delta_seminorm(restrict_hypergraph(W, static_cast<std::uint32_t>(mask)),
                           DeltaMode::ExactVertex)
                .seminorm;
      }
      params.K = ratio_quantile(table, delta, m, params.gamma);
    }
    add(res, sc, hyper_theorem_check(X, W, m, params));
  } else if (sc == "example5_1") {
    const int n = value_or(config.n, 10);
    const int d = value_or(config.d, 2);
    add(res, sc, example51_rows(n, d, p, ScalarDist::rademacher()));
  } else if (sc == "remarkA_9") {
    const int d = value_or(config.d, 2);
    const int n = value_or(config.n, 10);
    Hypergraph W = config.hypergraph ? *config.hypergraph
                                     : Hypergraph::complete(n, d);
    add(res, sc, pseudorandomness_check(W, p));
  } else if (sc == "prop5_3") {
    const int n = value_or(config.n, 12);
    DirectionalFixture f = [&] {
      if (config.vector_spec) return directional_inputs(n, 64, 1.0);
      ProductSpec spec;
      for (int i = 0; i < n; ++i) spec.marginals.push_back(ScalarDist::rademacher());
      RandomVector X = build_random_vector({spec});
      Direction theta =
          config.direction ? *config.direction : Direction::flat(n);
      return DirectionalFixture{std::move(X), std::move(theta), p};
    }();
    const double nrm = f.theta.norm2();
    Direction unit = f.theta;
    for (double& v : unit.coords) v /= nrm;
    // default threshold: tau_hat = 0.7 sqrt(dim) in the normalized scale
    const double tau =
        value_or(config.tau, 0.7 * std::sqrt(double(f.X.dim())) * nrm);
    PartialParams params;
    params.p = f.p;
    params.tau = tau;
    params.K = value_or(config.K,
                        std::max(partial_constant(f.X, unit, tau / nrm),
                                 1.0 / std::sqrt(2.0)));
    params.alpha = value_or(config.alpha, 0.5);
    add(res, sc,
        prop_5_3_check(f.X, f.theta, SubsetMeasure::exact(f.X.dim(), f.p), params));
  }

  std::stable_sort(res.reports.begin(), res.reports.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first != b.first) return a.first < b.first;
                     return a.second.name < b.second.name;
                   });
  std::vector<BoundReport> flat;
  flat.reserve(res.reports.size());
  for (const auto& [scen, r] : res.reports) flat.push_back(r);
  res.status = all_hold(flat) ? 0 : 1;
  return res;
}

void write_outputs(const ScenarioResult& result, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  {
    std::ofstream os(fs::path(out_dir) / "reports.jsonl", std::ios::binary);
    if (!os) throw DomainError("cannot open reports.jsonl for writing");
    for (const auto& [scenario, r] : result.reports) {
      const std::string line = to_jsonl(r);
      os << "{\"scenario\":\"" << scenario << "\"," << line.substr(1) << '\n';
    }
  }
  if (result.spectrum) {
    std::ofstream os(fs::path(out_dir) / "spectrum.csv", std::ios::binary);
    if (!os) throw DomainError("cannot open spectrum.csv for writing");
    os << "H_mask,weight,psi2,restricted_norm,kstar\n";
    for (const SpectrumRecord& r : result.spectrum->records) {
      os << r.mask << ',' << fmt17(r.weight) << ',' << fmt17(r.psi2) << ','
         << fmt17(r.restricted_norm) << ',' << fmt17(r.kstar) << '\n';
    }
  }
}

}  // namespace subgauss
