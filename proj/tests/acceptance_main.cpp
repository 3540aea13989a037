// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
// Exit code 0 iff every criterion passes (correctness and runtime budget).

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "subgauss/biased.hpp"
#include "subgauss/directional.hpp"
#include "subgauss/fixtures.hpp"
#include "subgauss/hypergraph.hpp"
#include "subgauss/partial.hpp"
#include "subgauss/psi2.hpp"
#include "subgauss/scenarios.hpp"

namespace fs = std::filesystem;
using namespace subgauss;

namespace {

struct Criterion {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

void check_rows(Criterion& c, const std::vector<BoundReport>& rows,
                const std::string& tag) {
  for (const BoundReport& r : rows) {
    c.require(r.holds, tag + ": violated row " + r.name);
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. closed-form oracle exactness at 1e-9
Criterion criterion_oracles() {
  Criterion c;
  c.require(std::fabs(psi2_norm(ScalarDist::rademacher()) - kInvSqrtLn2) <= 1e-9,
            "two-point symmetric oracle");
  c.require(std::fabs(psi2_norm(ScalarDist::uniform({-1.0, 0.0, 1.0})) -
                      1.0 / std::sqrt(std::log(2.5))) <= 1e-9,
            "three-point uniform oracle");
  c.require(std::fabs(psi2_norm(ScalarDist::point_mass(0.37)) -
                      0.37 * kInvSqrtLn2) <= 1e-9,
            "constant oracle");
  return c;
}

// 2. exact identities at 1e-12 on 100 + 100 random fixtures
Criterion criterion_identities() {
  Criterion c;
  for (int i = 0; i < 100; ++i) {
    FixtureRng rng(counter_hash(8101, i));
    const int n = rng.uniform_int(2, 8);
    const RandomVector X = random_random_vector(rng, n, 16);
    const Direction theta = random_direction(rng, n, 0.1);
    const double p = random_bias(rng);
    check_rows(c, decomposition_identity_check(X, theta, p), "decomposition");

    // second-moment identity across the spectrum
    const Spectrum s =
        subvector_spectrum(X, theta, SubsetMeasure::exact(n, p));
    long double acc = 0.0L;
    for (const SpectrumRecord& r : s.records) {
      acc += static_cast<long double>(r.weight) * r.restricted_norm *
             r.restricted_norm;
    }
    const double nrm = theta.norm2();
    c.require(std::fabs(static_cast<double>(acc) - p * nrm * nrm) <= 1e-12,
              "second-moment identity");
  }
  for (int i = 0; i < 100; ++i) {
    FixtureRng rng(counter_hash(8102, i));
    const int n = rng.uniform_int(2, 8);
    const Hypergraph W = random_hypergraph(rng, n, 2);
    std::vector<double> x(n);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
    const RandomVector X = random_random_vector(rng, n, 16);
    check_rows(c, averaging_identity_check(W, x, random_bias(rng), &X),
               "averaging");
  }
  return c;
}

// 3. directional inequality battery: 500 instances, zero violations
Criterion criterion_directional_suite() {
  Criterion c;
  for (int i = 0; i < 500; ++i) {
    FixtureRng rng(counter_hash(8103, i));
    const int n = rng.uniform_int(3, 12);
    const RandomVector X = random_random_vector(rng, n, 64);
    const Direction theta = random_direction(rng, n, 0.15);
    const double p = random_bias(rng);

    std::vector<double> coef(n);
    for (double& v : coef) v = rng.uniform(-1.0, 1.0);
    coef[0] = coef[0] == 0.0 ? 0.5 : coef[0];
    double cc = 0.0;
    for (double v : coef) cc += v * v;
    check_rows(c, {hoeffding_check(coef, p, 0.5 * std::sqrt(cc))}, "linear tail");

    const int tn = std::min(n, 10);
    const std::uint64_t size = std::uint64_t{1} << tn;
    std::vector<double> table(size);
    for (double& v : table) v = rng.uniform(-1.0, 1.0);
    std::vector<double> lip(tn, 0.0);
    for (int bi = 0; bi < tn; ++bi) {
      const std::uint64_t bit = std::uint64_t{1} << bi;
      for (std::uint64_t h = 0; h < size; ++h) {
        if (h & bit) continue;
        lip[bi] = std::max(lip[bi], std::fabs(table[h | bit] - table[h]));
      }
    }
    double lc = 0.0;
    for (double v : lip) lc += v * v;
    check_rows(c, {bounded_differences_check(table, lip, p, 0.5 * std::sqrt(lc))},
               "bounded differences");

    const SubsetMeasure m = SubsetMeasure::exact(n, p);
    const Spectrum s = subvector_spectrum(X, theta, m);
    HereditaryParams params;
    params.p = p;
    params.K = std::max(s.records.back().kstar, 1.0 / std::sqrt(2.0)) +
               rng.uniform(0.0, 0.5);
    params.lambda = i % 2 == 0 ? kLambdaMin : 16.0;
    params.eta = std::min(i % 2 == 0 ? 0.05 : 0.1, 0.9 * p);
    params.gamma = rng.uniform(0.1, 1.0);
    params.alpha = rng.uniform(0.1, 1.0);
    params.t = rng.uniform(0.05, 1.0) * (1.0 + theta.norm2());
    check_rows(c, concentration_report(s, X, theta, m, params), "concentration");
    check_rows(c, hereditary_theorem_check(s, X, theta, m, params), "hereditary");
  }
  return c;
}

// 4. tilted-pair construction at n = 20: closed-form spectrum and measure
Criterion criterion_tilted_pair() {
  Criterion c;
  const int n = 20;
  Example42Spec spec{n, ScalarDist::rademacher()};
  const RandomVector X = build_random_vector({spec});
  Direction theta;
  theta.coords.assign(n + 1, 1.0);
  theta.coords[0] = n;
  const Spectrum s =
      subvector_spectrum(X, theta, SubsetMeasure::exact(n + 1, 0.5));

  double max_err = 0.0;
  for (const SpectrumRecord& r : s.records) {
    const int h = std::popcount(r.mask >> 1);
    const double closed =
        (r.mask & 1u)
            ? (n - h) / (kSqrtLn2 * std::sqrt(double(n) * n + h))
            : std::sqrt(double(h)) * kInvSqrtLn2;
    max_err = std::max(max_err, std::fabs(r.kstar - closed));
  }
  c.require(max_err <= 1e-9, "closed-form spectrum mismatch");

  // sum of C(20,k) for k <= 6 is 60460
  double binom_sum = 0.0, binom = 1.0;
  for (int k = 0; k <= 6; ++k) {
    binom_sum += binom;
    binom = binom * (n - k) / (k + 1);
  }
  const double expect = 0.5 + 0.5 * binom_sum / std::pow(2.0, n);
  c.require(std::fabs(binom_sum - 60460.0) <= 1e-9, "binomial tally");
  c.require(std::fabs(good_set_measure(s, 3.0) - expect) <= 1e-9,
            "good-set measure mismatch");
  return c;
}

// 5. flat-direction corollary on a product of 16 sign variables
Criterion criterion_flat_corollary() {
  Criterion c;
  const int n = 16;
  ProductSpec spec;
  for (int i = 0; i < n; ++i) spec.marginals.push_back(ScalarDist::rademacher());
  const RandomVector X = build_random_vector({spec});
  const Direction theta = Direction::flat(n);
  const SubsetMeasure m = SubsetMeasure::exact(n, 0.5);
  const Spectrum s = subvector_spectrum(X, theta, m);

  HereditaryParams params;
  params.p = 0.5;
  params.lambda = 2.0;
  params.K = s.records.back().kstar;
  bool found = false;
  for (const BoundReport& r : hereditary_theorem_check(s, X, theta, m, params)) {
    if (r.name == "cor4_11") {
      found = !r.skipped;
      c.require(r.holds, "flat corollary violated");
    }
  }
  c.require(found, "flat corollary row missing or skipped");
  return c;
}

// 6. density battery: 200 fixtures, d in {1,2,3}, zero violations
Criterion criterion_density_suite() {
  Criterion c;
  for (int i = 0; i < 200; ++i) {
    FixtureRng rng(counter_hash(8106, i));
    const int d = rng.uniform_int(1, 3);
    const int n = rng.uniform_int(std::max(d, 3), 9);
    const Hypergraph W = random_hypergraph(rng, n, d);
    const RandomVector X = random_random_vector(rng, n, 32);
    const double p = random_bias(rng);
    const SubsetMeasure m = SubsetMeasure::exact(n, p);

    check_rows(c, {spectrum_lipschitz_check(X, W)}, "spectrum lipschitz");

    HereditaryParams params;
    params.p = p;
    params.K = std::max(f_subgaussian_constant(X, W), 1.0 / std::sqrt(2.0)) +
               rng.uniform(0.0, 0.5);
    params.lambda = i % 2 == 0 ? kLambdaMin : 16.0;
    params.eta = 0.5 * std::pow(p, d);
    params.gamma = rng.uniform(0.1, 1.0);
    params.t = rng.uniform(0.05, 2.0);
    check_rows(c, hyper_concentration_report(X, W, m, params),
               "density concentration");
    check_rows(c, hyper_theorem_check(X, W, m, params), "density hereditary");
  }
  return c;
}

// 7. cancelling density family at n = 12, d = 2
Criterion criterion_cancelling_density() {
  Criterion c;
  ScenarioConfig cfg;
  cfg.scenario = "example5_1";
  cfg.n = 12;
  cfg.d = 2;
  const ScenarioResult res = run_scenario(cfg);
  for (const auto& [tag, r] : res.reports) {
    c.require(r.holds, "violated row " + r.name);
  }
  c.require(res.reports.size() >= 3, "expected three rows");
  return c;
}

// 8. degree-1 reduction coherence at 1e-9 on 50 weight vectors
Criterion criterion_degree1_reduction() {
  Criterion c;
  FixtureRng rng(8108);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform_int(2, 10);
    std::vector<std::pair<std::uint32_t, double>> edges;
    std::vector<double> theta(n);
    for (int i = 0; i < n; ++i) {
      theta[i] = rng.uniform(-2.0, 2.0);
      edges.emplace_back(std::uint32_t{1} << i, theta[i]);
    }
    const Hypergraph W = Hypergraph::from_edges(n, 1, std::move(edges));
    double nrm = 0.0;
    for (double v : theta) nrm += v * v;
    nrm = std::sqrt(nrm);
    c.require(std::fabs(delta_seminorm(W, DeltaMode::ExactVertex).seminorm -
                        2.0 * nrm) <= 1e-9 * std::max(1.0, 2.0 * nrm),
              "seminorm reduction");
    const RandomVector X = random_random_vector(rng, n, 16);
    const double kf = f_subgaussian_constant(X, W);
    const double kstar = directional_constant(X, Direction{theta});
    c.require(std::fabs(kf - kstar / 2.0) <= 1e-9 * std::max(1.0, kstar),
              "constant reduction");
  }
  return c;
}

// 9. partial module: monotonicity, domination, hereditary rows, closed value
Criterion criterion_partial_module() {
  Criterion c;
  for (int i = 0; i < 200; ++i) {
    FixtureRng rng(counter_hash(8109, i));
    const int n = rng.uniform_int(2, 10);
    const RandomVector X = random_random_vector(rng, n, 32);
    const Direction theta = random_direction(rng, n, 0.3);
    const double tau1 = rng.uniform(0.0, 1.0);
    const double tau2 = tau1 + rng.uniform(0.0, 2.0);
    const double k1 = partial_constant(X, theta, tau1);
    c.require(partial_constant(X, theta, tau2) <= k1 + 1e-12,
              "monotonicity in the threshold");
    c.require(k1 <= directional_constant(X, theta) + 1e-12,
              "dominated by the full constant");

    if (theta.is_zero()) continue;
    const double p = random_bias(rng);
    const double nrm = theta.norm2();
    Direction unit = theta;
    for (double& v : unit.coords) v /= nrm;
    double tau_hat = std::max(1.0 / p, 1.0) + rng.uniform(0.0, 3.0);
    const double K =
        std::max(partial_constant(X, unit, tau_hat), 1.0 / std::sqrt(2.0));
    PartialParams params;
    params.K = K;
    params.p = p;
    params.tau = std::max(tau_hat, std::sqrt(2.0) * K) * nrm;
    params.alpha = rng.uniform(0.1, 1.0);
    check_rows(c, prop_5_3_check(X, theta, SubsetMeasure::exact(n, p), params),
               "partial hereditary");
  }
  const double v = flat_partial_good_measure_bound(1.0, 0.1, 0.5, 10000.0);
  c.require(std::fabs(v - (1.0 - 3.0 * std::exp(-12.5) -
                           2.0 * std::exp(-1250.0))) <= 1e-10,
            "flat substitution value");
  return c;
}

// 10. full battery determinism: two runs, byte-identical reports
Criterion criterion_determinism() {
  Criterion c;
  ScenarioConfig cfg;
  cfg.scenario = "suite";
  cfg.seed = 424242;
  const fs::path base = fs::temp_directory_path() / "subgauss_acceptance";
  fs::remove_all(base);
  const fs::path a = base / "a";
  const fs::path b = base / "b";
  const ScenarioResult ra = run_scenario(cfg);
  write_outputs(ra, a.string());
  const ScenarioResult rb = run_scenario(cfg);
  write_outputs(rb, b.string());
  c.require(ra.status == 0, "battery reported a violation");
  c.require(slurp(a / "reports.jsonl") == slurp(b / "reports.jsonl"),
            "reports differ between runs");
  c.require(!slurp(a / "reports.jsonl").empty(), "empty report file");
  fs::remove_all(base);
  return c;
}

struct Entry {
  const char* label;
  double budget_sec;
  std::function<Criterion()> run;
};

}  // namespace

int main() {
  const std::vector<Entry> entries = {
      {"01 closed-form oracle exactness", 1.0, criterion_oracles},
      {"02 exact identities at 1e-12", 30.0, criterion_identities},
      {"03 directional inequality battery (500)", 180.0,
       criterion_directional_suite},
      {"04 tilted pair closed forms at n=20", 120.0, criterion_tilted_pair},
      {"05 flat-direction corollary (16 signs)", 60.0,
       criterion_flat_corollary},
      {"06 density inequality battery (200)", 180.0, criterion_density_suite},
      {"07 cancelling density family n=12", 60.0,
       criterion_cancelling_density},
      {"08 degree-1 reduction coherence", 60.0, criterion_degree1_reduction},
      {"09 partial module invariants", 180.0, criterion_partial_module},
      {"10 battery determinism", 600.0, criterion_determinism},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c = e.run();
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (sec > e.budget_sec) {
      c.pass = false;
      if (c.detail.empty()) c.detail = "runtime budget exceeded";
    }
    if (c.pass) {
      std::printf("[PASS] %s (%.2f s)\n", e.label, sec);
    } else {
      std::printf("[FAIL] %s (%.2f s): %s\n", e.label, sec, c.detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
