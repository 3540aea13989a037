#include "subgauss/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "subgauss/parallel.hpp"
#include "subgauss/psi2.hpp"

namespace subgauss {

Hypergraph Hypergraph::from_edges(
    int n, int d, std::vector<std::pair<std::uint32_t, double>> edges) {
  if (d < 1 || n < d) throw DomainError("Hypergraph: need n >= d >= 1");
  if (n > 31) throw CapacityError("Hypergraph: n exceeds mask width");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (const auto& [mask, w] : edges) {
    if ((mask & ~full) != 0 || std::popcount(mask) != d) {
      throw DomainError("Hypergraph: edge is not a d-subset of [n]");
    }
    if (!std::isfinite(w)) throw DomainError("Hypergraph: nonfinite weight");
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k].first == edges[k - 1].first) {
      throw DomainError("Hypergraph: duplicate edge");
    }
  }
  Hypergraph W;
  W.n = n;
  W.d = d;
  W.edges = std::move(edges);
  return W;
}

Hypergraph Hypergraph::from_vertex_lists(int n, int d,
                                         const std::vector<std::vector<int>>& edges,
                                         const std::vector<double>& weights) {
  if (edges.size() != weights.size()) {
    throw DomainError("Hypergraph: edge/weight count mismatch");
  }
  std::vector<std::pair<std::uint32_t, double>> pairs;
  pairs.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::uint32_t mask = 0;
    for (int v : edges[k]) {
      if (v < 1 || v > n) throw DomainError("Hypergraph: vertex outside [n]");
      mask |= std::uint32_t{1} << (v - 1);
    }
    pairs.emplace_back(mask, weights[k]);
  }
  return from_edges(n, d, std::move(pairs));
}

Hypergraph Hypergraph::complete(int n, int d, double weight) {
  if (d < 1 || n < d) throw DomainError("Hypergraph: need n >= d >= 1");
  std::vector<std::pair<std::uint32_t, double>> pairs;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) == d) pairs.emplace_back(mask, weight);
  }
  return from_edges(n, d, std::move(pairs));
}

double Hypergraph::weight_of(std::uint32_t edge_mask) const {
  auto it = std::lower_bound(
      edges.begin(), edges.end(), edge_mask,
      [](const auto& e, std::uint32_t m) { return e.first < m; });
  return it != edges.end() && it->first == edge_mask ? it->second : 0.0;
}

double hom_eval(const Hypergraph& W, std::span<const double> x) {
  if (static_cast<int>(x.size()) != W.n) {
    throw DomainError("hom_eval: dimension mismatch");
  }
  long double acc = 0.0L;
  for (const auto& [mask, w] : W.edges) {
    long double prod = w;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      prod *= x[std::countr_zero(rest)];
    }
    acc += prod;
  }
  return static_cast<double>(acc);
}

Hypergraph restrict_hypergraph(const Hypergraph& W, std::uint32_t mask) {
  Hypergraph out;
  out.n = W.n;
  out.d = W.d;
  for (const auto& e : W.edges) {
    if ((e.first & ~mask) == 0) out.edges.push_back(e);
  }
  return out;
}

namespace {

// Oscillation of hom_W in coordinate i: the slice gradient
// S_i(x) = sum_{e in i} W(e) prod_{j in e\{i}} x_j is multilinear, so the sup
// of |S_i| over the cube is attained at a vertex and Delta_i = 2 max |S_i|.
double exact_delta_at(const Hypergraph& W, int i) {
  const std::uint32_t bit = std::uint32_t{1} << i;
  std::vector<std::pair<std::uint32_t, double>> incident;
  std::uint32_t support = 0;
  for (const auto& [mask, w] : W.edges) {
    if (mask & bit) {
      incident.emplace_back(mask & ~bit, w);
      support |= mask & ~bit;
    }
  }
  if (incident.empty()) return 0.0;
  if (W.d <= 2) {
    // the slice is constant or linear: max |S_i| = sum |W(e)|
    double s = 0.0;
    for (const auto& [mask, w] : incident) s += std::fabs(w);
    return 2.0 * s;
  }
  std::vector<int> verts;
  for (int j = 0; j < W.n; ++j) {
    if (support >> j & 1u) verts.push_back(j);
  }
  if (static_cast<int>(verts.size()) > kDeltaExactCap) {
    throw CapacityError("delta_seminorm: vertex neighborhood too large");
  }
  double best = 0.0;
  const std::uint64_t assignments = std::uint64_t{1} << verts.size();
  for (std::uint64_t a = 0; a < assignments; ++a) {
    std::uint32_t neg = 0;  // vertices assigned -1
    for (std::size_t k = 0; k < verts.size(); ++k) {
      if (a >> k & 1u) neg |= std::uint32_t{1} << verts[k];
    }
    double s = 0.0;
    for (const auto& [mask, w] : incident) {
      s += std::popcount(mask & neg) % 2 ? -w : w;
    }
    best = std::max(best, std::fabs(s));
  }
  return 2.0 * best;
}

}  // namespace

DeltaProfile delta_seminorm(const Hypergraph& W, DeltaMode mode) {
  DeltaProfile out;
  out.mode = mode;
  out.per_vertex.assign(W.n, 0.0);
  if (mode == DeltaMode::ExactVertex && W.n > kDeltaExactCap) {
    throw CapacityError("delta_seminorm: exact mode capped at n <= 21");
  }
  for (int i = 0; i < W.n; ++i) {
    if (mode == DeltaMode::ExactVertex) {
      out.per_vertex[i] = exact_delta_at(W, i);
    } else {
      const std::uint32_t bit = std::uint32_t{1} << i;
      double s = 0.0;
      for (const auto& [mask, w] : W.edges) {
        if (mask & bit) s += std::fabs(w);
      }
      out.per_vertex[i] = 2.0 * s;
    }
  }
  double sq = 0.0;
  for (double v : out.per_vertex) sq += v * v;
  out.seminorm = std::sqrt(sq);
  return out;
}

ScalarDist pushforward_hom(const RandomVector& X, const Hypergraph& W) {
  if (X.dim() != W.n) throw DomainError("pushforward_hom: dimension mismatch");
  return pushforward(X, [&](std::span<const double> x) { return hom_eval(W, x); });
}

double f_subgaussian_constant(const RandomVector& X, const Hypergraph& W) {
  const double delta = delta_seminorm(W, DeltaMode::ExactVertex).seminorm;
  if (delta == 0.0) return 0.0;  // hom_W vanishes identically
  return psi2_norm(pushforward_hom(X, W)) / delta;
}

std::vector<BoundReport> averaging_identity_check(const Hypergraph& W,
                                                  std::span<const double> x,
                                                  double p,
                                                  const RandomVector* X) {
  const SubsetMeasure m = SubsetMeasure::exact(W.n, p);
  const std::uint64_t total = m.subset_count();
  const double pd = std::pow(p, W.d);

  long double avg = 0.0L;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    long double h = 0.0L;
    for (const auto& [emask, w] : W.edges) {
      if (emask & ~static_cast<std::uint32_t>(mask)) continue;
      long double prod = w;
      for (std::uint32_t rest = emask; rest != 0; rest &= rest - 1) {
        prod *= x[std::countr_zero(rest)];
      }
      h += prod;
    }
    avg += static_cast<long double>(m.weight(static_cast<std::uint32_t>(mask))) * h;
  }
  const double err =
      static_cast<double>(std::fabs(avg - static_cast<long double>(pd) *
                                              hom_eval(W, x)));

  std::vector<BoundReport> out;
  out.push_back(make_identity_report(
      "factA_1_identity", {{"p", p}, {"n", double(W.n)}, {"d", double(W.d)}}, err,
      1e-12));

  if (X != nullptr) {
    const std::vector<double> table = psi2_table(*X, W);
    const double mean = chunked_sum(total, [&](std::uint64_t i) {
      return m.weight(static_cast<std::uint32_t>(i)) * table[i];
    });
    out.push_back(make_report("factA_1_psi2",
                              {{"p", p}, {"d", double(W.d)}},
                              pd * table[total - 1], mean));
  }
  return out;
}

std::vector<double> psi2_table(const RandomVector& X, const Hypergraph& W) {
  if (X.dim() != W.n) throw DomainError("psi2_table: dimension mismatch");
  if (W.n > kExactSubsetCap) throw CapacityError("psi2_table: n too large");
  const std::uint64_t total = std::uint64_t{1} << W.n;
  std::vector<double> table(total);
  parallel_for_index(total, [&](std::uint64_t mask) {
    table[mask] = psi2_norm(pushforward_hom(
        X, restrict_hypergraph(W, static_cast<std::uint32_t>(mask))));
  });
  return table;
}

std::vector<double> psi2_table_serial(const RandomVector& X,
                                      const Hypergraph& W) {
  if (X.dim() != W.n) throw DomainError("psi2_table: dimension mismatch");
  if (W.n > kExactSubsetCap) throw CapacityError("psi2_table: n too large");
  const std::uint64_t total = std::uint64_t{1} << W.n;
  std::vector<double> table(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    table[mask] = psi2_norm(pushforward_hom(
        X, restrict_hypergraph(W, static_cast<std::uint32_t>(mask))));
  }
  return table;
}

DeltaProfile cube_delta(std::span<const double> table, int n) {
  if (table.size() != (std::size_t{1} << n)) {
    throw DomainError("cube_delta: table size is not 2^n");
  }
  DeltaProfile out;
  out.mode = DeltaMode::ExactVertex;
  out.per_vertex.assign(n, 0.0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    double best = 0.0;
    for (std::uint64_t h = 0; h < total; ++h) {
      if (h & bit) continue;
      best = std::max(best, std::fabs(table[h | bit] - table[h]));
    }
    out.per_vertex[i] = best;
  }
  double sq = 0.0;
  for (double v : out.per_vertex) sq += v * v;
  out.seminorm = std::sqrt(sq);
  return out;
}

BoundReport spectrum_lipschitz_check(const RandomVector& X, const Hypergraph& W) {
  const std::vector<double> table = psi2_table(X, W);
  const DeltaProfile g = cube_delta(table, W.n);
  const DeltaProfile f = delta_seminorm(W, DeltaMode::ExactVertex);
  return make_report("factA_2", {{"n", double(W.n)}, {"d", double(W.d)}},
                     g.seminorm, f.seminorm / kSqrtLn2);
}

namespace {

void check_hyper_inputs(const RandomVector& X, const Hypergraph& W,
                        const SubsetMeasure& m) {
  if (m.mode != SubsetMeasure::Mode::Exact) {
    throw DomainError("hypergraph report: exact measure required");
  }
  if (X.dim() != W.n || m.n != W.n) {
    throw DomainError("hypergraph report: dimension mismatch");
  }
}

double table_measure(const SubsetMeasure& m, std::span<const double> table,
                     const std::function<bool(double)>& pred) {
  return chunked_sum(table.size(), [&](std::uint64_t i) {
    return pred(table[i]) ? m.weight(static_cast<std::uint32_t>(i)) : 0.0;
  });
}

}  // namespace

std::vector<BoundReport> hyper_concentration_report(const RandomVector& X,
                                                    const Hypergraph& W,
                                                    const SubsetMeasure& m,
                                                    const HereditaryParams& params) {
  check_hyper_inputs(X, W, m);
  const std::vector<double> table = psi2_table(X, W);
  const double delta_f = delta_seminorm(W, DeltaMode::ExactVertex).seminorm;
  const double kstar = delta_f > 0.0 ? table.back() / delta_f : 0.0;
  const double M = chunked_sum(table.size(), [&](std::uint64_t i) {
    return m.weight(static_cast<std::uint32_t>(i)) * table[i];
  });
  const double K = params.K;
  const double lambda = params.lambda;
  std::vector<BoundReport> out;

  // Spectrum deviation around its mean
  {
    const double t = params.t;
    const double lhs = table_measure(
        m, table, [&](double g) { return std::fabs(g - M) >= t - kReportTol; });
    const double rhs = delta_f > 0.0
                           ? 2.0 * std::exp(-2.0 * kLn2 * t * t / (delta_f * delta_f))
                           : 0.0;
    out.push_back(make_report("lemmaA_3", {{"p", m.p}, {"t", t}}, lhs, rhs));
  }

  const bool premise =
      delta_f > 0.0 && K >= std::max(kstar, 1.0 / std::sqrt(2.0)) - kReportTol;

  // Large deviation of the restricted norms
  if (premise && lambda >= kLambdaMin - kReportTol) {
    const double thr = lambda * K * delta_f;
    const double lhs = table_measure(m, table, [&](double g) { return g >= thr; });
    const double rhs = 3.0 * std::exp(-(kLn2 / 32.0) * lambda * lambda);
    out.push_back(
        make_report("propA_4", {{"p", m.p}, {"K", K}, {"lambda", lambda}}, lhs, rhs));
  } else {
    out.push_back(make_skipped("propA_4", {{"K", K}, {"lambda", lambda}},
                               "requires a nonvanishing density, "
                               "K >= max(K*, 1/sqrt(2)), lambda >= 8 sqrt(2)"));
  }

  // Mean bound
  if (premise) {
    out.push_back(make_report("corA_5", {{"p", m.p}, {"K", K}}, M, 12.0 * K * delta_f));
  } else {
    out.push_back(make_skipped("corA_5", {{"K", K}},
                               "requires a nonvanishing density and "
                               "K >= max(K*, 1/sqrt(2))"));
  }

  // Upper tail at the shifted threshold
  if (premise && lambda > 0.0) {
    const double thr = (12.0 + lambda) * K * delta_f;
    const double lhs = table_measure(m, table, [&](double g) { return g >= thr; });
    const double rhs = 2.0 * std::exp(-2.0 * kLn2 * lambda * lambda * K * K);
    out.push_back(
        make_report("corA_6", {{"p", m.p}, {"K", K}, {"lambda", lambda}}, lhs, rhs));
  } else {
    out.push_back(make_skipped("corA_6", {{"K", K}, {"lambda", lambda}},
                               "requires a nonvanishing density, "
                               "K >= max(K*, 1/sqrt(2)), lambda > 0"));
  }

  return out;
}

std::vector<BoundReport> hyper_theorem_check(const RandomVector& X,
                                             const Hypergraph& W,
                                             const SubsetMeasure& m,
                                             const HereditaryParams& params) {
  check_hyper_inputs(X, W, m);
  const std::vector<double> table = psi2_table(X, W);
  const std::uint64_t total = table.size();
  std::vector<double> delta(total);
  parallel_for_index(total, [&](std::uint64_t mask) {
    delta[mask] = delta_seminorm(
                      restrict_hypergraph(W, static_cast<std::uint32_t>(mask)),
                      DeltaMode::ExactVertex)
                      .seminorm;
  });
  const double delta_f = delta.back();
  const double kstar = delta_f > 0.0 ? table.back() / delta_f : 0.0;
  const double p = m.p;
  const double pd = std::pow(p, W.d);
  std::vector<BoundReport> out;

  // Good-set lower bound at the least valid K
  if (params.eta > 0.0 && params.eta < pd) {
    const double eta = params.eta;
    const double C = 26.0 / eta * (kstar + 1.0) *
                     std::sqrt(0.5 * std::log2(4.0 / eta));
    const double measured = chunked_sum(total, [&](std::uint64_t i) {
      return table[i] <= C * delta[i] + kReportTol
                 ? m.weight(static_cast<std::uint32_t>(i))
                 : 0.0;
    });
    out.push_back(make_report(
        "thmA_7", {{"p", p}, {"d", double(W.d)}, {"eta", eta}, {"K", kstar}, {"C", C}},
        pd - eta, measured, "lower bound: guaranteed measure on the left"));
  } else {
    out.push_back(make_skipped("thmA_7", {{"eta", params.eta}, {"p", p}},
                               "requires 0 < eta < p^d"));
  }

  // Converse constant under its measure premise
  {
    const double K = params.K;
    const double gamma = params.gamma;
    if (!(gamma > 0.0 && gamma <= 1.0) || !(K > 0.0)) {
      out.push_back(make_skipped("eqA_5", {{"K", K}, {"gamma", gamma}},
                                 "requires K > 0 and gamma in (0,1]"));
    } else {
      const double premise = chunked_sum(total, [&](std::uint64_t i) {
        return table[i] <= K * delta[i] + kReportTol
                   ? m.weight(static_cast<std::uint32_t>(i))
                   : 0.0;
      });
      if (premise >= gamma - kReportTol) {
        const double C = (K + std::sqrt(1.0 - std::log2(gamma))) / pd;
        out.push_back(make_report(
            "eqA_5",
            {{"p", p}, {"d", double(W.d)}, {"K", K}, {"gamma", gamma}, {"premise", premise}},
            table.back(), C * delta_f));
      } else {
        out.push_back(make_skipped(
            "eqA_5", {{"K", K}, {"gamma", gamma}, {"premise", premise}},
            "premise not satisfied"));
      }
    }
  }

  return out;
}

std::pair<Hypergraph, RandomVector> build_example_5_1(int n, int d,
                                                      const ScalarDist& base) {
  if (d < 1 || n < d) throw DomainError("build_example_5_1: need n >= d >= 1");
  double binom = 1.0;
  for (int k = 1; k <= d; ++k) binom = binom * (n - k + 1) / k;

  std::vector<std::pair<std::uint32_t, double>> edges;
  edges.emplace_back((std::uint32_t{1} << d) - 1, binom);
  const std::uint32_t tail_full = ((std::uint32_t{1} << n) - 1) << d;
  const std::uint32_t limit = std::uint32_t{1} << (n + d);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if ((mask & ~tail_full) == 0 && std::popcount(mask) == d) {
      edges.emplace_back(mask, -1.0);
    }
  }
  Hypergraph W = Hypergraph::from_edges(n + d, d, std::move(edges));

  Example51VectorSpec spec{n, d, base};
  RandomVector X = build_random_vector({spec});

  for (const VectorAtom& a : X.atoms()) {
    if (std::fabs(hom_eval(W, a.point)) > 1e-12) {
      throw std::logic_error("build_example_5_1: density does not vanish");
    }
  }
  return {std::move(W), std::move(X)};
}

BoundReport pseudorandomness_check(const Hypergraph& W, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("pseudorandomness_check: p outside (0,1)");
  }
  if (W.n > kDeltaExactCap) {
    throw CapacityError("pseudorandomness_check: n too large");
  }
  std::vector<double> totals(W.n, 0.0);
  for (const auto& [mask, w] : W.edges) {
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      totals[std::countr_zero(rest)] += w;
    }
  }
  const double factor = 0.5 * std::pow(p, W.d - 1);
  const double threshold_size = p * W.n - kReportTol;

  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_required = 0.0;
  double worst_achieved = 0.0;
  const std::uint32_t limit = std::uint32_t{1} << W.n;
  std::vector<double> inner(W.n);
  for (std::uint32_t h = 0; h < limit; ++h) {
    if (std::popcount(h) < threshold_size) continue;
    std::fill(inner.begin(), inner.end(), 0.0);
    for (const auto& [mask, w] : W.edges) {
      if (mask & ~h) continue;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        inner[std::countr_zero(rest)] += w;
      }
    }
    for (int i = 0; i < W.n; ++i) {
      if (!(h >> i & 1u)) continue;
      const double required = factor * totals[i];
      const double margin = inner[i] - required;
      if (margin < worst_margin) {
        worst_margin = margin;
        worst_required = required;
        worst_achieved = inner[i];
      }
    }
  }
  return make_report("remarkA_9",
                     {{"p", p}, {"n", double(W.n)}, {"d", double(W.d)}},
                     worst_required, worst_achieved,
                     "worst vertex/subset margin of the pseudorandomness "
                     "condition");
}

}  // namespace subgauss
