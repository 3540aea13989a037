#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "subgauss/common.hpp"
#include "subgauss/report.hpp"

namespace subgauss {

inline constexpr int kExactSubsetCap = 24;

// Counter-based generator: the j-th variate of draw i depends only on
// (seed, i, j), never on thread scheduling.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter);
double counter_uniform01(std::uint64_t seed, std::uint64_t counter);

// p-biased measure mu_p on subsets of [n], identified with n-bit masks.
struct SubsetMeasure {
  enum class Mode { Exact, Sampled };

  int n = 0;
  double p = 0.5;
  Mode mode = Mode::Exact;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;

  static SubsetMeasure exact(int n, double p);
  static SubsetMeasure sampled(int n, double p, std::uint64_t count,
                               std::uint64_t seed);

  // mu_p({H}) = p^|H| (1-p)^(n-|H|)
  double weight(std::uint32_t mask) const;
  std::uint64_t subset_count() const { return std::uint64_t{1} << n; }
  std::uint32_t sample_mask(std::uint64_t draw) const;
};

using SubsetPredicate = std::function<bool(std::uint32_t)>;

// Exact mode: full enumeration (parallel, deterministic merge). Sampled mode:
// empirical frequency over sample_count counter-seeded draws.
double measure_of(const SubsetMeasure& m, const SubsetPredicate& pred);
double measure_of_serial(const SubsetMeasure& m, const SubsetPredicate& pred);

// Hoeffding: mu_p(|sum_{i in H} c_i - p sum c_i| >= t) <= 2 exp(-2t^2/|c|_2^2).
BoundReport hoeffding_check(std::span<const double> c, double p, double t);

// Bounded differences: f given as a table over all 2^n subsets; the Lipschitz
// precondition |f(H+i) - f(H)| <= c_i is verified first.
BoundReport bounded_differences_check(std::span<const double> f_table,
                                      std::span<const double> c, double p,
                                      double t);

}  // namespace subgauss
