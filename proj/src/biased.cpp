#include "subgauss/biased.hpp"

#include <bit>
#include <cmath>

#include "subgauss/parallel.hpp"

namespace subgauss {

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter) {
  // splitmix64 on a (seed, counter) stream position
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (counter + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double counter_uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(counter_hash(seed, counter) >> 11) * 0x1.0p-53;
}

SubsetMeasure SubsetMeasure::exact(int n, double p) {
  if (n < 1) throw DomainError("SubsetMeasure: n must be positive");
  if (n > kExactSubsetCap) {
    throw CapacityError("SubsetMeasure: exact mode capped at n <= 24");
  }
  if (!(p > 0.0 && p < 1.0)) throw DomainError("SubsetMeasure: p outside (0,1)");
  SubsetMeasure m;
  m.n = n;
  m.p = p;
  m.mode = Mode::Exact;
  return m;
}

SubsetMeasure SubsetMeasure::sampled(int n, double p, std::uint64_t count,
                                     std::uint64_t seed) {
  if (n < 1) throw DomainError("SubsetMeasure: n must be positive");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("SubsetMeasure: p outside (0,1)");
  if (count == 0) throw DomainError("SubsetMeasure: zero sample count");
  SubsetMeasure m;
  m.n = n;
  m.p = p;
  m.mode = Mode::Sampled;
  m.sample_count = count;
  m.seed = seed;
  return m;
}

double SubsetMeasure::weight(std::uint32_t mask) const {
  const int k = std::popcount(mask);
  double w = 1.0;
  for (int i = 0; i < k; ++i) w *= p;
  for (int i = 0; i < n - k; ++i) w *= 1.0 - p;
  return w;
}

std::uint32_t SubsetMeasure::sample_mask(std::uint64_t draw) const {
  std::uint32_t mask = 0;
  for (int j = 0; j < n; ++j) {
    if (counter_uniform01(seed, draw * static_cast<std::uint64_t>(n) + j) < p) {
      mask |= std::uint32_t{1} << j;
    }
  }
  return mask;
}

double measure_of(const SubsetMeasure& m, const SubsetPredicate& pred) {
  if (m.mode == SubsetMeasure::Mode::Exact) {
    return chunked_sum(m.subset_count(), [&](std::uint64_t mask) {
      const auto h = static_cast<std::uint32_t>(mask);
      return pred(h) ? m.weight(h) : 0.0;
    });
  }
  const double hits = chunked_sum(m.sample_count, [&](std::uint64_t i) {
    return pred(m.sample_mask(i)) ? 1.0 : 0.0;
  });
  return hits / static_cast<double>(m.sample_count);
}

double measure_of_serial(const SubsetMeasure& m, const SubsetPredicate& pred) {
  if (m.mode == SubsetMeasure::Mode::Exact) {
    return chunked_sum_serial(m.subset_count(), [&](std::uint64_t mask) {
      const auto h = static_cast<std::uint32_t>(mask);
      return pred(h) ? m.weight(h) : 0.0;
    });
  }
  const double hits = chunked_sum_serial(m.sample_count, [&](std::uint64_t i) {
    return pred(m.sample_mask(i)) ? 1.0 : 0.0;
  });
  return hits / static_cast<double>(m.sample_count);
}

namespace {

double norm2_sq(std::span<const double> c) {
  double s = 0.0;
  for (double v : c) s += v * v;
  return s;
}

}  // namespace

BoundReport hoeffding_check(std::span<const double> c, double p, double t) {
  if (!(t > 0.0)) throw DomainError("hoeffding_check: t must be positive");
  const double cc = norm2_sq(c);
  if (cc == 0.0) throw DomainError("hoeffding_check: zero vector");
  const int n = static_cast<int>(c.size());
  const SubsetMeasure m = SubsetMeasure::exact(n, p);
  double total = 0.0;
  for (double v : c) total += v;
  const double center = p * total;
  const double lhs = measure_of(m, [&](std::uint32_t mask) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) s += c[i];
    }
    return std::fabs(s - center) >= t - kReportTol;
  });
  const double rhs = 2.0 * std::exp(-2.0 * t * t / cc);
  return make_report("prop2_2", {{"p", p}, {"t", t}, {"n", double(n)}}, lhs, rhs);
}

BoundReport bounded_differences_check(std::span<const double> f_table,
                                      std::span<const double> c, double p,
                                      double t) {
  if (!(t > 0.0)) throw DomainError("bounded_differences_check: t must be positive");
  const int n = static_cast<int>(c.size());
  if (n < 1 || n > kExactSubsetCap) {
    throw CapacityError("bounded_differences_check: n outside exact range");
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  if (f_table.size() != size) {
    throw DomainError("bounded_differences_check: table size is not 2^n");
  }
  const double cc = norm2_sq(c);
  if (cc == 0.0) throw DomainError("bounded_differences_check: zero vector");
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t h = 0; h < size; ++h) {
      if (h & bit) continue;
      if (std::fabs(f_table[h | bit] - f_table[h]) > c[i] + kReportTol) {
        throw DomainError("bounded_differences_check: Lipschitz violated at i=" +
                          std::to_string(i + 1) + ", H=" + std::to_string(h));
      }
    }
  }
  const SubsetMeasure m = SubsetMeasure::exact(n, p);
  const double mean = chunked_sum(size, [&](std::uint64_t h) {
    return m.weight(static_cast<std::uint32_t>(h)) * f_table[h];
  });
  const double lhs = measure_of(m, [&](std::uint32_t h) {
    return std::fabs(f_table[h] - mean) >= t - kReportTol;
  });
  const double rhs = 2.0 * std::exp(-2.0 * t * t / cc);
  return make_report("prop2_3", {{"p", p}, {"t", t}, {"n", double(n)}}, lhs, rhs);
}

}  // namespace subgauss
