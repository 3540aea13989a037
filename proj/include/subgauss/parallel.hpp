#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace subgauss {

inline constexpr std::uint64_t kReduceChunks = 256;

// Fixed-partition sum over [0, count). The partition layout is independent of
// the worker count, each chunk accumulates serially in ascending index order,
// and chunks merge in ascending order, so the result is bitwise identical for
// any number of threads (and matches chunked_sum_serial exactly).
template <class TermFn>
double chunked_sum(std::uint64_t count, TermFn&& term) {
  if (count == 0) return 0.0;
  const std::uint64_t chunks = std::min<std::uint64_t>(kReduceChunks, count);
  const std::uint64_t len = (count + chunks - 1) / chunks;
  std::vector<double> partial(chunks, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * len;
    const std::uint64_t end = std::min(count, begin + len);
    double acc = 0.0;
    for (std::uint64_t i = begin; i < end; ++i) acc += term(i);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

// Serial reference with the identical chunk layout.
template <class TermFn>
double chunked_sum_serial(std::uint64_t count, TermFn&& term) {
  if (count == 0) return 0.0;
  const std::uint64_t chunks = std::min<std::uint64_t>(kReduceChunks, count);
  const std::uint64_t len = (count + chunks - 1) / chunks;
  std::vector<double> partial(chunks, 0.0);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = c * len;
    const std::uint64_t end = std::min(count, begin + len);
    double acc = 0.0;
    for (std::uint64_t i = begin; i < end; ++i) acc += term(i);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

// Independent per-index work; each slot is written exactly once, so the
// schedule cannot affect the output.
template <class Fn>
void parallel_for_index(std::uint64_t count, Fn&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    fn(static_cast<std::uint64_t>(i));
  }
}

}  // namespace subgauss
