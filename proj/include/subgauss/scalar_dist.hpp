#pragma once

#include <vector>

#include "subgauss/common.hpp"

namespace subgauss {

struct Atom {
  double value = 0.0;
  double prob = 0.0;
  bool operator==(const Atom&) const = default;
};

// Finitely supported real random variable. Atoms are merged (values within
// 1e-15 collapse), probabilities below 1e-15 are dropped, the rest is
// renormalized, and the support is kept sorted ascending.
class ScalarDist {
 public:
  explicit ScalarDist(std::vector<Atom> atoms);

  static ScalarDist point_mass(double v);
  static ScalarDist rademacher();
  // Uniform over the given values.
  static ScalarDist uniform(const std::vector<double>& values);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }

  double max_abs() const;
  double mean() const;
  // P(|X| >= t)
  double tail_prob_geq(double t) const;
  // Distinct positive magnitudes of the support, ascending.
  std::vector<double> abs_magnitudes() const;

  ScalarDist scaled(double c) const;

  bool operator==(const ScalarDist&) const = default;

 private:
  std::vector<Atom> atoms_;
};

// Merge raw (value, prob) pairs into a canonical sorted atom list without
// validating total mass; shared by all pushforward paths.
std::vector<Atom> merge_atoms(std::vector<Atom> raw);

// Distribution of the sum of two independent variables.
ScalarDist convolve(const ScalarDist& a, const ScalarDist& b);

}  // namespace subgauss
