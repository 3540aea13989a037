#include "subgauss/scalar_dist.hpp"

#include <algorithm>
#include <cmath>

namespace subgauss {

std::vector<Atom> merge_atoms(std::vector<Atom> raw) {
  std::erase_if(raw, [](const Atom& a) { return a.prob <= kProbDropTol; });
  std::sort(raw.begin(), raw.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  std::vector<Atom> merged;
  merged.reserve(raw.size());
  for (const Atom& a : raw) {
    if (!merged.empty() && a.value - merged.back().value <= kValueMergeTol) {
      Atom& m = merged.back();
      const double total = m.prob + a.prob;
      // probability-weighted representative value
      m.value = (m.value * m.prob + a.value * a.prob) / total;
      m.prob = total;
    } else {
      merged.push_back(a);
    }
  }
  return merged;
}

ScalarDist::ScalarDist(std::vector<Atom> atoms) {
  if (atoms.empty()) throw DomainError("ScalarDist: empty support");
  double sum = 0.0;
  for (const Atom& a : atoms) {
    if (a.prob < 0.0) throw DomainError("ScalarDist: negative probability");
    if (!std::isfinite(a.value) || !std::isfinite(a.prob)) {
      throw DomainError("ScalarDist: nonfinite atom");
    }
    sum += a.prob;
  }
  if (std::fabs(sum - 1.0) > 1e-12) {
    throw DomainError("ScalarDist: probabilities sum to " + std::to_string(sum));
  }
  atoms_ = merge_atoms(std::move(atoms));
  if (atoms_.empty()) throw DomainError("ScalarDist: all mass dropped");
  double kept = 0.0;
  for (const Atom& a : atoms_) kept += a.prob;
  for (Atom& a : atoms_) a.prob /= kept;
}

ScalarDist ScalarDist::point_mass(double v) { return ScalarDist({{v, 1.0}}); }

ScalarDist ScalarDist::rademacher() {
  return ScalarDist({{-1.0, 0.5}, {1.0, 0.5}});
}

ScalarDist ScalarDist::uniform(const std::vector<double>& values) {
  if (values.empty()) throw DomainError("ScalarDist::uniform: empty");
  std::vector<Atom> atoms;
  atoms.reserve(values.size());
  const double p = 1.0 / static_cast<double>(values.size());
  for (double v : values) atoms.push_back({v, p});
  return ScalarDist(std::move(atoms));
}

double ScalarDist::max_abs() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m = std::max(m, std::fabs(a.value));
  return m;
}

double ScalarDist::mean() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.prob * a.value;
  return m;
}

double ScalarDist::tail_prob_geq(double t) const {
  double p = 0.0;
  for (const Atom& a : atoms_) {
    if (std::fabs(a.value) >= t) p += a.prob;
  }
  return p;
}

std::vector<double> ScalarDist::abs_magnitudes() const {
  std::vector<double> mags;
  for (const Atom& a : atoms_) {
    const double m = std::fabs(a.value);
    if (m > 0.0) mags.push_back(m);
  }
  std::sort(mags.begin(), mags.end());
  mags.erase(std::unique(mags.begin(), mags.end(),
                         [](double a, double b) { return b - a <= kValueMergeTol; }),
             mags.end());
  return mags;
}

ScalarDist ScalarDist::scaled(double c) const {
  std::vector<Atom> atoms;
  atoms.reserve(atoms_.size());
  for (const Atom& a : atoms_) atoms.push_back({c * a.value, a.prob});
  return ScalarDist(std::move(atoms));
}

ScalarDist convolve(const ScalarDist& a, const ScalarDist& b) {
  std::vector<Atom> raw;
  raw.reserve(a.atoms().size() * b.atoms().size());
  for (const Atom& x : a.atoms()) {
    for (const Atom& y : b.atoms()) {
      raw.push_back({x.value + y.value, x.prob * y.prob});
    }
  }
  return ScalarDist(std::move(raw));
}

}  // namespace subgauss
