#include "subgauss/random_vector.hpp"

#include <algorithm>
#include <cmath>

namespace subgauss {

namespace {

// Lexicographic merge of joint atoms; points within the value tolerance in
// every coordinate collapse.
std::vector<VectorAtom> merge_vector_atoms(std::vector<VectorAtom> raw) {
  std::erase_if(raw, [](const VectorAtom& a) { return a.prob <= kProbDropTol; });
  std::sort(raw.begin(), raw.end(), [](const VectorAtom& a, const VectorAtom& b) {
    return a.point < b.point;
  });
  std::vector<VectorAtom> merged;
  merged.reserve(raw.size());
  auto same_point = [](const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::fabs(a[i] - b[i]) > kValueMergeTol) return false;
    }
    return true;
  };
  for (VectorAtom& a : raw) {
    if (!merged.empty() && same_point(merged.back().point, a.point)) {
      merged.back().prob += a.prob;
    } else {
      merged.push_back(std::move(a));
    }
  }
  return merged;
}

}  // namespace

RandomVector::RandomVector(int dim, std::vector<VectorAtom> atoms,
                           std::optional<std::vector<ScalarDist>> product_marginals)
    : dim_(dim), product_marginals_(std::move(product_marginals)) {
  if (dim < 1) throw DomainError("RandomVector: dimension must be positive");
  if (atoms.empty()) throw DomainError("RandomVector: empty support");
  double sum = 0.0;
  for (VectorAtom& a : atoms) {
    if (a.prob < 0.0) throw DomainError("RandomVector: negative probability");
    if (static_cast<int>(a.point.size()) != dim) {
      throw DomainError("RandomVector: point dimension mismatch");
    }
    for (double& v : a.point) {
      if (!std::isfinite(v) || std::fabs(v) > 1.0 + 1e-12) {
        throw DomainError("RandomVector: entry outside [-1,1]");
      }
      v = std::clamp(v, -1.0, 1.0);
    }
    sum += a.prob;
  }
  if (std::fabs(sum - 1.0) > 1e-12) {
    throw DomainError("RandomVector: probabilities sum to " + std::to_string(sum));
  }
  atoms_ = merge_vector_atoms(std::move(atoms));
  double kept = 0.0;
  for (const VectorAtom& a : atoms_) kept += a.prob;
  for (VectorAtom& a : atoms_) a.prob /= kept;
  if (product_marginals_ &&
      static_cast<int>(product_marginals_->size()) != dim_) {
    throw DomainError("RandomVector: marginal count mismatch");
  }
}

ScalarDist RandomVector::marginal(int i) const {
  if (i < 0 || i >= dim_) throw DomainError("RandomVector::marginal: bad index");
  if (product_marginals_) return (*product_marginals_)[i];
  std::vector<Atom> raw;
  raw.reserve(atoms_.size());
  for (const VectorAtom& a : atoms_) raw.push_back({a.point[i], a.prob});
  return ScalarDist(std::move(raw));
}

namespace {

RandomVector build_product(const ProductSpec& spec, std::size_t cap) {
  if (spec.marginals.empty()) throw DomainError("Product: no marginals");
  std::size_t count = 1;
  for (const ScalarDist& m : spec.marginals) {
    if (count > cap / std::max<std::size_t>(m.support_size(), 1)) {
      throw CapacityError("Product: atom count exceeds cap");
    }
    count *= m.support_size();
  }
  const int n = static_cast<int>(spec.marginals.size());
  std::vector<VectorAtom> atoms;
  atoms.reserve(count);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t k = 0; k < count; ++k) {
    VectorAtom a;
    a.prob = 1.0;
    a.point.resize(n);
    for (int i = 0; i < n; ++i) {
      const Atom& atom = spec.marginals[i].atoms()[idx[i]];
      a.prob *= atom.prob;
      a.point[i] = atom.value;
    }
    atoms.push_back(std::move(a));
    for (int i = n - 1; i >= 0; --i) {
      if (++idx[i] < spec.marginals[i].support_size()) break;
      idx[i] = 0;
    }
  }
  return RandomVector(n, std::move(atoms), spec.marginals);
}

RandomVector build_cancellation(const CancellationSpec& spec) {
  if (spec.n < 1) throw DomainError("Cancellation: n must be positive");
  std::vector<bool> in_T(spec.n, false);
  for (int i : spec.members) {
    if (i < 1 || i > spec.n) throw DomainError("Cancellation: index outside [n]");
    in_T[i - 1] = true;
  }
  std::vector<VectorAtom> atoms;
  atoms.reserve(spec.base.support_size());
  for (const Atom& a : spec.base.atoms()) {
    VectorAtom v;
    v.prob = a.prob;
    v.point.resize(spec.n);
    for (int i = 0; i < spec.n; ++i) v.point[i] = in_T[i] ? a.value : -a.value;
    atoms.push_back(std::move(v));
  }
  return RandomVector(spec.n, std::move(atoms));
}

RandomVector build_convex(const ConvexCombinationSpec& spec, std::size_t cap) {
  if (spec.parts.empty() || spec.parts.size() != spec.weights.size()) {
    throw DomainError("ConvexCombination: weights/parts mismatch");
  }
  double wsum = 0.0;
  for (double w : spec.weights) {
    if (w < 0.0) throw DomainError("ConvexCombination: negative weight");
    wsum += w;
  }
  if (std::fabs(wsum - 1.0) > 1e-12) {
    throw DomainError("ConvexCombination: weights must sum to 1");
  }
  std::vector<RandomVector> parts;
  parts.reserve(spec.parts.size());
  for (const VectorSpec& s : spec.parts) parts.push_back(build_random_vector(s, cap));
  const int n = parts.front().dim();
  std::size_t count = 1;
  for (const RandomVector& part : parts) {
    if (part.dim() != n) throw DomainError("ConvexCombination: dimension mismatch");
    if (count > cap / std::max<std::size_t>(part.atoms().size(), 1)) {
      throw CapacityError("ConvexCombination: atom count exceeds cap");
    }
    count *= part.atoms().size();
  }
  // joint over independently sampled parts, pointwise convex sum
  std::vector<VectorAtom> atoms;
  atoms.reserve(count);
  std::vector<std::size_t> idx(parts.size(), 0);
  for (std::size_t k = 0; k < count; ++k) {
    VectorAtom a;
    a.prob = 1.0;
    a.point.assign(n, 0.0);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const VectorAtom& pa = parts[j].atoms()[idx[j]];
      a.prob *= pa.prob;
      for (int i = 0; i < n; ++i) a.point[i] += spec.weights[j] * pa.point[i];
    }
    atoms.push_back(std::move(a));
    for (int j = static_cast<int>(parts.size()) - 1; j >= 0; --j) {
      if (++idx[j] < parts[j].atoms().size()) break;
      idx[j] = 0;
    }
  }
  return RandomVector(n, std::move(atoms));
}

RandomVector build_example42(const Example42Spec& spec) {
  if (spec.n < 1) throw DomainError("Example42: n must be positive");
  std::vector<VectorAtom> atoms;
  atoms.reserve(spec.base.support_size());
  for (const Atom& a : spec.base.atoms()) {
    VectorAtom v;
    v.prob = a.prob;
    v.point.assign(spec.n + 1, a.value);
    v.point[0] = -a.value;
    atoms.push_back(std::move(v));
  }
  return RandomVector(spec.n + 1, std::move(atoms));
}

RandomVector build_example51(const Example51VectorSpec& spec) {
  if (spec.n < spec.d || spec.d < 1) throw DomainError("Example51: need n >= d >= 1");
  std::vector<VectorAtom> atoms;
  atoms.reserve(spec.base.support_size());
  for (const Atom& a : spec.base.atoms()) {
    atoms.push_back({a.prob, std::vector<double>(spec.n + spec.d, a.value)});
  }
  return RandomVector(spec.n + spec.d, std::move(atoms));
}

}  // namespace

RandomVector build_random_vector(const VectorSpec& spec, std::size_t atom_cap) {
  return std::visit(
      [&](const auto& node) -> RandomVector {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ProductSpec>) {
          return build_product(node, atom_cap);
        } else if constexpr (std::is_same_v<T, CancellationSpec>) {
          return build_cancellation(node);
        } else if constexpr (std::is_same_v<T, ConvexCombinationSpec>) {
          return build_convex(node, atom_cap);
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          return RandomVector(node.dim, node.atoms);
        } else if constexpr (std::is_same_v<T, Example42Spec>) {
          return build_example42(node);
        } else {
          return build_example51(node);
        }
      },
      spec.node);
}

ScalarDist pushforward_linear(const RandomVector& X,
                              std::span<const double> theta) {
  const std::uint32_t full =
      X.dim() >= 32 ? 0xffffffffu : ((std::uint32_t{1} << X.dim()) - 1);
  return pushforward_restricted(X, theta, full);
}

ScalarDist pushforward_restricted(const RandomVector& X,
                                  std::span<const double> theta,
                                  std::uint32_t mask) {
  if (static_cast<int>(theta.size()) != X.dim()) {
    throw DomainError("pushforward: dimension mismatch");
  }
  if (X.product_marginals()) {
    // independent entries: convolve the scaled marginals on the mask
    const auto& marg = *X.product_marginals();
    ScalarDist acc = ScalarDist::point_mass(0.0);
    bool any = false;
    for (int i = 0; i < X.dim(); ++i) {
      if (!(mask >> i & 1u) || theta[i] == 0.0) continue;
      ScalarDist scaled = marg[i].scaled(theta[i]);
      acc = any ? convolve(acc, scaled) : std::move(scaled);
      any = true;
    }
    return acc;
  }
  std::vector<Atom> raw;
  raw.reserve(X.atoms().size());
  for (const VectorAtom& a : X.atoms()) {
    double v = 0.0;
    for (int i = 0; i < X.dim(); ++i) {
      if (mask >> i & 1u) v += theta[i] * a.point[i];
    }
    raw.push_back({v, a.prob});
  }
  return ScalarDist(std::move(raw));
}

ScalarDist pushforward(const RandomVector& X,
                       const std::function<double(std::span<const double>)>& f) {
  std::vector<Atom> raw;
  raw.reserve(X.atoms().size());
  for (const VectorAtom& a : X.atoms()) raw.push_back({f(a.point), a.prob});
  return ScalarDist(std::move(raw));
}

}  // namespace subgauss
