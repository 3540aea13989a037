#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "subgauss/scalar_dist.hpp"

namespace subgauss {

struct VectorAtom {
  double prob = 0.0;
  std::vector<double> point;
  bool operator==(const VectorAtom&) const = default;
};

// Finitely supported joint distribution on [-1,1]^n. When the vector was
// built as an independent product, the marginals are kept so linear
// pushforwards can run by convolution instead of atom enumeration.
class RandomVector {
 public:
  RandomVector(int dim, std::vector<VectorAtom> atoms,
               std::optional<std::vector<ScalarDist>> product_marginals =
                   std::nullopt);

  int dim() const { return dim_; }
  const std::vector<VectorAtom>& atoms() const { return atoms_; }
  const std::optional<std::vector<ScalarDist>>& product_marginals() const {
    return product_marginals_;
  }

  // Distribution of the i-th coordinate (0-based).
  ScalarDist marginal(int i) const;

 private:
  int dim_;
  std::vector<VectorAtom> atoms_;
  std::optional<std::vector<ScalarDist>> product_marginals_;
};

struct VectorSpec;

struct ProductSpec {
  std::vector<ScalarDist> marginals;
};

// X_i = Z on T, -Z off T (indices 1-based).
struct CancellationSpec {
  ScalarDist base;
  int n = 0;
  std::vector<int> members;
};

// Pointwise sum of independently sampled parts with convex weights.
struct ConvexCombinationSpec {
  std::vector<double> weights;
  std::vector<VectorSpec> parts;
};

struct ExplicitSpec {
  int dim = 0;
  std::vector<VectorAtom> atoms;
};

// Dimension n+1, X_1 = -Z and X_i = Z for i > 1.
struct Example42Spec {
  int n = 0;
  ScalarDist base;
};

// Dimension n+d, every coordinate equal to Z.
struct Example51VectorSpec {
  int n = 0;
  int d = 0;
  ScalarDist base;
};

struct VectorSpec {
  std::variant<ProductSpec, CancellationSpec, ConvexCombinationSpec,
               ExplicitSpec, Example42Spec, Example51VectorSpec>
      node;
};

inline constexpr std::size_t kAtomCap = std::size_t{1} << 20;

RandomVector build_random_vector(const VectorSpec& spec,
                                 std::size_t atom_cap = kAtomCap);

// Distribution of <theta, X>.
ScalarDist pushforward_linear(const RandomVector& X,
                              std::span<const double> theta);

// Distribution of <theta_H, X> for the subset mask H (bit i = coordinate i).
ScalarDist pushforward_restricted(const RandomVector& X,
                                  std::span<const double> theta,
                                  std::uint32_t mask);

// Distribution of f(X) for an arbitrary functional of the coordinates.
ScalarDist pushforward(const RandomVector& X,
                       const std::function<double(std::span<const double>)>& f);

}  // namespace subgauss
