#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace subgauss {

// Input outside an operation's domain (bad dimensions, malformed config, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact enumeration requested past a hard size cap.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kLn2 = 0.69314718055994530941723212145818;
inline constexpr double kSqrtLn2 = 0.83255461115769775635247239913430;
inline constexpr double kInvSqrtLn2 = 1.2011224087864498018278437488230;

// Minimum lambda admissible in the large deviation inequality for the
// psi2-norm of restricted inner products (8 * sqrt(2)).
inline constexpr double kLambdaMin = 11.313708498984760390413509793678;

// Value tolerance when merging atoms of a finitely supported distribution.
inline constexpr double kValueMergeTol = 1e-15;

// Probabilities below this are dropped (support kept minimal), then the
// remaining mass is renormalized.
inline constexpr double kProbDropTol = 1e-15;

}  // namespace subgauss
