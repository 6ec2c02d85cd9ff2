#pragma once

#include <optional>
#include <vector>

#include "qaffine/scalars/matrix.hpp"

namespace qaffine {

using Vec = std::vector<RatFunc>;

// Right null space of m over the rational-function field.
//
// Each row is cleared of denominators, the polynomial matrix is reduced by
// fraction-free (Bareiss) elimination, and one basis vector per free column
// is recovered by back substitution. Basis vectors are scaled so their first
// nonzero coordinate is 1. An empty result means the null space is trivial.
std::vector<Vec> nullspace_fraction_free(const Mat& m);

// Exact rank over the rational-function field (Bareiss).
std::size_t rank_exact(const Mat& m);

// Scales a list of rational functions by one common factor so that all
// entries become Laurent polynomials with no common polynomial factor,
// minimum exponent zero per variable jointly, and a positive leading
// coefficient at the first nonzero entry. Returns the factor applied.
RatFunc clear_denominators(std::vector<RatFunc>& entries);

// Outcome of a Schwartz-Zippel identity test.
struct IdentityCheck {
  bool equal = true;
  int trials = 0;
  int points_drawn = 0;
  int degree_bound = 0;
  // Upper bound on the probability that unequal inputs pass: (D / p)^trials.
  double failure_bound = 0.0;
  // Set when a distinguishing point was found.
  std::optional<PrimePoint> witness;
  std::size_t row = 0;
  std::size_t col = 0;
};

// Probabilistic test of A == B as matrices of rational functions. Points are
// drawn deterministically from `seed`; points where a denominator vanishes are
// re-drawn, at most 100 * trials times (Error "point-exhaustion").
IdentityCheck identity_check_sz(const Mat& a, const Mat& b, int trials, std::uint64_t seed);

// Upper bound on the total degree of any entry (numerator plus denominator).
int degree_bound(const Mat& m);

}  // namespace qaffine
