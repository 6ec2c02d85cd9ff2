#pragma once

#include <optional>

#include "json.hpp"
#include "qaffine/evalreps/evalreps.hpp"
#include "qaffine/scalars/linalg.hpp"

namespace qaffine {

// Linear system X * (rho1_z (x) rho2)Delta(x) = (rho2 (x) rho1_z)Delta(x) * X,
// one block per generator x in {K_i, E+_i, E-_i}, with z = lambda/mu and mu = 1.
struct IntertwinerSystem {
  Representation rho1;  // untwisted; the system twists it by z
  Representation rho2;  // spectral parameter pinned to 1
  GradationSpec gradation;
  std::vector<Generator> generators;
  // Full stacked system: rows = #generators * N^2, columns = N^2 unknowns
  // X(a, b) at column a * N + b, where N = d1 * d2.
  Mat full;
  // Unknown slots surviving the weight (K-commutation) condition.
  std::vector<std::size_t> unknowns;
  // E-equations restricted to the surviving unknowns, zero rows removed.
  Mat pruned;

  std::size_t n() const { return rho1.dim * rho2.dim; }
};

IntertwinerSystem build_intertwiner_system(const Representation& rho1, const Representation& rho2,
                                           const GradationSpec& grad);

struct Normalization {
  std::size_t pivot_row = 0;
  std::size_t pivot_col = 0;
  // Scalar applied after the pivot entry was set to 1.
  RatFunc factor{1};
};

// Check-R: V1 (x) V2 -> V2 (x) V1 as a function of `var`.
struct RMatrix {
  std::string flavor = "trigonometric";  // or "rational"
  std::string var = "z";
  Representation rho1;
  Representation rho2;
  GradationSpec gradation;
  Mat r;
  Normalization norm;

  std::size_t d1() const { return rho1.dim; }
  std::size_t d2() const { return rho2.dim; }
  // R = sigma^-1 * check-R acting on V1 (x) V2.
  Mat plain() const;
  // Check-R with var replaced by value.
  Mat at(const RatFunc& value) const;
  RMatrix scaled(const RatFunc& s) const;
  nlohmann::json to_json() const;
};

// Thrown by solve_R when the intertwiner space has dimension > 1.
class ReduciblePair : public Error {
 public:
  explicit ReduciblePair(std::vector<Mat> basis);
  const std::vector<Mat>& basis() const { return basis_; }

 private:
  std::vector<Mat> basis_;
};

// Unique (up to scalar) intertwiner, normalized so that the (0,0) entry, or
// the first nonzero entry in row-major order, is 1 before denominators are
// cleared. Errors: "no-intertwiner", ReduciblePair ("reducible-pair").
// The intertwining residual is re-checked exactly on the result.
RMatrix solve_R(const IntertwinerSystem& sys);

// Convenience: build and solve.
RMatrix intertwiner(const Representation& rho1, const Representation& rho2, const GradationSpec& grad);

// Exact residual check of the intertwining relation for every generator.
Report verify_intertwining(const RMatrix& r);

struct YbeMode {
  bool exact = true;
  int trials = 20;
  std::uint64_t seed = 1;

  static YbeMode modp(int trials, std::uint64_t seed) { return {false, trials, seed}; }
};

// Braid-form Yang-Baxter equation on V1 (x) V2 (x) V3 with z1 = lambda/mu,
// z2 = mu/nu:
//   (R23(z2) x 1)(1 x R13(z1 z2))(R12(z1) x 1)
//     = (1 x R12(z1))(R13(z1 z2) x 1)(1 x R23(z2)).
// For the rational flavor the arguments are u1, u2 and u1 + u2.
// Error("bad-composition") when the factors do not chain.
Report verify_ybe(const RMatrix& r12, const RMatrix& r13, const RMatrix& r23, const YbeMode& mode);

// log10 of (degree / p)^trials, formatted with one decimal.
std::string log10_bound(int degree, int trials);

struct Unitarity {
  Report report;
  std::optional<RatFunc> phi;
};

// Check-R(z^-1) Check-R(z) = phi(z) Id (rational flavor: u -> -u).
Unitarity verify_unitarity(const RMatrix& r);

struct FusionPoint {
  int sign = 1;
  int power = 0;  // z0 = sign * t^power
  std::size_t rank = 0;
  // Image of Check-R(z0) is stable under every coproduct generator at z0.
  bool image_invariant = false;
  // Check-R(z0)^2 = c Check-R(z0) for a scalar c.
  bool projector = false;

  RatFunc value() const { return RatFunc::var("t", power) * RatFunc(sign); }
};

// Scans z = +-t^k, |k| <= bound, and returns the points where the exact rank
// drops below full, ordered by (power, sign).
std::vector<FusionPoint> fusion_points(const RMatrix& r, int bound);

}  // namespace qaffine
