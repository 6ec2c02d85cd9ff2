#pragma once

#include <optional>

#include "qaffine/intertwine/intertwine.hpp"
#include "qaffine/yangian/yangian.hpp"

namespace qaffine {

// Coideal generators Q_i = K_i (E+_i + E-_i) + eps_i (K_i^2 - 1), i = 0..r,
// in the untwisted representation `rho`.
struct BoundaryAlgebra {
  CartanData base;
  Representation rho;
  std::vector<RatFunc> eps;
  RatFunc eta;
  std::vector<Mat> q;
};

// e0, e1, ... one symbol per node.
std::vector<RatFunc> symbolic_epsilons(const CartanData& c);

// Q_i of an arbitrary (possibly twisted) representation.
Mat q_generator(const Representation& rho, int i, const RatFunc& eps);

// Defaults: symbolic epsilons, eta the free symbol "eta".
BoundaryAlgebra build_Q_generators(const Representation& rho, std::vector<RatFunc> eps = {},
                                   std::optional<RatFunc> eta = std::nullopt);

// (rho1 (x) rho2)Delta(Q_i) = Q_i (x) 1 + K_i^2 (x) Q_i with rho2 = b.rho and
// the right-hand Q_i taken from b.q.
Report verify_coideal(const BoundaryAlgebra& b, const Representation& rho1);

struct KMatrix {
  std::string flavor = "trigonometric";  // or "rational"
  std::string var = "z";
  std::string rep_name;
  std::size_t dim = 0;
  std::string gradation = "homogeneous";
  std::vector<RatFunc> eps;
  RatFunc eta;
  Mat k;
  Normalization norm;
  // Trigonometric: K(z) rho_{eta z}(Q_i) = rho_{eta/z}(Q_i) K(z).
  std::optional<BoundaryAlgebra> algebra;
  std::optional<GradationSpec> grad;
  // Rational: K(u) rho_u(x) = rho_{-u}(x) K(u) for these pairs, with u = var.
  std::vector<std::pair<std::string, Mat>> rational_generators;

  Mat at(const RatFunc& value) const { return substitute(k, var, value); }
  KMatrix scaled(const RatFunc& s) const;
  nlohmann::json to_json() const;
};

// Thrown by solve_K when the solution space has dimension > 1.
class ReducibleBoundary : public Error {
 public:
  explicit ReducibleBoundary(std::vector<Mat> basis);
  const std::vector<Mat>& basis() const { return basis_; }

 private:
  std::vector<Mat> basis_;
};

// Stacked system over all Q_i with the twist evaluated at eta*z and eta/z.
// Errors: "no-intertwiner", ReducibleBoundary ("reducible-boundary").
KMatrix solve_K(const BoundaryAlgebra& b, const GradationSpec& grad);

// Null-space dimension of the K system, without normalizing.
std::size_t k_nullity(const BoundaryAlgebra& b, const GradationSpec& grad);
// Same count at one random point mod p; never below the exact nullity.
std::size_t k_nullity_mod_p(const BoundaryAlgebra& b, const GradationSpec& grad, std::uint64_t seed);

// First eta = sign * t^k, |k| <= bound (ordered by |k|, then k < 0 first,
// then + before -), for which the K system has nullity exactly 1.
std::optional<RatFunc> find_eta(const Representation& rho, const GradationSpec& grad,
                                const std::vector<RatFunc>& eps, int bound = 4);

// Exact residual of the defining intertwining relation of `k`.
Report verify_K_intertwining(const KMatrix& k);

// Check-R form of the reflection equation on V1 (x) V2, with
//   fwd: V1 (x) V2 -> V2 (x) V1 and back: V2 (x) V1 -> V1 (x) V2,
//   (1 x K2(mu)) back(lambda mu) (1 x K1(lambda)) fwd(lambda/mu)
//     = back(lambda/mu) (1 x K1(lambda)) fwd(lambda mu) (1 x K2(mu)).
// Rational flavor: lambda mu -> u + v, lambda/mu -> u - v.
Report verify_reflection(const KMatrix& k1, const KMatrix& k2, const RMatrix& fwd, const RMatrix& back,
                         const YbeMode& mode);

// Symmetric split g = h + k of a Yangian's index set.
struct TwistedYangianData {
  YangianData y;
  std::vector<int> h;
  std::vector<int> k;
};

// Error("bad-split") unless [h,h] in h, [h,k] in k, [k,k] in h.
TwistedYangianData make_split(const YangianData& y, std::vector<int> h);
// sl2 with h = so2 spanned by the antisymmetric basis element I_2.
TwistedYangianData split_sl2_so2();

// J~_p = J_p + 1/4 f_piq (I^i I^q + I^q I^i) in an evaluation representation.
Mat twisted_j(const TwistedYangianData& s, const YangianEvalRep& rho, int p);

struct TwistedBoundary {
  TwistedYangianData split;
  KMatrix k;
  Report report;  // coideal membership and intertwining checks
};

// Errors: "no-intertwiner", "reducible-boundary".
TwistedBoundary twisted_yangian_boundary(const TwistedYangianData& s, const YangianEvalRep& rho);

}  // namespace qaffine
