#pragma once

#include <optional>

#include "qaffine/intertwine/intertwine.hpp"

namespace qaffine {

using VerifyMode = YbeMode;

// Monodromy T(x) = R_01(x : zeta_1) ... R_0n(x : zeta_n) on W (x) V^n and
// transfer tau(x) = tr_W T(x), where R = sigma^-1 check-R and the argument is
// x / zeta_i (trigonometric) or x - zeta_i (rational).
struct TransferObjects {
  RMatrix r;
  int n = 0;
  std::vector<RatFunc> inhomogeneities;
  RatFunc spectral;
  std::optional<Mat> monodromy;
  std::optional<Mat> transfer;

  std::size_t aux_dim() const { return r.d1(); }
  std::size_t site_dim() const { return r.d2(); }
  std::size_t quantum_dim() const;
  // R_0i as a matrix on W (x) V with the spectral argument for site i.
  Mat site_matrix(int i) const;
};

// Largest W (x) V^n dimension materialized exactly by default.
constexpr std::size_t kDefaultExactDim = 64;

// Chain description without materialized matrices. Empty inhomogeneities
// default to the regular point (1 trigonometric, 0 rational). `spectral`
// defaults to the R-matrix variable.
TransferObjects make_chain(const RMatrix& r, int n, std::vector<RatFunc> inhomogeneities = {},
                           std::optional<RatFunc> spectral = std::nullopt);

// make_chain plus the exact monodromy and transfer matrices.
// Error("too-large") when dim W * dim V^n exceeds max_dim.
TransferObjects build_monodromy(const RMatrix& r, int n, std::vector<RatFunc> inhomogeneities = {},
                                std::optional<RatFunc> spectral = std::nullopt,
                                std::size_t max_dim = kDefaultExactDim);

// Same chain with the spectral symbol replaced.
TransferObjects with_spectral(const TransferObjects& chain, const RatFunc& spectral, bool materialize);

// Matrix-free application mod p at a sample point. Vectors are indexed
// aux-major (W first, then sites 1..n).
struct ModChain {
  std::size_t aux = 0;
  std::size_t site = 0;
  int n = 0;
  std::vector<ModMatrix> r;  // one (aux*site)^2 matrix per site

  std::vector<std::uint64_t> apply_monodromy(std::vector<std::uint64_t> v) const;
  std::vector<std::uint64_t> apply_transfer(const std::vector<std::uint64_t>& v) const;
};

ModChain evaluate_chain_mod_p(const TransferObjects& chain, const PrimePoint& pt);

// Applies an operator on the ordered sites (p, q) of a tensor product with the
// given dimensions, in place.
void apply_two_site(const ModMatrix& m, std::size_t p, std::size_t q, const std::vector<std::size_t>& dims,
                    std::vector<std::uint64_t>& v);

// R_00'(x : x') T_0(x) T_0'(x') = T_0'(x') T_0(x) R_00'(x : x') on W (x) W (x) V^n,
// T at the chain's spectral symbol and T' at `other`. Exact needs the
// monodromy to be materialized; otherwise random-vector checks mod p.
Report verify_rtt(const TransferObjects& chain, const RatFunc& other, const RMatrix& r_aux, const VerifyMode& mode);

// [tau(x), tau(x')] = 0, exactly when both transfer matrices exist and
// mode.exact, otherwise by random-vector checks mod p.
Report verify_commuting(const TransferObjects& a, const TransferObjects& b, const VerifyMode& mode);

// tr_W((A (x) 1) T): the A-weighted partial trace of the monodromy.
Mat weighted_transfer(const Mat& monodromy, const Mat& a, std::size_t aux_dim);

struct Hamiltonian {
  // Local density h = d/dx [check-R(x) / check-R(x)_00] at the regular point.
  Mat density;
  // Sum of h over neighbouring sites (k, k+1), wrapping (n, 1) when periodic.
  Mat h;
  bool periodic = true;
  Report report;
};

// Error("non-regular-R") when the normalized check-R is not the identity at
// the regular point (x = 1 trigonometric, x = 0 rational). The report checks
// [H, tau(x)] = 0 mod p on the homogeneous periodic chain.
Hamiltonian extract_hamiltonian(const RMatrix& r, int n, bool periodic = true, int trials = 20,
                                std::uint64_t seed = 1);

}  // namespace qaffine
