#pragma once

#include <gmpxx.h>

#include "qaffine/intertwine/intertwine.hpp"

namespace qaffine {

// Structure constants [I_a, I_b] = f_ab^c I_c with an invariant metric
// g_ab = -tr(I_a I_b) taken in the defining matrices. Indices of f and alpha
// are contracted through g, so the formulas reduce to the orthonormal ones
// when g = 1.
struct YangianData {
  std::string label;
  int dim = 0;
  std::vector<mpq_class> f;     // f[(a*dim + b)*dim + c] = f_ab^c
  std::vector<mpq_class> g;     // g[a*dim + b]
  std::vector<mpq_class> ginv;  // inverse metric
  std::vector<Mat> basis;       // defining matrices of I_a

  const mpq_class& fabc(int a, int b, int c) const {
    return f[static_cast<std::size_t>((a * dim + b) * dim + c)];
  }
  // Fully lowered f_abc = f_ab^d g_dc.
  mpq_class f_lower(int a, int b, int c) const;
  // alpha_abcdeg = 1/24 f_ad^i f_be^j f_cg^k f_ijk.
  mpq_class alpha(int a, int b, int c, int d, int e, int g) const;
  // Jacobi identity and antisymmetry of f, exact.
  Report verify_structure() const;
};

// Basis I_1 = sigma_x/2, I_2 = i sigma_y/2 (real), I_3 = sigma_z/2.
YangianData yangian_sl2();
// Basis e_ij of gl_n, index a = i*n + j.
YangianData yangian_gl(int n);

// Evaluation representation: I_a -> rho(I_a), J_a -> (var + shift) rho(I_a).
struct YangianEvalRep {
  std::string name;
  std::vector<Mat> i;
  std::vector<Mat> j;
  std::string var = "u";

  std::size_t dim() const { return i.empty() ? 0 : i[0].rows(); }
};

YangianEvalRep yangian_eval_rep(const YangianData& y, std::string_view var, const RatFunc& shift = RatFunc());

// Check-R = P (1 - P/u) = P - Id/u on C^n (x) C^n, flavor "rational".
RMatrix rational_R(int n, std::string_view var = "u");

// [I_a, J_b] = f_ab^c J_c, the cubic relation
// [J_a,[J_b,I_c]] - [I_a,[J_b,J_c]] = alpha_abcdeg {I^d, I^e, I^g},
// and the quartic relation
// [[J_a,J_b],[I_l,J_m]] + [[J_l,J_m],[I_a,J_b]]
//   = (alpha_abcdeg f_lm^g + alpha_lmcdeg f_ab^g) {I^c, I^d, J^e},
// all as exact matrix identities in rho. {x,y,z} is 1/24 of the sum over
// the six orderings.
Report verify_yangian_relations(const YangianData& y, const YangianEvalRep& rho);

// Antipode axiom m(s x id)Delta(x) = 0 for x in {I_a, J_a} with
// Delta(J_a) = J_a (x) 1 + 1 (x) J_a + 1/2 f_ab^c g^bd I_c (x) I_d and
// s(J_a) = -J_a + 1/2 f_ab^c g^bd I_c I_d, plus the intertwining relation
// Check-R(u-v) (rho1_u (x) rho2_v)Delta(x) = (rho2_v (x) rho1_u)Delta(x) Check-R(u-v).
Report verify_yangian_hopf(const YangianData& y, const YangianEvalRep& rho1, const YangianEvalRep& rho2,
                           const RMatrix& r);

// Matrix-valued truncated series sum_k c[k] u^-k, k = 0..order.
struct SeriesMatrix {
  int order = 0;
  std::vector<Mat> c;

  static SeriesMatrix constant(const Mat& m, int order);
  std::size_t rows() const { return c.empty() ? 0 : c[0].rows(); }
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) { return a.order == b.order && a.c == b.c; }
  // Block (i, j) of coefficient k for an auxiliary space of dimension n.
  Mat block(int k, std::size_t i, std::size_t j, std::size_t n) const;
};

constexpr int kMaxSeriesOrder = 4;

// 1 - P/(u - zeta) = 1 - P sum_k zeta^k u^(-k-1), truncated at `order`.
SeriesMatrix rational_R_series(int n, const RatFunc& zeta, int order);

struct MonodromyExpansion {
  int n = 2;
  std::vector<RatFunc> inhomogeneities;
  // T(u) = R_01(u - zeta_1) ... R_0L(u - zeta_L) on aux (x) C^n^L.
  SeriesMatrix t;
  Report report;
};

// Expands the monodromy matrix, checks the coproduct form
// t_ij(u) = sum_k t_ik^(L-1)(u) (x) t_kj^(1)(u) against the directly embedded
// product, and the RTT relation through the truncation order.
// Error("order-too-high") when order > 4.
MonodromyExpansion monodromy_expansion(int n, const std::vector<RatFunc>& inhomogeneities, int order);

}  // namespace qaffine
