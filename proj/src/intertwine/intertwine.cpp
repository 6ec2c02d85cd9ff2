#include "qaffine/intertwine/intertwine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qaffine/error.hpp"
#include "qaffine/scalars/format.hpp"

namespace qaffine {

namespace {

std::vector<Generator> system_generators(const CartanData& c) {
  std::vector<Generator> g;
  for (int i = 0; i < c.nodes(); ++i) {
    g.push_back(Generator::k(i));
    g.push_back(Generator::ep(i));
    g.push_back(Generator::em(i));
  }
  return g;
}

bool is_diagonal(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && !m(i, j).is_zero()) return false;
    }
  }
  return true;
}

Mat hconcat(const Mat& a, const Mat& b) {
  Mat m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

ModMatrix kron_mod(const ModMatrix& a, const ModMatrix& b) {
  ModMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::uint64_t x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = modp::mul(x, b(k, l));
      }
    }
  }
  return m;
}

Mat from_vector(const Vec& v, const std::vector<std::size_t>& slots, std::size_t n) {
  Mat x(n, n);
  for (std::size_t k = 0; k < slots.size(); ++k) x(slots[k] / n, slots[k] % n) = v[k];
  return x;
}

Representation twisted(const Representation& rho, const GradationSpec& grad, const RatFunc& value) {
  return apply_gradation_twist(rho, grad, value);
}

}  // namespace

std::string log10_bound(int degree, int trials) {
  const double v = trials * (std::log10(std::max(degree, 1)) - std::log10(static_cast<double>(modp::kPrime)));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

IntertwinerSystem build_intertwiner_system(const Representation& rho1, const Representation& rho2,
                                           const GradationSpec& grad) {
  if (!(rho1.cartan == rho2.cartan)) {
    throw Error("algebra-mismatch", rho1.name + " and " + rho2.name + " carry different Cartan data");
  }
  IntertwinerSystem sys;
  sys.rho1 = rho1;
  sys.rho2 = rho2;
  sys.gradation = grad;
  sys.generators = system_generators(rho1.cartan);
  const Representation a_rep = apply_gradation_twist(rho1, grad, "z");
  const std::size_t n = sys.n();
  const std::size_t n2 = n * n;
  sys.full = Mat(sys.generators.size() * n2, n2);

  std::vector<Mat> as;
  std::vector<Mat> bs;
  bool diagonal_k = true;
  for (std::size_t g = 0; g < sys.generators.size(); ++g) {
    as.push_back(tensor_coproduct_matrix(sys.generators[g], a_rep, rho2));
    bs.push_back(tensor_coproduct_matrix(sys.generators[g], rho2, a_rep));
    const Mat& a = as.back();
    const Mat& b = bs.back();
    if (sys.generators[g].kind == GenKind::K) diagonal_k = diagonal_k && is_diagonal(a) && is_diagonal(b);
    // (XA - BX)(i,j) = sum_k X(i,k) A(k,j) - B(i,k) X(k,j).
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = g * n2 + i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          if (!a(k, j).is_zero()) sys.full(row, i * n + k) += a(k, j);
          if (!b(i, k).is_zero()) sys.full(row, k * n + j) -= b(i, k);
        }
      }
    }
  }

  // X(a,b) can be nonzero only if every K_i weighs row a of B and column b of A equally.
  for (std::size_t slot = 0; slot < n2; ++slot) {
    bool keep = true;
    if (diagonal_k) {
      const std::size_t r = slot / n;
      const std::size_t c = slot % n;
      for (std::size_t g = 0; g < sys.generators.size() && keep; ++g) {
        if (sys.generators[g].kind == GenKind::K) keep = bs[g](r, r) == as[g](c, c);
      }
    }
    if (keep) sys.unknowns.push_back(slot);
  }
  std::vector<std::size_t> rows;
  for (std::size_t row = 0; row < sys.full.rows(); ++row) {
    for (auto slot : sys.unknowns) {
      if (!sys.full(row, slot).is_zero()) {
        rows.push_back(row);
        break;
      }
    }
  }
  sys.pruned = Mat(rows.size(), sys.unknowns.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < sys.unknowns.size(); ++c) sys.pruned(r, c) = sys.full(rows[r], sys.unknowns[c]);
  }
  return sys;
}

ReduciblePair::ReduciblePair(std::vector<Mat> basis)
    : Error("reducible-pair", "intertwiner space has dimension " + std::to_string(basis.size())),
      basis_(std::move(basis)) {}

RMatrix solve_R(const IntertwinerSystem& sys) {
  const std::size_t n = sys.n();
  const auto basis = nullspace_fraction_free(sys.pruned);
  if (basis.empty()) throw Error("no-intertwiner", "the intertwining relation has only the zero solution");
  if (basis.size() > 1) {
    std::vector<Mat> mats;
    for (const auto& v : basis) mats.push_back(from_vector(v, sys.unknowns, n));
    throw ReduciblePair(std::move(mats));
  }
  RMatrix out;
  out.rho1 = sys.rho1;
  out.rho2 = sys.rho2;
  out.gradation = sys.gradation;
  Mat x = from_vector(basis[0], sys.unknowns, n);
  std::size_t pivot = 0;
  while (x.data()[pivot].is_zero()) ++pivot;
  out.norm.pivot_row = pivot / n;
  out.norm.pivot_col = pivot % n;
  const RatFunc lead = x.data()[pivot];
  std::vector<RatFunc> entries;
  for (const auto& v : x.data()) entries.push_back(v.is_zero() ? v : v / lead);
  out.norm.factor = clear_denominators(entries);
  for (std::size_t k = 0; k < entries.size(); ++k) x(k / n, k % n) = entries[k];
  out.r = std::move(x);
  const Report check = verify_intertwining(out);
  if (!check.passed()) throw Error("internal", "solved intertwiner fails " + check.first_failure()->name);
  return out;
}

RMatrix intertwiner(const Representation& rho1, const Representation& rho2, const GradationSpec& grad) {
  return solve_R(build_intertwiner_system(rho1, rho2, grad));
}

Report verify_intertwining(const RMatrix& r) {
  Report rep;
  rep.subject = "intertwining relation";
  const Representation a_rep = apply_gradation_twist(r.rho1, r.gradation, r.var);
  for (const auto& g : system_generators(r.rho1.cartan)) {
    const Mat a = tensor_coproduct_matrix(g, a_rep, r.rho2);
    const Mat b = tensor_coproduct_matrix(g, r.rho2, a_rep);
    rep.add(g.label(), r.r * a == b * r.r);
  }
  return rep;
}

Mat RMatrix::plain() const { return swap_matrix(d2(), d1()) * r; }

Mat RMatrix::at(const RatFunc& value) const { return substitute(r, var, value); }

RMatrix RMatrix::scaled(const RatFunc& s) const {
  RMatrix out = *this;
  out.r = r.scaled(s);
  out.norm.factor = norm.factor * s;
  return out;
}

nlohmann::json RMatrix::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) {
      const RatFunc& v = r(i, j);
      if (v.is_zero()) continue;
      entries.push_back({{"row", i}, {"col", j}, {"num", to_string(v.num())}, {"den", to_string(v.den())}});
    }
  }
  return {{"flavor", flavor},
          {"vars", {var, "t"}},
          {"reps", {rho1.name, rho2.name}},
          {"gradation", gradation.name},
          {"dims", {d1(), d2()}},
          {"normalization",
           {{"pivot", {norm.pivot_row, norm.pivot_col}}, {"factor", to_string(norm.factor)}}},
          {"entries", std::move(entries)}};
}

Report verify_ybe(const RMatrix& r12, const RMatrix& r13, const RMatrix& r23, const YbeMode& mode) {
  if (r12.rho1.name != r13.rho1.name || r12.rho2.name != r23.rho1.name || r13.rho2.name != r23.rho2.name ||
      r12.d1() != r13.d1() || r12.d2() != r23.d1() || r13.d2() != r23.d2()) {
    throw Error("bad-composition", "R-matrices do not act on a common V1 (x) V2 (x) V3");
  }
  if (r12.flavor != r13.flavor || r12.flavor != r23.flavor) {
    throw Error("bad-composition", "R-matrices of different flavors");
  }
  const std::size_t d1 = r12.d1();
  const std::size_t d2 = r12.d2();
  const std::size_t d3 = r13.d2();
  const bool rational = r12.flavor == "rational";
  const RatFunc x1 = RatFunc::var(rational ? "u" : "z1");
  const RatFunc x2 = RatFunc::var(rational ? "v" : "z2");
  const RatFunc x12 = rational ? x1 + x2 : x1 * x2;
  const Mat a12 = r12.at(x1);
  const Mat a13 = r13.at(x12);
  const Mat a23 = r23.at(x2);

  Report rep;
  rep.subject = "Yang-Baxter equation";
  if (mode.exact) {
    const Mat lhs = kron(a23, Mat::identity(d1)) * kron(Mat::identity(d2), a13) * kron(a12, Mat::identity(d3));
    const Mat rhs = kron(Mat::identity(d3), a12) * kron(a13, Mat::identity(d2)) * kron(Mat::identity(d1), a23);
    const Mat diff = lhs - rhs;
    rep.add("ybe exact", diff.is_zero(), std::to_string(diff.nonzeros()) + " nonzero entries in LHS-RHS");
    return rep;
  }
  const int degree = degree_bound(a12) + degree_bound(a13) + degree_bound(a23);
  int done = 0;
  int drawn = 0;
  std::uint64_t counter = 0;
  while (done < mode.trials) {
    if (drawn >= 100 * mode.trials) throw Error("point-exhaustion", "too many sample points hit a pole");
    const PrimePoint pt = PrimePoint::draw(mode.seed, counter++);
    ++drawn;
    ModMatrix m12;
    ModMatrix m13;
    ModMatrix m23;
    try {
      m12 = evaluate_mod_p(a12, pt);
      m13 = evaluate_mod_p(a13, pt);
      m23 = evaluate_mod_p(a23, pt);
    } catch (const Error& e) {
      if (e.code() == "bad-point") continue;
      throw;
    }
    ++done;
    const ModMatrix lhs = kron_mod(m23, ModMatrix::identity(d1)) * kron_mod(ModMatrix::identity(d2), m13) *
                          kron_mod(m12, ModMatrix::identity(d3));
    const ModMatrix rhs = kron_mod(ModMatrix::identity(d3), m12) * kron_mod(m13, ModMatrix::identity(d2)) *
                          kron_mod(ModMatrix::identity(d1), m23);
    if (!(lhs == rhs)) {
      rep.add("ybe modp", false,
              "counterexample at sample " + std::to_string(pt.counter) + " of seed " + std::to_string(mode.seed));
      return rep;
    }
  }
  rep.add("ybe modp", true,
          std::to_string(mode.trials) + " points, false-pass bound 10^" + log10_bound(degree, mode.trials));
  return rep;
}

Unitarity verify_unitarity(const RMatrix& r) {
  Unitarity out;
  out.report.subject = "unitarity";
  if (r.rho1.name != r.rho2.name) throw Error("bad-composition", "unitarity needs identical factors");
  const RatFunc x = RatFunc::var(r.var);
  const Mat prod = r.at(r.flavor == "rational" ? -x : x.inverse()) * r.r;
  const RatFunc phi = prod(0, 0);
  const bool ok = !phi.is_zero() && prod == Mat::identity(prod.rows()).scaled(phi);
  out.report.add("R(x^-1) R(x) = phi Id", ok, ok ? "phi = " + to_string(phi) : "");
  if (ok) out.phi = phi;
  return out;
}

std::vector<FusionPoint> fusion_points(const RMatrix& r, int bound) {
  if (r.rho1.name != r.rho2.name) throw Error("bad-composition", "fusion scan needs identical factors");
  if (bound < 1) throw Error("bad-args", "scan bound must be at least 1");
  std::vector<FusionPoint> out;
  const std::size_t n = r.r.rows();
  for (int k = -bound; k <= bound; ++k) {
    for (int sign : {1, -1}) {
      FusionPoint p;
      p.sign = sign;
      p.power = k;
      const Mat m = r.at(p.value());
      p.rank = rank_exact(m);
      if (p.rank == n) continue;
      const Representation a_rep = twisted(r.rho1, r.gradation, p.value());
      p.image_invariant = true;
      for (const auto& g : system_generators(r.rho1.cartan)) {
        const Mat b = tensor_coproduct_matrix(g, r.rho2, a_rep);
        if (rank_exact(hconcat(m, b * m)) != p.rank) p.image_invariant = false;
      }
      std::size_t piv = 0;
      while (piv < m.data().size() && m.data()[piv].is_zero()) ++piv;
      if (piv < m.data().size()) {
        const Mat sq = m * m;
        const RatFunc c = sq.data()[piv] / m.data()[piv];
        p.projector = sq == m.scaled(c);
      }
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace qaffine
