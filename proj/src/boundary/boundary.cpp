#include "qaffine/boundary/boundary.hpp"

#include "qaffine/error.hpp"
#include "qaffine/scalars/format.hpp"

namespace qaffine {

namespace {

using Pair = std::pair<Mat, Mat>;

// Stacked rows of X A - B X = 0 over all pairs, unknown X(a, b) at a * n + b.
Mat commutant_system(const std::vector<Pair>& pairs, std::size_t n) {
  Mat sys(pairs.size() * n * n, n * n);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& [a, b] = pairs[p];
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t row = p * n * n + r * n + c;
        for (std::size_t m = 0; m < n; ++m) {
          if (!a(m, c).is_zero()) sys(row, r * n + m) += a(m, c);
          if (!b(r, m).is_zero()) sys(row, m * n + c) -= b(r, m);
        }
      }
    }
  }
  return sys;
}

Mat to_mat(const Vec& v, std::size_t n) {
  Mat m(n, n);
  for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = v[k];
  return m;
}

std::vector<Mat> commutant_basis(const std::vector<Pair>& pairs, std::size_t n) {
  std::vector<Mat> out;
  for (const auto& v : nullspace_fraction_free(commutant_system(pairs, n))) out.push_back(to_mat(v, n));
  return out;
}

// Same normalization as for R: first nonzero entry to 1, then clear denominators.
Mat normalize(Mat x, Normalization& norm) {
  const std::size_t n = x.cols();
  std::size_t pivot = 0;
  while (x.data()[pivot].is_zero()) ++pivot;
  norm.pivot_row = pivot / n;
  norm.pivot_col = pivot % n;
  const RatFunc lead = x.data()[pivot];
  std::vector<RatFunc> entries;
  for (const auto& v : x.data()) entries.push_back(v.is_zero() ? v : v / lead);
  norm.factor = clear_denominators(entries);
  for (std::size_t k = 0; k < entries.size(); ++k) x(k / n, k % n) = entries[k];
  return x;
}

std::vector<Pair> q_pairs(const BoundaryAlgebra& b, const GradationSpec& grad, const RatFunc& z) {
  const Representation src = apply_gradation_twist(b.rho, grad, b.eta * z);
  const Representation dst = apply_gradation_twist(b.rho, grad, b.eta / z);
  std::vector<Pair> out;
  for (int i = 0; i < b.base.nodes(); ++i) {
    const auto& e = b.eps[static_cast<std::size_t>(i)];
    out.emplace_back(q_generator(src, i, e), q_generator(dst, i, e));
  }
  return out;
}

Mat rational_reflected(const Mat& m, const std::string& var) {
  return substitute(m, var, -RatFunc::var(var));
}

std::string fmt(const RatFunc& f) { return to_string(f); }

RatFunc from_q(const mpq_class& q) {
  return {LaurentPoly(mpz_class(q.get_num())), LaurentPoly(mpz_class(q.get_den()))};
}

}  // namespace

std::vector<RatFunc> symbolic_epsilons(const CartanData& c) {
  std::vector<RatFunc> out;
  for (int i = 0; i < c.nodes(); ++i) out.push_back(parse_ratfunc("e" + std::to_string(i)));
  return out;
}

Mat q_generator(const Representation& rho, int i, const RatFunc& eps) {
  const Mat k = rho.matrix(Generator::k(i));
  Mat q = k * (rho.matrix(Generator::ep(i)) + rho.matrix(Generator::em(i)));
  if (!eps.is_zero()) q += (k * k - Mat::identity(rho.dim)).scaled(eps);
  return q;
}

BoundaryAlgebra build_Q_generators(const Representation& rho, std::vector<RatFunc> eps,
                                   std::optional<RatFunc> eta) {
  BoundaryAlgebra b;
  b.base = rho.cartan;
  b.rho = rho;
  b.eps = eps.empty() ? symbolic_epsilons(rho.cartan) : std::move(eps);
  if (b.eps.size() != static_cast<std::size_t>(b.base.nodes())) {
    throw Error("bad-args", "need one epsilon per node of " + b.base.name);
  }
  b.eta = eta ? *eta : parse_ratfunc("eta");
  for (int i = 0; i < b.base.nodes(); ++i) b.q.push_back(q_generator(rho, i, b.eps[static_cast<std::size_t>(i)]));
  return b;
}

Report verify_coideal(const BoundaryAlgebra& b, const Representation& rho1) {
  Report rep;
  rep.subject = "coideal property in " + rho1.name + " (x) " + b.rho.name;
  const Representation both = tensor_product(rho1, b.rho);
  const Mat id2 = Mat::identity(b.rho.dim);
  for (int i = 0; i < b.base.nodes(); ++i) {
    const auto& e = b.eps[static_cast<std::size_t>(i)];
    const Mat lhs = q_generator(both, i, e);
    const Mat k = rho1.matrix(Generator::k(i));
    const Mat rhs = kron(q_generator(rho1, i, e), id2) + kron(k * k, b.q[static_cast<std::size_t>(i)]);
    const Mat diff = lhs - rhs;
    rep.add("coideal Q" + std::to_string(i), diff.is_zero(), std::to_string(diff.nonzeros()) + " nonzero entries");
  }
  return rep;
}

ReducibleBoundary::ReducibleBoundary(std::vector<Mat> basis)
    : Error("reducible-boundary", "K-matrix solution space has dimension " + std::to_string(basis.size())),
      basis_(std::move(basis)) {}

std::size_t k_nullity(const BoundaryAlgebra& b, const GradationSpec& grad) {
  return commutant_basis(q_pairs(b, grad, RatFunc::var("z")), b.rho.dim).size();
}

std::size_t k_nullity_mod_p(const BoundaryAlgebra& b, const GradationSpec& grad, std::uint64_t seed) {
  const Mat sys = commutant_system(q_pairs(b, grad, RatFunc::var("z")), b.rho.dim);
  for (std::uint64_t counter = 0; counter < 100; ++counter) {
    try {
      return sys.cols() - rank_mod_p(evaluate_mod_p(sys, PrimePoint::draw(seed, counter)));
    } catch (const Error& e) {
      if (e.code() != "bad-point") throw;
    }
  }
  throw Error("point-exhaustion", "no admissible evaluation point");
}

KMatrix solve_K(const BoundaryAlgebra& b, const GradationSpec& grad) {
  auto basis = commutant_basis(q_pairs(b, grad, RatFunc::var("z")), b.rho.dim);
  if (basis.empty()) {
    throw Error("no-intertwiner", "K-matrix relation has only the zero solution at eta = " + fmt(b.eta));
  }
  if (basis.size() > 1) throw ReducibleBoundary(std::move(basis));
  KMatrix out;
  out.rep_name = b.rho.name;
  out.dim = b.rho.dim;
  out.gradation = grad.name;
  out.eps = b.eps;
  out.eta = b.eta;
  out.k = normalize(std::move(basis[0]), out.norm);
  out.algebra = b;
  out.grad = grad;
  const Report check = verify_K_intertwining(out);
  if (!check.passed()) throw Error("internal", "solved K-matrix fails " + check.first_failure()->name);
  return out;
}

std::optional<RatFunc> find_eta(const Representation& rho, const GradationSpec& grad,
                                const std::vector<RatFunc>& eps, int bound) {
  std::vector<int> powers{0};
  for (int mag = 1; mag <= bound; ++mag) {
    powers.push_back(-mag);
    powers.push_back(mag);
  }
  for (int k : powers) {
    for (int sign : {1, -1}) {
      const RatFunc eta = RatFunc::var("t", k) * RatFunc(sign);
      const BoundaryAlgebra b = build_Q_generators(rho, eps, eta);
      // The mod-p nullity bounds the exact one from above.
      if (k_nullity_mod_p(b, grad, 1) == 1 && k_nullity(b, grad) == 1) return eta;
    }
  }
  return std::nullopt;
}

Report verify_K_intertwining(const KMatrix& k) {
  Report rep;
  rep.subject = "K-matrix intertwining relation";
  if (k.flavor == "rational") {
    for (const auto& [label, m] : k.rational_generators) {
      const Mat diff = k.k * m - rational_reflected(m, k.var) * k.k;
      rep.add("K " + label, diff.is_zero(), std::to_string(diff.nonzeros()) + " nonzero entries");
    }
    return rep;
  }
  if (!k.algebra || !k.grad) throw Error("bad-composition", "K-matrix carries no coideal data");
  const auto pairs = q_pairs(*k.algebra, *k.grad, RatFunc::var(k.var));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Mat diff = k.k * pairs[i].first - pairs[i].second * k.k;
    rep.add("K Q" + std::to_string(i), diff.is_zero(), std::to_string(diff.nonzeros()) + " nonzero entries");
  }
  return rep;
}

KMatrix KMatrix::scaled(const RatFunc& s) const {
  KMatrix out = *this;
  out.k = k.scaled(s);
  out.norm.factor = norm.factor * s;
  return out;
}

nlohmann::json KMatrix::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < k.rows(); ++i) {
    for (std::size_t j = 0; j < k.cols(); ++j) {
      const RatFunc& v = k(i, j);
      if (v.is_zero()) continue;
      entries.push_back({{"row", i}, {"col", j}, {"num", to_string(v.num())}, {"den", to_string(v.den())}});
    }
  }
  nlohmann::json epsilons = nlohmann::json::array();
  for (const auto& e : eps) epsilons.push_back(fmt(e));
  return {{"flavor", flavor},
          {"vars", {var, "t"}},
          {"reps", {rep_name}},
          {"gradation", gradation},
          {"dims", {dim}},
          {"eta", fmt(eta)},
          {"epsilons", std::move(epsilons)},
          {"normalization", {{"pivot", {norm.pivot_row, norm.pivot_col}}, {"factor", fmt(norm.factor)}}},
          {"entries", std::move(entries)}};
}

Report verify_reflection(const KMatrix& k1, const KMatrix& k2, const RMatrix& fwd, const RMatrix& back,
                         const YbeMode& mode) {
  const bool rational = k1.flavor == "rational";
  if (k2.flavor != k1.flavor || fwd.flavor != k1.flavor || back.flavor != k1.flavor) {
    throw Error("bad-composition", "K- and R-matrices of different flavors");
  }
  if (fwd.d1() != k1.dim || fwd.d2() != k2.dim || back.d1() != k2.dim || back.d2() != k1.dim) {
    throw Error("bad-composition", "R-matrices do not act on V1 (x) V2 of the K-matrices");
  }
  if (!rational && (fwd.rho1.name != k1.rep_name || fwd.rho2.name != k2.rep_name ||
                    back.rho1.name != k2.rep_name || back.rho2.name != k1.rep_name ||
                    fwd.gradation.name != k1.gradation || back.gradation.name != k1.gradation ||
                    k2.gradation != k1.gradation)) {
    throw Error("bad-composition", "representations or gradations of K- and R-matrices differ");
  }
  const RatFunc x = RatFunc::var(rational ? "u" : "z1");
  const RatFunc y = RatFunc::var(rational ? "v" : "z2");
  const RatFunc sum = rational ? x + y : x * y;
  const RatFunc diff = rational ? x - y : x / y;
  const std::size_t d1 = k1.dim;
  const std::size_t d2 = k2.dim;
  const Mat k2m = kron(Mat::identity(d1), k2.at(y));
  const Mat k1m = kron(Mat::identity(d2), k1.at(x));
  const Mat back_sum = back.at(sum);
  const Mat back_diff = back.at(diff);
  const Mat fwd_sum = fwd.at(sum);
  const Mat fwd_diff = fwd.at(diff);

  Report rep;
  rep.subject = "reflection equation";
  if (mode.exact) {
    const Mat res = k2m * back_sum * k1m * fwd_diff - back_diff * k1m * fwd_sum * k2m;
    rep.add("reflection exact", res.is_zero(), std::to_string(res.nonzeros()) + " nonzero entries");
    return rep;
  }
  bool ok = true;
  int done = 0;
  std::uint64_t counter = 0;
  while (done < mode.trials) {
    if (counter > static_cast<std::uint64_t>(100 * mode.trials)) throw Error("point-exhaustion", "too many poles");
    const PrimePoint pt = PrimePoint::draw(mode.seed, counter++);
    try {
      const ModMatrix lhs = evaluate_mod_p(k2m, pt) * evaluate_mod_p(back_sum, pt) * evaluate_mod_p(k1m, pt) *
                            evaluate_mod_p(fwd_diff, pt);
      const ModMatrix rhs = evaluate_mod_p(back_diff, pt) * evaluate_mod_p(k1m, pt) *
                            evaluate_mod_p(fwd_sum, pt) * evaluate_mod_p(k2m, pt);
      ++done;
      if (!(lhs == rhs)) {
        ok = false;
        break;
      }
    } catch (const Error& e) {
      if (e.code() != "bad-point") throw;
    }
  }
  rep.add("reflection modp", ok, std::to_string(done) + " points");
  return rep;
}

TwistedYangianData make_split(const YangianData& y, std::vector<int> h) {
  TwistedYangianData s;
  s.y = y;
  std::vector<bool> in_h(static_cast<std::size_t>(y.dim), false);
  for (int i : h) {
    if (i < 0 || i >= y.dim) throw Error("bad-split", "index out of range");
    in_h[static_cast<std::size_t>(i)] = true;
  }
  for (int a = 0; a < y.dim; ++a) (in_h[static_cast<std::size_t>(a)] ? s.h : s.k).push_back(a);
  for (int a = 0; a < y.dim; ++a) {
    for (int b = 0; b < y.dim; ++b) {
      const bool ha = in_h[static_cast<std::size_t>(a)];
      const bool hb = in_h[static_cast<std::size_t>(b)];
      // [h,h] and [k,k] land in h, [h,k] in k.
      const bool target_h = ha == hb;
      for (int c = 0; c < y.dim; ++c) {
        if (y.fabc(a, b, c) != 0 && in_h[static_cast<std::size_t>(c)] != target_h) {
          throw Error("bad-split", "split is not symmetric at [I" + std::to_string(a) + ", I" + std::to_string(b) + "]");
        }
      }
    }
  }
  return s;
}

TwistedYangianData split_sl2_so2() { return make_split(yangian_sl2(), {1}); }

Mat twisted_j(const TwistedYangianData& s, const YangianEvalRep& rho, int p) {
  const auto& y = s.y;
  auto raised = [&](int a) {
    Mat m(rho.dim(), rho.dim());
    for (int b = 0; b < y.dim; ++b) {
      const mpq_class& g = y.ginv[static_cast<std::size_t>(a * y.dim + b)];
      if (g != 0) m += rho.i[static_cast<std::size_t>(b)].scaled(from_q(g));
    }
    return m;
  };
  Mat out = rho.j[static_cast<std::size_t>(p)];
  for (int i : s.h) {
    for (int q : s.k) {
      const mpq_class f = y.f_lower(p, i, q);
      if (f == 0) continue;
      const Mat a = raised(i);
      const Mat b = raised(q);
      out += (a * b + b * a).scaled(from_q(mpq_class(f / 4)));
    }
  }
  return out;
}

TwistedBoundary twisted_yangian_boundary(const TwistedYangianData& s, const YangianEvalRep& rho) {
  TwistedBoundary out;
  out.split = s;
  const std::size_t n = rho.dim();
  std::vector<std::pair<std::string, Mat>> gens;
  for (int i : s.h) gens.emplace_back("I(" + std::to_string(i) + ")", rho.i[static_cast<std::size_t>(i)]);
  for (int p : s.k) gens.emplace_back("J~(" + std::to_string(p) + ")", twisted_j(s, rho, p));

  // Coideal membership in rho_v (x) rho_w: every block of Delta(x) along the
  // first factor lies in the span of the subalgebra generated in the second.
  const std::string v = "v";
  const std::string w = "w";
  const YangianEvalRep r1 = yangian_eval_rep(s.y, v);
  const YangianEvalRep r2 = yangian_eval_rep(s.y, w);
  std::vector<Mat> sub2;
  for (int i : s.h) sub2.push_back(r2.i[static_cast<std::size_t>(i)]);
  for (int p : s.k) sub2.push_back(twisted_j(s, r2, p));
  // Span of the generated unital algebra, closed under products.
  std::vector<Mat> span{Mat::identity(n)};
  auto span_rank = [&](const std::vector<Mat>& ms) {
    Mat rows(ms.size(), n * n);
    for (std::size_t r = 0; r < ms.size(); ++r)
      for (std::size_t k = 0; k < n * n; ++k) rows(r, k) = ms[r].data()[k];
    return rank_exact(rows);
  };
  auto try_add = [&](const Mat& m) {
    auto next = span;
    next.push_back(m);
    if (span_rank(next) > span.size()) {
      span = std::move(next);
      return true;
    }
    return false;
  };
  for (const auto& m : sub2) try_add(m);
  for (bool grew = true; grew;) {
    grew = false;
    const auto current = span;
    for (const auto& a : current)
      for (const auto& b : sub2) grew = try_add(a * b) || grew;
  }
  const Mat id1 = Mat::identity(r1.dim());
  const Mat id2 = Mat::identity(n);
  auto delta_i = [&](int a) { return kron(r1.i[static_cast<std::size_t>(a)], id2) + kron(id1, r2.i[static_cast<std::size_t>(a)]); };
  auto delta_j = [&](int a) {
    Mat m = kron(r1.j[static_cast<std::size_t>(a)], id2) + kron(id1, r2.j[static_cast<std::size_t>(a)]);
    const auto& y = s.y;
    for (int b = 0; b < y.dim; ++b)
      for (int c = 0; c < y.dim; ++c)
        for (int d = 0; d < y.dim; ++d) {
          const mpq_class coeff = y.fabc(a, b, c) * y.ginv[static_cast<std::size_t>(b * y.dim + d)] / 2;
          if (coeff != 0) {
            m += kron(r1.i[static_cast<std::size_t>(c)], r2.i[static_cast<std::size_t>(d)]).scaled(from_q(coeff));
          }
        }
    return m;
  };
  auto raised_delta = [&](int a) {
    Mat m(n * n, n * n);
    for (int b = 0; b < s.y.dim; ++b) {
      const mpq_class& g = s.y.ginv[static_cast<std::size_t>(a * s.y.dim + b)];
      if (g != 0) m += delta_i(b).scaled(from_q(g));
    }
    return m;
  };
  auto membership = [&](const Mat& m) {
    for (std::size_t a = 0; a < r1.dim(); ++a) {
      for (std::size_t b = 0; b < r1.dim(); ++b) {
        Mat block(n, n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) block(r, c) = m(a * n + r, b * n + c);
        auto next = span;
        next.push_back(block);
        if (span_rank(next) > span.size()) return false;
      }
    }
    return true;
  };
  out.report.subject = "twisted Yangian boundary in " + rho.name;
  out.report.add("coideal subalgebra dimension", true, std::to_string(span.size()) + " of " + std::to_string(n * n));
  for (int i : s.h) out.report.add("coideal I(" + std::to_string(i) + ")", membership(delta_i(i)));
  for (int p : s.k) {
    Mat m = delta_j(p);
    for (int i : s.h) {
      for (int q : s.k) {
        const mpq_class f = s.y.f_lower(p, i, q);
        if (f == 0) continue;
        const Mat a = raised_delta(i);
        const Mat b = raised_delta(q);
        m += (a * b + b * a).scaled(from_q(mpq_class(f / 4)));
      }
    }
    out.report.add("coideal J~(" + std::to_string(p) + ")", membership(m));
  }

  std::vector<Pair> pairs;
  for (const auto& [label, m] : gens) pairs.emplace_back(m, rational_reflected(m, rho.var));
  auto basis = commutant_basis(pairs, n);
  if (basis.empty()) throw Error("no-intertwiner", "twisted Yangian K-matrix relation has only the zero solution");
  if (basis.size() > 1) throw ReducibleBoundary(std::move(basis));
  KMatrix& k = out.k;
  k.flavor = "rational";
  k.var = rho.var;
  k.rep_name = rho.name;
  k.dim = n;
  k.gradation = "additive";
  k.eta = RatFunc();
  k.k = normalize(std::move(basis[0]), k.norm);
  k.rational_generators = std::move(gens);
  out.report.merge(verify_K_intertwining(k));
  return out;
}

}  // namespace qaffine
