#include "qaffine/yangian/yangian.hpp"

#include "qaffine/error.hpp"

namespace qaffine {

namespace {

using Q = mpq_class;

RatFunc to_ratfunc(const Q& q) { return {LaurentPoly(q.get_num()), LaurentPoly(q.get_den())}; }

Q to_rational(const RatFunc& r) {
  const auto n = r.num().is_zero() ? std::optional<mpz_class>(0) : r.num().constant_value();
  const auto d = r.den().constant_value();
  if (!n || !d) throw Error("bad-args", "Lie algebra basis matrices must have constant entries");
  Q q(*n, *d);
  q.canonicalize();
  return q;
}

// Solves sum_k x_k v_k = w exactly (columns v_k independent).
std::vector<Q> coordinates(const std::vector<std::vector<Q>>& vs, const std::vector<Q>& w) {
  const std::size_t rows = w.size();
  const std::size_t cols = vs.size();
  std::vector<std::vector<Q>> a(rows, std::vector<Q>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) a[i][k] = vs[k][i];
    a[i][cols] = w[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) throw Error("bad-args", "basis matrices are linearly dependent");
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Q f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (a[i][cols] != 0) throw Error("bad-args", "basis is not closed under the commutator");
  }
  std::vector<Q> x(cols);
  for (std::size_t k = 0; k < r; ++k) x[pivots[k]] = a[k][cols] / a[k][pivots[k]];
  return x;
}

std::vector<Q> flatten(const Mat& m) {
  std::vector<Q> v;
  for (const auto& e : m.data()) v.push_back(to_rational(e));
  return v;
}

std::vector<Q> inverse(const std::vector<Q>& m, int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<Q>> a(un, std::vector<Q>(2 * un));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) a[i][j] = m[i * un + j];
    a[i][un + i] = 1;
  }
  for (std::size_t c = 0; c < un; ++c) {
    std::size_t p = c;
    while (p < un && a[p][c] == 0) ++p;
    if (p == un) throw Error("bad-args", "invariant form is degenerate");
    std::swap(a[p], a[c]);
    const Q piv = a[c][c];
    for (auto& v : a[c]) v /= piv;
    for (std::size_t i = 0; i < un; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Q f = a[i][c];
      for (std::size_t j = 0; j < 2 * un; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Q> out(un * un);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) out[i * un + j] = a[i][un + j];
  }
  return out;
}

Q trace(const Mat& m) {
  Q t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += to_rational(m(i, i));
  return t;
}

YangianData from_basis(std::string label, std::vector<Mat> basis) {
  YangianData y;
  y.label = std::move(label);
  y.dim = static_cast<int>(basis.size());
  const auto d = basis.size();
  std::vector<std::vector<Q>> vs;
  for (const auto& b : basis) vs.push_back(flatten(b));
  y.f.assign(d * d * d, 0);
  y.g.assign(d * d, 0);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const auto x = coordinates(vs, flatten(commutator(basis[a], basis[b])));
      for (std::size_t c = 0; c < d; ++c) y.f[(a * d + b) * d + c] = x[c];
      y.g[a * d + b] = -trace(basis[a] * basis[b]);
    }
  }
  y.ginv = inverse(y.g, y.dim);
  y.basis = std::move(basis);
  return y;
}

// {x, y, z} = 1/24 sum over the six orderings.
Mat symmetrized(const Mat& x, const Mat& y, const Mat& z) {
  Mat s = x * y * z + x * z * y + y * x * z + y * z * x + z * x * y + z * y * x;
  return s.scaled(RatFunc::rational(1, 24));
}

std::string tuple_label(const char* what, std::initializer_list<int> idx) {
  std::string s = std::string(what) + "(";
  bool first = true;
  for (int i : idx) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

// Raised-index matrices X^a = g^ab X_b.
std::vector<Mat> raise(const YangianData& y, const std::vector<Mat>& xs) {
  std::vector<Mat> out;
  const auto d = static_cast<std::size_t>(y.dim);
  for (std::size_t a = 0; a < d; ++a) {
    Mat m(xs[0].rows(), xs[0].cols());
    for (std::size_t b = 0; b < d; ++b) {
      if (y.ginv[a * d + b] != 0) m += xs[b].scaled(to_ratfunc(y.ginv[a * d + b]));
    }
    out.push_back(std::move(m));
  }
  return out;
}

// 1/2 f_ab^c g^bd X_c (x) Y_d.
Mat delta_correction(const YangianData& y, int a, const std::vector<Mat>& x, const std::vector<Mat>& z) {
  const int d = y.dim;
  Mat out(x[0].rows() * z[0].rows(), x[0].cols() * z[0].cols());
  for (int b = 0; b < d; ++b) {
    for (int c = 0; c < d; ++c) {
      const Q fc = y.fabc(a, b, c);
      if (fc == 0) continue;
      for (int e = 0; e < d; ++e) {
        const Q coeff = fc * y.ginv[static_cast<std::size_t>(b * d + e)] / 2;
        if (coeff == 0) continue;
        out += kron(x[static_cast<std::size_t>(c)], z[static_cast<std::size_t>(e)]).scaled(to_ratfunc(coeff));
      }
    }
  }
  return out;
}

Mat product_correction(const YangianData& y, int a, const std::vector<Mat>& x) {
  const int d = y.dim;
  Mat out(x[0].rows(), x[0].cols());
  for (int b = 0; b < d; ++b) {
    for (int c = 0; c < d; ++c) {
      const Q fc = y.fabc(a, b, c);
      if (fc == 0) continue;
      for (int e = 0; e < d; ++e) {
        const Q coeff = fc * y.ginv[static_cast<std::size_t>(b * d + e)] / 2;
        if (coeff != 0) out += (x[static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(e)]).scaled(to_ratfunc(coeff));
      }
    }
  }
  return out;
}

}  // namespace

mpq_class YangianData::f_lower(int a, int b, int c) const {
  Q s = 0;
  for (int d = 0; d < dim; ++d) s += fabc(a, b, d) * g[static_cast<std::size_t>(d * dim + c)];
  return s;
}

mpq_class YangianData::alpha(int a, int b, int c, int d, int e, int g) const {
  Q s = 0;
  for (int i = 0; i < dim; ++i) {
    const Q fi = fabc(a, d, i);
    if (fi == 0) continue;
    for (int j = 0; j < dim; ++j) {
      const Q fj = fabc(b, e, j);
      if (fj == 0) continue;
      for (int k = 0; k < dim; ++k) {
        const Q fk = fabc(c, g, k);
        if (fk != 0) s += fi * fj * fk * f_lower(i, j, k);
      }
    }
  }
  return s / 24;
}

Report YangianData::verify_structure() const {
  Report rep;
  rep.subject = "structure constants of " + label;
  bool anti = true;
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      for (int c = 0; c < dim; ++c) anti = anti && fabc(a, b, c) == -fabc(b, a, c);
    }
  }
  rep.add("antisymmetry", anti);
  // f_ab^e f_ec^h + f_bc^e f_ea^h + f_ca^e f_eb^h = 0.
  bool jacobi = true;
  for (int a = 0; a < dim && jacobi; ++a) {
    for (int b = 0; b < dim && jacobi; ++b) {
      for (int c = 0; c < dim && jacobi; ++c) {
        for (int h = 0; h < dim && jacobi; ++h) {
          Q s = 0;
          for (int e = 0; e < dim; ++e) {
            s += fabc(a, b, e) * fabc(e, c, h) + fabc(b, c, e) * fabc(e, a, h) + fabc(c, a, e) * fabc(e, b, h);
          }
          jacobi = s == 0;
        }
      }
    }
  }
  rep.add("jacobi", jacobi);
  bool invariant = true;
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      for (int c = 0; c < dim; ++c) invariant = invariant && f_lower(a, b, c) == -f_lower(a, c, b);
    }
  }
  rep.add("invariant metric", invariant);
  return rep;
}

YangianData yangian_sl2() {
  const RatFunc h = RatFunc::rational(1, 2);
  Mat i1(2, 2);
  i1(0, 1) = h;
  i1(1, 0) = h;
  Mat i2(2, 2);
  i2(0, 1) = h;
  i2(1, 0) = -h;
  Mat i3(2, 2);
  i3(0, 0) = h;
  i3(1, 1) = -h;
  return from_basis("sl2", {i1, i2, i3});
}

YangianData yangian_gl(int n) {
  if (n < 1) throw Error("bad-rank", "gl_n needs n >= 1");
  const auto un = static_cast<std::size_t>(n);
  std::vector<Mat> basis;
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) basis.push_back(Mat::unit(un, un, i, j));
  }
  return from_basis("gl" + std::to_string(n), std::move(basis));
}

YangianEvalRep yangian_eval_rep(const YangianData& y, std::string_view var, const RatFunc& shift) {
  YangianEvalRep r;
  r.name = y.label + ":fundamental";
  r.var = std::string(var);
  r.i = y.basis;
  const RatFunc w = RatFunc::var(var) + shift;
  for (const auto& m : y.basis) r.j.push_back(m.scaled(w));
  return r;
}

RMatrix rational_R(int n, std::string_view var) {
  if (n < 2) throw Error("bad-rank", "rational R-matrix needs n >= 2");
  const auto un = static_cast<std::size_t>(n);
  RMatrix r;
  r.flavor = "rational";
  r.var = std::string(var);
  r.rho1.name = r.rho2.name = "gl" + std::to_string(n) + ":fundamental";
  r.rho1.dim = r.rho2.dim = un;
  r.gradation.name = "additive";
  r.r = swap_matrix(un, un) - Mat::identity(un * un).scaled(RatFunc::var(var, -1));
  r.norm.factor = RatFunc(1);
  return r;
}

Report verify_yangian_relations(const YangianData& y, const YangianEvalRep& rho) {
  Report rep;
  rep.subject = "Yangian relations in " + rho.name;
  const int d = y.dim;
  const auto ud = static_cast<std::size_t>(d);
  const auto& ii = rho.i;
  const auto& jj = rho.j;
  const std::vector<Mat> iu = raise(y, ii);
  const std::vector<Mat> ju = raise(y, jj);
  const std::size_t n = rho.dim();

  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      Mat expect(n, n);
      Mat expect_i(n, n);
      for (int c = 0; c < d; ++c) {
        const Q f = y.fabc(a, b, c);
        if (f == 0) continue;
        expect += jj[static_cast<std::size_t>(c)].scaled(to_ratfunc(f));
        expect_i += ii[static_cast<std::size_t>(c)].scaled(to_ratfunc(f));
      }
      rep.add(tuple_label("[I,I]", {a, b}), commutator(ii[static_cast<std::size_t>(a)], ii[static_cast<std::size_t>(b)]) == expect_i);
      rep.add(tuple_label("[I,J]", {a, b}), commutator(ii[static_cast<std::size_t>(a)], jj[static_cast<std::size_t>(b)]) == expect);
    }
  }

  // alpha tensor and symmetric products.
  std::vector<Q> alpha(ud * ud * ud * ud * ud * ud);
  auto at = [&](int a, int b, int c, int e, int f, int g) -> Q& {
    return alpha[((((static_cast<std::size_t>(a) * ud + static_cast<std::size_t>(b)) * ud + static_cast<std::size_t>(c)) * ud +
                   static_cast<std::size_t>(e)) * ud + static_cast<std::size_t>(f)) * ud + static_cast<std::size_t>(g)];
  };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e)
          for (int f = 0; f < d; ++f)
            for (int g = 0; g < d; ++g) at(a, b, c, e, f, g) = y.alpha(a, b, c, e, f, g);
  std::vector<Mat> sym_iii;
  std::vector<Mat> sym_iij;
  for (std::size_t c = 0; c < ud; ++c)
    for (std::size_t e = 0; e < ud; ++e)
      for (std::size_t g = 0; g < ud; ++g) {
        sym_iii.push_back(symmetrized(iu[c], iu[e], iu[g]));
        sym_iij.push_back(symmetrized(iu[c], iu[e], ju[g]));
      }

  // Cubic relation; the symmetrized alpha on the right is also checked as a tensor.
  bool tensor_zero = true;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        const Mat& ia = ii[static_cast<std::size_t>(a)];
        const Mat& ic = ii[static_cast<std::size_t>(c)];
        const Mat& jb = jj[static_cast<std::size_t>(b)];
        const Mat lhs = commutator(jj[static_cast<std::size_t>(a)], commutator(jb, ic)) -
                        commutator(ia, commutator(jb, jj[static_cast<std::size_t>(c)]));
        Mat rhs(n, n);
        std::size_t k = 0;
        for (int e = 0; e < d; ++e)
          for (int f = 0; f < d; ++f)
            for (int g = 0; g < d; ++g, ++k) {
              const Q al = at(a, b, c, e, f, g);
              if (al != 0) rhs += sym_iii[k].scaled(to_ratfunc(al));
              const Q s = at(a, b, c, e, f, g) + at(a, b, c, e, g, f) + at(a, b, c, f, e, g) + at(a, b, c, f, g, e) +
                          at(a, b, c, g, e, f) + at(a, b, c, g, f, e);
              tensor_zero = tensor_zero && s == 0;
            }
        rep.add(tuple_label("cubic", {a, b, c}), lhs == rhs);
      }
    }
  }
  rep.add("cubic: symmetrized alpha vanishes", tensor_zero);

  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int l = 0; l < d; ++l) {
        for (int m = 0; m < d; ++m) {
          const auto ja = jj[static_cast<std::size_t>(a)];
          const auto jb = jj[static_cast<std::size_t>(b)];
          const auto jl = jj[static_cast<std::size_t>(l)];
          const auto jm = jj[static_cast<std::size_t>(m)];
          const Mat lhs = commutator(commutator(ja, jb), commutator(ii[static_cast<std::size_t>(l)], jm)) +
                          commutator(commutator(jl, jm), commutator(ii[static_cast<std::size_t>(a)], jb));
          Mat rhs(n, n);
          std::size_t k = 0;
          for (int c = 0; c < d; ++c)
            for (int e = 0; e < d; ++e)
              for (int h = 0; h < d; ++h, ++k) {
                Q coeff = 0;
                for (int g = 0; g < d; ++g) {
                  coeff += at(a, b, c, e, h, g) * y.fabc(l, m, g) + at(l, m, c, e, h, g) * y.fabc(a, b, g);
                }
                if (coeff != 0) rhs += sym_iij[k].scaled(to_ratfunc(coeff));
              }
          rep.add(tuple_label("quartic", {a, b, l, m}), lhs == rhs);
        }
      }
    }
  }
  return rep;
}

Report verify_yangian_hopf(const YangianData& y, const YangianEvalRep& rho1, const YangianEvalRep& rho2,
                           const RMatrix& r) {
  const std::size_t d1 = rho1.dim();
  const std::size_t d2 = rho2.dim();
  if (r.r.rows() != d1 * d2 || r.d1() != d1 || r.d2() != d2) {
    throw Error("bad-composition", "R-matrix does not match the representation dimensions");
  }
  Report rep;
  rep.subject = "Yangian Hopf structure";
  const std::size_t ud = static_cast<std::size_t>(y.dim);
  const Mat one1 = Mat::identity(d1);
  const Mat one2 = Mat::identity(d2);
  const Mat check = r.at(RatFunc::var(rho1.var) - RatFunc::var(rho2.var));
  for (std::size_t a = 0; a < ud; ++a) {
    const int ia = static_cast<int>(a);
    // m(s x id)Delta(I_a) = -I_a + I_a.
    rep.add(tuple_label("antipode I", {ia}), (-rho1.i[a] + rho1.i[a]).is_zero());
    const Mat corr = product_correction(y, ia, rho1.i);
    const Mat s_j = -rho1.j[a] + corr;
    // s(J) 1 + s(1) J + 1/2 f g s(I_c) I_d, with s(I) = -I.
    const Mat m = s_j + rho1.j[a] - corr;
    rep.add(tuple_label("antipode J", {ia}), m.is_zero());
    {
      const Mat ai = kron(rho1.i[a], one2) + kron(one1, rho2.i[a]);
      const Mat bi = kron(rho2.i[a], one1) + kron(one2, rho1.i[a]);
      rep.add(tuple_label("intertwining I", {ia}), check * ai == bi * check);
      const Mat aj = kron(rho1.j[a], one2) + kron(one1, rho2.j[a]) + delta_correction(y, ia, rho1.i, rho2.i);
      const Mat bj = kron(rho2.j[a], one1) + kron(one2, rho1.j[a]) + delta_correction(y, ia, rho2.i, rho1.i);
      rep.add(tuple_label("intertwining J", {ia}), check * aj == bj * check);
    }
  }
  return rep;
}

SeriesMatrix SeriesMatrix::constant(const Mat& m, int order) {
  SeriesMatrix s;
  s.order = order;
  s.c.assign(static_cast<std::size_t>(order + 1), Mat(m.rows(), m.cols()));
  s.c[0] = m;
  return s;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  SeriesMatrix s;
  s.order = std::min(a.order, b.order);
  s.c.assign(static_cast<std::size_t>(s.order + 1), Mat(a.rows(), b.c[0].cols()));
  for (int p = 0; p <= s.order; ++p) {
    if (a.c[static_cast<std::size_t>(p)].is_zero()) continue;
    for (int q = 0; p + q <= s.order; ++q) {
      if (b.c[static_cast<std::size_t>(q)].is_zero()) continue;
      s.c[static_cast<std::size_t>(p + q)] += a.c[static_cast<std::size_t>(p)] * b.c[static_cast<std::size_t>(q)];
    }
  }
  return s;
}

Mat SeriesMatrix::block(int k, std::size_t i, std::size_t j, std::size_t n) const {
  const Mat& m = c.at(static_cast<std::size_t>(k));
  const std::size_t b = m.rows() / n;
  Mat out(b, b);
  for (std::size_t r = 0; r < b; ++r) {
    for (std::size_t s = 0; s < b; ++s) out(r, s) = m(i * b + r, j * b + s);
  }
  return out;
}

SeriesMatrix rational_R_series(int n, const RatFunc& zeta, int order) {
  const auto un = static_cast<std::size_t>(n);
  const Mat p = swap_matrix(un, un);
  SeriesMatrix s = SeriesMatrix::constant(Mat::identity(un * un), order);
  for (int k = 1; k <= order; ++k) s.c[static_cast<std::size_t>(k)] = p.scaled(-zeta.pow(k - 1));
  return s;
}

namespace {

SeriesMatrix embedded_series(const SeriesMatrix& s, const std::vector<std::size_t>& sites,
                             const std::vector<std::size_t>& dims) {
  SeriesMatrix out;
  out.order = s.order;
  for (const auto& m : s.c) out.c.push_back(embed(m, sites, dims));
  return out;
}

SeriesMatrix monodromy(int n, const std::vector<RatFunc>& zeta, int order) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::size_t> dims(zeta.size() + 1, un);
  std::size_t total = 1;
  for (auto v : dims) total *= v;
  SeriesMatrix t = SeriesMatrix::constant(Mat::identity(total), order);
  for (std::size_t s = 0; s < zeta.size(); ++s) {
    t = t * embedded_series(rational_R_series(n, zeta[s], order), {0, s + 1}, dims);
  }
  return t;
}

}  // namespace

MonodromyExpansion monodromy_expansion(int n, const std::vector<RatFunc>& inhomogeneities, int order) {
  if (order > kMaxSeriesOrder) throw Error("order-too-high", "series truncation supports order <= 4");
  if (order < 1) throw Error("bad-args", "series order must be at least 1");
  if (inhomogeneities.empty()) throw Error("bad-args", "monodromy needs at least one site");
  const auto un = static_cast<std::size_t>(n);
  MonodromyExpansion out;
  out.n = n;
  out.inhomogeneities = inhomogeneities;
  out.t = monodromy(n, inhomogeneities, order);
  out.report.subject = "monodromy expansion";

  const std::size_t sites = inhomogeneities.size();
  if (sites >= 2) {
    const std::vector<RatFunc> head(inhomogeneities.begin(), inhomogeneities.end() - 1);
    const SeriesMatrix prev = monodromy(n, head, order);
    const SeriesMatrix last = rational_R_series(n, inhomogeneities.back(), order);
    for (int k = 0; k <= order; ++k) {
      bool ok = true;
      for (std::size_t i = 0; i < un && ok; ++i) {
        for (std::size_t j = 0; j < un && ok; ++j) {
          Mat sum(out.t.block(k, i, j, un).rows(), out.t.block(k, i, j, un).cols());
          for (std::size_t m = 0; m < un; ++m) {
            for (int p = 0; p <= k; ++p) {
              sum += kron(prev.block(p, i, m, un), last.block(k - p, m, j, un));
            }
          }
          ok = sum == out.t.block(k, i, j, un);
        }
      }
      out.report.add("coproduct order " + std::to_string(k), ok);
    }
  }

  // (u - v - P12) T1(u) T2(v) = T2(v) T1(u) (u - v - P12), coefficient of u^-a v^-b.
  std::size_t q = 1;
  for (std::size_t s = 0; s < sites; ++s) q *= un;
  const std::vector<std::size_t> dims = {un, un, q};
  std::vector<Mat> a;
  std::vector<Mat> b;
  for (const auto& m : out.t.c) {
    a.push_back(embed(m, {0, 2}, dims));
    b.push_back(embed(m, {1, 2}, dims));
  }
  const Mat p12 = embed(swap_matrix(un, un), {0, 1}, dims);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      const Mat lhs = a[ui + 1] * b[uj] - a[ui] * b[uj + 1] - p12 * a[ui] * b[uj];
      const Mat rhs = b[uj] * a[ui + 1] - b[uj + 1] * a[ui] - b[uj] * a[ui] * p12;
      out.report.add("rtt u^-" + std::to_string(i) + " v^-" + std::to_string(j), lhs == rhs);
    }
  }
  return out;
}

}  // namespace qaffine
