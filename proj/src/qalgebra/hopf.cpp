#include "qaffine/qalgebra/hopf.hpp"

#include "qaffine/error.hpp"
#include "qaffine/qalgebra/qnumbers.hpp"

namespace qaffine {

namespace {

int d_of(const CartanData& c, int i) { return c.d.at(static_cast<std::size_t>(i)); }

void require_same_algebra(const Representation& a, const Representation& b) {
  if (!(a.cartan == b.cartan)) {
    throw Error("algebra-mismatch", a.name + " and " + b.name + " carry different Cartan data");
  }
}

Mat power(const Mat& m, int n) {
  Mat r = Mat::identity(m.rows());
  for (int k = 0; k < n; ++k) r = r * m;
  return r;
}

std::string pair_label(const char* what, int i, int j) {
  return std::string(what) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::vector<TensorTerm> coproduct_terms(const Generator& g, const CartanData& c) {
  (void)c;
  const int i = g.index;
  switch (g.kind) {
    case GenKind::Ep:
    case GenKind::Em:
      return {{RatFunc(1), {g}, {Generator::kinv(i)}}, {RatFunc(1), {Generator::k(i)}, {g}}};
    case GenKind::K:
    case GenKind::Kinv:
      return {{RatFunc(1), {g}, {g}}};
    case GenKind::H:
      return {{RatFunc(1), {g}, {}}, {RatFunc(1), {}, {g}}};
    case GenKind::D:
      break;
  }
  throw Error("bad-generator", "D has no finite-dimensional coproduct image");
}

WordTerm antipode(const Word& w, const CartanData& c) {
  WordTerm out{RatFunc(1), {}};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Generator& g = *it;
    switch (g.kind) {
      case GenKind::Ep:
        out.coeff *= -q_param(d_of(c, g.index)).inverse();
        out.word.push_back(g);
        break;
      case GenKind::Em:
        out.coeff *= -q_param(d_of(c, g.index));
        out.word.push_back(g);
        break;
      case GenKind::K: out.word.push_back(Generator::kinv(g.index)); break;
      case GenKind::Kinv: out.word.push_back(Generator::k(g.index)); break;
      case GenKind::H:
        out.coeff = -out.coeff;
        out.word.push_back(g);
        break;
      case GenKind::D: throw Error("bad-generator", "antipode of D is not represented");
    }
  }
  return out;
}

RatFunc counit(const Word& w) {
  for (const auto& g : w) {
    if (g.kind != GenKind::K && g.kind != GenKind::Kinv) return RatFunc();
  }
  return RatFunc(1);
}

Mat word_matrix(const Word& w, const Representation& rho) {
  if (w.empty()) return Mat::identity(rho.dim);
  Mat m = rho.matrix(w[0]);
  for (std::size_t k = 1; k < w.size(); ++k) m = m * rho.matrix(w[k]);
  return m;
}

Mat tensor_coproduct_matrix(const Generator& g, const Representation& rho1, const Representation& rho2) {
  require_same_algebra(rho1, rho2);
  Mat out(rho1.dim * rho2.dim, rho1.dim * rho2.dim);
  for (const auto& t : coproduct_terms(g, rho1.cartan)) {
    out += kron(word_matrix(t.left, rho1), word_matrix(t.right, rho2)).scaled(t.coeff);
  }
  return out;
}

Representation tensor_product(const Representation& rho1, const Representation& rho2) {
  require_same_algebra(rho1, rho2);
  Representation r;
  r.cartan = rho1.cartan;
  r.dim = rho1.dim * rho2.dim;
  r.name = "(" + rho1.name + ")x(" + rho2.name + ")";
  r.gradation = rho1.gradation;
  r.spectral_var = rho1.spectral_var == rho2.spectral_var ? rho1.spectral_var
                                                          : rho1.spectral_var + "," + rho2.spectral_var;
  for (int i = 0; i < r.cartan.nodes(); ++i) {
    r.ep.push_back(tensor_coproduct_matrix(Generator::ep(i), rho1, rho2));
    r.em.push_back(tensor_coproduct_matrix(Generator::em(i), rho1, rho2));
    r.k.push_back(tensor_coproduct_matrix(Generator::k(i), rho1, rho2));
    r.kinv.push_back(tensor_coproduct_matrix(Generator::kinv(i), rho1, rho2));
    if (static_cast<std::size_t>(i) < rho1.h.size() && static_cast<std::size_t>(i) < rho2.h.size()) {
      r.h.push_back(tensor_coproduct_matrix(Generator::h(i), rho1, rho2));
    }
  }
  return r;
}

Report verify_defining_relations(const Representation& rho) {
  Report rep;
  rep.subject = "defining relations of " + rho.name;
  const CartanData& c = rho.cartan;
  const int n = c.nodes();
  const Mat one = Mat::identity(rho.dim);
  const RatFunc t = RatFunc::var("t");
  for (int i = 0; i < n; ++i) {
    const Mat& ki = rho.matrix(Generator::k(i));
    const Mat& kinv = rho.matrix(Generator::kinv(i));
    rep.add("K" + std::to_string(i) + "*K" + std::to_string(i) + "^-1=1", ki * kinv == one && kinv * ki == one);
    for (int j = 0; j < n; ++j) {
      const Mat& kj = rho.matrix(Generator::k(j));
      if (j > i) rep.add(pair_label("KK=KK", i, j), ki * kj == kj * ki);
      const int e = d_of(c, i) * c.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const Mat& epj = rho.matrix(Generator::ep(j));
      const Mat& emj = rho.matrix(Generator::em(j));
      rep.add(pair_label("KE+K^-1", i, j), ki * epj * kinv == epj.scaled(t.pow(e)));
      rep.add(pair_label("KE-K^-1", i, j), ki * emj * kinv == emj.scaled(t.pow(-e)));
    }
  }
  for (int i = 0; i < n; ++i) {
    const RatFunc qi = q_param(d_of(c, i));
    for (int j = 0; j < n; ++j) {
      const Mat lhs = commutator(rho.matrix(Generator::ep(i)), rho.matrix(Generator::em(j)));
      Mat rhs(rho.dim, rho.dim);
      if (i == j) {
        const Mat& k = rho.matrix(Generator::k(i));
        const Mat& kinv = rho.matrix(Generator::kinv(i));
        rhs = (k * k - kinv * kinv).scaled((qi - qi.inverse()).inverse());
      }
      rep.add(pair_label("[E+,E-]", i, j), lhs == rhs);
    }
  }
  for (int i = 0; i < n; ++i) {
    const RatFunc qi = q_param(d_of(c, i));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int m = 1 - c.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (const bool plus : {true, false}) {
        const Mat& ei = rho.matrix(plus ? Generator::ep(i) : Generator::em(i));
        const Mat& ej = rho.matrix(plus ? Generator::ep(j) : Generator::em(j));
        Mat sum(rho.dim, rho.dim);
        for (int k = 0; k <= m; ++k) {
          const RatFunc coeff = q_binomial(m, k, qi) * RatFunc(k % 2 == 0 ? 1 : -1);
          sum += (power(ei, m - k) * ej * power(ei, k)).scaled(coeff);
        }
        rep.add(pair_label(plus ? "serre+" : "serre-", i, j), sum.is_zero());
      }
    }
  }
  return rep;
}

Report verify_hopf_axioms(const Representation& rho1, const Representation& rho2, const Representation& rho3) {
  require_same_algebra(rho1, rho2);
  require_same_algebra(rho1, rho3);
  Report rep;
  rep.subject = "Hopf axioms";
  const CartanData& c = rho1.cartan;
  const Representation left = tensor_product(tensor_product(rho1, rho2), rho3);
  const Representation right = tensor_product(rho1, tensor_product(rho2, rho3));
  std::vector<Generator> gens = chevalley_generators(c);
  if (!rho1.h.empty() && !rho2.h.empty() && !rho3.h.empty()) {
    for (int i = 0; i < c.nodes(); ++i) gens.push_back(Generator::h(i));
  }
  const Mat one = Mat::identity(rho1.dim);
  for (const auto& g : gens) {
    const std::string x = g.label();
    rep.add("coassociativity " + x, left.matrix(g) == right.matrix(g));

    const auto terms = coproduct_terms(g, c);
    Mat eps_id(rho1.dim, rho1.dim);
    Mat id_eps(rho1.dim, rho1.dim);
    Mat s_id(rho1.dim, rho1.dim);
    Mat id_s(rho1.dim, rho1.dim);
    for (const auto& t : terms) {
      eps_id += word_matrix(t.right, rho1).scaled(t.coeff * counit(t.left));
      id_eps += word_matrix(t.left, rho1).scaled(t.coeff * counit(t.right));
      const WordTerm sl = antipode(t.left, c);
      const WordTerm sr = antipode(t.right, c);
      s_id += (word_matrix(sl.word, rho1) * word_matrix(t.right, rho1)).scaled(t.coeff * sl.coeff);
      id_s += (word_matrix(t.left, rho1) * word_matrix(sr.word, rho1)).scaled(t.coeff * sr.coeff);
    }
    const Mat expect_unit = one.scaled(counit({g}));
    rep.add("counit (eps x id) " + x, eps_id == rho1.matrix(g));
    rep.add("counit (id x eps) " + x, id_eps == rho1.matrix(g));
    rep.add("antipode m(S x id) " + x, s_id == expect_unit);
    rep.add("antipode m(id x S) " + x, id_s == expect_unit);
  }
  return rep;
}

}  // namespace qaffine
