#include "doctest.h"
#include "qaffine/error.hpp"
#include "qaffine/scalars/format.hpp"
#include "qaffine/yangian/yangian.hpp"

using namespace qaffine;

namespace {

RatFunc P(const char* s) { return parse_ratfunc(s); }

Mat plain_R(int n, const RatFunc& x) {
  const auto un = static_cast<std::size_t>(n);
  return Mat::identity(un * un) - swap_matrix(un, un).scaled(x.inverse());
}

}  // namespace

TEST_CASE("sl2 structure constants") {
  const YangianData y = yangian_sl2();
  CHECK(y.verify_structure().passed());
  // [I1, I2] = -I3, [I2, I3] = -I1, [I3, I1] = I2 for the real basis.
  CHECK(y.fabc(0, 1, 2) == -1);
  CHECK(y.fabc(1, 2, 0) == -1);
  CHECK(y.fabc(2, 0, 1) == 1);
  CHECK(y.g == std::vector<mpq_class>{mpq_class(-1, 2), 0, 0, 0, mpq_class(1, 2), 0, 0, 0, mpq_class(-1, 2)});

  YangianData bad = y;
  bad.f[(0 * 3 + 1) * 3 + 2] = 1;  // [I1, I2] = +I3 breaks antisymmetry
  CHECK_FALSE(bad.verify_structure().passed());
  CHECK_FALSE(verify_yangian_relations(bad, yangian_eval_rep(y, "u")).passed());
}

TEST_CASE("alpha tensor symmetries") {
  const YangianData y = yangian_sl2();
  int nonzero = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          for (int e = 0; e < 3; ++e)
            for (int g = 0; g < 3; ++g) {
              const mpq_class v = y.alpha(a, b, c, d, e, g);
              nonzero += v != 0 ? 1 : 0;
              // Simultaneous permutation of the pairs (a,d), (b,e), (c,g) leaves alpha invariant
              // up to the sign of f_ijk under the same permutation.
              CHECK(y.alpha(b, a, c, e, d, g) == -v);
              CHECK(y.alpha(b, c, a, e, g, d) == v);
            }
  CHECK(nonzero > 0);
}

TEST_CASE("rational R-matrix") {
  const RMatrix r = rational_R(2);
  CHECK(r.flavor == "rational");
  const Mat p = swap_matrix(2, 2);
  CHECK(p * p == Mat::identity(4));
  CHECK(r.plain() == plain_R(2, P("u")));
  CHECK(substitute(r.plain(), "u", RatFunc(2)) == Mat::identity(4) - p.scaled(RatFunc::rational(1, 2)));
  // 1 - P at u = 1 is twice the antisymmetrizer.
  const Mat at1 = substitute(r.plain(), "u", RatFunc(1));
  CHECK(at1 == (Mat::identity(4) - p));
  CHECK(rank_exact(at1) == 1);
  CHECK((at1 * at1) == at1.scaled(RatFunc(2)));

  const Unitarity u = verify_unitarity(r);
  REQUIRE(u.phi.has_value());
  CHECK(*u.phi == P("1 - u^-2"));
}

TEST_CASE("additive Yang-Baxter equation") {
  for (int n : {2, 3}) {
    const auto un = static_cast<std::size_t>(n);
    const std::vector<std::size_t> dims = {un, un, un};
    const RatFunc u = P("u");
    const RatFunc v = P("v");
    const Mat r12 = embed(plain_R(n, u), {0, 1}, dims);
    const Mat r13 = embed(plain_R(n, u + v), {0, 2}, dims);
    const Mat r23 = embed(plain_R(n, v), {1, 2}, dims);
    CHECK(r12 * r13 * r23 == r23 * r13 * r12);
    const RMatrix r = rational_R(n);
    CHECK(verify_ybe(r, r, r, YbeMode{}).passed());
  }
}

TEST_CASE("Yangian relations in the evaluation representation") {
  const YangianData y = yangian_sl2();
  const Report rep = verify_yangian_relations(y, yangian_eval_rep(y, "u"));
  CAPTURE(rep.first_failure() ? rep.first_failure()->name : "");
  CHECK(rep.passed());
  REQUIRE(rep.find("cubic: symmetrized alpha vanishes") != nullptr);
  CHECK(rep.find("cubic: symmetrized alpha vanishes")->passed);
  CHECK(rep.find("quartic(0,1,1,2)") != nullptr);
  // A constant shift J -> (u + c) I is still a representation.
  CHECK(verify_yangian_relations(y, yangian_eval_rep(y, "u", RatFunc(3))).passed());

  // J not proportional to I breaks [I_a, J_b] = f J.
  YangianEvalRep bad = yangian_eval_rep(y, "u");
  bad.j[0] = bad.j[0] + y.basis[1];
  CHECK_FALSE(verify_yangian_relations(y, bad).passed());
}

TEST_CASE("Yangian Hopf structure and intertwiner") {
  const YangianData y = yangian_sl2();
  const Report rep = verify_yangian_hopf(y, yangian_eval_rep(y, "u"), yangian_eval_rep(y, "v"), rational_R(2));
  CHECK(rep.passed());
  CHECK(rep.find("intertwining J(1)")->passed);

  RMatrix flipped = rational_R(2);
  flipped.r = swap_matrix(2, 2) + Mat::identity(4).scaled(P("u^-1"));
  CHECK_FALSE(verify_yangian_hopf(y, yangian_eval_rep(y, "u"), yangian_eval_rep(y, "v"), flipped).passed());

  const YangianData g3 = yangian_gl(3);
  CHECK(g3.verify_structure().passed());
  CHECK(verify_yangian_hopf(g3, yangian_eval_rep(g3, "u"), yangian_eval_rep(g3, "v"), rational_R(3)).passed());
  CHECK_THROWS_WITH_AS(verify_yangian_hopf(y, yangian_eval_rep(y, "u"), yangian_eval_rep(y, "v"), rational_R(3)),
                       doctest::Contains("bad-composition"), Error);
}

TEST_CASE("monodromy expansion") {
  const std::size_t n = 2;
  const MonodromyExpansion one = monodromy_expansion(2, {RatFunc()}, 2);
  CHECK(one.report.passed());
  // t(u) = 1 - P/u: the u^-1 block (i,j) is -e_ji.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(one.t.block(1, i, j, n) == Mat::unit(n, n, j, i, RatFunc(-1)));
      CHECK(one.t.block(2, i, j, n).is_zero());
    }

  const MonodromyExpansion two = monodromy_expansion(2, {P("w"), RatFunc()}, 3);
  CHECK(two.report.passed());
  // Leading order is primitive: t^(1)_ij = I_ij (x) 1 + 1 (x) I_ij.
  const MonodromyExpansion first = monodromy_expansion(2, {P("w")}, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat expect = kron(first.t.block(1, i, j, n), Mat::identity(2)) + kron(Mat::identity(2), one.t.block(1, i, j, n));
      CHECK(two.t.block(1, i, j, n) == expect);
      // Order two: cross terms sum_k t^(1)_ik (x) t^(1)_kj plus the single-site u^-2 parts.
      Mat cross = kron(first.t.block(2, i, j, n), Mat::identity(2));
      for (std::size_t k = 0; k < n; ++k) cross += kron(first.t.block(1, i, k, n), one.t.block(1, k, j, n));
      CHECK(two.t.block(2, i, j, n) == cross);
    }

  const MonodromyExpansion three = monodromy_expansion(2, {RatFunc(), P("w"), RatFunc(1)}, 4);
  CHECK(three.report.passed());
  CHECK_THROWS_WITH_AS(monodromy_expansion(2, {RatFunc()}, 5), doctest::Contains("order-too-high"), Error);
}

TEST_CASE("series arithmetic respects truncation") {
  const SeriesMatrix a = rational_R_series(2, P("w"), 3);
  const SeriesMatrix b = rational_R_series(2, RatFunc(), 2);
  const SeriesMatrix c = a * b;
  CHECK(c.order == 2);
  CHECK(c.c.size() == 3);
  // (1 - P/u)(1 + P/u) = 1 - 1/u^2 at zero shift.
  SeriesMatrix plus = b;
  plus.c[1] = -plus.c[1];
  const SeriesMatrix d = b * plus;
  CHECK(d.c[0] == Mat::identity(4));
  CHECK(d.c[1].is_zero());
  CHECK(d.c[2] == Mat::identity(4).scaled(RatFunc(-1)));
}
