#include "doctest.h"
#include "qaffine/error.hpp"
#include "qaffine/evalreps/evalreps.hpp"
#include "qaffine/qalgebra/qnumbers.hpp"
#include "qaffine/scalars/format.hpp"

using namespace qaffine;

namespace {

RatFunc P(const char* s) { return parse_ratfunc(s); }

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("q-integers and binomials") {
  const RatFunc q = P("q");
  CHECK(q_int(1, q) == RatFunc(1));
  CHECK(q_int(2, q) == P("q + q^-1"));
  CHECK(q_binomial(3, 1, q) == P("q^2 + 1 + q^-2"));
  CHECK(q_binomial(3, 1, q) == q_int(3, q));
  CHECK(q_binomial(4, 2, q) == P("q^4 + q^2 + 2 + q^-2 + q^-4"));
  CHECK(q_factorial(3, q) == P("q + q^-1") * P("q^2 + 1 + q^-2"));
  CHECK(error_code([&] { (void)q_binomial(2, 3, q); }) == "bad-args");
  CHECK(error_code([&] { (void)q_binomial(2, -1, q); }) == "bad-args");
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= m; ++n) {
      const RatFunc b = q_binomial(m, n, q);
      CHECK(b.is_polynomial());
      CHECK(b.substitute("q", q.inverse()) == b);
      // Ordinary binomial at q = 1.
      mpz_class classical;
      mpz_bin_uiui(classical.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
      CHECK(b.substitute("q", RatFunc(1)) == RatFunc(LaurentPoly(classical)));
    }
  }
}

TEST_CASE("Cartan data") {
  CHECK_NOTHROW(affine_a1().validate());
  for (int n = 1; n <= 8; ++n) CHECK_NOTHROW(affine_a(n).validate());
  CHECK(affine_a1().a == std::vector<std::vector<int>>{{2, -2}, {-2, 2}});
  CHECK(affine_a(2).a == std::vector<std::vector<int>>{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CHECK(CartanData::from_json(affine_a(3).to_json()) == affine_a(3));
  // Finite A2 is positive definite, hence of the wrong rank for r = 2 nodes - 1.
  nlohmann::json bad = {{"matrix", {{2, -1}, {-1, 2}}}, {"labels", {1, 1}}};
  CHECK(error_code([&] { (void)CartanData::from_json(bad); }) == "bad-cartan");
  nlohmann::json hyperbolic = {{"matrix", {{2, -3}, {-3, 2}}}};
  CHECK(error_code([&] { (void)CartanData::from_json(hyperbolic); }) == "bad-cartan");
  CHECK(error_code([] { (void)affine_a(9); }) == "bad-rank");
}

TEST_CASE("generator labels round trip") {
  for (const auto& g : chevalley_generators(affine_a(3))) CHECK(Generator::parse(g.label()) == g);
  CHECK(Generator::parse("H2") == Generator::h(2));
  CHECK(Generator::parse("D") == Generator::d());
  CHECK(error_code([] { (void)Generator::parse("E*1"); }) == "bad-generator");
}

TEST_CASE("coproduct on spin-1/2 x spin-1/2") {
  const Representation v = make_uq_sl2_spin(1);
  CHECK(tensor_coproduct_matrix(Generator::h(1), v, v) == Mat::diagonal({2, 0, 0, -2}));
  CHECK(tensor_coproduct_matrix(Generator::k(1), v, v) == Mat::diagonal({P("t^2"), 1, 1, P("t^-2")}));
  // Hand expansion of E (x) K^-1 + K (x) E with E = e_01, K = diag(t, t^-1).
  Mat expect(4, 4);
  expect(0, 2) = P("t^-1");
  expect(1, 3) = P("t");
  expect(0, 1) = P("t");
  expect(2, 3) = P("t^-1");
  const Mat e = tensor_coproduct_matrix(Generator::ep(1), v, v);
  CHECK(e == expect);
  CHECK(e.nonzeros() == 4);
  CHECK(error_code([&] { (void)tensor_coproduct_matrix(Generator::ep(1), v, make_uq_sln_defining(3)); }) ==
        "algebra-mismatch");
  CHECK(error_code([&] { (void)tensor_coproduct_matrix(Generator::d(), v, v); }) == "bad-generator");
}

TEST_CASE("spin representations") {
  const Representation v = make_uq_sl2_spin(1);
  CHECK(v.matrix(Generator::ep(1)) == Mat::unit(2, 2, 0, 1));
  CHECK(v.matrix(Generator::em(1)) == Mat::unit(2, 2, 1, 0));
  CHECK(v.matrix(Generator::k(1)) == Mat::diagonal({P("t"), P("t^-1")}));
  CHECK(commutator(v.ep[1], v.em[1]) == Mat::diagonal({1, -1}));

  const Representation s1 = make_uq_sl2_spin(2);
  const RatFunc two = P("t^2 + t^-2");
  CHECK(commutator(s1.ep[1], s1.em[1]) == Mat::diagonal({two, 0, -two}));

  for (int two_s = 1; two_s <= 4; ++two_s) {
    const Representation r = make_uq_sl2_spin(two_s);
    CHECK(r.dim == static_cast<std::size_t>(two_s + 1));
    const Report rep = verify_defining_relations(r);
    CAPTURE(rep.to_json().dump());
    CHECK(rep.passed());
    CHECK(r.k[0] * r.k[1] == Mat::identity(r.dim));
  }
  CHECK(error_code([] { (void)make_uq_sl2_spin(0); }) == "bad-spin");
}

TEST_CASE("corrupted representation is caught") {
  Representation v = make_uq_sl2_spin(1);
  v.ep[1] = v.ep[1].scaled(RatFunc(2));
  const Report rep = verify_defining_relations(v);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.find("[E+,E-](1,1)") != nullptr);
  CHECK_FALSE(rep.find("[E+,E-](1,1)")->passed);
}

TEST_CASE("defining representations of sl_n") {
  const Representation v2 = make_uq_sln_defining(2);
  const Representation s = make_uq_sl2_spin(1);
  for (const auto& g : chevalley_generators(v2.cartan)) CHECK(v2.matrix(g) == s.matrix(g));

  const Representation v3 = make_uq_sln_defining(3);
  const Report rep = verify_defining_relations(v3);
  CHECK(rep.passed());
  int serre = 0;
  for (const auto& c : rep.checks) serre += c.name.starts_with("serre+") && c.passed ? 1 : 0;
  CHECK(serre == 6);
  CHECK(rep.find("[E+,E-](0,0)")->passed);
  CHECK(v3.matrix(Generator::ep(0)) == Mat::unit(3, 3, 2, 0));
  CHECK(v3.matrix(Generator::k(0)) == Mat::diagonal({P("t^-1"), 1, P("t")}));

  for (int n = 3; n <= 5; ++n) {
    const Representation v = make_uq_sln_defining(n);
    CHECK(verify_defining_relations(v).passed());
    Mat prod = Mat::identity(v.dim);
    for (const auto& k : v.k) prod = prod * k;
    CHECK(prod == Mat::identity(v.dim));
  }
  CHECK(error_code([] { (void)make_uq_sln_defining(1); }) == "bad-rank");
}

TEST_CASE("classical Serre relation at t = 1") {
  const Representation s1 = make_uq_sl2_spin(2);
  const Mat e0 = substitute(s1.ep[0], "t", RatFunc(1));
  const Mat e1 = substitute(s1.ep[1], "t", RatFunc(1));
  const long binom[] = {1, 3, 3, 1};
  Mat sum(3, 3);
  Mat left = Mat::identity(3);
  for (int k = 0; k <= 3; ++k) {
    Mat a = Mat::identity(3);
    for (int j = 0; j < 3 - k; ++j) a = a * e0;
    Mat b = Mat::identity(3);
    for (int j = 0; j < k; ++j) b = b * e0;
    sum += (a * e1 * b).scaled(RatFunc(k % 2 == 0 ? binom[k] : -binom[k]));
  }
  CHECK(sum.is_zero());
}

TEST_CASE("gradation twists") {
  const Representation v = make_uq_sl2_spin(1);
  const CartanData& c = v.cartan;
  const Representation hom = apply_gradation_twist(v, GradationSpec::homogeneous(c), "z");
  CHECK(hom.ep[0] == v.ep[0].scaled(P("z")));
  CHECK(hom.em[0] == v.em[0].scaled(P("z^-1")));
  CHECK(hom.ep[1] == v.ep[1]);
  CHECK(hom.k[1] == v.k[1]);
  const Representation pri = apply_gradation_twist(v, GradationSpec::principal(c), "z");
  CHECK(pri.ep[1] == v.ep[1].scaled(P("z")));
  CHECK(pri.em[1] == v.em[1].scaled(P("z^-1")));
  CHECK(GradationSpec::spin(c).s == GradationSpec::principal(c).s);

  const Representation back = apply_gradation_twist(pri, GradationSpec::principal(c).negated(), "z");
  for (const auto& g : chevalley_generators(c)) CHECK(back.matrix(g) == v.matrix(g));

  GradationSpec half{"half", {mpq_class(1, 2), 0}};
  CHECK(error_code([&] { (void)apply_gradation_twist(v, half, "z"); }) == "fractional-grading");

  for (const auto& rho : {make_uq_sl2_spin(1), make_uq_sl2_spin(2), make_uq_sln_defining(3)}) {
    for (const char* name : {"homogeneous", "principal", "spin"}) {
      const Representation tw = apply_gradation_twist(rho, GradationSpec::named(name, rho.cartan), "z");
      CAPTURE(name);
      CHECK(verify_defining_relations(tw).passed());
      CHECK(tw.spectral_var == "z");
    }
  }
}

TEST_CASE("tensor representations") {
  const Representation v = make_uq_sl2_spin(1);
  const CartanData& c = v.cartan;
  const Representation a = apply_gradation_twist(v, GradationSpec::homogeneous(c), "z1");
  const Representation b = apply_gradation_twist(make_uq_sl2_spin(2), GradationSpec::homogeneous(c), "z2");
  const TensorRep tr = tensor_rep(a, b);
  CHECK(tr.dim() == 6);
  CHECK(tr.matrix(Generator::k(1)) == kron(a.k[1], b.k[1]));
  CHECK(verify_defining_relations(tr.materialize()).passed());
  const Representation v3 = apply_gradation_twist(make_uq_sln_defining(3), GradationSpec::principal(affine_a(2)), "z");
  CHECK(verify_defining_relations(tensor_product(v3, make_uq_sln_defining(3))).passed());
  CHECK(error_code([&] { (void)tensor_rep(v, v3); }) == "algebra-mismatch");
}

TEST_CASE("Hopf axioms") {
  const Representation v = make_uq_sl2_spin(1);
  const Report plain = verify_hopf_axioms(v, v, v);
  CAPTURE(plain.to_json().dump());
  CHECK(plain.passed());
  const CartanData& c = v.cartan;
  const Representation a = apply_gradation_twist(v, GradationSpec::homogeneous(c), "z1");
  const Representation b = apply_gradation_twist(make_uq_sl2_spin(2), GradationSpec::principal(c), "z2");
  CHECK(verify_hopf_axioms(a, b, a).passed());
  const Representation v3 = make_uq_sln_defining(3);
  CHECK(verify_hopf_axioms(v3, v3, v3).passed());

  // A wrong antipode sign would fail; check the pieces directly.
  const WordTerm s = antipode({Generator::ep(1)}, c);
  CHECK(s.coeff == P("-t^-2"));
  CHECK(antipode({Generator::k(1), Generator::ep(0)}, c).word ==
        Word{Generator::ep(0), Generator::kinv(1)});
}

TEST_CASE("representation strings") {
  CHECK(parse_rep_spec("sl2:spin=1/2").dim == 2);
  CHECK(parse_rep_spec("spin:1").dim == 3);
  CHECK(parse_rep_spec("spin:3/2").dim == 4);
  CHECK(parse_rep_spec("sl3:defining").dim == 3);
  CHECK(error_code([] { (void)parse_rep_spec("so5:spinor"); }) == "bad-rep");
  CHECK(error_code([] { (void)parse_rep_spec("spin:1/3"); }) == "bad-spin");
  const auto j = rep_to_json(make_uq_sl2_spin(1));
  CHECK(j["matrices"]["E+1"]["entries"][0][2] == "1");
}
