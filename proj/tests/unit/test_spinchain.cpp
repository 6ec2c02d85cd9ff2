#include <chrono>

#include "doctest.h"
#include "qaffine/error.hpp"
#include "qaffine/scalars/format.hpp"
#include "qaffine/spinchain/spinchain.hpp"
#include "qaffine/yangian/yangian.hpp"

using namespace qaffine;

namespace {

RatFunc P(const char* s) { return parse_ratfunc(s); }

const RMatrix& spin_half_R() {
  static const RMatrix r =
      intertwiner(make_uq_sl2_spin(1), make_uq_sl2_spin(1), GradationSpec::homogeneous(affine_a1()));
  return r;
}

// Permutation sending the state (s1, ..., sn) to (sn, s1, ..., s_{n-1}).
Mat cyclic_shift(std::size_t d, int n) {
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  Mat c(dim, dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(n));
    std::size_t rest = idx;
    for (int i = n; i-- > 0;) {
      digits[static_cast<std::size_t>(i)] = rest % d;
      rest /= d;
    }
    std::size_t out = 0;
    for (int i = 0; i < n; ++i) out = out * d + digits[static_cast<std::size_t>((i + n - 1) % n)];
    c(out, idx) = RatFunc(1);
  }
  return c;
}

}  // namespace

TEST_CASE("one-site monodromy is the plain R-matrix") {
  const auto& r = spin_half_R();
  const auto c = build_monodromy(r, 1);
  CHECK(*c.monodromy == r.plain());
  CHECK(*c.transfer == partial_trace_first(r.plain(), 2));
}

TEST_CASE("two-site rational chain shapes and entries") {
  const RMatrix r = rational_R(2, "u");
  const auto c = build_monodromy(r, 2);
  REQUIRE(c.monodromy->rows() == 8);
  REQUIRE(c.transfer->rows() == 4);
  // plain R = 1 - P/u; on |00> the a=0 term is (1 - 1/u)^2 and the a=1 term is 1.
  CHECK((*c.transfer)(0, 0) == P("(u^2 - 2*u + 1)/(u^2)") + RatFunc(1));
}

TEST_CASE("uniform inhomogeneity is a spectral shift") {
  const RMatrix rat = rational_R(2, "u");
  const auto shifted = build_monodromy(rat, 3, {RatFunc(3), RatFunc(3), RatFunc(3)});
  const auto plain = build_monodromy(rat, 3, {}, P("u - 3"));
  CHECK(*shifted.transfer == *plain.transfer);

  const auto& trig = spin_half_R();
  const auto scaled = build_monodromy(trig, 2, {P("t^2"), P("t^2")});
  const auto base = build_monodromy(trig, 2, {}, P("t^-2*z"));
  CHECK(*scaled.transfer == *base.transfer);
}

TEST_CASE("matrix-free application agrees with exact matrices") {
  const auto& r = spin_half_R();
  const auto c = build_monodromy(r, 3, {RatFunc(1), P("t^2"), P("t^-1")});
  for (std::uint64_t k = 0; k < 3; ++k) {
    const PrimePoint pt = PrimePoint::draw(11, k);
    const ModChain mc = evaluate_chain_mod_p(c, pt);
    const ModMatrix t = evaluate_mod_p(*c.monodromy, pt);
    const ModMatrix tau = evaluate_mod_p(*c.transfer, pt);
    std::vector<std::uint64_t> v(16), w(8);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = 7 * i + k + 1;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = 3 * i * i + k;
    CHECK(mc.apply_monodromy(v) == t.apply(v));
    CHECK(mc.apply_transfer(w) == tau.apply(w));
  }
}

TEST_CASE("too-large guard") {
  try {
    build_monodromy(spin_half_R(), 6);
    FAIL("expected too-large");
  } catch (const Error& e) {
    CHECK(e.code() == "too-large");
  }
  CHECK_NOTHROW(make_chain(spin_half_R(), 12));
}

TEST_CASE("RTT relation") {
  const auto& r = spin_half_R();
  const RatFunc w = RatFunc::var("w");
  for (int n = 1; n <= 3; ++n) {
    const auto c = build_monodromy(r, n, {}, std::nullopt, 256);
    const Report rep = verify_rtt(c, w, r, YbeMode{});
    CHECK_MESSAGE(rep.passed(), n);
    CHECK(rep.checks.front().name == "rtt exact");
  }
  const auto inhom = build_monodromy(r, 2, {P("t^2"), P("t^-4")}, std::nullopt, 256);
  CHECK(verify_rtt(inhom, w, r, YbeMode{}).passed());

  const auto big = make_chain(r, 8);
  const Report rep = verify_rtt(big, w, r, YbeMode::modp(8, 3));
  CHECK(rep.passed());
  CHECK(rep.checks.front().name == "rtt modp");

  RMatrix bad = r;
  bad.r(1, 2) = bad.r(1, 2) + RatFunc(1);
  CHECK_FALSE(verify_rtt(build_monodromy(r, 2), w, bad, YbeMode{}).passed());
  CHECK_FALSE(verify_rtt(make_chain(r, 4), w, bad, YbeMode::modp(4, 3)).passed());
}

TEST_CASE("commuting transfer matrices") {
  const auto& r = spin_half_R();
  const RatFunc w = RatFunc::var("w");
  const auto a = build_monodromy(r, 3, {RatFunc(1), P("t^2"), P("t^6")});
  const auto b = with_spectral(a, w, true);
  const Report rep = verify_commuting(a, b, YbeMode{});
  CHECK(rep.passed());
  CHECK(rep.checks.front().name == "[tau, tau'] exact");

  const RMatrix rat = rational_R(2, "u");
  const auto ra = build_monodromy(rat, 3, {RatFunc(0), RatFunc(2), P("1/3")});
  CHECK(verify_commuting(ra, with_spectral(ra, RatFunc::var("v"), true), YbeMode{}).passed());

  const auto start = std::chrono::steady_clock::now();
  const auto big = make_chain(r, 10, std::vector<RatFunc>(10, P("t^2")));
  const Report mrep = verify_commuting(big, with_spectral(big, w, false), YbeMode::modp(5, 9));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(mrep.passed());
  CHECK(secs < 10.0);

  // A broken R loses commutativity once translation symmetry is broken.
  RMatrix bad = r;
  bad.r(0, 0) = P("t^4*z^2 - 1");
  bad.r(3, 3) = bad.r(0, 0);
  const auto ba = build_monodromy(bad, 3, {RatFunc(1), P("t^2"), P("t^6")});
  CHECK_FALSE(verify_commuting(ba, with_spectral(ba, w, true), YbeMode{}).passed());
}

TEST_CASE("weighted transfer") {
  const auto& r = spin_half_R();
  const auto c = build_monodromy(r, 2);
  CHECK(weighted_transfer(*c.monodromy, Mat::identity(2), 2) == *c.transfer);
  // Twist by the Cartan element commutes with tau, by weight conservation.
  Mat k = Mat::diagonal({P("t^2"), P("t^-2")});
  const Mat tk = weighted_transfer(*c.monodromy, k, 2);
  const auto other = with_spectral(c, RatFunc::var("w"), true);
  const Mat tk2 = weighted_transfer(*other.monodromy, k, 2);
  CHECK(commutator(tk, tk2).is_zero());
}

TEST_CASE("cyclic shift covariance of inhomogeneities") {
  const auto& r = spin_half_R();
  const Mat c = cyclic_shift(2, 3);
  const Mat cinv = c.transpose();
  const Mat x = Mat::diagonal({RatFunc(2), RatFunc(5)});
  REQUIRE(c * embed(x, {0}, {2, 2, 2}) * cinv == embed(x, {1}, {2, 2, 2}));
  const RatFunc z1 = RatFunc(1), z2 = P("t^2"), z3 = P("t^-6");
  const auto a = build_monodromy(r, 3, {z1, z2, z3});
  const auto b = build_monodromy(r, 3, {z3, z1, z2});
  CHECK(c * *a.transfer * cinv == *b.transfer);
}

TEST_CASE("Hamiltonian density") {
  const auto& r = spin_half_R();
  const Hamiltonian h = extract_hamiltonian(r, 4);
  // (t^4 - 1) h at t = 1 is the Heisenberg exchange P - 1.
  const Mat classical = substitute(h.density.scaled(P("t^4 - 1")), "t", RatFunc(1));
  const Mat exchange = swap_matrix(2, 2) - Mat::identity(4);
  CHECK(classical == exchange);
  CHECK(h.density.transpose() == h.density);
  CHECK(h.report.passed());

  const Mat hc = substitute(h.h.scaled(P("t^4 - 1")), "t", RatFunc(1));
  Mat expected(16, 16);
  for (std::size_t k = 0; k < 4; ++k) expected += embed(exchange, {k, (k + 1) % 4}, {2, 2, 2, 2});
  CHECK(hc == expected);

  // Rational: density is 1 - P.
  const Hamiltonian hr = extract_hamiltonian(rational_R(2, "u"), 3);
  CHECK(hr.density == Mat::identity(4) - swap_matrix(2, 2));
  CHECK(hr.report.passed());
}

TEST_CASE("Hamiltonian commutes with the transfer matrix") {
  const auto& r = spin_half_R();
  const Hamiltonian h = extract_hamiltonian(r, 6);
  CHECK(h.report.passed());
  const auto c = build_monodromy(r, 3);
  const Hamiltonian h3 = extract_hamiltonian(r, 3);
  CHECK(commutator(h3.h, *c.transfer).is_zero());

  // Open boundaries break it for the periodic transfer matrix.
  const Hamiltonian open = extract_hamiltonian(r, 4, false);
  CHECK_FALSE(open.report.passed());
}

TEST_CASE("non-regular R") {
  RMatrix bad = spin_half_R();
  bad.r(1, 2) = bad.r(1, 2) + RatFunc(1);
  try {
    extract_hamiltonian(bad, 3);
    FAIL("expected non-regular-R");
  } catch (const Error& e) {
    CHECK(e.code() == "non-regular-R");
  }
  RMatrix zero = spin_half_R();
  zero.r(0, 0) = RatFunc();
  CHECK_THROWS_AS(extract_hamiltonian(zero, 3), Error);
}
