#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "qaffine/error.hpp"
#include "qaffine/scalars/format.hpp"
#include "qaffine/scalars/linalg.hpp"
#include "qaffine/simd/modp_kernels.hpp"

using namespace qaffine;
using qaffine::testing::random_nonzero_poly;
using qaffine::testing::random_poly;
using qaffine::testing::random_ratfunc;

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

const std::vector<int> kTZ = {var_index("t"), var_index("z")};

}  // namespace

TEST_CASE("ratfunc arithmetic examples") {
  CHECK((P("t + t^-1") - P("t + t^-1")).is_zero());
  CHECK(P("(z^2 - 1)/(z - 1)") == P("z + 1"));
  CHECK(P("z + z^-1").derivative("z") == P("1 - z^-2"));
  CHECK(P("z^-3").derivative("z") == P("-3*z^-4"));
  CHECK(error_code([] { (void)(P("z") / RatFunc()); }) == "zero-divisor");
  CHECK(error_code([] { (void)P("z").substitute("nosuchvar", 1); }) == "unknown-var");
}

TEST_CASE("canonical form details") {
  // Monomial factors of the denominator move into the numerator.
  const RatFunc r = P("(t^2 + 1)/(t^3)");
  CHECK(r.is_polynomial());
  CHECK(to_string(r) == "1*t^-1 + 1*t^-3");
  // Integer content and sign.
  const RatFunc s(parse_poly("4*z + 2"), parse_poly("-6*z^2 + 2"));
  CHECK(to_string(s) == "(-2*z^1 - 1)/(3*z^2 - 1)");
  CHECK(to_string(parse_poly("3*t^-2*z^1 - 1")) == "-1 + 3*t^-2*z^1");
}

TEST_CASE("gcd recovers a planted common factor") {
  std::mt19937_64 rng(11);
  const std::vector<int> vars = {var_index("t"), var_index("z"), var_index("e0")};
  for (int iter = 0; iter < 60; ++iter) {
    const LaurentPoly f = random_nonzero_poly(rng, vars, 3);
    const LaurentPoly g = random_nonzero_poly(rng, vars, 3);
    const LaurentPoly h = random_nonzero_poly(rng, vars, 3);
    const LaurentPoly d = gcd(f * g, f * h);
    // f divides the gcd and the gcd divides both products.
    CHECK(divide_exact(d, f).has_value());
    CHECK(divide_exact(f * g, d).has_value());
    CHECK(divide_exact(f * h, d).has_value());
    // Cofactors are coprime.
    const LaurentPoly g2 = *divide_exact(f * g, d);
    const LaurentPoly h2 = *divide_exact(f * h, d);
    CHECK(gcd(g2, h2).is_one());
  }
}

TEST_CASE("canonical-form uniqueness on random pairs") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const RatFunc a = random_ratfunc(rng, kTZ, 2);
    const RatFunc b = random_ratfunc(rng, kTZ, 2);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) - b == a);
  }
}

TEST_CASE("field axioms spot check") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const RatFunc a = random_ratfunc(rng, kTZ, 2);
    const RatFunc b = random_ratfunc(rng, kTZ, 2);
    const RatFunc c = random_ratfunc(rng, kTZ, 2);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
  }
}

TEST_CASE("substitution") {
  CHECK(P("z^2 + z^-1").substitute("z", P("z1*z2")) == P("z1^2*z2^2 + z1^-1*z2^-1"));
  CHECK(P("z^3").substitute("z", P("-t^2")) == P("-t^6"));
  CHECK(P("z^2 - 1").substitute("z", P("(t + 1)/(t - 1)")) == P("(4*t)/(t^2 - 2*t + 1)"));
}

TEST_CASE("evaluate_mod_p") {
  const PrimePoint pt = PrimePoint::draw(3, 0);
  CHECK(evaluate_mod_p(RatFunc(1), pt) == 1);
  PrimePoint q = pt;
  q.set(var_index("z"), 5);
  CHECK(evaluate_mod_p(P("z"), q) == 5);
  CHECK(evaluate_mod_p(P("z^-1"), q) == modp::inv(5));
  for (std::uint64_t c = 0; c < 10; ++c) {
    const PrimePoint r = PrimePoint::draw(99, c);
    CHECK(evaluate_mod_p(P("(z^2 - 1)/(z - 1)"), r) == evaluate_mod_p(P("z + 1"), r));
  }
  q.set(var_index("z"), 1);
  CHECK(error_code([&] { (void)evaluate_mod_p(RatFunc(parse_poly("1"), parse_poly("z - 1")), q); }) == "bad-point");
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const RatFunc a = random_ratfunc(rng, kTZ, 2);
    const RatFunc b = random_ratfunc(rng, kTZ, 2);
    const PrimePoint pt = PrimePoint::draw(5, static_cast<std::uint64_t>(i));
    try {
      CHECK(evaluate_mod_p(a * b, pt) == modp::mul(evaluate_mod_p(a, pt), evaluate_mod_p(b, pt)));
      CHECK(evaluate_mod_p(a + b, pt) == modp::add(evaluate_mod_p(a, pt), evaluate_mod_p(b, pt)));
    } catch (const Error& e) {
      CHECK(e.code() == "bad-point");
    }
  }
}

TEST_CASE("print/parse round trip") {
  std::mt19937_64 rng(6);
  const std::vector<int> vars = {var_index("t"), var_index("z"), var_index("eta")};
  for (int i = 0; i < 300; ++i) {
    const RatFunc r = random_ratfunc(rng, vars);
    CHECK(parse_ratfunc(to_string(r)) == r);
  }
  CHECK(parse_poly("t^2") == LaurentPoly::variable("t", 2));
  CHECK(parse_poly("-z + 3") == parse_poly("3 - 1*z^1"));
  CHECK(error_code([] { (void)parse_poly("3 +* z"); }) == "parse-error");
}

TEST_CASE("identity_check_sz") {
  Mat a(2, 2);
  a(0, 0) = P("z + t");
  a(1, 1) = P("(z^2 - 1)/(z - 1)");
  Mat b = a;
  b(1, 1) = P("z + 1");
  CHECK(identity_check_sz(a, b, 3, 1).equal);

  Mat zero(1, 1);
  Mat cancel(1, 1);
  cancel(0, 0) = P("z") - P("z");
  CHECK(identity_check_sz(zero, cancel, 5, 2).equal);

  Mat planted(1, 1);
  planted(0, 0) = P("z - 2");
  const IdentityCheck r = identity_check_sz(zero, planted, 2, 3);
  CHECK_FALSE(r.equal);
  CHECK(r.witness.has_value());

  const IdentityCheck again = identity_check_sz(a, b, 4, 17);
  CHECK(again.failure_bound < 1e-10);
  CHECK(again.points_drawn == 4);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace_fraction_free(Mat(3, 3)).size() == 3);
  CHECK(nullspace_fraction_free(Mat::identity(3)).empty());

  // Rank-3 6x4 matrix as a product of random 6x3 and 3x4 factors.
  std::mt19937_64 rng(7);
  Mat left(6, 3);
  Mat right(3, 4);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 3; ++j) left(i, j) = RatFunc(random_poly(rng, kTZ, 2, 1, 3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) right(i, j) = RatFunc(random_poly(rng, kTZ, 2, 1, 3));
  const Mat m = left * right;
  const auto basis = nullspace_fraction_free(m);
  REQUIRE(basis.size() == 1);
  // Modular rank oracle at five independent points.
  for (std::uint64_t c = 0; c < 5; ++c) {
    CHECK(rank_mod_p(evaluate_mod_p(m, PrimePoint::draw(8, c))) == 3);
  }
  Mat n(4, 1);
  for (std::size_t j = 0; j < 4; ++j) n(j, 0) = basis[0][j];
  CHECK((m * n).is_zero());
}

TEST_CASE("nullity plus modular rank equals column count") {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 20; ++iter) {
    std::uniform_int_distribution<int> dim(1, 5);
    const auto rows = static_cast<std::size_t>(dim(rng));
    const auto cols = static_cast<std::size_t>(dim(rng));
    Mat m(rows, cols);
    std::bernoulli_distribution sparse(0.5);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (sparse(rng)) m(i, j) = random_ratfunc(rng, kTZ, 2);
    if (iter % 3 == 0 && rows > 1) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * P("t + z");
    }
    const auto basis = nullspace_fraction_free(m);
    for (const auto& v : basis) {
      Mat col(cols, 1);
      for (std::size_t j = 0; j < cols; ++j) col(j, 0) = v[j];
      CHECK((m * col).is_zero());
    }
    for (std::uint64_t c = 0; c < 5; ++c) {
      CHECK(basis.size() + rank_mod_p(evaluate_mod_p(m, PrimePoint::draw(10, c))) == cols);
    }
    CHECK(rank_exact(m) + basis.size() == cols);
  }
}

TEST_CASE("tensor helpers") {
  const Mat p = swap_matrix(2, 3);
  CHECK(p.transpose() * p == Mat::identity(6));
  Mat a(2, 2);
  a(0, 1) = P("t");
  Mat b(3, 3);
  b(2, 0) = P("z");
  CHECK(p * kron(a, b) * p.transpose() == kron(b, a));
  // embed on sites {1, 0} of a (2,3) space equals the flipped Kronecker product
  CHECK(embed(kron(b, a), {1, 0}, {2, 3}) == kron(a, b));
  CHECK(partial_trace_first(kron(Mat::identity(2), b), 2) == b.scaled(RatFunc(2)));
}

TEST_CASE("simd kernels match the scalar reference") {
  const auto& ref = simd::scalar_kernels();
  std::vector<const simd::ModpKernels*> variants = {&ref};
  if (simd::avx2_kernels() != nullptr) variants.push_back(simd::avx2_kernels());
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::uint64_t> dist(0, modp::kPrime - 1);
  for (std::size_t n : {0U, 1U, 3U, 4U, 7U, 64U, 1001U}) {
    std::vector<std::uint64_t> a(n);
    std::vector<std::uint64_t> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = dist(rng);
      b[i] = dist(rng);
    }
    if (n > 2) {
      a[0] = modp::kPrime - 1;
      b[0] = modp::kPrime - 1;
      a[1] = 0;
    }
    std::vector<std::uint64_t> expect_mul(n);
    for (std::size_t i = 0; i < n; ++i) expect_mul[i] = modp::mul(a[i], b[i]);
    for (const auto* k : variants) {
      CAPTURE(k->name);
      std::vector<std::uint64_t> out(n);
      k->mul(a.data(), b.data(), out.data(), n);
      CHECK(out == expect_mul);
      std::vector<std::uint64_t> y = b;
      std::vector<std::uint64_t> y_ref = b;
      k->axpy(modp::kPrime - 2, a.data(), y.data(), n);
      ref.axpy(modp::kPrime - 2, a.data(), y_ref.data(), n);
      CHECK(y == y_ref);
      CHECK(k->dot(a.data(), b.data(), n) == ref.dot(a.data(), b.data(), n));
    }
  }
}
