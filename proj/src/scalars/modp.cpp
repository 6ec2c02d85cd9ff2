#include "qaffine/scalars/modp.hpp"

#include <random>

#include "qaffine/error.hpp"

namespace qaffine::modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1U) r = mul(r, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw Error("zero-divisor", "inverse of 0 mod p");
  return pow(a, kPrime - 2);
}

std::uint64_t from_signed(long v) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % kPrime;
  const std::uint64_t magnitude = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return neg(magnitude % kPrime);
}

std::uint64_t from_mpz(const mpz_class& v) {
  return mpz_fdiv_ui(v.get_mpz_t(), kPrime);
}

}  // namespace qaffine::modp

namespace qaffine {

PrimePoint PrimePoint::draw(std::uint64_t seed, std::uint64_t counter) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint64_t> dist(1, modp::kPrime - 1);
  PrimePoint pt;
  pt.seed = seed;
  pt.counter = counter;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    pt.value[k] = dist(rng);
    pt.inverse[k] = modp::inv(pt.value[k]);
  }
  return pt;
}

void PrimePoint::set(int var, std::uint64_t residue) {
  if (residue == 0) throw Error("bad-point", "variables must take nonzero residues");
  value[static_cast<std::size_t>(var)] = residue;
  inverse[static_cast<std::size_t>(var)] = modp::inv(residue);
}

std::uint64_t evaluate_mod_p(const LaurentPoly& p, const PrimePoint& pt) {
  std::uint64_t acc = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t m = modp::from_mpz(t.coeff);
    for (std::size_t k = 0; k < kMaxVars && m != 0; ++k) {
      const int e = t.exp[k];
      if (e > 0) m = modp::mul(m, modp::pow(pt.value[k], static_cast<std::uint64_t>(e)));
      if (e < 0) m = modp::mul(m, modp::pow(pt.inverse[k], static_cast<std::uint64_t>(-e)));
    }
    acc = modp::add(acc, m);
  }
  return acc;
}

std::uint64_t evaluate_mod_p(const RatFunc& r, const PrimePoint& pt) {
  const std::uint64_t n = evaluate_mod_p(r.num(), pt);
  if (r.is_polynomial()) return n;
  const std::uint64_t d = evaluate_mod_p(r.den(), pt);
  if (d == 0) throw Error("bad-point", "denominator vanishes at the sampled point");
  return modp::mul(n, modp::inv(d));
}

}  // namespace qaffine
