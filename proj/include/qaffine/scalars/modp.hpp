#pragma once

#include <array>
#include <cstdint>

#include "qaffine/scalars/ratfunc.hpp"

namespace qaffine::modp {

// Mersenne prime 2^61 - 1; residues are kept in [0, p).
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t reduce(unsigned __int128 x) {
  const std::uint64_t lo = static_cast<std::uint64_t>(x) & kPrime;
  const std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t s = lo + hi;
  s = (s & kPrime) + (s >> 61);
  return s >= kPrime ? s - kPrime : s;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return reduce(static_cast<unsigned __int128>(a) * b);
}

inline std::uint64_t neg(std::uint64_t a) { return a == 0 ? 0 : kPrime - a; }

std::uint64_t pow(std::uint64_t base, std::uint64_t e);
// Throws Error("zero-divisor") for 0.
std::uint64_t inv(std::uint64_t a);
std::uint64_t from_signed(long v);
std::uint64_t from_mpz(const mpz_class& v);

}  // namespace qaffine::modp

namespace qaffine {

// Assignment of a nonzero residue mod 2^61-1 to every variable slot.
struct PrimePoint {
  std::uint64_t seed = 0;
  std::uint64_t counter = 0;
  std::array<std::uint64_t, kMaxVars> value{};
  std::array<std::uint64_t, kMaxVars> inverse{};

  // Deterministic draw: the residues depend only on (seed, counter).
  static PrimePoint draw(std::uint64_t seed, std::uint64_t counter);
  void set(int var, std::uint64_t residue);
  std::uint64_t operator[](int var) const { return value[static_cast<std::size_t>(var)]; }
};

std::uint64_t evaluate_mod_p(const LaurentPoly& p, const PrimePoint& pt);
// num(pt) / den(pt); throws Error("bad-point") when den(pt) = 0 mod p.
std::uint64_t evaluate_mod_p(const RatFunc& r, const PrimePoint& pt);

}  // namespace qaffine
