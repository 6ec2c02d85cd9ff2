#pragma once

#include <string_view>

#include "qaffine/scalars/laurent.hpp"

namespace qaffine {

// Exact rational function num/den of Laurent polynomials.
//
// Canonical form: gcd(num, den) = 1 in Z[x, x^-1] (integer content included),
// den has minimum exponent zero in every variable and a positive leading
// coefficient. Zero is 0/1. Two values are equal iff their fields are equal.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT: implicit integer constants
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RatFunc(LaurentPoly num, LaurentPoly den);
  static RatFunc rational(long p, long q) { return {LaurentPoly(p), LaurentPoly(q)}; }
  static RatFunc var(std::string_view name, int power = 1) { return LaurentPoly::variable(name, power); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  // Throws Error("zero-divisor") when b is zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc inverse() const;
  RatFunc pow(int n) const;

  // Replaces a variable by a rational function.
  RatFunc substitute(int var, const RatFunc& value) const;
  RatFunc substitute(std::string_view var, const RatFunc& value) const;
  // Formal partial derivative; z^k -> k z^(k-1) for every integer k.
  RatFunc derivative(int var) const;
  RatFunc derivative(std::string_view var) const;

  bool uses_var(int var) const { return num_.uses_var(var) || den_.uses_var(var); }
  // Total degree of num plus total degree of den (after monomial shifts).
  int degree_bound() const { return num_.total_degree_span() + den_.total_degree_span(); }

 private:
  struct Canonical {};
  RatFunc(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

// Substitutes var -> value in a polynomial; the result is rational when value is.
RatFunc substitute(const LaurentPoly& p, int var, const RatFunc& value);

}  // namespace qaffine
