#pragma once

#include <gmpxx.h>

#include <optional>
#include <string_view>
#include <vector>

#include "qaffine/scalars/vars.hpp"

namespace qaffine {

struct Term {
  Exponents exp{};
  mpz_class coeff;
};

// Sparse multivariate Laurent polynomial over Z.
//
// Terms are kept sorted by exponent vector in strictly decreasing
// lexicographic order (variable order from VarTable) with no zero
// coefficients, so equal polynomials have identical term lists.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: implicit integer constants are convenient
  explicit LaurentPoly(const mpz_class& c);

  static LaurentPoly monomial(const mpz_class& c, const Exponents& e);
  static LaurentPoly variable(std::string_view name, int power = 1);
  static LaurentPoly variable(int index, int power = 1);
  // Sorts and merges arbitrary terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  // Value of the constant term if the polynomial is a constant.
  std::optional<mpz_class> constant_value() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const mpz_class& c) const;
  // Multiplies by the monomial x^delta.
  LaurentPoly shifted(const Exponents& delta) const;
  // Divides every coefficient by c; c must divide all of them.
  LaurentPoly divided_by_integer(const mpz_class& c) const;

  Exponents min_exponents() const;
  Exponents max_exponents() const;
  // Total degree after multiplying by the monomial that makes every exponent
  // nonnegative with minimum zero.
  int total_degree_span() const;
  bool uses_var(int var) const;
  int max_exponent(int var) const;
  int min_exponent(int var) const;

  // Positive gcd of all coefficients (0 for the zero polynomial).
  mpz_class content() const;

  LaurentPoly derivative(int var) const;
  LaurentPoly pow(unsigned n) const;

 private:
  std::vector<Term> terms_;
};

// a / b when b divides a in the Laurent ring Z[x, x^-1]; nullopt otherwise.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Greatest common divisor in Z[x, x^-1], normalized so the leading coefficient
// is positive and every variable has minimum exponent zero. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Removes the monomial unit and sign: minimum exponents zero, leading
// coefficient positive.
LaurentPoly normalize_unit(const LaurentPoly& p);

}  // namespace qaffine
