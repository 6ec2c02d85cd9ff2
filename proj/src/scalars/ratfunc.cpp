#include "qaffine/scalars/ratfunc.hpp"

#include <map>

#include "qaffine/error.hpp"

namespace qaffine {

namespace {

Exponents negated(Exponents e) {
  for (auto& v : e) v = static_cast<std::int16_t>(-v);
  return e;
}

// Rational function given as c * x^e with c = num/den integers.
bool as_signed_monomial(const RatFunc& r, Exponents& e, int& sign) {
  if (!r.num().is_monomial() || !r.den().is_one()) return false;
  const Term& t = r.num().leading();
  if (t.coeff != 1 && t.coeff != -1) return false;
  e = t.exp;
  sign = t.coeff > 0 ? 1 : -1;
  return true;
}

}  // namespace

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void RatFunc::canonicalize() {
  if (den_.is_zero()) throw Error("zero-divisor", "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    const Term t = den_.leading();
    num_ = num_.shifted(negated(t.exp));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), t.coeff.get_mpz_t());
    mpz_class d = t.coeff / g;
    num_ = num_.divided_by_integer(g);
    if (d < 0) {
      d = -d;
      num_ = -num_;
    }
    den_ = LaurentPoly(d);
    return;
  }
  const LaurentPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  const Exponents lo = den_.min_exponents();
  const Exponents shift = negated(lo);
  num_ = num_.shifted(shift);
  den_ = den_.shifted(shift);
  if (den_.leading().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_, LaurentPoly(1), RatFunc::Canonical{});
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (a.is_polynomial()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_);
  if (b.is_polynomial()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_);
  const LaurentPoly g = gcd(a.den_, b.den_);
  const LaurentPoly ad = *divide_exact(a.den_, g);
  const LaurentPoly bd = *divide_exact(b.den_, g);
  return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, LaurentPoly(1), RatFunc::Canonical{});
  // Cross-cancel so the product of canonical factors needs no further gcd.
  const LaurentPoly g1 = gcd(a.num_, b.den_);
  const LaurentPoly g2 = gcd(b.num_, a.den_);
  const LaurentPoly an = g1.is_one() ? a.num_ : *divide_exact(a.num_, g1);
  const LaurentPoly bd = g1.is_one() ? b.den_ : *divide_exact(b.den_, g1);
  const LaurentPoly bn = g2.is_one() ? b.num_ : *divide_exact(b.num_, g2);
  const LaurentPoly ad = g2.is_one() ? a.den_ : *divide_exact(a.den_, g2);
  return RatFunc(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error("zero-divisor", "division by the zero rational function");
  return a * b.inverse();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error("zero-divisor", "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc result(1);
  RatFunc base = *this;
  auto k = static_cast<unsigned>(n);
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

RatFunc substitute(const LaurentPoly& p, int var, const RatFunc& value) {
  const auto k = static_cast<std::size_t>(var);
  if (!p.uses_var(var)) return RatFunc(p);
  Exponents mono{};
  int sign = 1;
  if (as_signed_monomial(value, mono, sign)) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Term s = t;
      const int e = t.exp[k];
      s.exp[k] = 0;
      for (std::size_t j = 0; j < kMaxVars; ++j) s.exp[j] = static_cast<std::int16_t>(s.exp[j] + e * mono[j]);
      if (sign < 0 && (e % 2 != 0)) s.coeff = -s.coeff;
      out.push_back(std::move(s));
    }
    return RatFunc(LaurentPoly::from_terms(std::move(out)));
  }
  // Group terms by exponent of var, then combine with cached powers.
  std::map<int, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    Term s = t;
    s.exp[k] = 0;
    groups[t.exp[k]].push_back(std::move(s));
  }
  RatFunc result;
  for (auto& [e, terms] : groups) {
    result += RatFunc(LaurentPoly::from_terms(std::move(terms))) * value.pow(e);
  }
  return result;
}

RatFunc RatFunc::substitute(int var, const RatFunc& value) const {
  if (!uses_var(var)) return *this;
  const RatFunc n = qaffine::substitute(num_, var, value);
  if (den_.is_one()) return n;
  return n / qaffine::substitute(den_, var, value);
}

RatFunc RatFunc::substitute(std::string_view var, const RatFunc& value) const {
  return substitute(var_index(var), value);
}

RatFunc RatFunc::derivative(int var) const {
  if (den_.is_one()) return RatFunc(num_.derivative(var));
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::derivative(std::string_view var) const { return derivative(var_index(var)); }

}  // namespace qaffine
