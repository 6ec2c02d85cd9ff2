#include "qaffine/scalars/laurent.hpp"

#include <algorithm>

#include "qaffine/error.hpp"

namespace qaffine {

namespace {

constexpr Exponents kZeroExp{};

bool exp_greater(const Term& a, const Term& b) { return a.exp > b.exp; }

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp > b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp > a[i].exp) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      mpz_class c = subtract ? mpz_class(a[i].coeff - b[j].coeff) : mpz_class(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t k = 0; k < kMaxVars; ++k) r[k] = static_cast<std::int16_t>(a[k] + b[k]);
  return r;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t k = 0; k < kMaxVars; ++k) r[k] = static_cast<std::int16_t>(a[k] - b[k]);
  return r;
}

// ---- univariate view: coefficients indexed by the degree in one variable ----

using UPoly = std::vector<LaurentPoly>;

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int degree(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

UPoly to_univariate(const LaurentPoly& p, int x) {
  UPoly u;
  std::vector<std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    const int d = t.exp[static_cast<std::size_t>(x)];
    if (d < 0) throw Error("internal", "to_univariate on negative exponent");
    if (static_cast<std::size_t>(d) >= buckets.size()) buckets.resize(static_cast<std::size_t>(d) + 1);
    Term s = t;
    s.exp[static_cast<std::size_t>(x)] = 0;
    buckets[static_cast<std::size_t>(d)].push_back(std::move(s));
  }
  u.reserve(buckets.size());
  for (auto& b : buckets) u.push_back(LaurentPoly::from_terms(std::move(b)));
  return u;
}

LaurentPoly from_univariate(const UPoly& u, int x) {
  std::vector<Term> terms;
  for (std::size_t d = 0; d < u.size(); ++d) {
    for (const auto& t : u[d].terms()) {
      Term s = t;
      s.exp[static_cast<std::size_t>(x)] = static_cast<std::int16_t>(s.exp[static_cast<std::size_t>(x)] + d);
      terms.push_back(std::move(s));
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal", "expected exact division failed");
  return *std::move(q);
}

// Pseudo-remainder of A by B (deg A >= deg B).
UPoly prem(UPoly r, const UPoly& b) {
  const int db = degree(b);
  const LaurentPoly& lb = b.back();
  int e = degree(r) - db + 1;
  while (!r.empty() && degree(r) >= db) {
    const LaurentPoly lr = r.back();
    const int s = degree(r) - db;
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(j + s)] -= lr * b[static_cast<std::size_t>(j)];
    trim(r);
    --e;
  }
  if (e > 0) {
    const LaurentPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : r) c *= f;
  }
  return r;
}

LaurentPoly gcd_impl(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_of(const UPoly& u) {
  LaurentPoly g;
  for (const auto& c : u) {
    g = gcd_impl(g, c);
    if (g.is_one()) break;
  }
  return g;
}

UPoly primitive_part(const UPoly& u) {
  const LaurentPoly c = content_of(u);
  if (c.is_one()) return u;
  UPoly out;
  out.reserve(u.size());
  for (const auto& x : u) out.push_back(exact(x, c));
  return out;
}

// Subresultant PRS; both inputs primitive with deg a >= deg b >= 1.
UPoly subresultant_gcd(UPoly a, UPoly b) {
  LaurentPoly g(1);
  LaurentPoly h(1);
  while (true) {
    const int delta = degree(a) - degree(b);
    UPoly r = prem(a, b);
    if (r.empty()) return primitive_part(b);
    if (degree(r) == 0) return UPoly{LaurentPoly(1)};
    a = std::move(b);
    const LaurentPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = exact(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

int lowest_var(const LaurentPoly& a, const LaurentPoly& b) {
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if (a.uses_var(static_cast<int>(k)) || b.uses_var(static_cast<int>(k))) return static_cast<int>(k);
  }
  return -1;
}

LaurentPoly gcd_impl(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly(c);
  LaurentPoly pa = normalize_unit(a.divided_by_integer(a.content()));
  LaurentPoly pb = normalize_unit(b.divided_by_integer(b.content()));
  if (pa == pb) return pa.scaled(c);
  const int x = lowest_var(pa, pb);
  if (x < 0) return LaurentPoly(c);
  if (!pa.uses_var(x)) std::swap(pa, pb);
  if (!pb.uses_var(x)) {
    const LaurentPoly ca = content_of(to_univariate(pa, x));
    return gcd_impl(ca, pb).scaled(c);
  }
  UPoly ua = to_univariate(pa, x);
  UPoly ub = to_univariate(pb, x);
  const LaurentPoly ca = content_of(ua);
  const LaurentPoly cb = content_of(ub);
  if (!ca.is_one()) {
    for (auto& v : ua) v = exact(v, ca);
  }
  if (!cb.is_one()) {
    for (auto& v : ub) v = exact(v, cb);
  }
  const LaurentPoly gc = gcd_impl(ca, cb);
  if (degree(ua) < degree(ub)) std::swap(ua, ub);
  const UPoly gp = subresultant_gcd(std::move(ua), std::move(ub));
  return normalize_unit((gc * from_univariate(gp, x)).scaled(c));
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back(Term{kZeroExp, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back(Term{kZeroExp, c});
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, const Exponents& e) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back(Term{e, c});
  return p;
}

LaurentPoly LaurentPoly::variable(std::string_view name, int power) {
  return variable(var_index(name), power);
}

LaurentPoly LaurentPoly::variable(int index, int power) {
  Exponents e{};
  e[static_cast<std::size_t>(index)] = static_cast<std::int16_t>(power);
  return monomial(1, e);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), exp_greater);
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == kZeroExp);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == kZeroExp && terms_[0].coeff == 1;
}

std::optional<mpz_class> LaurentPoly::constant_value() const {
  if (terms_.empty()) return mpz_class(0);
  if (is_constant()) return terms_[0].coeff;
  return std::nullopt;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) return a.shifted(b.terms_[0].exp).scaled(b.terms_[0].coeff);
  if (a.is_monomial()) return b.shifted(a.terms_[0].exp).scaled(a.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back(Term{add_exp(x.exp, y.exp), x.coeff * y.coeff});
  }
  return LaurentPoly::from_terms(std::move(prod));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  if (c == 1) return *this;
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

LaurentPoly LaurentPoly::shifted(const Exponents& delta) const {
  if (delta == kZeroExp) return *this;
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp = add_exp(t.exp, delta);
  return p;
}

LaurentPoly LaurentPoly::divided_by_integer(const mpz_class& c) const {
  if (c == 1) return *this;
  LaurentPoly p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return p;
}

Exponents LaurentPoly::min_exponents() const {
  if (terms_.empty()) return kZeroExp;
  Exponents m = terms_[0].exp;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < kMaxVars; ++k) m[k] = std::min(m[k], t.exp[k]);
  }
  return m;
}

Exponents LaurentPoly::max_exponents() const {
  if (terms_.empty()) return kZeroExp;
  Exponents m = terms_[0].exp;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < kMaxVars; ++k) m[k] = std::max(m[k], t.exp[k]);
  }
  return m;
}

int LaurentPoly::total_degree_span() const {
  const Exponents lo = min_exponents();
  int best = 0;
  for (const auto& t : terms_) {
    int d = 0;
    for (std::size_t k = 0; k < kMaxVars; ++k) d += t.exp[k] - lo[k];
    best = std::max(best, d);
  }
  return best;
}

bool LaurentPoly::uses_var(int var) const {
  const auto k = static_cast<std::size_t>(var);
  return std::any_of(terms_.begin(), terms_.end(), [k](const Term& t) { return t.exp[k] != 0; });
}

int LaurentPoly::max_exponent(int var) const { return max_exponents()[static_cast<std::size_t>(var)]; }
int LaurentPoly::min_exponent(int var) const { return min_exponents()[static_cast<std::size_t>(var)]; }

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::derivative(int var) const {
  const auto k = static_cast<std::size_t>(var);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[k] == 0) continue;
    Term d = t;
    d.coeff *= t.exp[k];
    d.exp[k] = static_cast<std::int16_t>(t.exp[k] - 1);
    out.push_back(std::move(d));
  }
  return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error("zero-divisor", "polynomial division by zero");
  if (a.is_zero()) return LaurentPoly();
  const Term& lb = b.leading();
  if (b.is_monomial()) {
    std::vector<Term> q;
    q.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), lb.coeff.get_mpz_t())) return std::nullopt;
      q.push_back(Term{sub_exp(t.exp, lb.exp), t.coeff / lb.coeff});
    }
    return LaurentPoly::from_terms(std::move(q));
  }
  // Every quotient monomial must lie in the box [amin - bmin, amax - bmax].
  const Exponents amin = a.min_exponents();
  const Exponents amax = a.max_exponents();
  const Exponents bmin = b.min_exponents();
  const Exponents bmax = b.max_exponents();
  const Exponents qmin = sub_exp(amin, bmin);
  const Exponents qmax = sub_exp(amax, bmax);
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if (qmin[k] > qmax[k]) return std::nullopt;
  }
  std::vector<Term> q;
  LaurentPoly r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    const Exponents e = sub_exp(lr.exp, lb.exp);
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      if (e[k] < qmin[k] || e[k] > qmax[k]) return std::nullopt;
    }
    if (!mpz_divisible_p(lr.coeff.get_mpz_t(), lb.coeff.get_mpz_t())) return std::nullopt;
    mpz_class c = lr.coeff / lb.coeff;
    r -= b.shifted(e).scaled(c);
    q.push_back(Term{e, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(q));
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) { return gcd_impl(a, b); }

LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Exponents lo = p.min_exponents();
  for (auto& v : lo) v = static_cast<std::int16_t>(-v);
  LaurentPoly q = p.shifted(lo);
  if (q.leading().coeff < 0) q = -q;
  return q;
}

}  // namespace qaffine
