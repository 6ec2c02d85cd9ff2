#include "qaffine/scalars/format.hpp"

#include <cctype>

#include "qaffine/error.hpp"

namespace qaffine {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      const char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error("parse-error", why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  int signed_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    skip_ws();
    const mpz_class v = integer();
    if (!v.fits_sint_p() || std::abs(v.get_si()) > 30000) fail("exponent out of range");
    return neg ? -static_cast<int>(v.get_si()) : static_cast<int>(v.get_si());
  }

  void factor(Term& t) {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coeff *= integer();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const int v = VarTable::global().intern(s_.substr(start, pos_ - start));
      skip_ws();
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = signed_int();
      }
      auto& slot = t.exp[static_cast<std::size_t>(v)];
      slot = static_cast<std::int16_t>(slot + e);
      return;
    }
    fail("expected coefficient or variable");
  }

  Term term(bool negative) {
    Term t;
    t.coeff = negative ? -1 : 1;
    factor(t);
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      factor(t);
    }
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Index of the ')' matching the '(' at position open, or npos.
std::size_t matching_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  return std::string_view::npos;
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const auto& vars = VarTable::global();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = t.coeff < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    out += mpz_class(abs(t.coeff)).get_str();
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      if (t.exp[k] == 0) continue;
      out += "*" + vars.name(static_cast<int>(k)) + "^" + std::to_string(t.exp[k]);
    }
  }
  return out;
}

LaurentPoly parse_poly(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error("parse-error", "empty polynomial string");
  return PolyParser(text).parse();
}

std::string to_string(const RatFunc& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

RatFunc parse_ratfunc(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    const std::size_t close = matching_paren(text, 0);
    if (close == std::string_view::npos) throw Error("parse-error", "unbalanced parenthesis in \"" + std::string(text) + "\"");
    const LaurentPoly num = parse_poly(text.substr(1, close - 1));
    std::string_view rest = trim(text.substr(close + 1));
    if (rest.empty()) return RatFunc(num);
    if (rest.front() != '/') throw Error("parse-error", "expected '/' in \"" + std::string(text) + "\"");
    rest = trim(rest.substr(1));
    if (!rest.empty() && rest.front() == '(') {
      const std::size_t c2 = matching_paren(rest, 0);
      if (c2 != rest.size() - 1) throw Error("parse-error", "malformed denominator in \"" + std::string(text) + "\"");
      rest = rest.substr(1, rest.size() - 2);
    }
    const LaurentPoly den = parse_poly(rest);
    if (den.is_zero()) throw Error("zero-divisor", "zero denominator in \"" + std::string(text) + "\"");
    return RatFunc(num, den);
  }
  const std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    const LaurentPoly den = parse_poly(text.substr(slash + 1));
    if (den.is_zero()) throw Error("zero-divisor", "zero denominator in \"" + std::string(text) + "\"");
    return RatFunc(parse_poly(text.substr(0, slash)), den);
  }
  return RatFunc(parse_poly(text));
}

}  // namespace qaffine
