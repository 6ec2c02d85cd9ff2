#pragma once

#include <random>

#include "qaffine/scalars/ratfunc.hpp"

namespace qaffine::testing {

// Small random Laurent polynomial in the given variables.
inline LaurentPoly random_poly(std::mt19937_64& rng, const std::vector<int>& vars, int max_terms = 4,
                               int max_exp = 2, int max_coeff = 5) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> ex(-max_exp, max_exp);
  std::uniform_int_distribution<int> co(-max_coeff, max_coeff);
  std::vector<Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Term t;
    for (int v : vars) t.exp[static_cast<std::size_t>(v)] = static_cast<std::int16_t>(ex(rng));
    int c = co(rng);
    t.coeff = c == 0 ? 1 : c;
    terms.push_back(t);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

inline LaurentPoly random_nonzero_poly(std::mt19937_64& rng, const std::vector<int>& vars, int max_terms = 4) {
  while (true) {
    LaurentPoly p = random_poly(rng, vars, max_terms);
    if (!p.is_zero()) return p;
  }
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, const std::vector<int>& vars, int max_terms = 3) {
  return RatFunc(random_poly(rng, vars, max_terms), random_nonzero_poly(rng, vars, max_terms));
}

}  // namespace qaffine::testing
