#pragma once

#include "qaffine/scalars/ratfunc.hpp"

namespace qaffine {

// [n]_b = (b^n - b^-n) / (b - b^-1), any integer n.
RatFunc q_int(int n, const RatFunc& b);
// [n]_b! for n >= 0; Error("bad-args") otherwise.
RatFunc q_factorial(int n, const RatFunc& b);
// Gaussian binomial [m choose n]_b for 0 <= n <= m; Error("bad-args") otherwise.
RatFunc q_binomial(int m, int n, const RatFunc& b);

// q = t^2 and q_i = q^(d_i).
RatFunc q_param(int d = 1);

}  // namespace qaffine
