#include "qaffine/qalgebra/qnumbers.hpp"

#include "qaffine/error.hpp"

namespace qaffine {

RatFunc q_int(int n, const RatFunc& b) {
  if (n < 0) return -q_int(-n, b);
  // Sum b^(n-1-2k), k = 0..n-1.
  RatFunc s;
  for (int k = 0; k < n; ++k) s += b.pow(n - 1 - 2 * k);
  return s;
}

RatFunc q_factorial(int n, const RatFunc& b) {
  if (n < 0) throw Error("bad-args", "q-factorial of a negative integer");
  RatFunc f(1);
  for (int k = 2; k <= n; ++k) f *= q_int(k, b);
  return f;
}

RatFunc q_binomial(int m, int n, const RatFunc& b) {
  if (n < 0 || n > m) throw Error("bad-args", "q-binomial needs 0 <= n <= m");
  return q_factorial(m, b) / (q_factorial(n, b) * q_factorial(m - n, b));
}

RatFunc q_param(int d) { return RatFunc::var("t", 2 * d); }

}  // namespace qaffine
