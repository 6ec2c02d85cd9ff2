#include "qaffine/scalars/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qaffine {

namespace {

using PolyRow = std::vector<LaurentPoly>;

LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  const LaurentPoly g = gcd(a, b);
  return *divide_exact(a, g) * b;
}

// Multiplies a row of rational functions by the lcm of its denominators and
// removes the polynomial gcd of the resulting entries.
PolyRow clear_row(const Mat& m, std::size_t i) {
  LaurentPoly l(1);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!m(i, j).is_zero()) l = lcm(l, m(i, j).den());
  }
  PolyRow row(m.cols());
  LaurentPoly g;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const RatFunc& v = m(i, j);
    if (v.is_zero()) continue;
    row[j] = v.num() * *divide_exact(l, v.den());
    g = gcd(g, row[j]);
  }
  if (!g.is_zero() && !g.is_one()) {
    for (auto& e : row) {
      if (!e.is_zero()) e = *divide_exact(e, g);
    }
  }
  return row;
}

bool row_is_zero(const PolyRow& r) {
  return std::all_of(r.begin(), r.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

struct Echelon {
  std::vector<PolyRow> rows;
  std::vector<std::size_t> pivots;
};

Echelon bareiss(std::vector<PolyRow> a, std::size_t cols) {
  Echelon out;
  LaurentPoly prev(1);
  std::size_t r = 0;
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t best = n;
    for (std::size_t p = r; p < n; ++p) {
      if (a[p][c].is_zero()) continue;
      if (best == n || a[p][c].size() < a[best][c].size()) best = p;
    }
    if (best == n) continue;
    std::swap(a[r], a[best]);
    const LaurentPoly& piv = a[r][c];
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        LaurentPoly v = piv * a[i][j];
        if (!a[i][c].is_zero() && !a[r][j].is_zero()) v -= a[i][c] * a[r][j];
        if (!prev.is_one() && !v.is_zero()) {
          auto q = divide_exact(v, prev);
          if (!q) throw Error("internal", "Bareiss step was not exact");
          v = *std::move(q);
        }
        a[i][j] = std::move(v);
      }
      a[i][c] = LaurentPoly();
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::vector<PolyRow> prepared_rows(const Mat& m) {
  std::vector<PolyRow> rows;
  std::set<std::vector<std::string>> seen;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    PolyRow r = clear_row(m, i);
    if (row_is_zero(r)) continue;
    // Normalize sign/unit so identical equations collapse.
    std::size_t first = 0;
    while (r[first].is_zero()) ++first;
    if (r[first].leading().coeff < 0) {
      for (auto& e : r) e = -e;
    }
    Exponents lo = r[first].min_exponents();
    for (auto& v : lo) v = static_cast<std::int16_t>(-v);
    for (auto& e : r) e = e.shifted(lo);
    std::vector<std::string> key;
    key.reserve(r.size());
    for (const auto& e : r) {
      std::string k;
      for (const auto& t : e.terms()) {
        k += t.coeff.get_str();
        for (auto x : t.exp) k += "," + std::to_string(x);
        k += ";";
      }
      key.push_back(std::move(k));
    }
    if (seen.insert(std::move(key)).second) rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::vector<Vec> nullspace_fraction_free(const Mat& m) {
  if (m.cols() == 0) return {};
  const Echelon e = bareiss(prepared_rows(m), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x(m.cols());
    x[f] = RatFunc(1);
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const std::size_t c = e.pivots[k];
      RatFunc s;
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        if (!e.rows[k][j].is_zero() && !x[j].is_zero()) s += RatFunc(e.rows[k][j]) * x[j];
      }
      x[c] = s.is_zero() ? RatFunc() : -s / RatFunc(e.rows[k][c]);
    }
    std::size_t first = 0;
    while (x[first].is_zero()) ++first;
    const RatFunc lead = x[first];
    for (auto& v : x) {
      if (!v.is_zero()) v /= lead;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank_exact(const Mat& m) {
  if (m.cols() == 0) return 0;
  return bareiss(prepared_rows(m), m.cols()).pivots.size();
}

RatFunc clear_denominators(std::vector<RatFunc>& entries) {
  LaurentPoly l(1);
  for (const auto& v : entries) {
    if (!v.is_zero()) l = lcm(l, v.den());
  }
  std::vector<LaurentPoly> nums(entries.size());
  LaurentPoly g;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].is_zero()) continue;
    nums[k] = entries[k].num() * *divide_exact(l, entries[k].den());
    g = gcd(g, nums[k]);
  }
  if (g.is_zero()) return RatFunc(1);
  Exponents lo{};
  bool first = true;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (nums[k].is_zero()) continue;
    nums[k] = *divide_exact(nums[k], g);
    const Exponents e = nums[k].min_exponents();
    for (std::size_t v = 0; v < kMaxVars; ++v) lo[v] = first ? e[v] : std::min(lo[v], e[v]);
    first = false;
  }
  for (auto& v : lo) v = static_cast<std::int16_t>(-v);
  int sign = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (nums[k].is_zero()) continue;
    nums[k] = nums[k].shifted(lo);
    if (sign == 0) sign = nums[k].leading().coeff > 0 ? 1 : -1;
    if (sign < 0) nums[k] = -nums[k];
    entries[k] = RatFunc(nums[k]);
  }
  return RatFunc(LaurentPoly::monomial(sign, lo) * l, g);
}

int degree_bound(const Mat& m) {
  int d = 0;
  for (const auto& v : m.data()) d = std::max(d, v.degree_bound());
  return d;
}

IdentityCheck identity_check_sz(const Mat& a, const Mat& b, int trials, std::uint64_t seed) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("bad-composition", "identity check shape mismatch");
  if (trials < 1) throw Error("bad-args", "identity check needs at least one trial");
  IdentityCheck out;
  out.trials = trials;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    out.degree_bound = std::max(out.degree_bound, a.data()[k].degree_bound() + b.data()[k].degree_bound());
  }
  const int max_draws = 100 * trials;
  int done = 0;
  std::uint64_t counter = 0;
  while (done < trials) {
    if (out.points_drawn >= max_draws) throw Error("point-exhaustion", "too many sample points hit a pole");
    const PrimePoint pt = PrimePoint::draw(seed, counter++);
    ++out.points_drawn;
    ModMatrix ea;
    ModMatrix eb;
    try {
      ea = evaluate_mod_p(a, pt);
      eb = evaluate_mod_p(b, pt);
    } catch (const Error& e) {
      if (e.code() == "bad-point") continue;
      throw;
    }
    ++done;
    for (std::size_t i = 0; i < ea.rows(); ++i) {
      for (std::size_t j = 0; j < ea.cols(); ++j) {
        if (ea(i, j) != eb(i, j)) {
          out.equal = false;
          out.witness = pt;
          out.row = i;
          out.col = j;
          out.failure_bound = 0.0;
          return out;
        }
      }
    }
  }
  out.failure_bound = std::pow(static_cast<double>(out.degree_bound) / static_cast<double>(modp::kPrime), trials);
  return out;
}

}  // namespace qaffine
