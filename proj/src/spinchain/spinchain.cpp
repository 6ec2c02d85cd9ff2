#include "qaffine/spinchain/spinchain.hpp"

#include <random>

#include "qaffine/error.hpp"

namespace qaffine {

namespace {

bool trigonometric(const RMatrix& r) { return r.flavor != "rational"; }

RatFunc argument(const RMatrix& r, const RatFunc& x, const RatFunc& zeta) {
  return trigonometric(r) ? x / zeta : x - zeta;
}

RatFunc regular_point(const RMatrix& r) { return trigonometric(r) ? RatFunc(1) : RatFunc(); }

std::vector<std::uint64_t> random_vector(std::size_t n, std::uint64_t seed, std::uint64_t counter) {
  std::seed_seq seq{seed, counter, std::uint64_t{0x5eed}};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint64_t> dist(0, modp::kPrime - 1);
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

std::size_t power(std::size_t base, int n) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= base;
  return p;
}

void materialize(TransferObjects& c) {
  std::vector<std::size_t> dims(static_cast<std::size_t>(c.n) + 1, c.site_dim());
  dims[0] = c.aux_dim();
  Mat t = Mat::identity(c.aux_dim() * c.quantum_dim());
  for (int i = 1; i <= c.n; ++i) t = t * embed(c.site_matrix(i), {0, static_cast<std::size_t>(i)}, dims);
  c.transfer = partial_trace_first(t, c.aux_dim());
  c.monodromy = std::move(t);
}

// Runs `body` at `trials` admissible points; points hitting a pole are redrawn.
template <class F>
void for_points(int trials, std::uint64_t seed, F&& body) {
  int done = 0;
  int drawn = 0;
  std::uint64_t counter = 0;
  while (done < trials) {
    if (drawn >= 100 * trials) throw Error("point-exhaustion", "too many sample points hit a pole");
    const PrimePoint pt = PrimePoint::draw(seed, counter++);
    ++drawn;
    try {
      if (!body(pt)) return;
    } catch (const Error& e) {
      if (e.code() == "bad-point") continue;
      throw;
    }
    ++done;
  }
}

}  // namespace

std::size_t TransferObjects::quantum_dim() const { return power(site_dim(), n); }

Mat TransferObjects::site_matrix(int i) const {
  const RatFunc arg = argument(r, spectral, inhomogeneities.at(static_cast<std::size_t>(i - 1)));
  const Mat p = r.plain();
  if (arg == RatFunc::var(r.var)) return p;
  return substitute(p, r.var, arg);
}

TransferObjects make_chain(const RMatrix& r, int n, std::vector<RatFunc> inhomogeneities,
                           std::optional<RatFunc> spectral) {
  if (n < 1) throw Error("bad-args", "chain needs at least one site");
  if (inhomogeneities.empty()) inhomogeneities.assign(static_cast<std::size_t>(n), regular_point(r));
  if (inhomogeneities.size() != static_cast<std::size_t>(n)) {
    throw Error("bad-args", "need one inhomogeneity per site");
  }
  TransferObjects c;
  c.r = r;
  c.n = n;
  c.inhomogeneities = std::move(inhomogeneities);
  c.spectral = spectral ? *spectral : RatFunc::var(r.var);
  return c;
}

TransferObjects build_monodromy(const RMatrix& r, int n, std::vector<RatFunc> inhomogeneities,
                                std::optional<RatFunc> spectral, std::size_t max_dim) {
  TransferObjects c = make_chain(r, n, std::move(inhomogeneities), std::move(spectral));
  const std::size_t dim = c.aux_dim() * c.quantum_dim();
  if (dim > max_dim) {
    throw Error("too-large", "monodromy of dimension " + std::to_string(dim) + " exceeds the exact cap " +
                                 std::to_string(max_dim) + "; use the mod-p mode");
  }
  materialize(c);
  return c;
}

TransferObjects with_spectral(const TransferObjects& chain, const RatFunc& spectral, bool materialize_now) {
  TransferObjects c = chain;
  c.spectral = spectral;
  c.monodromy.reset();
  c.transfer.reset();
  if (materialize_now) materialize(c);
  return c;
}

void apply_two_site(const ModMatrix& m, std::size_t p, std::size_t q, const std::vector<std::size_t>& dims,
                    std::vector<std::uint64_t>& v) {
  const std::size_t k = dims.size();
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t s = k; s-- > 1;) stride[s - 1] = stride[s] * dims[s];
  const std::size_t total = stride[0] * dims[0];
  const std::size_t dp = dims[p];
  const std::size_t dq = dims[q];
  if (m.rows() != dp * dq || v.size() != total) throw Error("bad-composition", "two-site operator shape mismatch");
  std::vector<std::uint64_t> x(dp * dq);
  for (std::size_t base = 0; base < total; ++base) {
    if ((base / stride[p]) % dp != 0 || (base / stride[q]) % dq != 0) continue;
    for (std::size_t i = 0; i < dp; ++i) {
      for (std::size_t j = 0; j < dq; ++j) x[i * dq + j] = v[base + i * stride[p] + j * stride[q]];
    }
    const auto y = m.apply(x);
    for (std::size_t i = 0; i < dp; ++i) {
      for (std::size_t j = 0; j < dq; ++j) v[base + i * stride[p] + j * stride[q]] = y[i * dq + j];
    }
  }
}

ModChain evaluate_chain_mod_p(const TransferObjects& chain, const PrimePoint& pt) {
  ModChain m;
  m.aux = chain.aux_dim();
  m.site = chain.site_dim();
  m.n = chain.n;
  for (int i = 1; i <= chain.n; ++i) m.r.push_back(evaluate_mod_p(chain.site_matrix(i), pt));
  return m;
}

std::vector<std::uint64_t> ModChain::apply_monodromy(std::vector<std::uint64_t> v) const {
  std::vector<std::size_t> dims(static_cast<std::size_t>(n) + 1, site);
  dims[0] = aux;
  for (int i = n; i >= 1; --i) apply_two_site(r[static_cast<std::size_t>(i - 1)], 0, static_cast<std::size_t>(i), dims, v);
  return v;
}

std::vector<std::uint64_t> ModChain::apply_transfer(const std::vector<std::uint64_t>& v) const {
  const std::size_t q = v.size();
  std::vector<std::uint64_t> out(q, 0);
  for (std::size_t a = 0; a < aux; ++a) {
    std::vector<std::uint64_t> w(aux * q, 0);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(a * q));
    w = apply_monodromy(std::move(w));
    for (std::size_t s = 0; s < q; ++s) out[s] = modp::add(out[s], w[a * q + s]);
  }
  return out;
}

Report verify_rtt(const TransferObjects& chain, const RatFunc& other, const RMatrix& r_aux, const VerifyMode& mode) {
  if (r_aux.d1() != chain.aux_dim() || r_aux.d2() != chain.aux_dim()) {
    throw Error("bad-composition", "auxiliary R-matrix does not act on W (x) W");
  }
  Report rep;
  rep.subject = "RTT relation, " + std::to_string(chain.n) + " sites";
  const std::size_t w = chain.aux_dim();
  const std::size_t q = chain.quantum_dim();
  const RatFunc arg = argument(r_aux, chain.spectral, other);
  const Mat raux = substitute(r_aux.plain(), r_aux.var, arg);

  if (mode.exact && chain.monodromy) {
    const TransferObjects second = with_spectral(chain, other, true);
    const std::vector<std::size_t> dims = {w, w, q};
    const Mat t1 = embed(*chain.monodromy, {0, 2}, dims);
    const Mat t2 = embed(*second.monodromy, {1, 2}, dims);
    const Mat r12 = embed(raux, {0, 1}, dims);
    const Mat diff = r12 * t1 * t2 - t2 * t1 * r12;
    rep.add("rtt exact", diff.is_zero(), std::to_string(diff.nonzeros()) + " nonzero entries");
    return rep;
  }

  const TransferObjects second = with_spectral(chain, other, false);
  std::vector<std::size_t> dims(static_cast<std::size_t>(chain.n) + 2, chain.site_dim());
  dims[0] = w;
  dims[1] = w;
  bool ok = true;
  std::uint64_t failing = 0;
  for_points(mode.trials, mode.seed, [&](const PrimePoint& pt) {
    const ModChain a = evaluate_chain_mod_p(chain, pt);
    const ModChain b = evaluate_chain_mod_p(second, pt);
    const ModMatrix rm = evaluate_mod_p(raux, pt);
    auto apply_t = [&](const ModChain& c, std::size_t aux_site, std::vector<std::uint64_t>& v) {
      for (int i = c.n; i >= 1; --i) {
        apply_two_site(c.r[static_cast<std::size_t>(i - 1)], aux_site, static_cast<std::size_t>(i + 1), dims, v);
      }
    };
    const auto v = random_vector(w * w * q, mode.seed, pt.counter);
    auto lhs = v;
    apply_t(b, 1, lhs);
    apply_t(a, 0, lhs);
    apply_two_site(rm, 0, 1, dims, lhs);
    auto rhs = v;
    apply_two_site(rm, 0, 1, dims, rhs);
    apply_t(a, 0, rhs);
    apply_t(b, 1, rhs);
    if (lhs != rhs) {
      ok = false;
      failing = pt.counter;
      return false;
    }
    return true;
  });
  rep.add("rtt modp", ok,
          ok ? std::to_string(mode.trials) + " random points and vectors"
             : "counterexample at sample " + std::to_string(failing));
  return rep;
}

Report verify_commuting(const TransferObjects& a, const TransferObjects& b, const VerifyMode& mode) {
  if (a.n != b.n || a.aux_dim() != b.aux_dim() || a.site_dim() != b.site_dim()) {
    throw Error("bad-composition", "transfer matrices act on different chains");
  }
  Report rep;
  rep.subject = "commuting transfer matrices, " + std::to_string(a.n) + " sites";
  if (mode.exact && a.transfer && b.transfer) {
    const Mat c = commutator(*a.transfer, *b.transfer);
    rep.add("[tau, tau'] exact", c.is_zero(), std::to_string(c.nonzeros()) + " nonzero entries");
    return rep;
  }
  bool ok = true;
  std::uint64_t failing = 0;
  for_points(mode.trials, mode.seed, [&](const PrimePoint& pt) {
    const ModChain ma = evaluate_chain_mod_p(a, pt);
    const ModChain mb = evaluate_chain_mod_p(b, pt);
    const auto v = random_vector(a.quantum_dim(), mode.seed, pt.counter);
    if (ma.apply_transfer(mb.apply_transfer(v)) != mb.apply_transfer(ma.apply_transfer(v))) {
      ok = false;
      failing = pt.counter;
      return false;
    }
    return true;
  });
  rep.add("[tau, tau'] modp", ok,
          ok ? std::to_string(mode.trials) + " random points and vectors"
             : "counterexample at sample " + std::to_string(failing));
  return rep;
}

Mat weighted_transfer(const Mat& monodromy, const Mat& a, std::size_t aux_dim) {
  const std::size_t q = monodromy.rows() / aux_dim;
  Mat out(q, q);
  for (std::size_t i = 0; i < aux_dim; ++i) {
    for (std::size_t j = 0; j < aux_dim; ++j) {
      if (a(j, i).is_zero()) continue;
      for (std::size_t r = 0; r < q; ++r) {
        for (std::size_t s = 0; s < q; ++s) {
          const RatFunc& v = monodromy(i * q + r, j * q + s);
          if (!v.is_zero()) out(r, s) += a(j, i) * v;
        }
      }
    }
  }
  return out;
}

Hamiltonian extract_hamiltonian(const RMatrix& r, int n, bool periodic, int trials, std::uint64_t seed) {
  if (r.rho1.name != r.rho2.name || r.d1() != r.d2()) {
    throw Error("bad-composition", "Hamiltonian needs identical auxiliary and quantum spaces");
  }
  if (n < 2) throw Error("bad-args", "Hamiltonian needs at least two sites");
  const RatFunc x0 = regular_point(r);
  if (r.r(0, 0).is_zero()) throw Error("non-regular-R", "check-R has a vanishing (0,0) entry");
  const Mat normalized = r.r.scaled(r.r(0, 0).inverse());
  try {
    if (!(substitute(normalized, r.var, x0) == Mat::identity(r.r.rows()))) {
      throw Error("non-regular-R", "check-R is not proportional to the identity at the regular point");
    }
  } catch (const Error& e) {
    if (e.code() == "zero-divisor") throw Error("non-regular-R", "check-R has a pole at the regular point");
    throw;
  }
  Hamiltonian out;
  out.periodic = periodic;
  out.density = substitute(derivative(normalized, var_index(r.var)), r.var, x0);
  const std::size_t d = r.d1();
  const std::vector<std::size_t> dims(static_cast<std::size_t>(n), d);
  out.h = Mat(power(d, n), power(d, n));
  const int bonds = periodic ? n : n - 1;
  for (int k = 0; k < bonds; ++k) {
    const auto a = static_cast<std::size_t>(k);
    const auto b = static_cast<std::size_t>((k + 1) % n);
    out.h += embed(out.density, {a, b}, dims);
  }
  out.report.subject = std::string(periodic ? "periodic" : "open") + " Hamiltonian, " + std::to_string(n) + " sites";

  const TransferObjects chain = make_chain(r, n);
  bool ok = true;
  for_points(trials, seed, [&](const PrimePoint& pt) {
    const ModMatrix hm = evaluate_mod_p(out.h, pt);
    const ModChain mc = evaluate_chain_mod_p(chain, pt);
    const auto v = random_vector(chain.quantum_dim(), seed, pt.counter);
    if (hm.apply(mc.apply_transfer(v)) != mc.apply_transfer(hm.apply(v))) {
      ok = false;
      return false;
    }
    return true;
  });
  out.report.add("[H, tau] = 0 modp", ok, std::to_string(trials) + " points");
  return out;
}

}  // namespace qaffine
