// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "../unit/generators.hpp"
#include "qaffine/boundary/boundary.hpp"
#include "qaffine/error.hpp"
#include "qaffine/scalars/format.hpp"
#include "qaffine/spinchain/spinchain.hpp"

using namespace qaffine;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

// Collects sub-claims of one criterion; the criterion passes iff all do.
struct Criterion {
  int id;
  std::vector<std::string> failed;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

bool all_with_prefix(const Report& r, const std::string& prefix, int& count) {
  count = 0;
  bool ok = true;
  for (const auto& c : r.checks) {
    if (c.name.rfind(prefix, 0) == 0) {
      ++count;
      ok = ok && c.passed;
    }
  }
  return ok && count > 0;
}

GradationSpec hom() { return GradationSpec::homogeneous(affine_a1()); }
Representation spin(int two_s) { return make_uq_sl2_spin(two_s); }

void c1(Criterion& c) {
  const auto t0 = Clock::now();
  for (int two_s : {1, 2, 3}) {
    const Report r = verify_defining_relations(spin(two_s));
    int serre = 0;
    c.require(r.passed() && all_with_prefix(r, "serre", serre), "relations for spin " + std::to_string(two_s) + "/2");
  }
  for (int n : {2, 3, 4}) {
    const Report r = verify_defining_relations(make_uq_sln_defining(n));
    int serre = 0;
    c.require(r.passed() && all_with_prefix(r, "serre", serre), "relations for sl" + std::to_string(n));
  }
  const double s = seconds_since(t0);
  c.require(s < 10.0, "runtime " + secs(s) + " >= 10 s");
  c.note("6 representations, " + secs(s));
}

void c2(Criterion& c) {
  const auto t0 = Clock::now();
  const Report r = verify_hopf_axioms(spin(1), spin(1), spin(1));
  int n_coassoc = 0, n_counit = 0, n_antipode = 0;
  c.require(r.passed(), r.first_failure() ? "failed " + r.first_failure()->name : "");
  c.require(all_with_prefix(r, "coassociativity", n_coassoc), "coassociativity checks");
  c.require(all_with_prefix(r, "counit", n_counit), "counit checks");
  c.require(all_with_prefix(r, "antipode", n_antipode), "antipode checks");
  const double s = seconds_since(t0);
  c.require(s < 5.0, "runtime " + secs(s));
  c.note(std::to_string(r.checks.size()) + " checks, " + secs(s));
}

void c3(Criterion& c) {
  const auto sys = build_intertwiner_system(spin(1), spin(1), hom());
  const std::size_t nullity = nullspace_fraction_free(sys.pruned).size();
  c.require(nullity == 1, "nullity " + std::to_string(nullity));
  const RMatrix r = solve_R(sys);
  const auto t0 = Clock::now();
  const Report ybe = verify_ybe(r, r, r, YbeMode{});
  const double s = seconds_since(t0);
  c.require(ybe.passed() && ybe.checks.front().name == "ybe exact", "spin-1/2 exact YBE");
  c.require(s < 60.0, "exact YBE took " + secs(s));

  const Representation d3 = make_uq_sln_defining(3);
  const RMatrix r3 = intertwiner(d3, d3, GradationSpec::homogeneous(affine_a(2)));
  const Report m = verify_ybe(r3, r3, r3, YbeMode::modp(20, 1));
  c.require(m.passed(), "sl3 YBE mod p");
  const std::string detail = m.checks.front().detail;
  std::smatch match;
  const bool has_bound = std::regex_search(detail, match, std::regex("10\\^(-?[0-9.]+)"));
  c.require(has_bound && std::stod(match[1]) < -10.0, "false-pass bound: " + detail);

  const Mat at1 = r.at(RatFunc(1));
  c.require(at1 == Mat::identity(4).scaled(at1(0, 0)) && !at1(0, 0).is_zero(), "check-R(1) not a multiple of Id");
  c.note("nullity 1, exact YBE " + secs(s) + ", sl3 mod p: " + detail);
}

void c4(Criterion& c) {
  const Unitarity u = verify_unitarity(intertwiner(spin(1), spin(1), hom()));
  c.require(u.report.passed(), "unitarity residual");
  c.require(u.phi && !u.phi->is_zero(), "phi vanishes");
  if (u.phi) c.note("phi = " + to_string(*u.phi));
}

void c5(Criterion& c) {
  const RMatrix r = intertwiner(spin(1), spin(1), hom());
  const auto pts = fusion_points(r, 4);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].sign == pts[j].sign && pts[i].power == -pts[j].power) ++pairs;
  c.require(pts.size() == 2 && pairs == 1, "expected exactly one reciprocal pair, found " + std::to_string(pts.size()) + " points");
  bool rank3 = false;
  for (const auto& p : pts) {
    rank3 = rank3 || p.rank == 3;
    c.require(p.image_invariant, "image not invariant at z = " + to_string(p.value()));
    c.note("z = " + to_string(p.value()) + " rank " + std::to_string(p.rank));
  }
  c.require(rank3, "no rank 4 -> 3 drop");
}

void c6(Criterion& c) {
  for (int n : {2, 3}) {
    const RMatrix r = rational_R(n, "u");
    c.require(verify_ybe(r, r, r, YbeMode{}).passed(), "additive YBE n = " + std::to_string(n));
  }
  const YangianData y = yangian_sl2();
  const Report rel = verify_yangian_relations(y, yangian_eval_rep(y, "u"));
  int quartic = 0;
  c.require(all_with_prefix(rel, "quartic", quartic), "quartic relation");
  const Report hopf = verify_yangian_hopf(y, yangian_eval_rep(y, "u"), yangian_eval_rep(y, "v"), rational_R(2));
  int inter = 0;
  c.require(all_with_prefix(hopf, "intertwining", inter), "rational intertwining residual");
  const MonodromyExpansion m = monodromy_expansion(2, {RatFunc::var("w"), RatFunc()}, 2);
  int cop = 0;
  c.require(m.report.passed() && all_with_prefix(m.report, "coproduct order", cop), "monodromy expansion");
  c.note(std::to_string(quartic) + " quartic checks, " + std::to_string(inter) + " intertwining checks");
}

void c7(Criterion& c) {
  const RMatrix r = intertwiner(spin(1), spin(1), hom());
  const RatFunc w = RatFunc::var("w");
  for (int n = 1; n <= 3; ++n) {
    const auto ch = build_monodromy(r, n, {}, std::nullopt, 256);
    c.require(verify_rtt(ch, w, r, YbeMode{}).passed(), "RTT exact n = " + std::to_string(n));
    c.require(verify_commuting(ch, with_spectral(ch, w, true), YbeMode{}).passed(),
              "commuting exact n = " + std::to_string(n));
  }
  const auto t0 = Clock::now();
  const auto big = make_chain(r, 10);
  const Report m = verify_commuting(big, with_spectral(big, w, false), YbeMode::modp(20, 1));
  const double s = seconds_since(t0);
  c.require(m.passed(), "commuting mod p n = 10");
  c.require(s < 10.0, "n = 10 took " + secs(s));

  const Hamiltonian h = extract_hamiltonian(r, 6);
  c.require(h.report.passed(), "[H, tau] mod p n = 6");
  const Mat classical = substitute(h.density.scaled(parse_ratfunc("t^4 - 1")), "t", RatFunc(1));
  c.require(classical == swap_matrix(2, 2) - Mat::identity(4), "classical density is not P - 1");
  c.note("n = 10 mod p " + secs(s) + "; (t^4 - 1) h at t = 1 equals P - 1");
}

void c8(Criterion& c) {
  const BoundaryAlgebra free = build_Q_generators(spin(1));
  c.require(verify_coideal(free, spin(1)).passed(), "coideal identity");
  const std::size_t nullity = k_nullity(free, hom());
  c.require(nullity == 1, "nullity " + std::to_string(nullity) + " at free symbolic eta");

  const auto eta = find_eta(spin(1), hom(), symbolic_epsilons(affine_a1()));
  c.require(eta.has_value(), "no admissible eta");
  if (!eta) return;
  c.note("K exists at eta = " + to_string(*eta));
  const KMatrix k = solve_K(build_Q_generators(spin(1), {}, *eta), hom());
  c.require(verify_reflection(k, k, intertwiner(spin(1), spin(1), hom()), intertwiner(spin(1), spin(1), hom()),
                              YbeMode{})
                .passed(),
            "reflection equation");
  const KMatrix k0 = solve_K(build_Q_generators(spin(1), {RatFunc(), RatFunc()}, *eta), hom());
  const bool diagonal = k0.k(0, 1).is_zero() && k0.k(1, 0).is_zero();
  c.require(diagonal, "eps = 0 K is not diagonal (it is proportional to Q_1)");

  const auto split = split_sl2_so2();
  try {
    const TwistedBoundary tb = twisted_yangian_boundary(split, yangian_eval_rep(split.y, "u"));
    c.require(tb.report.passed(), "twisted Yangian checks");
  } catch (const Error& e) {
    c.require(false, std::string("twisted Yangian: ") + e.what());
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void c9(Criterion& c) {
  std::mt19937_64 rng(2024);
  const std::vector<int> vars = {var_index("t"), var_index("z"), var_index("e0"), var_index("eta")};
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const RatFunc r = testing::random_ratfunc(rng, vars);
    const std::string s = to_string(r);
    const RatFunc back = parse_ratfunc(s);
    if (!(back == r) || to_string(back) != s) ++bad;
  }
  c.require(bad == 0, std::to_string(bad) + " round-trip failures");

  int detected = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 g(seed);
    Mat a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = testing::random_ratfunc(g, vars);
    Mat b = a;
    const std::size_t row = seed % 3, col = (seed / 3) % 3;
    b(row, col) = b(row, col) + RatFunc(testing::random_nonzero_poly(g, vars, 2));
    if (!identity_check_sz(a, b, 2, seed).equal) ++detected;
  }
  c.require(detected >= 99, "planted discrepancy detected in " + std::to_string(detected) + "/100 runs");

  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "qaffine_acceptance_cli";
  fs::remove_all(base);
  const std::vector<std::string> cmds = {
      "rmatrix --rep1 spin:1/2 --rep2 spin:1/2 -o r.json",
      "rmatrix --algebra sl3 --rep1 sl3:defining --rep2 sl3:defining -o r3.json",
      "rmatrix --flavor rational --n 3 -o rr.json",
      "kmatrix --rep spin:1/2 --eps symbolic -o k.json",
      "kmatrix --flavor rational -o kt.json",
      "chain --in r.json --sites 3 -o chain.json",
      "hamiltonian --in r.json --sites 4 --seed 3 -o h.json",
      "verify ybe --in r.json -o ybe.json",
      "verify ybe --in r3.json --mode modp --trials 20 --seed 9 -o ybe3.json",
      "verify commute --chain chain.json --mode modp --trials 20 --seed 7 -o commute.json",
      "verify reflection --in k.json -o refl.json",
      "verify fusion --in r.json -o fusion.json",
  };
  bool runs_ok = true;
  for (const char* round : {"a", "b"}) {
    fs::create_directories(base / round);
    for (const auto& cmd : cmds) {
      const std::string line = "cd '" + (base / round).string() + "' && '" + QAFFINE_CLI + "' " + cmd + " >/dev/null 2>&1";
      if (std::system(line.c_str()) != 0) {
        runs_ok = false;
        c.require(false, "command failed: " + cmd);
      }
    }
  }
  std::size_t files = 0;
  bool same = runs_ok;
  for (const auto& entry : fs::directory_iterator(base / "a")) {
    ++files;
    const auto other = base / "b" / entry.path().filename();
    if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
      same = false;
      c.require(false, "differs: " + entry.path().filename().string());
    }
  }
  c.require(same && files == cmds.size(), "CLI outputs not byte-reproducible");
  c.note("1000 round trips, " + std::to_string(detected) + "/100 detections, " + std::to_string(files) +
         " CLI artifacts identical across two runs");
  fs::remove_all(base);
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void(Criterion&)>>> all = {
      {1, c1}, {2, c2}, {3, c3}, {4, c4}, {5, c5}, {6, c6}, {7, c7}, {8, c8}, {9, c9}};
  int failures = 0;
  for (const auto& [id, fn] : all) {
    Criterion c{id, {}, {}};
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failed.push_back(std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << "criterion " << id << ": " << (c.failed.empty() ? "PASS" : "FAIL");
    std::vector<std::string> parts;
    for (const auto& f : c.failed)
      if (!f.empty()) parts.push_back(f);
    if (parts.empty()) parts = c.notes;
    for (std::size_t i = 0; i < parts.size(); ++i) line << (i == 0 ? " (" : "; ") << parts[i];
    if (!parts.empty()) line << ")";
    std::cout << line.str() << std::endl;
    if (!c.failed.empty()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
