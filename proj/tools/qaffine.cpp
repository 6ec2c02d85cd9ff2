#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qaffine/cli/artifacts.hpp"
#include "qaffine/error.hpp"
#include "qaffine/scalars/format.hpp"

using namespace qaffine;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDegenerate = 2;
constexpr int kFailed = 3;

const char* const kRepForms = "valid forms: spin:<s> (s = 1/2, 1, 3/2, ...), sl2:spin=<s>, slN:defining (N = 2..8)";

struct Options {
  std::string algebra = "sl2";
  std::string rep;
  std::string rep1;
  std::string rep2;
  std::string gradation = "homogeneous";
  std::string flavor = "trigonometric";
  int n = 2;
  std::string eps = "symbolic";
  std::string eta = "auto";
  std::string in;
  std::string chain;
  std::string rmatrix;
  std::string output;
  std::string mode = "exact";
  int trials = 20;
  std::optional<std::uint64_t> seed;
  int sites = 0;
  std::string inhom;
  std::string spectral;
  bool open = false;
  std::string target;
};

struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error("usage", msg) {}
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  return out;
}

Representation load_rep(const std::string& spec, const Options& o) {
  Representation rho;
  try {
    rho = parse_rep_spec(spec);
  } catch (const Error& e) {
    throw UsageError(std::string(e.what()) + "; " + kRepForms);
  }
  const std::string expected = "sl" + std::to_string(rho.cartan.rank + 1);
  if (o.algebra != expected) {
    throw UsageError("representation '" + spec + "' belongs to " + expected + ", not --algebra " + o.algebra);
  }
  return rho;
}

YbeMode verify_mode(const Options& o) {
  if (o.mode == "exact") return YbeMode{true, o.trials, o.seed.value_or(1)};
  return YbeMode::modp(o.trials, *o.seed);
}

void validate(const Options& o) {
  if (o.mode != "exact" && o.mode != "modp") throw UsageError("--mode must be exact or modp");
  if (o.mode == "modp" && !o.seed) throw UsageError("--seed is required with --mode modp");
  if (o.trials < 1) throw UsageError("--trials must be positive");
  if (o.flavor != "trigonometric" && o.flavor != "rational") throw UsageError("--flavor must be trigonometric or rational");
}

void emit(const json& j, const Options& o, const std::string& summary) {
  const std::string text = canonical_dump(j);
  if (o.output.empty()) {
    std::cout << text;
    if (!summary.empty()) std::cerr << summary << "\n";
  } else {
    write_atomic(o.output, text);
    if (!summary.empty()) std::cout << summary << "\n";
  }
}

std::string norm_summary(const Normalization& n) {
  return "normalization pivot (" + std::to_string(n.pivot_row) + "," + std::to_string(n.pivot_col) + "), factor " +
         to_string(n.factor);
}

GradationSpec gradation(const Options& o, const CartanData& c) {
  try {
    return GradationSpec::named(o.gradation, c);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int cmd_rmatrix(const Options& o) {
  RMatrix r;
  if (o.flavor == "rational") {
    if (o.n < 2 || o.n > 8) throw UsageError("--n must be in 2..8");
    r = rational_R(o.n, "u");
  } else {
    if (o.rep1.empty() || o.rep2.empty()) throw UsageError("rmatrix needs --rep1 and --rep2");
    const Representation a = load_rep(o.rep1, o);
    const Representation b = load_rep(o.rep2, o);
    r = intertwiner(a, b, gradation(o, a.cartan));
  }
  std::ostringstream s;
  s << "R-matrix " << r.rho1.name << " x " << r.rho2.name << ": dims " << r.d1() << "x" << r.d2() << ", nullity 1, "
    << r.r.nonzeros() << " nonzero entries, " << norm_summary(r.norm);
  emit(r.to_json(), o, s.str());
  return kOk;
}

std::vector<RatFunc> parse_eps(const Options& o, const CartanData& c) {
  if (o.eps == "symbolic") return symbolic_epsilons(c);
  std::vector<RatFunc> out;
  for (const auto& item : split_list(o.eps)) {
    try {
      out.push_back(parse_ratfunc(item));
    } catch (const Error& e) {
      throw UsageError(std::string("--eps: ") + e.what());
    }
  }
  if (out.size() != static_cast<std::size_t>(c.nodes())) {
    throw UsageError("--eps needs " + std::to_string(c.nodes()) + " comma-separated values or 'symbolic'");
  }
  return out;
}

int cmd_kmatrix(const Options& o) {
  KMatrix k;
  if (o.flavor == "rational") {
    const auto split = split_sl2_so2();
    const TwistedBoundary tb = twisted_yangian_boundary(split, yangian_eval_rep(split.y, "u"));
    if (!tb.report.passed()) throw Error("internal", "twisted boundary check failed: " + tb.report.first_failure()->name);
    k = tb.k;
  } else {
    if (o.rep.empty()) throw UsageError("kmatrix needs --rep");
    const Representation rho = load_rep(o.rep, o);
    const GradationSpec grad = gradation(o, rho.cartan);
    const auto eps = parse_eps(o, rho.cartan);
    RatFunc eta;
    if (o.eta == "auto") {
      const auto found = find_eta(rho, grad, eps);
      if (!found) throw Error("no-intertwiner", "no eta = +-t^k with |k| <= 4 admits a K-matrix");
      eta = *found;
    } else {
      try {
        eta = parse_ratfunc(o.eta == "symbolic" ? "eta" : o.eta);
      } catch (const Error& e) {
        throw UsageError(std::string("--eta: ") + e.what());
      }
    }
    k = solve_K(build_Q_generators(rho, eps, eta), grad);
  }
  std::ostringstream s;
  s << "K-matrix " << k.rep_name << ": dim " << k.dim << ", nullity 1, eta " << to_string(k.eta) << ", "
    << norm_summary(k.norm);
  emit(k.to_json(), o, s.str());
  return kOk;
}

RMatrix load_rmatrix(const std::string& path) {
  if (path.empty()) throw UsageError("missing --in artifact");
  return rmatrix_from_json(read_json_file(path));
}

std::vector<RatFunc> parse_inhom(const Options& o) {
  std::vector<RatFunc> out;
  if (o.inhom.empty()) return out;
  for (const auto& item : split_list(o.inhom)) {
    try {
      out.push_back(parse_ratfunc(item));
    } catch (const Error& e) {
      throw UsageError(std::string("--inhom: ") + e.what());
    }
  }
  return out;
}

int cmd_chain(const Options& o) {
  const RMatrix r = load_rmatrix(o.in);
  if (o.sites < 1) throw UsageError("--sites must be positive");
  std::optional<RatFunc> spectral;
  if (!o.spectral.empty()) spectral = parse_ratfunc(o.spectral);
  TransferObjects c = make_chain(r, o.sites, parse_inhom(o), spectral);
  const bool small = c.aux_dim() * c.quantum_dim() <= kDefaultExactDim;
  if (small) c = with_spectral(c, c.spectral, true);
  std::ostringstream s;
  s << "chain of " << c.n << " sites, quantum space dim " << c.quantum_dim()
    << (small ? ", transfer matrix materialized" : ", matrix-free only");
  emit(chain_to_json(c), o, s.str());
  return kOk;
}

int cmd_hamiltonian(const Options& o) {
  const RMatrix r = load_rmatrix(o.in);
  if (o.sites < 2) throw UsageError("--sites must be at least 2");
  const Hamiltonian h = extract_hamiltonian(r, o.sites, !o.open, o.trials, o.seed.value_or(1));
  std::ostringstream s;
  s << (o.open ? "open" : "periodic") << " Hamiltonian on " << o.sites << " sites, density with "
    << h.density.nonzeros() << " nonzero entries, [H, tau] check " << (h.report.passed() ? "passed" : "FAILED");
  emit(hamiltonian_to_json(h, o.sites), o, s.str());
  return kOk;
}

Report intertwining_of(const RMatrix& r) {
  if (r.flavor == "rational") {
    const YangianData y = yangian_gl(static_cast<int>(r.d1()));
    return verify_yangian_hopf(y, yangian_eval_rep(y, "u"), yangian_eval_rep(y, "v"), r);
  }
  return verify_intertwining(r);
}

json fusion_json(const std::vector<FusionPoint>& pts) {
  json list = json::array();
  for (const auto& p : pts) {
    list.push_back({{"z", to_string(p.value())},
                    {"rank", p.rank},
                    {"image_invariant", p.image_invariant},
                    {"projector", p.projector}});
  }
  return list;
}

int cmd_verify(const Options& o) {
  static const std::set<std::string> targets = {"relations", "hopf",    "ybe",     "unitarity",  "fusion",
                                                "rtt",       "commute", "coideal", "reflection", "yangian"};
  if (!targets.count(o.target)) throw UsageError("unknown verify target '" + o.target + "'");
  const YbeMode mode = verify_mode(o);
  Report rep;
  json extra;
  const std::string& t = o.target;
  if (t == "relations" || t == "hopf" || t == "coideal") {
    if (o.rep.empty()) throw UsageError(t + " needs --rep");
    const Representation rho = load_rep(o.rep, o);
    if (t == "relations") {
      rep = verify_defining_relations(rho);
    } else if (t == "hopf") {
      rep = verify_hopf_axioms(rho, rho, rho);
    } else {
      const Representation rho1 = o.rep2.empty() ? rho : load_rep(o.rep2, o);
      std::optional<RatFunc> eta;
      if (o.eta != "auto" && o.eta != "symbolic") eta = parse_ratfunc(o.eta);
      rep = verify_coideal(build_Q_generators(rho, parse_eps(o, rho.cartan), eta), rho1);
    }
  } else if (t == "ybe" || t == "unitarity" || t == "fusion") {
    const RMatrix r = load_rmatrix(o.in);
    rep = intertwining_of(r);
    if (t == "ybe") {
      if (r.rho1.name != r.rho2.name) throw UsageError("ybe needs an R-matrix on identical factors");
      rep.merge(verify_ybe(r, r, r, mode));
    } else if (t == "unitarity") {
      const Unitarity u = verify_unitarity(r);
      rep.merge(u.report);
      if (u.phi) extra["phi"] = to_string(*u.phi);
    } else {
      if (r.flavor == "rational") throw UsageError("fusion scan needs a trigonometric R-matrix");
      const auto pts = fusion_points(r, 4);
      rep.add("fusion points found", !pts.empty(), std::to_string(pts.size()) + " points");
      for (const auto& p : pts) {
        rep.add("image invariant at z = " + to_string(p.value()), p.image_invariant, "rank " + std::to_string(p.rank));
      }
      extra["points"] = fusion_json(pts);
    }
  } else if (t == "rtt" || t == "commute") {
    if (o.chain.empty()) throw UsageError(t + " needs --chain");
    TransferObjects c = chain_from_json(read_json_file(o.chain));
    const bool exact = mode.exact && c.aux_dim() * c.quantum_dim() <= kDefaultExactDim;
    if (mode.exact && !exact) throw UsageError("chain too large for --mode exact; use --mode modp");
    if (exact) c = with_spectral(c, c.spectral, true);
    const RatFunc other = RatFunc::var(c.r.flavor == "rational" ? "v" : "w");
    if (t == "rtt") {
      if (c.r.rho1.name != c.r.rho2.name) throw UsageError("rtt needs identical auxiliary and site spaces");
      rep = verify_rtt(c, other, c.r, mode);
    } else {
      rep = verify_commuting(c, with_spectral(c, other, exact), mode);
    }
  } else if (t == "reflection") {
    if (o.in.empty()) throw UsageError("reflection needs --in k.json");
    const KMatrix k = kmatrix_from_json(read_json_file(o.in));
    rep = verify_K_intertwining(k);
    RMatrix r;
    if (!o.rmatrix.empty()) {
      r = load_rmatrix(o.rmatrix);
    } else if (k.flavor == "rational") {
      r = rational_R(static_cast<int>(k.dim), "u");
    } else {
      const Representation rho = parse_rep_spec(k.rep_name);
      r = intertwiner(rho, rho, *k.grad);
    }
    rep.merge(verify_reflection(k, k, r, r, mode));
  } else {
    YangianData y;
    if (o.algebra == "sl2") {
      y = yangian_sl2();
    } else if (o.algebra.starts_with("gl")) {
      y = yangian_gl(std::stoi(o.algebra.substr(2)));
    } else {
      throw UsageError("yangian needs --algebra sl2 or glN");
    }
    rep = y.verify_structure();
    rep.merge(verify_yangian_relations(y, yangian_eval_rep(y, "u")));
  }
  json out = rep.to_json();
  out["target"] = t;
  out["mode"] = o.mode;
  if (o.mode == "modp") {
    out["trials"] = o.trials;
    out["seed"] = *o.seed;
  }
  if (const Check* f = rep.first_failure()) out["first_failure"] = f->name;
  if (!extra.is_null()) out["data"] = extra;
  const Check* f = rep.first_failure();
  emit(out, o, "verify " + t + ": " + (f ? "FAILED at " + f->name : "all " + std::to_string(rep.checks.size()) + " checks passed"));
  return rep.passed() ? kOk : kFailed;
}

bool degenerate(const std::string& code) {
  return code == "reducible-pair" || code == "no-intertwiner" || code == "reducible-boundary" ||
         code == "non-regular-R";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum affine R-matrices, K-matrices, spin chains and their verification"};
  app.require_subcommand(1);
  Options o;

  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "exact or modp");
    sub->add_option("--trials", o.trials, "sample points in modp mode");
    sub->add_option("--seed", o.seed, "seed (required in modp mode)");
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "output JSON path (default stdout)"); };

  auto* rm = app.add_subcommand("rmatrix", "solve the intertwining relation for check-R");
  rm->add_option("--algebra", o.algebra, "slN");
  rm->add_option("--rep1", o.rep1, "first factor");
  rm->add_option("--rep2", o.rep2, "second factor");
  rm->add_option("--gradation", o.gradation, "homogeneous, principal or spin");
  rm->add_option("--flavor", o.flavor, "trigonometric or rational");
  rm->add_option("--n", o.n, "rational: dimension of C^n");
  add_output(rm);

  auto* km = app.add_subcommand("kmatrix", "solve the boundary intertwining relation for K");
  km->add_option("--algebra", o.algebra, "slN");
  km->add_option("--rep", o.rep, "representation");
  km->add_option("--gradation", o.gradation, "homogeneous, principal or spin");
  km->add_option("--eps", o.eps, "'symbolic' or comma-separated values, one per node");
  km->add_option("--eta", o.eta, "'auto', 'symbolic' or a value");
  km->add_option("--flavor", o.flavor, "trigonometric, or rational for the sl2/so2 twisted Yangian");
  add_output(km);

  auto* ch = app.add_subcommand("chain", "build a monodromy/transfer matrix artifact");
  ch->add_option("--in", o.in, "R-matrix JSON")->required();
  ch->add_option("--sites", o.sites, "number of sites")->required();
  ch->add_option("--inhom", o.inhom, "comma-separated inhomogeneities");
  ch->add_option("--spectral", o.spectral, "spectral argument (default: the R-matrix variable)");
  add_output(ch);

  auto* hm = app.add_subcommand("hamiltonian", "extract the nearest-neighbour Hamiltonian");
  hm->add_option("--in", o.in, "R-matrix JSON")->required();
  hm->add_option("--sites", o.sites, "number of sites")->required();
  hm->add_flag("--open", o.open, "omit the boundary bond");
  hm->add_option("--trials", o.trials, "sample points for [H, tau]");
  hm->add_option("--seed", o.seed, "seed for [H, tau]");
  add_output(hm);

  auto* vf = app.add_subcommand("verify", "run a verification pipeline and write a JSON report");
  vf->add_option("target", o.target,
                 "relations, hopf, ybe, unitarity, fusion, rtt, commute, coideal, reflection, yangian")
      ->required();
  vf->add_option("--in", o.in, "R- or K-matrix JSON");
  vf->add_option("--chain", o.chain, "chain JSON");
  vf->add_option("--rmatrix", o.rmatrix, "R-matrix JSON for reflection");
  vf->add_option("--algebra", o.algebra, "slN, or glN for yangian");
  vf->add_option("--rep", o.rep, "representation");
  vf->add_option("--rep2", o.rep2, "first factor for coideal (default --rep)");
  vf->add_option("--eps", o.eps, "'symbolic' or comma-separated values");
  vf->add_option("--eta", o.eta, "value of eta for coideal");
  add_mode(vf);
  add_output(vf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    validate(o);
    if (rm->parsed()) return cmd_rmatrix(o);
    if (km->parsed()) return cmd_kmatrix(o);
    if (ch->parsed()) return cmd_chain(o);
    if (hm->parsed()) return cmd_hamiltonian(o);
    return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == "bad-rep") std::cerr << kRepForms << "\n";
    return degenerate(e.code()) ? kDegenerate : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
