#include "qaffine/cli/artifacts.hpp"

#include <fstream>
#include <sstream>

#include "qaffine/error.hpp"
#include "qaffine/scalars/format.hpp"

namespace qaffine {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error("parse-error", where + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, "missing field '" + key + "'");
  return j.at(key);
}

std::string str(const json& j, const std::string& key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

std::size_t index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

RatFunc ratfunc(const std::string& text, const std::string& where) {
  try {
    return parse_ratfunc(text);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Mat entries(const json& j, std::size_t n, const std::string& where) {
  const json& list = field(j, "entries", where);
  if (!list.is_array()) fail(where + ".entries", "expected an array");
  Mat m(n, n);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = "entries[" + std::to_string(k) + "]";
    const json& e = list[k];
    const std::size_t r = index(field(e, "row", at), at + ".row");
    const std::size_t c = index(field(e, "col", at), at + ".col");
    if (r >= n || c >= n) fail(at, "index out of range for dimension " + std::to_string(n));
    const RatFunc num = ratfunc(str(e, "num", at), at + ".num");
    const RatFunc den = ratfunc(str(e, "den", at), at + ".den");
    if (den.is_zero()) fail(at + ".den", "zero denominator");
    m(r, c) = num / den;
  }
  return m;
}

Normalization normalization(const json& j, const std::string& where) {
  Normalization n;
  if (!j.contains("normalization")) return n;
  const json& nj = j.at("normalization");
  const json& pivot = field(nj, "pivot", where + ".normalization");
  if (!pivot.is_array() || pivot.size() != 2) fail(where + ".normalization.pivot", "expected [row, col]");
  n.pivot_row = index(pivot[0], where + ".normalization.pivot");
  n.pivot_col = index(pivot[1], where + ".normalization.pivot");
  n.factor = ratfunc(str(nj, "factor", where + ".normalization"), where + ".normalization.factor");
  return n;
}

std::string first_var(const json& j, const std::string& where) {
  const json& vars = field(j, "vars", where);
  if (!vars.is_array() || vars.empty() || !vars[0].is_string()) fail(where + ".vars", "expected [spectral var, ...]");
  return vars[0].get<std::string>();
}

Representation rep(const std::string& name, const std::string& where) {
  try {
    return parse_rep_spec(name);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

std::vector<std::string> rep_names(const json& j, std::size_t count, const std::string& where) {
  const json& reps = field(j, "reps", where);
  if (!reps.is_array() || reps.size() != count) fail(where + ".reps", "expected " + std::to_string(count) + " names");
  std::vector<std::string> out;
  for (const auto& r : reps) {
    if (!r.is_string()) fail(where + ".reps", "expected strings");
    out.push_back(r.get<std::string>());
  }
  return out;
}

}  // namespace

RMatrix rmatrix_from_json(const json& j) {
  const std::string where = "rmatrix";
  const std::string flavor = str(j, "flavor", where);
  const auto names = rep_names(j, 2, where);
  const std::string var = first_var(j, where);
  RMatrix r;
  if (flavor == "rational") {
    const json& dims = field(j, "dims", where);
    if (!dims.is_array() || dims.size() != 2) fail(where + ".dims", "expected [d1, d2]");
    const std::size_t n = index(dims[0], where + ".dims");
    if (n < 2 || n > 8) fail(where + ".dims", "unsupported dimension");
    r = rational_R(static_cast<int>(n), var);
  } else if (flavor == "trigonometric") {
    r.rho1 = rep(names[0], where + ".reps[0]");
    r.rho2 = rep(names[1], where + ".reps[1]");
    r.var = var;
    try {
      r.gradation = GradationSpec::named(str(j, "gradation", where), r.rho1.cartan);
    } catch (const Error& e) {
      fail(where + ".gradation", e.what());
    }
  } else {
    fail(where + ".flavor", "unknown flavor '" + flavor + "'");
  }
  r.r = entries(j, r.d1() * r.d2(), where);
  r.norm = normalization(j, where);
  return r;
}

KMatrix kmatrix_from_json(const json& j) {
  const std::string where = "kmatrix";
  const std::string flavor = str(j, "flavor", where);
  const auto names = rep_names(j, 1, where);
  const std::string var = first_var(j, where);
  KMatrix k;
  if (flavor == "rational") {
    const auto split = split_sl2_so2();
    k = twisted_yangian_boundary(split, yangian_eval_rep(split.y, var)).k;
  } else if (flavor == "trigonometric") {
    const Representation rho = rep(names[0], where + ".reps[0]");
    const json& eps_j = field(j, "epsilons", where);
    if (!eps_j.is_array()) fail(where + ".epsilons", "expected an array");
    std::vector<RatFunc> eps;
    for (std::size_t i = 0; i < eps_j.size(); ++i) {
      const std::string at = where + ".epsilons[" + std::to_string(i) + "]";
      if (!eps_j[i].is_string()) fail(at, "expected a string");
      eps.push_back(ratfunc(eps_j[i].get<std::string>(), at));
    }
    const RatFunc eta = ratfunc(str(j, "eta", where), where + ".eta");
    GradationSpec grad;
    try {
      grad = GradationSpec::named(str(j, "gradation", where), rho.cartan);
    } catch (const Error& e) {
      fail(where + ".gradation", e.what());
    }
    try {
      k.algebra = build_Q_generators(rho, eps, eta);
    } catch (const Error& e) {
      fail(where + ".epsilons", e.what());
    }
    k.grad = grad;
    k.rep_name = rho.name;
    k.dim = rho.dim;
    k.gradation = grad.name;
    k.eps = eps;
    k.eta = eta;
    k.var = var;
  } else {
    fail(where + ".flavor", "unknown flavor '" + flavor + "'");
  }
  k.k = entries(j, k.dim, where);
  k.norm = normalization(j, where);
  return k;
}

json chain_to_json(const TransferObjects& c) {
  json inhom = json::array();
  for (const auto& z : c.inhomogeneities) inhom.push_back(to_string(z));
  json out = {{"rmatrix", c.r.to_json()},
              {"sites", c.n},
              {"inhomogeneities", std::move(inhom)},
              {"spectral", to_string(c.spectral)},
              {"dims", {c.aux_dim(), c.site_dim()}}};
  if (c.transfer) out["transfer"] = matrix_to_json(*c.transfer);
  return out;
}

TransferObjects chain_from_json(const json& j) {
  const std::string where = "chain";
  const RMatrix r = rmatrix_from_json(field(j, "rmatrix", where));
  const json& sites = field(j, "sites", where);
  if (!sites.is_number_integer() || sites.get<int>() < 1) fail(where + ".sites", "expected a positive integer");
  const json& inh = field(j, "inhomogeneities", where);
  if (!inh.is_array()) fail(where + ".inhomogeneities", "expected an array");
  std::vector<RatFunc> zs;
  for (std::size_t i = 0; i < inh.size(); ++i) {
    const std::string at = where + ".inhomogeneities[" + std::to_string(i) + "]";
    if (!inh[i].is_string()) fail(at, "expected a string");
    zs.push_back(ratfunc(inh[i].get<std::string>(), at));
  }
  const RatFunc spectral = ratfunc(str(j, "spectral", where), where + ".spectral");
  try {
    return make_chain(r, sites.get<int>(), std::move(zs), spectral);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

json hamiltonian_to_json(const Hamiltonian& h, int sites) {
  json out = {{"sites", sites},
              {"periodic", h.periodic},
              {"density", matrix_to_json(h.density)},
              {"report", h.report.to_json()}};
  if (h.h.rows() <= 256) out["hamiltonian"] = matrix_to_json(h.h);
  return out;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("parse-error", "cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error("parse-error", path.string() + ": " + e.what());
  }
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io-error", "cannot write '" + tmp.string() + "'");
    out << text;
    if (!out.flush()) throw Error("io-error", "write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace qaffine
