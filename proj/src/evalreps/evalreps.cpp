#include "qaffine/evalreps/evalreps.hpp"

#include <charconv>

#include "qaffine/error.hpp"
#include "qaffine/qalgebra/qnumbers.hpp"
#include "qaffine/scalars/format.hpp"

namespace qaffine {

namespace {

Mat weight_matrix(const std::vector<int>& w) {
  std::vector<RatFunc> d;
  for (int v : w) d.emplace_back(v);
  return Mat::diagonal(d);
}

Mat k_from_weights(const std::vector<int>& w, int sign) {
  std::vector<RatFunc> d;
  for (int v : w) d.push_back(RatFunc::var("t", sign * v));
  return Mat::diagonal(d);
}

int parse_int(std::string_view s, std::string_view spec) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("bad-rep", "cannot parse representation '" + std::string(spec) + "'");
  }
  return v;
}

// "1/2" -> 1, "1" -> 2, "3/2" -> 3.
int parse_two_spin(std::string_view s, std::string_view spec) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return 2 * parse_int(s, spec);
  const int num = parse_int(s.substr(0, slash), spec);
  const int den = parse_int(s.substr(slash + 1), spec);
  if (den == 2) return num;
  if (den == 1) return 2 * num;
  throw Error("bad-spin", "spin must be a half-integer");
}

}  // namespace

Representation make_uq_sl2_spin(int two_s) {
  if (two_s <= 0) throw Error("bad-spin", "spin must be positive");
  const auto dim = static_cast<std::size_t>(two_s + 1);
  const RatFunc q = q_param();
  Representation r;
  r.cartan = affine_a1();
  r.dim = dim;
  r.two_spin = two_s;
  r.name = two_s % 2 == 0 ? "sl2:spin=" + std::to_string(two_s / 2) : "sl2:spin=" + std::to_string(two_s) + "/2";
  r.gradation = {"none", {0, 0}};
  std::vector<int> w;
  for (int k = 0; k <= two_s; ++k) w.push_back(two_s - 2 * k);
  Mat ep(dim, dim);
  Mat em(dim, dim);
  for (int k = 1; k <= two_s; ++k) ep(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k)) = q_int(k, q);
  for (int k = 0; k < two_s; ++k) em(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k)) = q_int(two_s - k, q);
  const Mat k1 = k_from_weights(w, 1);
  const Mat k1inv = k_from_weights(w, -1);
  const Mat h1 = weight_matrix(w);
  r.ep = {em, ep};
  r.em = {ep, em};
  r.k = {k1inv, k1};
  r.kinv = {k1, k1inv};
  r.h = {-h1, h1};
  return r;
}

Representation make_uq_sln_defining(int n) {
  if (n < 2) throw Error("bad-rank", "defining representation needs n >= 2");
  if (n == 2) {
    Representation r = make_uq_sl2_spin(1);
    r.name = "sl2:defining";
    return r;
  }
  const auto dim = static_cast<std::size_t>(n);
  Representation r;
  r.cartan = affine_a(n - 1);
  r.dim = dim;
  r.name = "sl" + std::to_string(n) + ":defining";
  r.gradation = {"none", std::vector<mpq_class>(dim, 0)};
  for (std::size_t i = 0; i < dim; ++i) {
    // E+_i = e_(r,c) (0-based); node 0 is e_(n-1,0).
    const std::size_t row = i == 0 ? dim - 1 : i - 1;
    const std::size_t col = i == 0 ? 0 : i;
    std::vector<int> w(dim, 0);
    w[row] += 1;
    w[col] -= 1;
    r.ep.push_back(Mat::unit(dim, dim, row, col));
    r.em.push_back(Mat::unit(dim, dim, col, row));
    r.k.push_back(k_from_weights(w, 1));
    r.kinv.push_back(k_from_weights(w, -1));
    r.h.push_back(weight_matrix(w));
  }
  return r;
}

Representation apply_gradation_twist(const Representation& rho, const GradationSpec& grad, std::string_view var) {
  Representation r = apply_gradation_twist(rho, grad, RatFunc::var(var));
  r.spectral_var = std::string(var);
  return r;
}

Representation apply_gradation_twist(const Representation& rho, const GradationSpec& grad, const RatFunc& value) {
  if (grad.s.size() != static_cast<std::size_t>(rho.cartan.nodes())) {
    throw Error("bad-gradation", "gradation length does not match the number of nodes");
  }
  if (value.is_zero()) throw Error("zero-divisor", "gradation twist by zero");
  Representation r = rho;
  for (std::size_t i = 0; i < grad.s.size(); ++i) {
    if (grad.s[i].get_den() != 1) {
      throw Error("fractional-grading", "s_" + std::to_string(i) + " is not an integer");
    }
    const int s = static_cast<int>(grad.s[i].get_num().get_si());
    if (s == 0) continue;
    r.ep[i] = r.ep[i].scaled(value.pow(s));
    r.em[i] = r.em[i].scaled(value.pow(-s));
  }
  r.gradation = grad;
  r.spectral_var = to_string(value);
  return r;
}

std::size_t TensorRep::dim() const {
  std::size_t d = 1;
  for (const auto& f : factors) d *= f.dim;
  return d;
}

Mat TensorRep::matrix(const Generator& g) const {
  if (factors.empty()) throw Error("bad-composition", "empty tensor product");
  if (factors.size() == 1) return factors[0].matrix(g);
  Representation acc = factors[0];
  for (std::size_t k = 1; k + 1 < factors.size(); ++k) acc = tensor_product(acc, factors[k]);
  return tensor_coproduct_matrix(g, acc, factors.back());
}

Representation TensorRep::materialize() const {
  if (factors.empty()) throw Error("bad-composition", "empty tensor product");
  Representation acc = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) acc = tensor_product(acc, factors[k]);
  return acc;
}

TensorRep tensor_rep(const Representation& rho1, const Representation& rho2) {
  if (!(rho1.cartan == rho2.cartan)) {
    throw Error("algebra-mismatch", rho1.name + " and " + rho2.name + " carry different Cartan data");
  }
  return {{rho1, rho2}};
}

Representation parse_rep_spec(std::string_view spec) {
  auto bad = [&] { return Error("bad-rep", "unknown representation '" + std::string(spec) + "'"); };
  if (spec.starts_with("spin:")) return make_uq_sl2_spin(parse_two_spin(spec.substr(5), spec));
  if (!spec.starts_with("sl")) throw bad();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw bad();
  const int n = parse_int(spec.substr(2, colon - 2), spec);
  const std::string_view rest = spec.substr(colon + 1);
  if (rest == "defining") return make_uq_sln_defining(n);
  if (rest.starts_with("spin=") && n == 2) return make_uq_sl2_spin(parse_two_spin(rest.substr(5), spec));
  throw bad();
}

nlohmann::json matrix_to_json(const Mat& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) entries.push_back({i, j, to_string(m(i, j))});
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

nlohmann::json rep_to_json(const Representation& rho) {
  nlohmann::json mats = nlohmann::json::object();
  for (const auto& g : chevalley_generators(rho.cartan)) mats[g.label()] = matrix_to_json(rho.matrix(g));
  return {{"name", rho.name},
          {"dim", rho.dim},
          {"cartan", rho.cartan.to_json()},
          {"spectral_var", rho.spectral_var},
          {"gradation", rho.gradation.name},
          {"matrices", std::move(mats)}};
}

}  // namespace qaffine
