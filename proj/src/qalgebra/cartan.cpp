#include "qaffine/qalgebra/cartan.hpp"

#include <gmpxx.h>

#include "qaffine/error.hpp"

namespace qaffine {

namespace {

mpq_class det(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return d;
}

std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

void CartanData::validate() const {
  const auto n = static_cast<std::size_t>(nodes());
  if (rank < 1 || a.size() != n || d.size() != n || labels.size() != n) {
    throw Error("bad-cartan", "dimensions do not match rank");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error("bad-cartan", "matrix is not square");
    if (d[i] <= 0 || labels[i] <= 0) throw Error("bad-cartan", "symmetrizers and labels must be positive");
  }
  if (labels[0] != 1) throw Error("bad-cartan", "label of node 0 must be 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw Error("bad-cartan", "diagonal entries must be 2");
    long null = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && a[i][j] > 0) throw Error("bad-cartan", "off-diagonal entries must be non-positive");
      if (d[i] * a[i][j] != d[j] * a[j][i]) throw Error("bad-cartan", "matrix is not symmetrizable by d");
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw Error("bad-cartan", "zero pattern is not symmetric");
      null += static_cast<long>(a[i][j]) * labels[j];
    }
    if (null != 0) throw Error("bad-cartan", "Kac labels are not a null vector");
  }
  // Symmetrized form: positive semi-definite iff every principal minor is >= 0.
  std::vector<std::vector<mpq_class>> b(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b[i][j] = d[i] * a[i][j];
  }
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) idx.push_back(i);
    }
    std::vector<std::vector<mpq_class>> sub(idx.size(), std::vector<mpq_class>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = b[idx[i]][idx[j]];
    }
    if (det(sub) < 0) throw Error("bad-cartan", "matrix is not positive semi-definite");
  }
  if (rank != static_cast<int>(::qaffine::rank(b))) throw Error("bad-cartan", "matrix rank differs from r");
}

nlohmann::json CartanData::to_json() const {
  return {{"name", name}, {"rank", rank}, {"matrix", a}, {"symmetrizers", d}, {"labels", labels}};
}

CartanData CartanData::from_json(const nlohmann::json& j) {
  CartanData c;
  try {
    c.name = j.value("name", std::string("custom"));
    c.a = j.at("matrix").get<std::vector<std::vector<int>>>();
    c.rank = j.contains("rank") ? j.at("rank").get<int>() : static_cast<int>(c.a.size()) - 1;
    const auto n = c.a.size();
    c.d = j.contains("symmetrizers") ? j.at("symmetrizers").get<std::vector<int>>() : std::vector<int>(n, 1);
    c.labels = j.contains("labels") ? j.at("labels").get<std::vector<int>>() : std::vector<int>(n, 1);
  } catch (const nlohmann::json::exception& e) {
    throw Error("parse-error", std::string("Cartan data: ") + e.what());
  }
  c.validate();
  return c;
}

CartanData affine_a1() {
  CartanData c;
  c.name = "A1^(1)";
  c.rank = 1;
  c.a = {{2, -2}, {-2, 2}};
  c.d = {1, 1};
  c.labels = {1, 1};
  return c;
}

CartanData affine_a(int n) {
  if (n < 1 || n > 8) throw Error("bad-rank", "A_n^(1) is shipped for 1 <= n <= 8");
  if (n == 1) return affine_a1();
  CartanData c;
  c.name = "A" + std::to_string(n) + "^(1)";
  c.rank = n;
  const auto m = static_cast<std::size_t>(n + 1);
  c.a.assign(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    c.a[i][i] = 2;
    c.a[i][(i + 1) % m] = -1;
    c.a[i][(i + m - 1) % m] = -1;
  }
  c.d.assign(m, 1);
  c.labels.assign(m, 1);
  return c;
}

}  // namespace qaffine
