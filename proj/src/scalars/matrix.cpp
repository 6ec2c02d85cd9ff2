#include "qaffine/scalars/matrix.hpp"

#include "qaffine/simd/modp_kernels.hpp"

namespace qaffine {

Mat swap_matrix(std::size_t d1, std::size_t d2) {
  Mat p(d1 * d2, d1 * d2);
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) p(j * d1 + i, i * d2 + j) = RatFunc(1);
  }
  return p;
}

Mat embed(const Mat& op, const std::vector<std::size_t>& sites, const std::vector<std::size_t>& dims) {
  const std::size_t m = dims.size();
  std::vector<std::size_t> stride(m, 1);
  for (std::size_t k = m; k-- > 1;) stride[k - 1] = stride[k] * dims[k];
  const std::size_t total = stride[0] * dims[0];

  std::vector<bool> in_op(m, false);
  std::size_t op_dim = 1;
  for (auto s : sites) {
    if (s >= m || in_op[s]) throw Error("bad-composition", "invalid site list for embedding");
    in_op[s] = true;
    op_dim *= dims[s];
  }
  if (op.rows() != op_dim || op.cols() != op_dim) throw Error("bad-composition", "operator does not match site dimensions");

  // Offset of every operator basis index in the full space.
  std::vector<std::size_t> op_offset(op_dim, 0);
  for (std::size_t idx = 0; idx < op_dim; ++idx) {
    std::size_t rem = idx;
    std::size_t off = 0;
    for (std::size_t k = sites.size(); k-- > 0;) {
      const std::size_t s = sites[k];
      off += (rem % dims[s]) * stride[s];
      rem /= dims[s];
    }
    op_offset[idx] = off;
  }
  // Offsets of every assignment of the remaining sites.
  std::vector<std::size_t> rest_offset{0};
  for (std::size_t s = 0; s < m; ++s) {
    if (in_op[s]) continue;
    std::vector<std::size_t> next;
    next.reserve(rest_offset.size() * dims[s]);
    for (auto base : rest_offset) {
      for (std::size_t d = 0; d < dims[s]; ++d) next.push_back(base + d * stride[s]);
    }
    rest_offset = std::move(next);
  }

  Mat full(total, total);
  for (std::size_t i = 0; i < op_dim; ++i) {
    for (std::size_t j = 0; j < op_dim; ++j) {
      const RatFunc& v = op(i, j);
      if (v.is_zero()) continue;
      for (auto base : rest_offset) full(base + op_offset[i], base + op_offset[j]) = v;
    }
  }
  return full;
}

Mat partial_trace_first(const Mat& m, std::size_t d0) {
  if (m.rows() != m.cols() || m.rows() % d0 != 0) throw Error("bad-composition", "partial trace shape mismatch");
  const std::size_t rest = m.rows() / d0;
  Mat out(rest, rest);
  for (std::size_t a = 0; a < d0; ++a) {
    for (std::size_t i = 0; i < rest; ++i) {
      for (std::size_t j = 0; j < rest; ++j) {
        const RatFunc& v = m(a * rest + i, a * rest + j);
        if (!v.is_zero()) out(i, j) += v;
      }
    }
  }
  return out;
}

Mat substitute(const Mat& m, int var, const RatFunc& value) {
  return m.map([&](const RatFunc& x) { return x.substitute(var, value); });
}

Mat substitute(const Mat& m, std::string_view var, const RatFunc& value) {
  return substitute(m, var_index(var), value);
}

Mat derivative(const Mat& m, int var) {
  return m.map([&](const RatFunc& x) { return x.derivative(var); });
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

ModMatrix ModMatrix::identity(std::size_t n) {
  ModMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("bad-composition", "modular product shape mismatch");
  const auto& k = simd::kernels();
  ModMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) k.axpy(a(i, l), b.row(l), c.row(i), b.cols_);
  }
  return c;
}

ModMatrix operator-(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("bad-composition", "modular difference shape mismatch");
  ModMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = modp::sub(a.data_[k], b.data_[k]);
  return c;
}

ModMatrix operator+(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("bad-composition", "modular sum shape mismatch");
  ModMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = modp::add(a.data_[k], b.data_[k]);
  return c;
}

std::vector<std::uint64_t> ModMatrix::apply(const std::vector<std::uint64_t>& v) const {
  if (v.size() != cols_) throw Error("bad-composition", "modular matvec shape mismatch");
  const auto& k = simd::kernels();
  std::vector<std::uint64_t> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = k.dot(row(i), v.data(), cols_);
  return out;
}

bool ModMatrix::is_zero() const {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

ModMatrix evaluate_mod_p(const Mat& m, const PrimePoint& pt) {
  ModMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) out(i, j) = evaluate_mod_p(m(i, j), pt);
    }
  }
  return out;
}

std::size_t rank_mod_p(ModMatrix m) {
  const auto& k = simd::kernels();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    }
    const std::uint64_t inv = modp::inv(m(rank, c));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      const std::uint64_t f = modp::neg(modp::mul(m(r, c), inv));
      k.axpy(f, m.row(rank), m.row(r), m.cols());
    }
    ++rank;
  }
  return rank;
}

}  // namespace qaffine
