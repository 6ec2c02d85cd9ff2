#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "qaffine/error.hpp"
#include "qaffine/scalars/modp.hpp"
#include "qaffine/scalars/ratfunc.hpp"

namespace qaffine {

// Dense row-major matrix over an exact scalar type. Products skip zero
// entries, which is where almost all of the work goes for the sparse
// operators built from matrix units.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  // Single matrix unit e_ij scaled by v.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j, T v = T(1)) {
    Matrix m(rows, cols);
    m(i, j) = std::move(v);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& v : data_) n += v.is_zero() ? 0 : 1;
    return n;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
    }
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
    }
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& v : m.data_) v = -v;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("bad-composition", "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (auto& v : m.data_) {
      if (!v.is_zero()) v = v * s;
    }
    return m;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    }
    return m;
  }

  template <class F>
  Matrix map(F&& f) const {
    Matrix m = *this;
    for (auto& v : m.data_) {
      if (!v.is_zero()) v = f(v);
    }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("bad-composition", "matrix sum shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Mat = Matrix<RatFunc>;

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return m;
}

// The flip V1 (x) V2 -> V2 (x) V1.
Mat swap_matrix(std::size_t d1, std::size_t d2);

// Embeds `op`, acting on the ordered tensor product of the listed sites, into
// the full tensor product with the given site dimensions.
Mat embed(const Mat& op, const std::vector<std::size_t>& sites, const std::vector<std::size_t>& dims);

// Trace over the first tensor factor of dimension d0.
Mat partial_trace_first(const Mat& m, std::size_t d0);

Mat substitute(const Mat& m, int var, const RatFunc& value);
Mat substitute(const Mat& m, std::string_view var, const RatFunc& value);
Mat derivative(const Mat& m, int var);

// Commutator AB - BA.
Mat commutator(const Mat& a, const Mat& b);

// Residue matrix mod 2^61-1.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static ModMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::uint64_t* row(std::size_t i) { return data_.data() + i * cols_; }
  const std::uint64_t* row(std::size_t i) const { return data_.data() + i * cols_; }
  const std::vector<std::uint64_t>& data() const { return data_; }

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend ModMatrix operator-(const ModMatrix& a, const ModMatrix& b);
  friend ModMatrix operator+(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

// Entry-wise evaluation; throws Error("bad-point") on a vanishing denominator.
ModMatrix evaluate_mod_p(const Mat& m, const PrimePoint& pt);

std::size_t rank_mod_p(ModMatrix m);

}  // namespace qaffine
