#pragma once

#include <string>
#include <vector>

#include "qaffine/qalgebra/generators.hpp"
#include "qaffine/scalars/matrix.hpp"

namespace qaffine {

// Finite-dimensional representation: one matrix per Chevalley generator.
struct Representation {
  CartanData cartan;
  std::size_t dim = 0;
  std::string name;
  int two_spin = 0;  // 2s for spin reps of U_q(sl2^), 0 otherwise
  std::vector<Mat> ep;
  std::vector<Mat> em;
  std::vector<Mat> k;
  std::vector<Mat> kinv;
  std::vector<Mat> h;  // integer diagonal weights
  GradationSpec gradation;
  std::string spectral_var = "none";

  // Matrix of a generator; Error("bad-generator") for D or a bad index.
  const Mat& matrix(const Generator& g) const;
  Mat& matrix(const Generator& g);
};

}  // namespace qaffine
