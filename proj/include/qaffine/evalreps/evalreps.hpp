#pragma once

#include <string_view>

#include "json.hpp"
#include "qaffine/qalgebra/hopf.hpp"

namespace qaffine {

// Spin s = two_s / 2 evaluation representation of U_q(sl2^) in the weight
// basis v_0..v_2s with K_1 = diag(t^2s, ..., t^-2s),
// E+_1 v_k = [k]_q v_(k-1), E-_1 v_k = [2s-k]_q v_(k+1),
// E+_0 = E-_1, E-_0 = E+_1, K_0 = K_1^-1. Error("bad-spin") if two_s <= 0.
Representation make_uq_sl2_spin(int two_s);

// Defining n-dimensional representation of U_q(sl_n^). Error("bad-rank") if n < 2.
Representation make_uq_sln_defining(int n);

// tau_z: E+-_i -> z^(+-s_i) E+-_i with z the named variable.
// Error("fractional-grading") when some s_i is not an integer.
Representation apply_gradation_twist(const Representation& rho, const GradationSpec& grad, std::string_view var);
// Same twist with z replaced by an arbitrary nonzero value.
Representation apply_gradation_twist(const Representation& rho, const GradationSpec& grad, const RatFunc& value);

// Ordered tensor product; generators act through the coproduct.
struct TensorRep {
  std::vector<Representation> factors;

  std::size_t dim() const;
  Mat matrix(const Generator& g) const;
  Representation materialize() const;
};

// Error("algebra-mismatch") when the Cartan data differ.
TensorRep tensor_rep(const Representation& rho1, const Representation& rho2);

// "sl2:spin=1/2", "spin:1", "sl3:defining", "sl2:defining".
// Error("bad-rep") when the string is not recognised.
Representation parse_rep_spec(std::string_view spec);

// Sparse entries of a matrix as strings in the polynomial grammar.
nlohmann::json matrix_to_json(const Mat& m);
nlohmann::json rep_to_json(const Representation& rho);

}  // namespace qaffine
