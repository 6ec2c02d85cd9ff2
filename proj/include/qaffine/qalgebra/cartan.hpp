#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace qaffine {

// Extended Cartan matrix of an untwisted affine algebra, nodes 0..r.
struct CartanData {
  std::string name;
  int rank = 0;
  std::vector<std::vector<int>> a;
  std::vector<int> d;       // symmetrizers
  std::vector<int> labels;  // Kac labels, labels[0] = 1

  int nodes() const { return rank + 1; }
  friend bool operator==(const CartanData&, const CartanData&) = default;

  // Throws Error("bad-cartan") naming the first violated invariant:
  // symmetrizable, a_ii = 2, a_ij <= 0, positive semi-definite of rank r,
  // and sum_j labels_j * a_ij = 0.
  void validate() const;

  nlohmann::json to_json() const;
  static CartanData from_json(const nlohmann::json& j);
};

// A_1^(1): [[2,-2],[-2,2]].
CartanData affine_a1();
// A_n^(1) for 1 <= n <= 8 (cyclic Dynkin diagram; n = 1 gives affine_a1).
CartanData affine_a(int n);

}  // namespace qaffine
