#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "qaffine/qalgebra/cartan.hpp"

namespace qaffine {

enum class GenKind { Ep, Em, K, Kinv, H, D };

// A Chevalley generator label. K_i stands for q_i^{H_i/2}.
struct Generator {
  GenKind kind = GenKind::K;
  int index = 0;

  static Generator ep(int i) { return {GenKind::Ep, i}; }
  static Generator em(int i) { return {GenKind::Em, i}; }
  static Generator k(int i) { return {GenKind::K, i}; }
  static Generator kinv(int i) { return {GenKind::Kinv, i}; }
  static Generator h(int i) { return {GenKind::H, i}; }
  static Generator d() { return {GenKind::D, 0}; }

  // "E+1", "E-0", "K2", "K2^-1", "H1", "D".
  std::string label() const;
  static Generator parse(std::string_view text);

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// E+_i, E-_i, K_i, K_i^-1 for every node.
std::vector<Generator> chevalley_generators(const CartanData& c);

// Gradation exponents s_i: tau_z(E+-_i) = z^(+-s_i) E+-_i.
struct GradationSpec {
  std::string name;
  std::vector<mpq_class> s;

  static GradationSpec homogeneous(const CartanData& c);
  static GradationSpec principal(const CartanData& c);
  static GradationSpec spin(const CartanData& c);
  // "homogeneous", "principal" or "spin"; Error("bad-gradation") otherwise.
  static GradationSpec named(std::string_view name, const CartanData& c);

  GradationSpec negated() const;
};

}  // namespace qaffine
