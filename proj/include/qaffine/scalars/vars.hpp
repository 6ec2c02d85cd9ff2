#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qaffine {

inline constexpr std::size_t kMaxVars = 24;

// One exponent per registered variable; negative entries are allowed
// (Laurent monomials).
using Exponents = std::array<std::int16_t, kMaxVars>;

// Process-wide ordered list of variable names. The position of a name fixes
// its place in the lexicographic term order, so the reserved names below are
// registered first and always in the same order.
//
//   t        square root of q (q = t^2)
//   z, z1..  multiplicative spectral ratios
//   u, v, w  additive spectral parameters
//   e0..e8   boundary parameters epsilon_i
//   eta      boundary shift
class VarTable {
 public:
  static VarTable& global();

  std::optional<int> find(std::string_view name) const;
  // Throws Error("unknown-var") when the name is not registered.
  int index(std::string_view name) const;
  // Registers a new name (appended to the order) or returns the existing slot.
  int intern(std::string_view name);
  std::string name(int index) const;
  std::size_t size() const;

 private:
  VarTable();

  mutable std::mutex mutex_;
  std::vector<std::string> names_;
};

inline int var_index(std::string_view name) { return VarTable::global().index(name); }

}  // namespace qaffine
