#include "qaffine/scalars/vars.hpp"

#include "qaffine/error.hpp"

namespace qaffine {

VarTable::VarTable() {
  names_ = {"t", "z", "z1", "z2", "z3", "u", "v", "w"};
  for (int i = 0; i <= 8; ++i) names_.push_back("e" + std::to_string(i));
  names_.push_back("eta");
}

VarTable& VarTable::global() {
  static VarTable table;
  return table;
}

std::optional<int> VarTable::find(std::string_view name) const {
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

int VarTable::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown-var", "variable '" + std::string(name) + "' is not registered");
}

int VarTable::intern(std::string_view name) {
  if (auto i = find(name)) return *i;
  if (name.empty()) throw Error("unknown-var", "empty variable name");
  std::lock_guard lock(mutex_);
  if (names_.size() >= kMaxVars) {
    throw Error("unknown-var", "variable table full, cannot add '" + std::string(name) + "'");
  }
  names_.emplace_back(name);
  return static_cast<int>(names_.size() - 1);
}

std::string VarTable::name(int index) const {
  std::lock_guard lock(mutex_);
  if (index < 0 || static_cast<std::size_t>(index) >= names_.size()) {
    throw Error("unknown-var", "variable index " + std::to_string(index) + " out of range");
  }
  return names_[static_cast<std::size_t>(index)];
}

std::size_t VarTable::size() const {
  std::lock_guard lock(mutex_);
  return names_.size();
}

}  // namespace qaffine
