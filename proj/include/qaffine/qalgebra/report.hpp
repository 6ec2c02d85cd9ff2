#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace qaffine {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Named list of pass/fail entries produced by the verifiers.
struct Report {
  std::string subject;
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void merge(const Report& other);
  bool passed() const;
  // First failing check, or nullptr.
  const Check* first_failure() const;
  const Check* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

}  // namespace qaffine
