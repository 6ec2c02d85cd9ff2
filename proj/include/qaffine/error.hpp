#pragma once

#include <stdexcept>
#include <string>

namespace qaffine {

// Every failure carries a short stable code ("zero-divisor", "bad-point", ...)
// so that callers and the CLI can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace qaffine
