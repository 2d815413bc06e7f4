#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilorbit {

enum class ErrorCode {
  EmptyRange,
  UndefinedSupport,
  InvalidArgument,
  Divisibility,
  InvalidModulus,
  NotDynamical,
  WrongDegree,
  OutOfRange,
  Parse,
  UnknownSuite,
};

/// Stable machine-readable name, e.g. "invalid_modulus".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nilorbit
