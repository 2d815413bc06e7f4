#include "nilorbit/integer.hpp"

#include <cctype>

#include "nilorbit/error.hpp"

namespace nilorbit {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyRange: return "empty_range";
    case ErrorCode::UndefinedSupport: return "undefined_support";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Divisibility: return "divisibility";
    case ErrorCode::InvalidModulus: return "invalid_modulus";
    case ErrorCode::NotDynamical: return "not_dynamical";
    case ErrorCode::WrongDegree: return "wrong_degree";
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::UnknownSuite: return "unknown_suite";
  }
  return "unknown";
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw Error(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
    }
  }
  Integer value{std::string(digits)};
  return negative ? Integer(-value) : value;
}

}  // namespace nilorbit
