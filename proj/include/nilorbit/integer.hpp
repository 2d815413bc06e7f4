#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nilorbit {

/// Arbitrary-precision signed integer used for every value over Z.
using Integer = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal integer. Throws Error{Parse}.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& value) { return value.str(); }

inline Integer abs(const Integer& value) { return value < 0 ? Integer(-value) : value; }

inline int sign(const Integer& value) { return value.sign(); }

/// Non-negative residue of value modulo m (m > 0).
inline std::uint64_t residue(const Integer& value, std::uint64_t m) {
  Integer rem = value % m;
  if (rem < 0) rem += m;
  return rem.convert_to<std::uint64_t>();
}

inline std::optional<std::int64_t> to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return value.convert_to<std::int64_t>();
}

inline std::optional<std::uint64_t> to_uint64(const Integer& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return value.convert_to<std::uint64_t>();
}

}  // namespace nilorbit
