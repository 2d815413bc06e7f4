#pragma once

#include <optional>

#include "nilorbit/error.hpp"

// Code of the nilorbit::Error thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<nilorbit::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const nilorbit::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
