#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "nilorbit/integer.hpp"
#include "nilorbit/polynomial.hpp"

namespace nilorbit {

/// Display cap for degree-1 orbits; decisions never depend on it.
inline constexpr std::uint64_t kDefaultMaxSteps = 64;
inline constexpr std::size_t kDefaultTrajectoryCap = 64;

/// u^(index)(r) = 0 and no earlier iterate is 0.
struct HitsZero {
  std::uint64_t index = 0;
};

/// The sequence r, u(r), u(u(r)), ... repeats a value. Indices count from
/// r itself at position 0, so x_preperiod is the first value on the cycle.
struct EntersCycle {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;
  std::vector<Integer> cycle;
};

/// |u^(step)(r)| >= escape_bound: the orbit diverges from here on.
struct Escapes {
  std::uint64_t step = 0;
  Integer escape_bound;
};

/// Degree-1 orbit that neither hit 0 nor repeated within max_steps.
struct Exhausted {
  std::uint64_t max_steps = 0;
};

using OrbitStatus = std::variant<HitsZero, EntersCycle, Escapes, Exhausted>;

struct OrbitOutcome {
  OrbitStatus status;
  /// u^(1)(r), u^(2)(r), ... truncated to the trajectory cap.
  std::vector<Integer> trajectory;
};

/// B = max(1, ceil((2 + sum_{i<d} |c_i|) / |c_d|)). Every |x| >= B has
/// |u(x)| >= 2|x|. Throws Error{WrongDegree} when degree < 2.
Integer escape_bound(const Polynomial& u);

/// Follows x_{k+1} = u(x_k) from x_0 = r until it hits zero, repeats, or
/// (degree >= 2) escapes. max_steps only limits degree-1 orbits; degree >= 2
/// always terminates since non-escaped values lie in (-B, B).
OrbitOutcome orbit(const Polynomial& u, const Integer& r,
                   std::uint64_t max_steps = kDefaultMaxSteps,
                   std::size_t trajectory_cap = kDefaultTrajectoryCap);

/// Least n >= 1 with u^(n)(r) = 0, decided exactly for every degree.
///
/// Degree 1 uses closed forms: the identity map is nilpotent only at 0 with
/// index 1, x -> -x + b has u^(2) = id, and |a| >= 2 reduces to a power
/// ratio. Degree >= 2 runs the terminating orbit search.
std::optional<Integer> nilpotency_index(const Polynomial& u, const Integer& r);

}  // namespace nilorbit
