#include "nilorbit/orbits.hpp"

#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "nilorbit/error.hpp"
#include "nilorbit/numtheory.hpp"

namespace nilorbit {

namespace {

using VisitIndex = std::unordered_map<Integer, std::uint64_t, boost::hash<Integer>>;

EntersCycle make_cycle(const std::vector<Integer>& sequence, std::uint64_t first, std::uint64_t repeat) {
  EntersCycle cycle{first, repeat - first, {}};
  cycle.cycle.assign(sequence.begin() + static_cast<std::ptrdiff_t>(first),
                     sequence.begin() + static_cast<std::ptrdiff_t>(repeat));
  return cycle;
}

}  // namespace

Integer escape_bound(const Polynomial& u) {
  if (u.degree() < 2) {
    throw Error(ErrorCode::WrongDegree, "escape bound needs degree at least 2");
  }
  Integer tail = 2;
  for (int i = 0; i < u.degree(); ++i) tail += abs(u[static_cast<std::size_t>(i)]);
  const Integer lead = abs(u.leading());
  Integer bound = (tail + lead - 1) / lead;
  return bound < 1 ? Integer(1) : bound;
}

OrbitOutcome orbit(const Polynomial& u, const Integer& r, std::uint64_t max_steps,
                   std::size_t trajectory_cap) {
  require_dynamical(u);
  const bool bounded = u.degree() >= 2;
  const Integer bound = bounded ? escape_bound(u) : Integer(0);

  OrbitOutcome outcome;
  // Full sequence x_0, x_1, ... kept for cycle reporting. Degree >= 2 keeps
  // at most 2B values; degree 1 at most max_steps.
  std::vector<Integer> sequence{r};
  VisitIndex seen{{r, 0}};
  if (bounded && abs(r) >= bound) {
    outcome.status = Escapes{0, bound};
    return outcome;
  }
  Integer x = r;
  for (std::uint64_t k = 1; bounded || k <= max_steps; ++k) {
    x = eval(u, x);
    if (outcome.trajectory.size() < trajectory_cap) outcome.trajectory.push_back(x);
    if (x == 0) {
      outcome.status = HitsZero{k};
      return outcome;
    }
    if (auto it = seen.find(x); it != seen.end()) {
      outcome.status = make_cycle(sequence, it->second, k);
      return outcome;
    }
    if (bounded && abs(x) >= bound) {
      outcome.status = Escapes{k, bound};
      return outcome;
    }
    seen.emplace(x, k);
    sequence.push_back(x);
  }
  outcome.status = Exhausted{max_steps};
  return outcome;
}

std::optional<Integer> nilpotency_index(const Polynomial& u, const Integer& r) {
  require_dynamical(u);
  if (u.degree() >= 2) {
    OrbitOutcome outcome = orbit(u, r, 0, 0);
    if (const auto* hit = std::get_if<HitsZero>(&outcome.status)) return Integer(hit->index);
    return std::nullopt;
  }

  const Integer& a = u[1];
  const Integer& b = u[0];
  if (a == 1) {
    if (b == 0) return r == 0 ? std::optional<Integer>(1) : std::nullopt;
    // r + n b = 0
    if (r % b != 0) return std::nullopt;
    const Integer n = -r / b;
    return n >= 1 ? std::optional<Integer>(n) : std::nullopt;
  }
  if (a == -1) {
    if (b == r) return Integer(1);
    if (r == 0) return Integer(2);
    return std::nullopt;
  }
  // a^n (r(a-1) + b) = b
  const Integer g = r * (a - 1) + b;
  if (g == 0) return r == 0 ? std::optional<Integer>(1) : std::nullopt;
  if (b == 0) return std::nullopt;
  auto k = is_power_ratio(a, b, g);
  if (k && *k >= 1) return Integer(*k);
  return std::nullopt;
}

}  // namespace nilorbit
