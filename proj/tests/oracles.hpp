#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond Integer and Polynomial storage: no sieve, no closed forms, no cycle
// finding, no escape bounds.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "nilorbit/integer.hpp"
#include "nilorbit/polynomial.hpp"

namespace oracle {

using nilorbit::Integer;
using nilorbit::Polynomial;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

// Evaluates by summing c_i x^i term by term.
inline Integer eval(const Polynomial& u, const Integer& x) {
  Integer sum = 0, power = 1;
  for (const Integer& c : u.coefficients()) {
    sum += c * power;
    power *= x;
  }
  return sum;
}

inline std::uint64_t mod(const Integer& x, std::uint64_t p) {
  Integer r = x % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

struct ModP {
  std::optional<std::uint64_t> m_p;
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;
};

// Walks the residues from r mod p, remembering every position.
inline ModP orbit_mod_p(const Polynomial& u, const Integer& r, std::uint64_t p) {
  ModP out;
  std::map<std::uint64_t, std::uint64_t> seen;
  std::uint64_t x = mod(r, p);
  for (std::uint64_t k = 0;; ++k) {
    auto [it, fresh] = seen.emplace(x, k);
    if (!fresh) {
      out.preperiod = it->second;
      out.period = k - it->second;
      return out;
    }
    x = mod(oracle::eval(u, Integer(x)), p);
    if (x == 0 && !out.m_p) out.m_p = k + 1;
  }
}

enum class Fate { HitsZero, Cycles, Diverges, Unknown };

struct Orbit {
  Fate fate = Fate::Unknown;
  std::uint64_t index = 0;  // HitsZero
  std::uint64_t preperiod = 0, period = 0;  // Cycles, counted from x_0 = r
};

// Iterates up to max_steps, stopping on zero, on a repeated value, or once
// |x| exceeds magnitude_cap (reported as Diverges).
inline Orbit orbit(const Polynomial& u, const Integer& r, std::uint64_t max_steps,
                   const Integer& magnitude_cap) {
  Orbit out;
  std::map<Integer, std::uint64_t> seen{{r, 0}};
  Integer x = r;
  for (std::uint64_t k = 1; k <= max_steps; ++k) {
    x = oracle::eval(u, x);
    if (x == 0) {
      out.fate = Fate::HitsZero;
      out.index = k;
      return out;
    }
    auto [it, fresh] = seen.emplace(x, k);
    if (!fresh) {
      out.fate = Fate::Cycles;
      out.preperiod = it->second;
      out.period = k - it->second;
      return out;
    }
    if (nilorbit::abs(x) > magnitude_cap) {
      out.fate = Fate::Diverges;
      return out;
    }
  }
  return out;
}

// Nilpotency index of a x + b at r: 10^4 steps, stopping on a repeat or once
// |x| > |b| with |a| >= 2, since then |a x + b| > |x| forever.
inline std::optional<std::uint64_t> linear_nilpotency(std::int64_t a, std::int64_t b, std::int64_t r) {
  std::set<Integer> seen{Integer(r)};
  Integer x = r;
  for (std::uint64_t k = 1; k <= 10'000; ++k) {
    x = a * x + b;
    if (x == 0) return k;
    if (!seen.insert(x).second) return std::nullopt;
    if (std::abs(a) >= 2 && nilorbit::abs(x) > std::abs(b)) return std::nullopt;
  }
  return std::nullopt;
}

// Factorization by trial division.
inline std::map<Integer, unsigned> factorize(Integer n) {
  std::map<Integer, unsigned> out;
  n = nilorbit::abs(n);
  for (Integer d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int min_degree, int max_degree, int c) {
  std::uniform_int_distribution<int> degree(min_degree, max_degree);
  std::uniform_int_distribution<int> coefficient(-c, c);
  std::vector<Integer> coefficients(static_cast<std::size_t>(degree(rng)) + 1);
  for (auto& v : coefficients) v = coefficient(rng);
  while (coefficients.back() == 0) coefficients.back() = coefficient(rng);
  return Polynomial(std::move(coefficients));
}

}  // namespace oracle
