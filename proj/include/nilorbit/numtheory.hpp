#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <vector>

#include "nilorbit/integer.hpp"

namespace nilorbit {

/// Ascending, duplicate-free set of positive primes.
///
/// Used both for the prime support of an integer and for the finite set of
/// excluded primes that qualifies weak local nilpotency.
class PrimeSet {
 public:
  PrimeSet() = default;

  /// Sorts and deduplicates; throws Error{InvalidArgument} on a non-prime.
  explicit PrimeSet(std::vector<Integer> primes);
  PrimeSet(std::initializer_list<std::uint64_t> primes);

  bool contains(const Integer& p) const;
  bool contains(std::uint64_t p) const;
  bool empty() const noexcept { return primes_.empty(); }
  std::size_t size() const noexcept { return primes_.size(); }
  const std::vector<Integer>& values() const noexcept { return primes_; }
  auto begin() const noexcept { return primes_.begin(); }
  auto end() const noexcept { return primes_.end(); }

  bool is_subset_of(const PrimeSet& other) const;
  PrimeSet united(const PrimeSet& other) const;
  PrimeSet without(const PrimeSet& other) const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  struct Trusted {};
  PrimeSet(Trusted, std::vector<Integer> primes) : primes_(std::move(primes)) {}

  std::vector<Integer> primes_;
};

/// P_A(a): the primes dividing a, minus an excluded set A.
struct PrimeSupport {
  PrimeSet primes;
  PrimeSet excluded;

  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
};

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes in [2, bound], ascending. Throws Error{EmptyRange} when bound < 2.
/// Bounds above 2^20 are sieved in segments.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Shared, immutable prime table covering at least [2, bound]. Callers must
/// stop at bound themselves; the table may extend past it.
std::shared_ptr<const std::vector<std::uint64_t>> prime_table(std::uint64_t bound);

/// Deterministic for every 64-bit n.
bool is_prime(std::uint64_t n);

/// Deterministic below 3.3e24; beyond that a strong-probable-prime test on
/// fixed bases.
bool is_prime(const Integer& n);

/// Prime factorization of |n|, ascending by prime. Throws Error{InvalidArgument}
/// for n = 0.
std::vector<PrimePower> factorize(const Integer& n);

/// Primes dividing a that are not in excluded. Throws Error{UndefinedSupport}
/// for a = 0.
PrimeSupport prime_support(const Integer& a, const PrimeSet& excluded = {});

/// P(a) ⊆ P(b). Throws Error{UndefinedSupport} if either argument is 0.
bool support_subset(const Integer& a, const Integer& b);

/// Exponent k with gamma * alpha^k == beta (k < 0 meaning gamma == beta *
/// alpha^-k), if one exists. For |alpha| = 1 the smallest non-negative such k
/// is returned. Throws Error{InvalidArgument} if any argument is 0.
std::optional<std::int64_t> is_power_ratio(const Integer& alpha, const Integer& beta,
                                           const Integer& gamma);

}  // namespace nilorbit
