#include "nilorbit/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numeric>

#include "nilorbit/error.hpp"

namespace nilorbit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kSegmentThreshold = u64{1} << 20;
constexpr u64 kSegmentSize = u64{1} << 18;
constexpr u64 kTrialDivisionLimit = 1'000'000;

std::vector<u64> simple_sieve(u64 bound) {
  std::vector<u64> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<u64> segmented_sieve(u64 bound) {
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(bound)));
  while (root * root > bound) --root;
  while ((root + 1) * (root + 1) <= bound) ++root;
  const std::vector<u64> base = simple_sieve(std::max<u64>(root, 2));

  std::vector<u64> primes = simple_sieve(std::min(bound, kSegmentThreshold));
  std::vector<char> mark(kSegmentSize);
  for (u64 lo = kSegmentThreshold + 1; lo <= bound; lo += kSegmentSize) {
    const u64 hi = std::min(bound, lo + kSegmentSize - 1);
    std::fill(mark.begin(), mark.end(), 0);
    for (u64 p : base) {
      if (p * p > hi) break;
      u64 start = std::max(p * p, (lo + p - 1) / p * p);
      for (u64 j = start; j <= hi; j += p) mark[j - lo] = 1;
    }
    for (u64 n = lo; n <= hi; ++n) {
      if (!mark[n - lo]) primes.push_back(n);
    }
  }
  return primes;
}

struct PrimeCache {
  std::mutex mutex;
  u64 bound = 0;
  std::shared_ptr<const std::vector<u64>> primes;
};

PrimeCache& prime_cache() {
  static PrimeCache cache;
  return cache;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr std::array<u64, 13> kWitnessBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool strong_probable_prime(u64 n, u64 base, u64 d, unsigned s) {
  u64 x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const Integer& n, const Integer& base, const Integer& d, unsigned s) {
  Integer x = boost::multiprecision::powm(base, d, n);
  const Integer n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n, or n itself when this polynomial constant fails.
template <class T, class Step, class MulMod, class Gcd>
T brent_rho(const T& n, Step step, MulMod mul, Gcd gcd_fn) {
  constexpr std::uint64_t kBatch = 128;
  T y = 2, x = 2, ys = 2, q = 1, g = 1;
  std::uint64_t run = 1;
  auto distance = [](const T& a, const T& b) { return a > b ? T(a - b) : T(b - a); };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < run; ++i) y = step(y);
    std::uint64_t k = 0;
    while (k < run && g == 1) {
      ys = y;
      const std::uint64_t batch = std::min(kBatch, run - k);
      for (std::uint64_t i = 0; i < batch; ++i) {
        y = step(y);
        q = mul(q, distance(x, y));
      }
      g = gcd_fn(q, n);
      k += batch;
    }
    run *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd_fn(distance(x, ys), n);
    } while (g == 1);
  }
  return g;
}

u64 find_factor(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto step = [n, c](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
    auto mul = [n](u64 a, u64 b) { return mul_mod(a, b, n); };
    auto gcd_fn = [](u64 a, u64 b) { return std::gcd(a, b); };
    u64 g = brent_rho<u64>(n, step, mul, gcd_fn);
    if (g != n) return g;
  }
}

Integer find_factor(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned c = 1;; ++c) {
    auto step = [&n, c](const Integer& v) { return Integer((v * v + c) % n); };
    auto mul = [&n](const Integer& a, const Integer& b) { return Integer(a * b % n); };
    auto gcd_fn = [](const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); };
    Integer g = brent_rho<Integer>(n, step, mul, gcd_fn);
    if (g != n) return g;
  }
}

void split(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d;
  if (auto small = to_uint64(n)) {
    d = find_factor(*small);
  } else {
    d = find_factor(n);
  }
  split(d, out);
  split(n / d, out);
}

}  // namespace

PrimeSet::PrimeSet(std::vector<Integer> primes) : primes_(std::move(primes)) {
  for (const Integer& p : primes_) {
    if (p < 2 || !is_prime(p)) {
      throw Error(ErrorCode::InvalidArgument, to_string(p) + " is not a prime");
    }
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> primes)
    : PrimeSet(std::vector<Integer>(primes.begin(), primes.end())) {}

bool PrimeSet::contains(const Integer& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PrimeSet::contains(std::uint64_t p) const {
  for (const Integer& q : primes_) {
    if (q == p) return true;
    if (q > p) return false;
  }
  return false;
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const {
  return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
}

PrimeSet PrimeSet::united(const PrimeSet& other) const {
  std::vector<Integer> merged;
  std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                 std::back_inserter(merged));
  return PrimeSet(Trusted{}, std::move(merged));
}

PrimeSet PrimeSet::without(const PrimeSet& other) const {
  std::vector<Integer> rest;
  std::set_difference(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                      std::back_inserter(rest));
  return PrimeSet(Trusted{}, std::move(rest));
}

std::shared_ptr<const std::vector<std::uint64_t>> prime_table(std::uint64_t bound) {
  if (bound < 2) throw Error(ErrorCode::EmptyRange, "prime bound must be at least 2");
  PrimeCache& cache = prime_cache();
  std::lock_guard lock(cache.mutex);
  if (cache.primes && cache.bound >= bound) return cache.primes;
  auto primes = std::make_shared<const std::vector<u64>>(
      bound <= kSegmentThreshold ? simple_sieve(bound) : segmented_sieve(bound));
  cache.bound = bound;
  cache.primes = primes;
  return primes;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  auto table = prime_table(bound);
  auto last = std::upper_bound(table->begin(), table->end(), bound);
  return {table->begin(), last};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : kWitnessBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 base : kWitnessBases) {
    if (!strong_probable_prime(n, base, d, s)) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (auto small = to_uint64(n)) return is_prime(*small);
  for (u64 p : kWitnessBases) {
    if (n % p == 0) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 base : kWitnessBases) {
    if (!strong_probable_prime(n, Integer(base), d, s)) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(const Integer& n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factorize 0");
  Integer m = abs(n);
  std::vector<PrimePower> factors;
  auto table = prime_table(kTrialDivisionLimit);
  for (u64 p : *table) {
    if (Integer(p) * p > m) break;
    if (m % p != 0) continue;
    PrimePower pp{Integer(p), 0};
    while (m % p == 0) {
      m /= p;
      ++pp.exponent;
    }
    factors.push_back(std::move(pp));
  }
  if (m == 1) return factors;

  std::vector<Integer> large;
  split(m, large);
  std::sort(large.begin(), large.end());
  for (const Integer& q : large) {
    if (!factors.empty() && factors.back().prime == q) {
      ++factors.back().exponent;
    } else {
      factors.push_back({q, 1});
    }
  }
  return factors;
}

PrimeSupport prime_support(const Integer& a, const PrimeSet& excluded) {
  if (a == 0) throw Error(ErrorCode::UndefinedSupport, "prime support of 0 is undefined");
  std::vector<Integer> primes;
  for (const PrimePower& pp : factorize(a)) {
    if (!excluded.contains(pp.prime)) primes.push_back(pp.prime);
  }
  return {PrimeSet(std::move(primes)), excluded};
}

bool support_subset(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) throw Error(ErrorCode::UndefinedSupport, "prime support of 0 is undefined");
  for (const PrimePower& pp : factorize(a)) {
    if (b % pp.prime != 0) return false;
  }
  return true;
}

std::optional<std::int64_t> is_power_ratio(const Integer& alpha, const Integer& beta,
                                           const Integer& gamma) {
  if (alpha == 0 || beta == 0 || gamma == 0) {
    throw Error(ErrorCode::InvalidArgument, "power ratio arguments must be nonzero");
  }
  if (alpha == 1) {
    if (beta == gamma) return 0;
    return std::nullopt;
  }
  if (alpha == -1) {
    if (beta == gamma) return 0;
    if (beta == -gamma) return 1;
    return std::nullopt;
  }
  // Smallest k >= 0 with alpha^k == target, if any.
  auto exponent_of = [&alpha](const Integer& target) -> std::optional<std::int64_t> {
    const Integer bound = abs(target);
    Integer power = 1;
    for (std::int64_t k = 0; abs(power) <= bound; ++k) {
      if (power == target) return k;
      power *= alpha;
    }
    return std::nullopt;
  };
  if (beta % gamma == 0) {
    if (auto k = exponent_of(beta / gamma)) return *k;
  }
  if (gamma % beta == 0) {
    if (auto k = exponent_of(gamma / beta)) return -*k;
  }
  return std::nullopt;
}

}  // namespace nilorbit
