#include "nilorbit/modp.hpp"

#include <algorithm>

#include <omp.h>

#include "nilorbit/error.hpp"

namespace nilorbit {

namespace {

void require_prime_modulus(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidModulus, std::to_string(p) + " is not a prime modulus");
  }
}

constexpr std::uint64_t kChunk = 64;

}  // namespace

std::optional<std::uint64_t> ScanReport::first_witness() const {
  if (witnesses.empty()) return std::nullopt;
  return witnesses.front();
}

ModPResult orbit_mod_p(const ResiduePolynomial& u, std::uint64_t start) {
  ModPResult result;
  result.p = u.modulus();

  // Brent: the hare walks x_1, x_2, ... one step at a time and stops at an
  // index >= preperiod + period, so it sees the first zero if there is one.
  std::uint64_t power = 1, period = 1, hare_index = 1;
  std::uint64_t tortoise = start;
  std::uint64_t hare = u(start);
  if (hare == 0) result.m_p = 1;
  while (tortoise != hare) {
    if (power == period) {
      tortoise = hare;
      power *= 2;
      period = 0;
    }
    hare = u(hare);
    ++hare_index;
    ++period;
    if (hare == 0 && !result.m_p) result.m_p = hare_index;
  }

  tortoise = start;
  hare = start;
  for (std::uint64_t i = 0; i < period; ++i) hare = u(hare);
  std::uint64_t preperiod = 0;
  while (tortoise != hare) {
    tortoise = u(tortoise);
    hare = u(hare);
    ++preperiod;
  }
  result.preperiod = preperiod;
  result.period = period;
  return result;
}

ModPResult orbit_mod_p(const Polynomial& u, const Integer& r, std::uint64_t p) {
  require_dynamical(u);
  require_prime_modulus(p);
  return orbit_mod_p(ResiduePolynomial(u, p), residue(r, p));
}

std::vector<std::uint64_t> trajectory_mod_p(const Polynomial& u, const Integer& r, std::uint64_t p,
                                            std::uint64_t steps) {
  require_dynamical(u);
  require_prime_modulus(p);
  const ResiduePolynomial f(u, p);
  std::vector<std::uint64_t> out;
  out.reserve(steps);
  std::uint64_t x = residue(r, p);
  for (std::uint64_t i = 0; i < steps; ++i) {
    x = f(x);
    out.push_back(x);
  }
  return out;
}

std::vector<std::uint64_t> cycle_residues(const Polynomial& u, const Integer& r, std::uint64_t p) {
  const ModPResult result = orbit_mod_p(u, r, p);
  const ResiduePolynomial f(u, p);
  std::uint64_t x = residue(r, p);
  for (std::uint64_t i = 0; i < result.preperiod; ++i) x = f(x);
  std::vector<std::uint64_t> cycle;
  cycle.reserve(result.period);
  for (std::uint64_t i = 0; i < result.period; ++i) {
    cycle.push_back(x);
    x = f(x);
  }
  return cycle;
}

ScanReport weak_local_scan(const Polynomial& u, const Integer& r, const PrimeSet& excluded,
                           std::uint64_t bound, const ScanOptions& options) {
  require_dynamical(u);
  if (bound < 2) throw Error(ErrorCode::EmptyRange, "prime bound must be at least 2");
  ScanReport report{u, r, excluded, bound, {}, {}};

  auto table = prime_table(bound);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : *table) {
    if (p > bound) break;
    if (!excluded.contains(p)) primes.push_back(p);
  }

  const int threads = options.threads == 0 ? omp_get_max_threads() : static_cast<int>(options.threads);
  // Decision mode walks the primes in ascending chunks so the first witness,
  // and the truncated result list, do not depend on scheduling.
  std::size_t chunk = primes.size();
  if (options.mode == ScanMode::Decision) chunk = threads > 1 ? kChunk * threads : 1;
  std::vector<ModPResult> slots;
  for (std::size_t begin = 0; begin < primes.size(); begin += chunk) {
    const std::size_t end = std::min<std::size_t>(primes.size(), begin + chunk);
    slots.assign(end - begin, ModPResult{});
    const auto count = static_cast<std::int64_t>(end - begin);
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads) if (threads > 1)
    for (std::int64_t i = 0; i < count; ++i) {
      const std::uint64_t p = primes[begin + static_cast<std::size_t>(i)];
      slots[static_cast<std::size_t>(i)] = orbit_mod_p(ResiduePolynomial(u, p), residue(r, p));
    }
    for (const ModPResult& result : slots) {
      report.results.push_back(result);
      if (!result.m_p) {
        report.witnesses.push_back(result.p);
        if (options.mode == ScanMode::Decision) return report;
      }
    }
  }
  return report;
}

}  // namespace nilorbit
