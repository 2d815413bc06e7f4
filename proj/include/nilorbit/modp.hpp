#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nilorbit/integer.hpp"
#include "nilorbit/numtheory.hpp"
#include "nilorbit/polynomial.hpp"

namespace nilorbit {

/// Single orbit of r under u mod p.
///
/// preperiod/period describe the sequence x_0 = r mod p, x_1, ... so that
/// x_{preperiod} is the first residue on the cycle.
struct ModPResult {
  std::uint64_t p = 0;
  /// Least m >= 1 with u^(m)(r) = 0 mod p. Always <= p when present.
  std::optional<std::uint64_t> m_p;
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;

  friend bool operator==(const ModPResult&, const ModPResult&) = default;
};

enum class Certainty { Proved, Inconclusive };

enum class ScanMode {
  /// Stop at the first witness prime.
  Decision,
  /// Visit every prime up to the bound.
  Table,
};

struct ScanOptions {
  ScanMode mode = ScanMode::Decision;
  /// 0 means the OpenMP default.
  unsigned threads = 1;
};

struct ScanReport {
  Polynomial polynomial;
  Integer r;
  PrimeSet excluded;
  std::uint64_t bound = 0;
  /// Ascending by p. In decision mode the list stops at the first witness.
  std::vector<ModPResult> results;
  /// Primes whose m_p does not exist.
  std::vector<std::uint64_t> witnesses;

  bool witness_found() const noexcept { return !witnesses.empty(); }
  std::optional<std::uint64_t> first_witness() const;
  /// A witness proves non-membership; finding none is only evidence.
  Certainty certainty() const noexcept {
    return witness_found() ? Certainty::Proved : Certainty::Inconclusive;
  }

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// m_p and the cycle structure of r's orbit mod p. At most p steps decide
/// m_p; Brent's method gives the cycle in constant memory. Throws
/// Error{InvalidModulus} unless p is prime.
ModPResult orbit_mod_p(const Polynomial& u, const Integer& r, std::uint64_t p);

/// orbit_mod_p for a polynomial already reduced mod a known prime.
ModPResult orbit_mod_p(const ResiduePolynomial& u, std::uint64_t start);

/// First `steps` residues u^(1)(r), ..., u^(steps)(r) mod p.
std::vector<std::uint64_t> trajectory_mod_p(const Polynomial& u, const Integer& r, std::uint64_t p,
                                            std::uint64_t steps);

/// Residues on the eventual cycle of r's orbit mod p, in orbit order.
std::vector<std::uint64_t> cycle_residues(const Polynomial& u, const Integer& r, std::uint64_t p);

/// Runs orbit_mod_p for every prime p <= bound outside `excluded`.
/// Results are identical for every thread count.
ScanReport weak_local_scan(const Polynomial& u, const Integer& r, const PrimeSet& excluded,
                           std::uint64_t bound, const ScanOptions& options = {});

}  // namespace nilorbit
