#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nilorbit/integer.hpp"
#include "nilorbit/modp.hpp"
#include "nilorbit/numtheory.hpp"
#include "nilorbit/polynomial.hpp"

namespace nilorbit {

inline constexpr std::uint64_t kDefaultPrimeBound = 10'000;

enum class Verdict {
  /// 0 lies on the orbit over Z.
  Nilpotent,
  /// Locally nilpotent (A empty) without being nilpotent.
  InSr,
  /// m_p exists for every prime outside A, and u is not nilpotent.
  WeaklyLocallyNilpotentOutsideA,
  /// Some prime outside A has no m_p.
  NotWeaklyLocallyNilpotent,
  /// No classification result covers this query.
  OutOfExactScope,
};

std::string_view verdict_name(Verdict verdict) noexcept;

struct Query {
  Polynomial polynomial;
  Integer r;
  PrimeSet excluded;
};

struct Classification {
  Verdict verdict = Verdict::OutOfExactScope;
  /// Nilpotency index, for Nilpotent.
  std::optional<Integer> index;
  /// A prime outside A whose m_p does not exist. Optional even for
  /// NotWeaklyLocallyNilpotent: the verdict is exact, the witness is a bonus
  /// certificate found by a bounded search.
  std::optional<std::uint64_t> witness;
  /// Tag of the result that decided the verdict, e.g. "Thm4.4(2)".
  std::string provenance;
  Certainty certainty = Certainty::Proved;
  Query query;
  /// Scan evidence attached to OutOfExactScope.
  std::optional<ScanReport> scan;

  bool is_member() const noexcept {
    return verdict == Verdict::Nilpotent || verdict == Verdict::InSr ||
           verdict == Verdict::WeaklyLocallyNilpotentOutsideA;
  }
};

struct ClassifyOptions {
  /// Witness primes are searched up to this bound.
  std::uint64_t witness_bound = kDefaultPrimeBound;
  unsigned threads = 1;
};

/// Membership in L_{1,∅}: u(1) = 0, or u(1) = 2 and u(2) = 0, or
/// u(1) = 2, u(2) = 3 and u(3) = 0 (nilpotent of index 1, 2, 3), or u = x + 1.
Classification classify_at_one(const Polynomial& u, const ClassifyOptions& options = {});

/// Membership in L_{-1,∅} through the conjugate v(x) = -u(-x) at 1.
Classification classify_at_minus_one(const Polynomial& u, const ClassifyOptions& options = {});

/// Membership in L_{0,∅}. Nilpotent members have index 1 or 2; the
/// non-nilpotent ones are x + b (b != 0) and a x + b with P(a) ⊆ P(b).
Classification classify_at_zero(const Polynomial& u, const ClassifyOptions& options = {});

/// Membership of a x + b in L_{1,A}^1. Throws Error{InvalidArgument} for a = 0.
Classification classify_linear_at_one(const Integer& a, const Integer& b, const PrimeSet& excluded,
                                      const ClassifyOptions& options = {});

/// Membership of a x + b in S_r for |r| >= 2; negative r is handled through
/// conjugation. Maps satisfying the power relation u(r) - r = a^m b that
/// match no listed form are decided by checking m_p at the primes of
/// a b (a - 1) (provenance "Rem3.3+FinitePrimes"). Throws Error{InvalidArgument} for a = 0 and Error{OutOfRange}
/// for |r| <= 1.
Classification classify_linear_sr(const Integer& a, const Integer& b, const Integer& r,
                                  const ClassifyOptions& options = {});

/// Master dispatch. Exact nilpotency first; then degree >= 2 is never weakly
/// locally nilpotent outside a finite set, and degree 1 goes to the
/// classifier for its base point. Linear queries with |r| >= 2 and A != ∅ are
/// reduced to base point 1 when r | u(0), otherwise reported OutOfExactScope.
Classification classify(const Polynomial& u, const Integer& r, const PrimeSet& excluded = {},
                        const ClassifyOptions& options = {});

/// Least witness prime <= bound outside `excluded`, if any.
std::optional<std::uint64_t> find_witness(const Polynomial& u, const Integer& r,
                                          const PrimeSet& excluded, std::uint64_t bound,
                                          unsigned threads = 1);

}  // namespace nilorbit
