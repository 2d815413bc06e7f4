#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilorbit/classify.hpp"
#include "nilorbit/integer.hpp"
#include "nilorbit/modp.hpp"
#include "nilorbit/numtheory.hpp"
#include "nilorbit/polynomial.hpp"

namespace nilorbit {

/// Finite universe of polynomials: every degree in [min_degree, max_degree],
/// every coefficient in [min_coefficient, max_coefficient], leading
/// coefficient nonzero.
struct CoefficientBox {
  int min_degree = 1;
  int max_degree = 1;
  std::int64_t min_coefficient = 0;
  std::int64_t max_coefficient = 0;
  Integer r = 0;
  PrimeSet excluded;
  std::uint64_t prime_bound = 1000;

  bool contains(const Polynomial& u) const;
};

/// Throws Error{InvalidArgument} unless min_degree >= 1, the ranges are
/// ordered and prime_bound >= 2.
void validate(const CoefficientBox& box);

/// Random-access view of a box in degree-major order, lexicographic on the
/// coefficient tuple (c_0, ..., c_d) within a degree.
class PolynomialEnumerator {
 public:
  explicit PolynomialEnumerator(const CoefficientBox& box);

  std::uint64_t size() const noexcept { return total_; }
  Polynomial operator[](std::uint64_t index) const;

 private:
  std::int64_t min_coefficient_;
  std::uint64_t width_;
  std::vector<std::int64_t> leading_values_;
  std::vector<int> degrees_;
  std::vector<std::uint64_t> offsets_;
  std::uint64_t total_ = 0;
};

std::vector<Polynomial> enumerate_polynomials(const CoefficientBox& box);

struct ValidationEntry {
  Classification classification;
  /// First witness of the independent scan, if any.
  std::optional<std::uint64_t> scan_witness;
  std::uint64_t primes_scanned = 0;
};

struct Contradiction {
  Polynomial polynomial;
  Classification classification;
  std::optional<std::uint64_t> scan_witness;
  std::string reason;
};

struct ValidationReport {
  CoefficientBox box;
  std::map<Verdict, std::uint64_t> counts;
  /// One entry per enumerated polynomial, in enumeration order.
  std::vector<ValidationEntry> entries;
  std::vector<Contradiction> contradictions;
  /// Indices into entries: non-member verdicts without a witness <= bound.
  std::vector<std::size_t> inconclusives;
  double elapsed_seconds = 0;

  bool passed() const noexcept { return contradictions.empty(); }
};

struct ValidationOptions {
  /// 0 means the OpenMP default.
  unsigned threads = 0;
};

/// Classifies every polynomial of the box and checks each verdict against an
/// independent prime scan up to the box's bound.
ValidationReport cross_validate(const CoefficientBox& box, const ValidationOptions& options = {});

struct SuiteOptions {
  std::optional<std::uint64_t> prime_bound;
  std::optional<PrimeSet> excluded;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<ValidationReport> reports;
  /// One line per failed assertion.
  std::vector<std::string> failures;
  /// Informational lines (counts, spot-check values).
  std::vector<std::string> notes;
};

/// "thm4.1", "cor4.2", "cor4.3", "thm4.4", "cor4.5", "thm5.1", "cor5.2",
/// "thm5.3", "cor5.4", "fact3.1", "lemma3.2-contrapositive".
const std::vector<std::string>& suite_names();

/// Runs a named suite on its canonical box. Throws Error{UnknownSuite}.
SuiteResult theorem_suite(std::string_view name, const SuiteOptions& options = {});

/// Primes p <= prime_bound dividing no gamma * alpha^n - beta, 1 <= n <= max_exponent.
std::vector<std::uint64_t> power_ratio_free_primes(const Integer& alpha, const Integer& beta,
                                                   const Integer& gamma, std::uint64_t prime_bound,
                                                   std::uint64_t max_exponent);

struct ExploreEntry {
  Integer r;
  std::optional<Integer> nilpotency_index;
  Classification classification;
};

/// Finite window of N(u) = {r : u nilpotent at r} and
/// LN(u) = {r : u locally nilpotent at r}.
struct ExploreReport {
  Polynomial polynomial;
  std::uint64_t range = 0;
  std::uint64_t prime_bound = 0;
  /// N(u) ∩ [-range, range], exact.
  std::vector<Integer> nilpotent_points;
  /// LN(u) ∩ [-range, range] from classify verdicts.
  std::vector<Integer> locally_nilpotent_points;
  std::vector<ExploreEntry> entries;
};

ExploreReport explore(const Polynomial& u, std::uint64_t range, std::uint64_t prime_bound,
                      unsigned threads = 0);

}  // namespace nilorbit
