#include "nilorbit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include <omp.h>

#include "nilorbit/error.hpp"
#include "nilorbit/orbits.hpp"

namespace nilorbit {

namespace {

using PolySet = std::set<Polynomial>;

constexpr std::uint64_t kIndexRecheckLimit = 10'000;

int thread_count(unsigned requested) {
  return requested == 0 ? omp_get_max_threads() : static_cast<int>(requested);
}

// ---------------------------------------------------------------------------
// Template families. Built from the statements of the classification lists by
// multiplying out cofactors and products of primes; nothing here calls the
// classifier.

Polynomial multiply(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<Integer> out(lhs.coefficients().size() + rhs.coefficients().size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coefficients().size(); ++i) {
    for (std::size_t j = 0; j < rhs.coefficients().size(); ++j) {
      out[i + j] += lhs.coefficients()[i] * rhs.coefficients()[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial add(const Polynomial& lhs, const Polynomial& rhs) {
  const std::size_t n = std::max(lhs.coefficients().size(), rhs.coefficients().size());
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lhs[i] + rhs[i];
  return Polynomial(std::move(out));
}

Polynomial from_roots(const std::vector<std::int64_t>& roots) {
  Polynomial m{1};
  for (std::int64_t k : roots) m = multiply(m, Polynomial{Integer(-k), 1});
  return m;
}

Integer max_magnitude(const Polynomial& u) {
  Integer m = 0;
  for (const Integer& c : u.coefficients()) m = std::max(m, abs(c));
  return m;
}

// Calls f on every polynomial of degree <= max_degree with coefficients in
// [-bound, bound], the zero polynomial included. A fixed constant term pins c_0.
void for_each_cofactor(int max_degree, const Integer& bound, const std::optional<Integer>& fixed_constant,
                       const std::function<void(const Polynomial&)>& f) {
  if (max_degree < 0) {
    f(Polynomial{});
    return;
  }
  std::vector<Integer> c(static_cast<std::size_t>(max_degree) + 1, -bound);
  if (fixed_constant) c[0] = *fixed_constant;
  const std::size_t first_free = fixed_constant ? 1 : 0;
  if (first_free >= c.size()) {
    f(Polynomial(c));
    return;
  }
  while (true) {
    f(Polynomial(c));
    std::size_t i = first_free;
    while (i < c.size() && c[i] == bound) c[i++] = -bound;
    if (i == c.size()) return;
    ++c[i];
  }
}

// Members of box of the form offset + p(x) * prod (x - k). The cofactor bound
// comes from synthetic division: dividing by (x - k) scales coefficient
// magnitudes by at most 1 + |k| + ... + |k|^(D-1).
PolySet multiples_in_box(const CoefficientBox& box, const std::vector<std::int64_t>& roots,
                         const Polynomial& offset, bool nonzero_cofactor,
                         const std::optional<Integer>& fixed_constant = std::nullopt) {
  const Polynomial modulus = from_roots(roots);
  const int cofactor_degree = box.max_degree - static_cast<int>(roots.size());
  Integer bound = std::max(abs(Integer(box.min_coefficient)), abs(Integer(box.max_coefficient))) +
                  max_magnitude(offset);
  for (std::int64_t k : roots) {
    Integer factor = 0, power = 1;
    for (int j = 0; j < box.max_degree; ++j) {
      factor += power;
      power *= std::abs(k);
    }
    bound *= std::max(factor, Integer(1));
  }
  PolySet out;
  for_each_cofactor(cofactor_degree, bound, fixed_constant, [&](const Polynomial& p) {
    if (nonzero_cofactor && p == Polynomial{}) return;
    Polynomial u = add(offset, multiply(p, modulus));
    if (box.contains(u)) out.insert(std::move(u));
  });
  return out;
}

std::vector<Integer> trial_prime_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> primes;
  for (Integer q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    primes.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// All products prod q_i^{s_i} <= limit over the given primes, with the
// exponent tuples that produced them.
struct SmoothNumber {
  Integer value;
  std::vector<unsigned> exponents;
};

std::vector<SmoothNumber> smooth_numbers(const std::vector<Integer>& primes, const Integer& limit) {
  std::vector<SmoothNumber> out{{Integer(1), std::vector<unsigned>(primes.size(), 0)}};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::size_t existing = out.size();
    for (std::size_t j = 0; j < existing; ++j) {
      SmoothNumber next = out[j];
      while (true) {
        next.value *= primes[i];
        ++next.exponents[i];
        if (next.value > limit) break;
        out.push_back(next);
      }
    }
  }
  return out;
}

Integer coefficient_limit(const CoefficientBox& box) {
  return std::max(abs(Integer(box.min_coefficient)), abs(Integer(box.max_coefficient)));
}

void insert_linear(PolySet& set, const CoefficientBox& box, const Integer& a, const Integer& b) {
  if (a == 0) return;
  Polynomial u = Polynomial::linear(a, b);
  if (box.contains(u)) set.insert(std::move(u));
}

PolySet united(std::initializer_list<PolySet> parts) {
  PolySet out;
  for (const PolySet& part : parts) out.insert(part.begin(), part.end());
  return out;
}

// The L_{1,∅} list and its image at -1.
PolySet at_one_members(const CoefficientBox& box, bool at_minus_one) {
  const std::int64_t s = at_minus_one ? -1 : 1;
  const Polynomial index2 = at_minus_one ? Polynomial{-4, -2} : Polynomial{4, -2};
  const Polynomial index3 = at_minus_one ? Polynomial{3, 7, 2} : Polynomial{-3, 7, -2};
  PolySet fixed;
  insert_linear(fixed, box, 1, s);
  return united({multiples_in_box(box, {s}, Polynomial{}, true),
                 multiples_in_box(box, {s, 2 * s}, index2, false),
                 multiples_in_box(box, {s, 2 * s, 3 * s}, index3, false), fixed});
}

PolySet at_zero_non_nilpotent(const CoefficientBox& box) {
  PolySet out;
  for (std::int64_t b = box.min_coefficient; b <= box.max_coefficient; ++b) {
    if (b == 0) continue;
    insert_linear(out, box, 1, b);
    const std::vector<Integer> primes = trial_prime_divisors(b);
    for (const SmoothNumber& a : smooth_numbers(primes, coefficient_limit(box))) {
      if (a.value == 1) continue;
      insert_linear(out, box, a.value, b);
      insert_linear(out, box, -a.value, b);
    }
  }
  return out;
}

PolySet at_zero_nilpotent(const CoefficientBox& box) {
  PolySet out = multiples_in_box(box, {0}, Polynomial{}, true);
  for (std::int64_t a = box.min_coefficient; a <= box.max_coefficient; ++a) {
    if (a == 0) continue;
    PolySet part = multiples_in_box(box, {a}, Polynomial{}, true, Integer(-1));
    out.insert(part.begin(), part.end());
  }
  return out;
}

std::vector<Integer> excluded_values(const PrimeSet& excluded) { return excluded.values(); }

// Non-nilpotent part of L_{1,A}^1.
PolySet linear_at_one_non_nilpotent(const CoefficientBox& box, const PrimeSet& excluded) {
  PolySet out;
  for (const SmoothNumber& q : smooth_numbers(excluded_values(excluded), coefficient_limit(box))) {
    insert_linear(out, box, 1, q.value);
    if (q.value != 1) {
      insert_linear(out, box, 1, -q.value);
      insert_linear(out, box, q.value, 1);
      insert_linear(out, box, -q.value, 1);
    }
  }
  if (excluded.contains(std::uint64_t{2})) insert_linear(out, box, -2, -1);
  return out;
}

PolySet linear_at_one_members(const CoefficientBox& box, const PrimeSet& excluded) {
  PolySet out = linear_at_one_non_nilpotent(box, excluded);
  insert_linear(out, box, 1, -1);
  for (std::int64_t a = box.min_coefficient; a <= box.max_coefficient; ++a) insert_linear(out, box, a, -a);
  insert_linear(out, box, -2, 4);
  return out;
}

// S_r for r >= 2, optionally mapped to -r through (a, b) -> (a, -b).
PolySet linear_sr_members(const CoefficientBox& box, const Integer& r, bool conjugated) {
  const std::vector<Integer> primes = trial_prime_divisors(r);
  std::vector<unsigned> r_exponents;
  for (const Integer& q : primes) {
    unsigned e = 0;
    for (Integer m = r; m % q == 0; m /= q) ++e;
    r_exponents.push_back(e);
  }
  const Integer sign = conjugated ? -1 : 1;
  PolySet out;
  for (const SmoothNumber& s : smooth_numbers(primes, coefficient_limit(box))) {
    insert_linear(out, box, 1, sign * s.value);
    bool exceeds = false;
    for (std::size_t i = 0; i < primes.size(); ++i) exceeds = exceeds || s.exponents[i] > r_exponents[i];
    if (exceeds) insert_linear(out, box, 1, -sign * s.value);
    if (s.value != 1) {
      insert_linear(out, box, s.value, sign * r);
      insert_linear(out, box, -s.value, sign * r);
    }
  }
  if (r % 2 == 0) insert_linear(out, box, -2, -sign * r);
  return out;
}

// ---------------------------------------------------------------------------

std::string describe(const PolySet& set, std::size_t limit = 6) {
  std::ostringstream out;
  std::size_t shown = 0;
  for (const Polynomial& u : set) {
    if (shown++ == limit) {
      out << " ...";
      break;
    }
    out << (shown == 1 ? "" : ", ") << to_display(u);
  }
  return out.str();
}

std::string box_label(const CoefficientBox& box) {
  std::ostringstream out;
  out << "r=" << box.r;
  if (!box.excluded.empty()) {
    out << " A={";
    for (std::size_t i = 0; i < box.excluded.size(); ++i) {
      out << (i ? "," : "") << box.excluded.values()[i];
    }
    out << "}";
  }
  return out.str();
}

PolySet select(const ValidationReport& report, const std::function<bool(const Classification&)>& keep) {
  PolySet out;
  for (const ValidationEntry& e : report.entries) {
    if (keep(e.classification)) out.insert(e.classification.query.polynomial);
  }
  return out;
}

bool is_member(const Classification& c) { return c.is_member(); }
bool is_non_nilpotent_member(const Classification& c) {
  return c.is_member() && c.verdict != Verdict::Nilpotent;
}
bool is_sr(const Classification& c) { return c.verdict == Verdict::InSr; }

void expect_equal_sets(SuiteResult& suite, const std::string& what, const PolySet& actual,
                       const PolySet& expected) {
  PolySet missing, extra;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::inserter(missing, missing.end()));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::inserter(extra, extra.end()));
  if (missing.empty() && extra.empty()) {
    suite.notes.push_back(what + ": " + std::to_string(actual.size()) + " polynomials match the template list");
    return;
  }
  std::string line = what + ": classifier and template list differ";
  if (!missing.empty()) line += "; template only: " + describe(missing);
  if (!extra.empty()) line += "; classifier only: " + describe(extra);
  suite.failures.push_back(line);
}

void absorb(SuiteResult& suite, ValidationReport report, bool inconclusive_budget_zero) {
  const std::string label = box_label(report.box);
  for (const Contradiction& c : report.contradictions) {
    suite.failures.push_back(label + ": contradiction at " + to_display(c.polynomial) + ": " + c.reason);
  }
  if (inconclusive_budget_zero && !report.inconclusives.empty()) {
    const auto& first = report.entries[report.inconclusives.front()].classification;
    suite.failures.push_back(label + ": " + std::to_string(report.inconclusives.size()) +
                             " inconclusive verdicts, first " + to_display(first.query.polynomial));
  }
  suite.reports.push_back(std::move(report));
}

CoefficientBox make_box(int max_degree, std::int64_t c, const Integer& r, std::uint64_t prime_bound,
                        PrimeSet excluded = {}) {
  CoefficientBox box;
  box.min_degree = 1;
  box.max_degree = max_degree;
  box.min_coefficient = -c;
  box.max_coefficient = c;
  box.r = r;
  box.excluded = std::move(excluded);
  box.prime_bound = prime_bound;
  return box;
}

void run_at_one(SuiteResult& suite, const SuiteOptions& options, bool at_minus_one) {
  const Integer r = at_minus_one ? -1 : 1;
  auto box = make_box(2, 6, r, options.prime_bound.value_or(1000));
  ValidationReport report = cross_validate(box, {options.threads});
  const std::string name = at_minus_one ? "L_{-1}" : "L_1";
  expect_equal_sets(suite, name + " members", select(report, is_member), at_one_members(box, at_minus_one));
  PolySet singleton;
  insert_linear(singleton, box, 1, at_minus_one ? -1 : 1);
  expect_equal_sets(suite, name + " non-nilpotent members", select(report, is_sr), singleton);
  for (const ValidationEntry& e : report.entries) {
    const auto& c = e.classification;
    if (c.verdict == Verdict::Nilpotent && (*c.index < 1 || *c.index > 3)) {
      suite.failures.push_back("nilpotency index " + to_string(*c.index) + " outside {1,2,3} for " +
                               to_display(c.query.polynomial));
    }
  }
  absorb(suite, std::move(report), true);
}

void run_singleton(SuiteResult& suite, const SuiteOptions& options) {
  for (int s : {1, -1}) {
    auto box = make_box(1, 100, s, options.prime_bound.value_or(10'000));
    ValidationReport report = cross_validate(box, {options.threads});
    PolySet expected;
    insert_linear(expected, box, 1, s);
    expect_equal_sets(suite, "S_" + std::to_string(s), select(report, is_sr), expected);
    std::uint64_t witnessed = 0;
    for (const ValidationEntry& e : report.entries) {
      const auto& c = e.classification;
      if (c.verdict == Verdict::NotWeaklyLocallyNilpotent) {
        if (c.witness) {
          ++witnessed;
        } else {
          suite.failures.push_back("no witness prime for non-member " + to_display(c.query.polynomial));
        }
      }
    }
    suite.notes.push_back("r=" + std::to_string(s) + ": " + std::to_string(witnessed) +
                          " non-members carry a witness prime");
    absorb(suite, std::move(report), true);
  }
}

void run_at_zero(SuiteResult& suite, const SuiteOptions& options, bool sr_only) {
  auto box = make_box(3, 5, 0, options.prime_bound.value_or(1000));
  ValidationReport report = cross_validate(box, {options.threads});
  const PolySet non_nilpotent = at_zero_non_nilpotent(box);
  if (sr_only) {
    expect_equal_sets(suite, "S_0", select(report, is_sr), non_nilpotent);
  } else {
    PolySet all = at_zero_nilpotent(box);
    all.insert(non_nilpotent.begin(), non_nilpotent.end());
    expect_equal_sets(suite, "L_0 members", select(report, is_member), all);
    for (const ValidationEntry& e : report.entries) {
      const auto& c = e.classification;
      if (c.verdict == Verdict::Nilpotent && *c.index != 1 && *c.index != 2) {
        suite.failures.push_back("nilpotency index " + to_string(*c.index) + " at 0 for " +
                                 to_display(c.query.polynomial));
      }
    }
  }
  absorb(suite, std::move(report), true);
}

void run_linear_at_one(SuiteResult& suite, const SuiteOptions& options, bool non_nilpotent_only) {
  std::vector<PrimeSet> sets;
  if (options.excluded) {
    sets.push_back(*options.excluded);
  } else {
    sets = {PrimeSet{}, PrimeSet{2}, PrimeSet{2, 3}, PrimeSet{5}};
  }
  for (const PrimeSet& excluded : sets) {
    auto box = make_box(1, 40, 1, options.prime_bound.value_or(10'000), excluded);
    ValidationReport report = cross_validate(box, {options.threads});
    const std::string label = "L_{1,A} " + box_label(box);
    if (non_nilpotent_only) {
      expect_equal_sets(suite, label + " non-nilpotent", select(report, is_non_nilpotent_member),
                        linear_at_one_non_nilpotent(box, excluded));
    } else {
      expect_equal_sets(suite, label, select(report, is_member), linear_at_one_members(box, excluded));
    }
    const Polynomial special = Polynomial::linear(-2, -1);
    const bool member = select(report, is_member).count(special) > 0;
    if (member != excluded.contains(std::uint64_t{2})) {
      suite.failures.push_back(label + ": -2x-1 membership does not track 2 in A");
    }
    absorb(suite, std::move(report), true);
  }
}

void run_sr(SuiteResult& suite, const SuiteOptions& options, bool negative) {
  for (int magnitude = 2; magnitude <= 12; ++magnitude) {
    const Integer r = negative ? -magnitude : magnitude;
    auto box = make_box(1, 30, r, options.prime_bound.value_or(10'000));
    ValidationReport report = cross_validate(box, {options.threads});
    expect_equal_sets(suite, "S_" + to_string(r), select(report, is_sr),
                      linear_sr_members(box, Integer(magnitude), negative));

    for (const ValidationEntry& e : report.entries) {
      const Classification& c = e.classification;
      const Polynomial& u = c.query.polynomial;
      if (negative) {
        Classification mirror = classify(conjugate(u), -r, {}, {box.prime_bound, 1});
        if (mirror.verdict != c.verdict || mirror.index != c.index) {
          suite.failures.push_back("conjugation incoherent at " + to_display(u) + ": " +
                                   std::string(verdict_name(c.verdict)) + " vs " +
                                   std::string(verdict_name(mirror.verdict)));
        }
      } else if (u[0] % r == 0) {
        const PrimeSet support = prime_support(r).primes;
        Classification reduced = classify_linear_at_one(u[1], u[0] / r, support, {box.prime_bound, 1});
        if (reduced.is_member() != c.is_member() ||
            (reduced.verdict == Verdict::Nilpotent) != (c.verdict == Verdict::Nilpotent)) {
          suite.failures.push_back("reduction incoherent at " + to_display(u) + ": direct " +
                                   std::string(verdict_name(c.verdict)) + ", reduced " +
                                   std::string(verdict_name(reduced.verdict)));
        }
      }
    }
    absorb(suite, std::move(report), true);
  }
}

Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, int c) {
  std::uniform_int_distribution<int> degree(1, max_degree);
  std::uniform_int_distribution<int> coefficient(-c, c);
  std::vector<Integer> coefficients(static_cast<std::size_t>(degree(rng)) + 1);
  for (auto& value : coefficients) value = coefficient(rng);
  while (coefficients.back() == 0) coefficients.back() = coefficient(rng);
  return Polynomial(std::move(coefficients));
}

void run_conjugation(SuiteResult& suite, const SuiteOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> base(-12, 12);
  std::uniform_int_distribution<int> steps(1, 8);
  const std::vector<std::uint64_t> small_primes = primes_up_to(200);
  std::uniform_int_distribution<std::size_t> pick(0, small_primes.size() - 1);
  const std::uint64_t bound = options.prime_bound.value_or(200);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Polynomial u = random_polynomial(rng, 4, 9);
    const Polynomial v = conjugate(u);
    const Integer r = base(rng);
    const auto n = static_cast<std::uint64_t>(steps(rng));
    const std::uint64_t p = small_primes[pick(rng)];
    if (iterate(v, -r, n) != -iterate(u, r, n)) {
      suite.failures.push_back("v^(n)(-r) != -u^(n)(r) for " + to_display(u) + " r=" + to_string(r));
    }
    if (nilpotency_index(u, r) != nilpotency_index(v, -r)) {
      suite.failures.push_back("nilpotency differs under conjugation for " + to_display(u));
    }
    if (orbit_mod_p(u, r, p) != orbit_mod_p(v, -r, p)) {
      suite.failures.push_back("m_p differs under conjugation for " + to_display(u) +
                               " p=" + std::to_string(p));
    }
    const Classification cu = classify(u, r, {}, {bound, 1});
    const Classification cv = classify(v, -r, {}, {bound, 1});
    if (cu.verdict != cv.verdict || cu.index != cv.index || cu.witness != cv.witness) {
      suite.failures.push_back("classification differs under conjugation for " + to_display(u) +
                               " r=" + to_string(r));
    }
    ++checked;
  }
  suite.notes.push_back(std::to_string(checked) + " random (u, r, n) instances checked");
}

struct RatioTriple {
  std::int64_t alpha, beta, gamma;
};

void run_power_ratio(SuiteResult& suite, const SuiteOptions& options) {
  const std::uint64_t bound = options.prime_bound.value_or(10'000);
  // Triples without a power relation arising in the linear classification.
  const std::vector<RatioTriple> triples = {{-2, 1, 2}, {-3, 1, 3}, {-2, -2, -1}, {-3, -3, -1},
                                            {2, -1, 1},  {3, -1, 1}, {5, -1, 1},   {-3, -1, 1}};
  for (const RatioTriple& t : triples) {
    const std::string label = "(" + std::to_string(t.alpha) + "," + std::to_string(t.beta) + "," +
                              std::to_string(t.gamma) + ")";
    if (is_power_ratio(t.alpha, t.beta, t.gamma)) {
      suite.failures.push_back(label + " has a power relation");
      continue;
    }
    const auto free = power_ratio_free_primes(t.alpha, t.beta, t.gamma, bound, 10'000);
    suite.notes.push_back(label + ": " + std::to_string(free.size()) + " primes <= " +
                          std::to_string(bound) + " divide no gamma*alpha^n - beta");
    if (free.size() < 10) suite.failures.push_back(label + ": fewer than 10 such primes");
  }
}

}  // namespace

bool CoefficientBox::contains(const Polynomial& u) const {
  if (u.degree() < min_degree || u.degree() > max_degree || u.leading() == 0) return false;
  for (const Integer& c : u.coefficients()) {
    if (c < min_coefficient || c > max_coefficient) return false;
  }
  return true;
}

void validate(const CoefficientBox& box) {
  if (box.min_degree < 1 || box.max_degree < box.min_degree) {
    throw Error(ErrorCode::InvalidArgument, "degree range must satisfy 1 <= min <= max");
  }
  if (box.min_coefficient > box.max_coefficient) {
    throw Error(ErrorCode::InvalidArgument, "coefficient range is empty");
  }
  if (box.prime_bound < 2) throw Error(ErrorCode::EmptyRange, "prime bound must be at least 2");
}

PolynomialEnumerator::PolynomialEnumerator(const CoefficientBox& box)
    : min_coefficient_(box.min_coefficient),
      width_(static_cast<std::uint64_t>(box.max_coefficient - box.min_coefficient) + 1) {
  validate(box);
  for (std::int64_t c = box.min_coefficient; c <= box.max_coefficient; ++c) {
    if (c != 0) leading_values_.push_back(c);
  }
  for (int d = box.min_degree; d <= box.max_degree; ++d) {
    std::uint64_t count = leading_values_.size();
    for (int i = 0; i < d; ++i) {
      if (count > (std::uint64_t{1} << 62) / width_) {
        throw Error(ErrorCode::InvalidArgument, "coefficient box is too large to enumerate");
      }
      count *= width_;
    }
    degrees_.push_back(d);
    offsets_.push_back(total_);
    total_ += count;
  }
}

Polynomial PolynomialEnumerator::operator[](std::uint64_t index) const {
  if (index >= total_) throw Error(ErrorCode::OutOfRange, "enumeration index out of range");
  const auto slot = static_cast<std::size_t>(
      std::upper_bound(offsets_.begin(), offsets_.end(), index) - offsets_.begin() - 1);
  const int degree = degrees_[slot];
  std::uint64_t local = index - offsets_[slot];
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
  c[static_cast<std::size_t>(degree)] = leading_values_[local % leading_values_.size()];
  local /= leading_values_.size();
  for (int i = degree - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = min_coefficient_ + static_cast<std::int64_t>(local % width_);
    local /= width_;
  }
  return Polynomial(std::move(c));
}

std::vector<Polynomial> enumerate_polynomials(const CoefficientBox& box) {
  PolynomialEnumerator enumerator(box);
  std::vector<Polynomial> out;
  out.reserve(enumerator.size());
  for (std::uint64_t i = 0; i < enumerator.size(); ++i) out.push_back(enumerator[i]);
  return out;
}

ValidationReport cross_validate(const CoefficientBox& box, const ValidationOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  PolynomialEnumerator enumerator(box);
  const auto count = static_cast<std::int64_t>(enumerator.size());

  ValidationReport report;
  report.box = box;
  report.entries.resize(enumerator.size());
  std::vector<std::string> reasons(enumerator.size());
  const ClassifyOptions classify_options{box.prime_bound, 1};

#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(options.threads))
  for (std::int64_t i = 0; i < count; ++i) {
    const auto slot = static_cast<std::size_t>(i);
    const Polynomial u = enumerator[static_cast<std::uint64_t>(i)];
    ValidationEntry& entry = report.entries[slot];
    entry.classification = classify(u, box.r, box.excluded, classify_options);
    const ScanReport scan = weak_local_scan(u, box.r, box.excluded, box.prime_bound);
    entry.scan_witness = scan.first_witness();
    entry.primes_scanned = scan.results.size();

    const Classification& c = entry.classification;
    if (c.is_member() && scan.witness_found()) {
      reasons[slot] = std::string(verdict_name(c.verdict)) + " but m_p does not exist for p=" +
                      std::to_string(*scan.first_witness());
    } else if (c.verdict == Verdict::NotWeaklyLocallyNilpotent && c.witness &&
               orbit_mod_p(u, box.r, *c.witness).m_p) {
      reasons[slot] = "claimed witness p=" + std::to_string(*c.witness) + " has m_p";
    } else if (c.verdict == Verdict::Nilpotent && *c.index <= kIndexRecheckLimit) {
      const auto n = c.index->convert_to<std::uint64_t>();
      Integer x = box.r;
      for (std::uint64_t k = 1; k <= n; ++k) {
        x = eval(u, x);
        if ((x == 0) != (k == n)) {
          reasons[slot] = "nilpotency index " + to_string(*c.index) + " not confirmed by iteration";
          break;
        }
      }
    }
  }

  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const ValidationEntry& entry = report.entries[i];
    const Classification& c = entry.classification;
    ++report.counts[c.verdict];
    if (!reasons[i].empty()) {
      report.contradictions.push_back({c.query.polynomial, c, entry.scan_witness, reasons[i]});
    }
    if (!c.is_member() && !c.witness && !entry.scan_witness) report.inconclusives.push_back(i);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "thm4.1", "cor4.2", "cor4.3", "thm4.4", "cor4.5", "thm5.1",
      "cor5.2", "thm5.3", "cor5.4", "fact3.1", "lemma3.2-contrapositive"};
  return names;
}

SuiteResult theorem_suite(std::string_view name, const SuiteOptions& options) {
  SuiteResult suite;
  suite.name = std::string(name);
  if (name == "thm4.1") {
    run_at_one(suite, options, false);
  } else if (name == "cor4.2") {
    run_at_one(suite, options, true);
  } else if (name == "cor4.3") {
    run_singleton(suite, options);
  } else if (name == "thm4.4") {
    run_at_zero(suite, options, false);
  } else if (name == "cor4.5") {
    run_at_zero(suite, options, true);
  } else if (name == "thm5.1") {
    run_linear_at_one(suite, options, false);
  } else if (name == "cor5.2") {
    run_linear_at_one(suite, options, true);
  } else if (name == "thm5.3") {
    run_sr(suite, options, false);
  } else if (name == "cor5.4") {
    run_sr(suite, options, true);
  } else if (name == "fact3.1") {
    run_conjugation(suite, options);
  } else if (name == "lemma3.2-contrapositive") {
    run_power_ratio(suite, options);
  } else {
    throw Error(ErrorCode::UnknownSuite, "unknown suite '" + std::string(name) + "'");
  }
  suite.passed = suite.failures.empty();
  return suite;
}

std::vector<std::uint64_t> power_ratio_free_primes(const Integer& alpha, const Integer& beta,
                                                   const Integer& gamma, std::uint64_t prime_bound,
                                                   std::uint64_t max_exponent) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(prime_bound)) {
    const std::uint64_t a = residue(alpha, p), b = residue(beta, p);
    // gamma * alpha^n mod p is periodic after n = 1 with period < p, so
    // p + 1 exponents already cover every residue the sequence takes.
    const std::uint64_t limit = std::min(max_exponent, p + 1);
    std::uint64_t x = residue(gamma, p);
    bool hit = false;
    for (std::uint64_t n = 1; n <= limit && !hit; ++n) {
      x = x * a % p;
      hit = x == b;
    }
    if (!hit) out.push_back(p);
  }
  return out;
}

ExploreReport explore(const Polynomial& u, std::uint64_t range, std::uint64_t prime_bound,
                      unsigned threads) {
  require_dynamical(u);
  if (range < 1) throw Error(ErrorCode::InvalidArgument, "explore range must be at least 1");
  ExploreReport report;
  report.polynomial = u;
  report.range = range;
  report.prime_bound = prime_bound;
  const auto count = static_cast<std::int64_t>(2 * range + 1);
  report.entries.resize(static_cast<std::size_t>(count));

#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(threads))
  for (std::int64_t i = 0; i < count; ++i) {
    const Integer r = Integer(i) - Integer(range);
    ExploreEntry& entry = report.entries[static_cast<std::size_t>(i)];
    entry.r = r;
    entry.nilpotency_index = nilpotency_index(u, r);
    entry.classification = classify(u, r, {}, {prime_bound, 1});
  }
  for (const ExploreEntry& entry : report.entries) {
    if (entry.nilpotency_index) report.nilpotent_points.push_back(entry.r);
    if (entry.classification.is_member()) report.locally_nilpotent_points.push_back(entry.r);
  }
  return report;
}

}  // namespace nilorbit
