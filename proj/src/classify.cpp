#include "nilorbit/classify.hpp"

#include "nilorbit/error.hpp"
#include "nilorbit/orbits.hpp"

namespace nilorbit {

namespace {

std::string tag(std::string_view result, int item) {
  return std::string(result) + "(" + std::to_string(item) + ")";
}

Classification nilpotent(const Integer& index, std::string provenance) {
  Classification c;
  c.verdict = Verdict::Nilpotent;
  c.index = index;
  c.provenance = std::move(provenance);
  return c;
}

Classification member(Verdict verdict, std::string provenance) {
  Classification c;
  c.verdict = verdict;
  c.provenance = std::move(provenance);
  return c;
}

Classification non_member(const Polynomial& u, const Integer& r, const PrimeSet& excluded,
                          std::string provenance, const ClassifyOptions& options) {
  Classification c;
  c.verdict = Verdict::NotWeaklyLocallyNilpotent;
  c.provenance = std::move(provenance);
  c.witness = find_witness(u, r, excluded, options.witness_bound, options.threads);
  return c;
}

// P(n) ⊆ A for n != 0.
bool supported_on(const Integer& n, const PrimeSet& primes) {
  return prime_support(n).primes.is_subset_of(primes);
}

// Exponent of the prime q in n != 0.
unsigned valuation(Integer n, const Integer& q) {
  unsigned v = 0;
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

// Necessary condition for a x + b in S_r with |a| >= 2: a^m b = b + a r - r
// for some m >= 0.
bool power_relation_holds(const Integer& a, const Integer& b, const Integer& r) {
  const Integer target = b + a * r - r;
  if (b == 0 || target == 0) return false;
  auto k = is_power_ratio(a, target, b);
  return k && *k >= 0;
}

// a x + b at r with |a| >= 2 and u(r) - r = a^m b. Then
// (1 - a) u^(n)(r) = b (1 - a^(n+m)), so every prime outside P(a b (a - 1))
// has m_p; the remaining primes are checked one by one.
Classification decide_by_finite_primes(const Polynomial& u, const Integer& r, const Integer& a,
                                       const Integer& b) {
  for (const Integer& q : prime_support(a * b * (a - 1)).primes) {
    const auto p = to_uint64(q);
    if (!p) throw Error(ErrorCode::OutOfRange, "prime " + to_string(q) + " exceeds 64 bits");
    if (!orbit_mod_p(u, r, *p).m_p) {
      Classification c;
      c.verdict = Verdict::NotWeaklyLocallyNilpotent;
      c.witness = *p;
      c.provenance = "Rem3.3+FinitePrimes";
      return c;
    }
  }
  return member(Verdict::InSr, "Rem3.3+FinitePrimes");
}

std::string replace_prefix(const std::string& provenance, std::string_view from, std::string_view to) {
  if (provenance.rfind(from, 0) == 0) return std::string(to) + provenance.substr(from.size());
  return provenance;
}

}  // namespace

std::string_view verdict_name(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Nilpotent: return "Nilpotent";
    case Verdict::InSr: return "InSr";
    case Verdict::WeaklyLocallyNilpotentOutsideA: return "WeaklyLocallyNilpotentOutsideA";
    case Verdict::NotWeaklyLocallyNilpotent: return "NotWeaklyLocallyNilpotent";
    case Verdict::OutOfExactScope: return "OutOfExactScope";
  }
  return "Unknown";
}

std::optional<std::uint64_t> find_witness(const Polynomial& u, const Integer& r,
                                          const PrimeSet& excluded, std::uint64_t bound,
                                          unsigned threads) {
  if (bound < 2) return std::nullopt;
  ScanReport scan = weak_local_scan(u, r, excluded, bound, {ScanMode::Decision, threads});
  return scan.first_witness();
}

Classification classify_at_one(const Polynomial& u, const ClassifyOptions& options) {
  require_dynamical(u);
  Classification c;
  const Integer u1 = eval(u, 1);
  if (u1 == 0) {
    c = nilpotent(1, tag("Thm4.1", 1));
  } else if (u1 == 2 && eval(u, 2) == 0) {
    c = nilpotent(2, tag("Thm4.1", 2));
  } else if (u1 == 2 && eval(u, 2) == 3 && eval(u, 3) == 0) {
    c = nilpotent(3, tag("Thm4.1", 3));
  } else if (u == Polynomial::linear(1, 1)) {
    c = member(Verdict::InSr, tag("Thm4.1", 4));
  } else {
    c = non_member(u, 1, {}, "Thm4.1", options);
  }
  c.query = {u, 1, {}};
  return c;
}

Classification classify_at_minus_one(const Polynomial& u, const ClassifyOptions& options) {
  Classification c = classify_at_one(conjugate(u), options);
  c.provenance = replace_prefix(c.provenance, "Thm4.1", "Cor4.2");
  c.query = {u, -1, {}};
  return c;
}

Classification classify_at_zero(const Polynomial& u, const ClassifyOptions& options) {
  require_dynamical(u);
  Classification c;
  const Integer u0 = eval(u, 0);
  if (u0 == 0) {
    c = nilpotent(1, tag("Thm4.4", 3));
  } else if (eval(u, u0) == 0) {
    c = nilpotent(2, tag("Thm4.4", 4));
  } else if (u.degree() == 1 && u[1] == 1) {
    c = member(Verdict::InSr, tag("Thm4.4", 1));
  } else if (u.degree() == 1 && abs(u[1]) >= 2 && support_subset(u[1], u[0])) {
    c = member(Verdict::InSr, tag("Thm4.4", 2));
  } else {
    c = non_member(u, 0, {}, "Thm4.4", options);
  }
  c.query = {u, 0, {}};
  return c;
}

Classification classify_linear_at_one(const Integer& a, const Integer& b, const PrimeSet& excluded,
                                      const ClassifyOptions& options) {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "linear coefficient must be nonzero");
  const Polynomial u = Polynomial::linear(a, b);

  // Template item of the classification list, 0 when none matches.
  int item = 0;
  if (a == 1 && b != 0 && supported_on(b, excluded)) {
    item = 1;
  } else if (b == -a) {
    item = 2;
  } else if (b == 1 && abs(a) >= 2 && supported_on(a, excluded)) {
    item = 3;
  } else if (a == -2 && b == -1 && excluded.contains(std::uint64_t{2})) {
    item = 4;
  } else if (a == -2 && b == 4) {
    item = 5;
  }

  Classification c;
  if (auto index = nilpotency_index(u, 1)) {
    // x - 1 matches item 1 but is nilpotent; the index decides.
    c = nilpotent(*index, item != 0 ? tag("Thm5.1", item) : std::string("NilpotencyIndex"));
  } else if (item != 0) {
    // Non-nilpotent members, numbered as in the list of L_{1,A}^1 \ N_1.
    int non_nilpotent_item = item;
    if (item == 1) non_nilpotent_item = b > 0 ? 1 : 2;
    c = member(excluded.empty() ? Verdict::InSr : Verdict::WeaklyLocallyNilpotentOutsideA,
               tag("Cor5.2", non_nilpotent_item));
  } else {
    c = non_member(u, 1, excluded, "Thm5.1", options);
  }
  c.query = {u, 1, excluded};
  return c;
}

Classification classify_linear_sr(const Integer& a, const Integer& b, const Integer& r,
                                  const ClassifyOptions& options) {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "linear coefficient must be nonzero");
  if (abs(r) <= 1) {
    throw Error(ErrorCode::OutOfRange, "S_r classification of linear maps needs |r| >= 2");
  }
  if (r < 0) {
    // v(x) = -u(-x) = a x - b at -r.
    Classification c = classify_linear_sr(a, -b, -r, options);
    c.provenance = replace_prefix(c.provenance, "Thm5.3", "Cor5.4");
    c.query = {Polynomial::linear(a, b), r, {}};
    return c;
  }

  const Polynomial u = Polynomial::linear(a, b);
  Classification c;
  if (auto index = nilpotency_index(u, r)) {
    c = nilpotent(*index, "NilpotencyIndex");
    c.query = {u, r, {}};
    return c;
  }

  const PrimeSet support_r = prime_support(r).primes;
  int item = 0;
  if (a == 1 && b > 0 && supported_on(b, support_r)) {
    item = 1;
  } else if (a == 1 && b < 0 && supported_on(-b, support_r)) {
    for (const Integer& q : support_r) {
      if (valuation(-b, q) > valuation(r, q)) item = 2;
    }
  } else if (abs(a) >= 2 && power_relation_holds(a, b, r)) {
    if (b == r && supported_on(a, support_r)) {
      item = 3;
    } else if (a == -2 && b == -r && r % 2 == 0) {
      item = 4;
    } else {
      c = decide_by_finite_primes(u, r, a, b);
      c.query = {u, r, {}};
      return c;
    }
  }

  c = item != 0 ? member(Verdict::InSr, tag("Thm5.3", item)) : non_member(u, r, {}, "Thm5.3", options);
  c.query = {u, r, {}};
  return c;
}

Classification classify(const Polynomial& u, const Integer& r, const PrimeSet& excluded,
                        const ClassifyOptions& options) {
  require_dynamical(u);
  const std::optional<Integer> index = nilpotency_index(u, r);
  const bool base_case = excluded.empty() && (r == 0 || r == 1 || r == -1);

  auto by_base_point = [&]() {
    if (r == 0) return classify_at_zero(u, options);
    if (r == 1) return classify_at_one(u, options);
    return classify_at_minus_one(u, options);
  };

  Classification c;
  if (u.degree() >= 2) {
    if (index) {
      c = base_case ? by_base_point() : nilpotent(*index, "NilpotencyIndex");
    } else {
      c = non_member(u, r, excluded, "Fact1.1", options);
    }
  } else {
    const Integer& a = u[1];
    const Integer& b = u[0];
    if (base_case) {
      c = by_base_point();
    } else if (excluded.empty()) {
      c = classify_linear_sr(a, b, r, options);
    } else if (r == 1) {
      c = classify_linear_at_one(a, b, excluded, options);
    } else if (r == -1) {
      c = classify_linear_at_one(a, -b, excluded, options);
      c.provenance = "Fact3.1+" + c.provenance;
    } else if (r != 0 && b % r == 0) {
      // Conjugate to a positive base point if needed, then reduce to 1:
      // r v^(n)(1) = u^(n)(r) and the primes of r always have m_p = 1.
      const Integer base = abs(r);
      const Integer shifted = r > 0 ? b : Integer(-b);
      const PrimeSet widened = excluded.united(prime_support(base).primes);
      const Polynomial reduced = reduce_at(Polynomial::linear(a, shifted), base);
      c = classify_linear_at_one(reduced[1], reduced[0], widened, options);
      c.provenance = (r > 0 ? "Reduction+" : "Fact3.1+Reduction+") + c.provenance;
      if (c.verdict == Verdict::InSr) c.verdict = Verdict::WeaklyLocallyNilpotentOutsideA;
    } else {
      c.verdict = Verdict::OutOfExactScope;
      c.provenance = "OutOfScope";
      c.certainty = Certainty::Inconclusive;
      c.scan = weak_local_scan(u, r, excluded, options.witness_bound,
                               {ScanMode::Decision, options.threads});
    }
  }

  if (index && (c.verdict != Verdict::Nilpotent || c.index != index)) {
    c = nilpotent(*index, "NilpotencyIndex");
  }
  c.query = {u, r, excluded};
  return c;
}

}  // namespace nilorbit
