#include <doctest.h>

#include <random>

#include "nilorbit/classify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace nilorbit;

namespace {

std::optional<Integer> idx(std::int64_t n) { return Integer(n); }

}  // namespace

TEST_CASE("classify_at_one examples") {
  const auto c3 = classify_at_one(Polynomial{-3, 7, -2});
  CHECK(c3.verdict == Verdict::Nilpotent);
  CHECK(c3.index == idx(3));
  CHECK(c3.provenance == "Thm4.1(3)");

  const auto s = classify_at_one(Polynomial{1, 1});
  CHECK(s.verdict == Verdict::InSr);
  CHECK(s.provenance == "Thm4.1(4)");
  CHECK(s.certainty == Certainty::Proved);

  const auto g = classify_at_one(Polynomial{-2, 4});
  CHECK(g.verdict == Verdict::NotWeaklyLocallyNilpotent);
  CHECK(g.witness == std::uint64_t{5});

  CHECK(classify_at_one(Polynomial{4, -2}).index == idx(2));
  CHECK(classify_at_one(Polynomial{-5, 0, 5}).index == idx(1));
}

TEST_CASE("classify_at_minus_one examples") {
  const auto s = classify_at_minus_one(Polynomial{-1, 1});
  CHECK(s.verdict == Verdict::InSr);
  CHECK(s.provenance == "Cor4.2(4)");
  CHECK(classify_at_minus_one(Polynomial{-4, -2}).index == idx(2));
  CHECK(classify_at_minus_one(Polynomial{3, 7, 2}).index == idx(3));
  CHECK(classify_at_minus_one(Polynomial{3, 7, 2}).query.r == -1);
}

TEST_CASE("classify_at_zero examples") {
  CHECK(classify_at_zero(Polynomial{7, 1}).verdict == Verdict::InSr);
  CHECK(classify_at_zero(Polynomial{7, 1}).provenance == "Thm4.4(1)");
  const auto h = classify_at_zero(Polynomial{-2, 4});
  CHECK(h.verdict == Verdict::InSr);
  CHECK(h.provenance == "Thm4.4(2)");
  const auto w = classify_at_zero(Polynomial{-1, 2});
  CHECK(w.verdict == Verdict::NotWeaklyLocallyNilpotent);
  CHECK(w.witness == std::uint64_t{2});
  CHECK(classify_at_zero(Polynomial{0, 3, 1}).index == idx(1));
  CHECK(classify_at_zero(Polynomial{3, -1}).index == idx(2));
}

TEST_CASE("classify_linear_at_one examples") {
  const auto six = classify_linear_at_one(1, 6, PrimeSet{2, 3});
  CHECK(six.verdict == Verdict::WeaklyLocallyNilpotentOutsideA);
  CHECK_FALSE(six.index);

  CHECK(classify_linear_at_one(-2, -1, PrimeSet{2}).verdict == Verdict::WeaklyLocallyNilpotentOutsideA);
  CHECK(classify_linear_at_one(-2, -1, PrimeSet{2}).provenance == "Cor5.2(4)");

  const auto no = classify_linear_at_one(-2, -1, PrimeSet{3});
  CHECK(no.verdict == Verdict::NotWeaklyLocallyNilpotent);
  CHECK(no.witness == std::uint64_t{2});

  CHECK(classify_linear_at_one(1, -1, {}).verdict == Verdict::Nilpotent);
  CHECK(classify_linear_at_one(-2, 4, {}).index == idx(2));
  CHECK(classify_linear_at_one(1, 1, {}).verdict == Verdict::InSr);
  CHECK(error_of([] { classify_linear_at_one(0, 1, {}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("classify_linear_sr examples") {
  CHECK(classify_linear_sr(1, -4, 6).verdict == Verdict::InSr);
  CHECK(classify_linear_sr(1, -4, 6).provenance == "Thm5.3(2)");
  CHECK(classify_linear_sr(2, 6, 6).provenance == "Thm5.3(3)");
  CHECK(classify_linear_sr(-2, -6, 6).provenance == "Thm5.3(4)");
  const auto nil = classify_linear_sr(1, -2, 6);
  CHECK(nil.verdict == Verdict::Nilpotent);
  CHECK(nil.index == idx(3));
  CHECK(error_of([] { classify_linear_sr(1, 1, 1); }) == ErrorCode::OutOfRange);
  CHECK(error_of([] { classify_linear_sr(0, 1, 4); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("negative base points through conjugation") {
  // x - 3 at -6 is the conjugate of x + 3 at 6.
  const auto c = classify_linear_sr(1, -3, -6);
  CHECK(c.verdict == Verdict::InSr);
  CHECK(c.provenance == "Cor5.4(1)");
  // -2x+2 at -2 is the conjugate of -2x-2 at 2.
  CHECK(classify_linear_sr(-2, 2, -2).provenance == "Cor5.4(4)");
  // 2x-2 at -2 is the conjugate of 2x+2 at 2.
  CHECK(classify_linear_sr(2, -2, -2).provenance == "Cor5.4(3)");
}

TEST_CASE("maps missing from the S_r list are decided through finitely many primes") {
  // -3x-3 at 6: u(6) - 6 = -27 = (-3)^2 * (-3), and m_2, m_3 exist.
  const auto c = classify_linear_sr(-3, -3, 6);
  CHECK(c.verdict == Verdict::InSr);
  CHECK(c.provenance == "Rem3.3+FinitePrimes");
  for (std::uint64_t p : oracle::primes_up_to(2000)) {
    REQUIRE(oracle::orbit_mod_p(Polynomial{-3, -3}, 6, p).m_p);
  }
  CHECK(classify_linear_sr(2, 2, 6).verdict == Verdict::InSr);
  CHECK(classify_linear_sr(3, 3, 12).verdict == Verdict::InSr);
}

TEST_CASE("classify dispatch examples") {
  const auto q = classify(Polynomial{-2, 0, 1}, 0);
  CHECK(q.verdict == Verdict::NotWeaklyLocallyNilpotent);
  CHECK(q.witness == std::uint64_t{3});

  CHECK(classify(Polynomial{1, 1}, 1).verdict == Verdict::InSr);
  CHECK(classify(Polynomial{-6, -2}, 6).verdict == Verdict::InSr);
  CHECK(classify(Polynomial{-6, -2}, 6).provenance == "Thm5.3(4)");

  const auto deg2 = classify(Polynomial{1, 1, 1}, 5, PrimeSet{2});
  CHECK(deg2.verdict == Verdict::NotWeaklyLocallyNilpotent);
  CHECK(deg2.provenance == "Fact1.1");

  const auto nil = classify(Polynomial{25, -25, 9, -1}, 2, PrimeSet{3});
  CHECK(nil.verdict == Verdict::Nilpotent);
  CHECK(nil.index == idx(4));
}

TEST_CASE("classify with excluded primes away from 1") {
  // x + 1 at -1 outside {2}: conjugate x - 1 at 1 is nilpotent.
  CHECK(classify(Polynomial{1, 1}, -1, PrimeSet{2}).verdict == Verdict::Nilpotent);
  // x + 3 at -1 is the conjugate of x - 3 at 1.
  const auto c = classify(Polynomial{3, 1}, -1, PrimeSet{3});
  CHECK(c.verdict == Verdict::WeaklyLocallyNilpotentOutsideA);
  CHECK(c.provenance == "Fact3.1+Cor5.2(2)");

  // 3x + 6 at 6 with A = {5}: v = 3x + 1 at 1 outside {2, 3, 5}.
  const auto red = classify(Polynomial{6, 3}, 6, PrimeSet{5});
  CHECK(red.verdict == Verdict::WeaklyLocallyNilpotentOutsideA);
  CHECK(red.provenance == "Reduction+Cor5.2(3)");

  const auto out = classify(Polynomial{5, 3}, 6, PrimeSet{5});
  CHECK(out.verdict == Verdict::OutOfExactScope);
  CHECK(out.certainty == Certainty::Inconclusive);
  REQUIRE(out.scan);
  CHECK(out.scan->bound == kDefaultPrimeBound);

  // r = 0 with a nonempty A is not covered by any list.
  CHECK(classify(Polynomial{5, 3}, 0, PrimeSet{2}).verdict == Verdict::OutOfExactScope);
}

TEST_CASE("property: member verdicts survive a prime scan, witnesses are genuine") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> base(-12, 12);
  const ClassifyOptions options{500, 1};
  for (int i = 0; i < 600; ++i) {
    const Polynomial u = oracle::random_polynomial(rng, 1, 2, 12);
    const Integer r = base(rng);
    const Classification c = classify(u, r, {}, options);
    REQUIRE(c.verdict != Verdict::OutOfExactScope);
    if (c.witness) REQUIRE_FALSE(oracle::orbit_mod_p(u, r, *c.witness).m_p);
    if (c.is_member()) {
      for (std::uint64_t p : oracle::primes_up_to(300)) REQUIRE(oracle::orbit_mod_p(u, r, p).m_p);
    }
  }
}

TEST_CASE("property: conjugation coherence for |r| <= 12") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> base(-12, 12);
  const ClassifyOptions options{300, 1};
  for (int i = 0; i < 1000; ++i) {
    const Polynomial u = oracle::random_polynomial(rng, 1, 3, 9);
    const Integer r = base(rng);
    const Classification c = classify(u, r, {}, options);
    const Classification v = classify(conjugate(u), -r, {}, options);
    REQUIRE(c.verdict == v.verdict);
    REQUIRE(c.index == v.index);
  }
}

TEST_CASE("singleton property: InSr at 1 only for x+1") {
  for (int a = -60; a <= 60; ++a) {
    for (int b = -60; b <= 60; ++b) {
      if (a == 0) continue;
      const bool sr = classify_at_one(Polynomial::linear(a, b), {2, 1}).verdict == Verdict::InSr;
      REQUIRE(sr == (a == 1 && b == 1));
    }
  }
}
