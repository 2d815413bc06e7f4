#include <doctest.h>

#include <random>

#include "nilorbit/polynomial.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace nilorbit;

namespace {

const Polynomial kExampleC{-3, 7, -2};      // -2x^2+7x-3
const Polynomial kExampleD{25, -25, 9, -1};  // -x^3+9x^2-25x+25

}  // namespace

TEST_CASE("construction strips trailing zeros") {
  const Polynomial u{1, 2, 0, 0};
  CHECK(u.degree() == 1);
  CHECK(u.leading() == 2);
  CHECK(Polynomial{0, 0}.degree() == 0);
  CHECK(Polynomial{0, 0}.is_constant());
  CHECK(u[5] == 0);
  CHECK(Polynomial::linear(4, -2) == Polynomial{-2, 4});
}

TEST_CASE("eval examples") {
  CHECK(eval(kExampleC, 2) == 3);
  CHECK(eval(kExampleC, 1) == 2);
  CHECK(eval(Polynomial{1, 1}, 0) == 1);
  CHECK(eval(kExampleD, 5) == 0);
}

TEST_CASE("eval_mod examples") {
  CHECK(eval_mod(Polynomial{-2, 4}, 2, 5) == 1);
  CHECK(eval_mod(Polynomial{1, 1}, 4, 5) == 0);
  CHECK(eval_mod(kExampleD, 5, 7) == 0);
  CHECK(error_of([] { eval_mod(Polynomial{1, 1}, 1, 9); }) == ErrorCode::InvalidModulus);
}

TEST_CASE("ResiduePolynomial near 64 bits") {
  const std::uint64_t p = 18446744073709551557ull;  // largest 64-bit prime
  const Polynomial u{Integer(-1), Integer(3), Integer(2)};
  const ResiduePolynomial f(u, p);
  for (std::uint64_t x : {std::uint64_t{0}, std::uint64_t{1}, p - 1, p / 2, std::uint64_t{123456789}}) {
    CHECK(f(x) == oracle::mod(oracle::eval(u, Integer(x)), p));
  }
}

TEST_CASE("property: eval and eval_mod agree with the term-by-term oracle") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> point(-1000, 1000);
  const std::vector<std::uint64_t> primes = {2, 3, 101, 65537, 4294967311ull};
  for (int i = 0; i < 1000; ++i) {
    const Polynomial u = oracle::random_polynomial(rng, 1, 6, 50);
    const Integer x = point(rng);
    REQUIRE(eval(u, x) == oracle::eval(u, x));
    for (std::uint64_t p : primes) {
      REQUIRE(ResiduePolynomial(u, p)(oracle::mod(x, p)) == oracle::mod(oracle::eval(u, x), p));
    }
  }
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(kExampleC) == Polynomial{3, 7, 2});
  CHECK(conjugate(Polynomial{1, 1}) == Polynomial{-1, 1});
  const Polynomial u{2, -1, 0, 5};
  CHECK(conjugate(conjugate(u)) == u);
}

TEST_CASE("property: conjugation identity v^(n)(-r) = -u^(n)(r)") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> base(-12, 12), steps(0, 8);
  for (int i = 0; i < 1000; ++i) {
    const Polynomial u = oracle::random_polynomial(rng, 1, 4, 9);
    const Integer r = base(rng);
    const auto n = static_cast<std::uint64_t>(steps(rng));
    Integer x = r, y = -r;
    for (std::uint64_t k = 0; k < n; ++k) {
      x = oracle::eval(u, x);
      y = oracle::eval(conjugate(u), y);
    }
    REQUIRE(y == -x);
  }
}

TEST_CASE("reduce_at examples") {
  // u(rx)/r for u = 2x-6, r = 2 is (4x-6)/2 = 2x-3; 2 * v(1) = -2 = u(2).
  const Polynomial v = reduce_at(Polynomial{-6, 2}, 2);
  CHECK(v == Polynomial{-3, 2});
  CHECK(2 * eval(v, 1) == eval(Polynomial{-6, 2}, 2));
  CHECK(reduce_at(Polynomial{0, 3, 5}, 4) == Polynomial{0, 3, 20});
  CHECK(reduce_at(kExampleD, 1) == kExampleD);
  CHECK(error_of([] { reduce_at(Polynomial{-6, 2}, 4); }) == ErrorCode::Divisibility);
  CHECK(error_of([] { reduce_at(Polynomial{-6, 2}, 0); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { reduce_at(Polynomial{-6, 2}, -2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("property: reduction identity r v^(n)(1) = u^(n)(r)") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> base(1, 12), steps(0, 8);
  for (int i = 0; i < 1000; ++i) {
    Polynomial u = oracle::random_polynomial(rng, 1, 4, 9);
    const Integer r = base(rng);
    std::vector<Integer> c = u.coefficients();
    c[0] *= r;
    u = Polynomial(c);
    const Polynomial v = reduce_at(u, r);
    const auto n = static_cast<std::uint64_t>(steps(rng));
    REQUIRE(r * iterate(v, 1, n) == iterate(u, r, n));
  }
}

TEST_CASE("linear_closed_form examples") {
  CHECK(linear_closed_form(1, 1, 1, 4) == 5);
  CHECK(linear_closed_form(4, -2, 0, 3) == -42);
  CHECK(linear_closed_form(-1, 0, 7, 2) == 7);
  CHECK(error_of([] { linear_closed_form(0, 1, 1, 1); }) == ErrorCode::NotDynamical);
  CHECK(error_of([] { linear_closed_form(2, 1, 1, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("property: linear_closed_form equals iteration") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> value(-50, 50), steps(1, 30);
  for (int i = 0; i < 2000; ++i) {
    const int a = value(rng), b = value(rng), r = value(rng);
    if (a == 0) continue;
    const auto n = static_cast<std::uint64_t>(steps(rng));
    Integer x = r;
    for (std::uint64_t k = 0; k < n; ++k) x = a * x + b;
    REQUIRE(linear_closed_form(a, b, r, n) == x);
  }
}

TEST_CASE("text forms round-trip") {
  CHECK(parse_polynomial("-3,7,-2") == kExampleC);
  CHECK(parse_polynomial(" 1 , 1 ") == Polynomial{1, 1});
  CHECK(to_text(kExampleC) == "-3,7,-2");
  CHECK(to_display(kExampleC) == "-2x^2+7x-3");
  CHECK(to_display(Polynomial{-1, 1}) == "x-1");
  CHECK(to_display(Polynomial{0, -1}) == "-x");
  CHECK(error_of([] { parse_polynomial("1,,2"); }) == ErrorCode::Parse);
  CHECK(error_of([] { parse_polynomial("1,x"); }) == ErrorCode::Parse);
  CHECK(error_of([] { parse_polynomial(""); }) == ErrorCode::Parse);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Polynomial u = oracle::random_polynomial(rng, 0, 5, 1000);
    REQUIRE(parse_polynomial(to_text(u)) == u);
  }
}

TEST_CASE("constant polynomials are not dynamical") {
  CHECK(error_of([] { require_dynamical(Polynomial{5}); }) == ErrorCode::NotDynamical);
  CHECK_FALSE(error_of([] { require_dynamical(Polynomial{5, 1}); }));
}
