#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "nilorbit/integer.hpp"

namespace nilorbit {

/// Univariate polynomial over Z, stored constant term first.
///
/// Trailing zero coefficients are stripped on construction, so the last
/// stored coefficient is the leading one. The zero polynomial is stored as a
/// single 0 and reports degree 0. Constant polynomials are valid values but
/// every dynamical operation rejects them with Error{NotDynamical}.
class Polynomial {
 public:
  Polynomial() : coefficients_{0} {}
  explicit Polynomial(std::vector<Integer> coefficients);
  Polynomial(std::initializer_list<Integer> coefficients)
      : Polynomial(std::vector<Integer>(coefficients)) {}

  /// a*x + b.
  static Polynomial linear(const Integer& a, const Integer& b) { return Polynomial({b, a}); }

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_constant() const noexcept { return coefficients_.size() == 1; }

  const std::vector<Integer>& coefficients() const noexcept { return coefficients_; }
  /// Coefficient of x^i, zero past the degree.
  const Integer& operator[](std::size_t i) const;
  const Integer& leading() const noexcept { return coefficients_.back(); }
  const Integer& constant() const noexcept { return coefficients_.front(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  /// Degree first, then coefficients constant-first.
  friend bool operator<(const Polynomial& lhs, const Polynomial& rhs);

 private:
  std::vector<Integer> coefficients_;
};

/// Throws Error{NotDynamical} for a constant polynomial.
void require_dynamical(const Polynomial& u);

/// u(x) over Z, by Horner's rule.
Integer eval(const Polynomial& u, const Integer& x);

/// u^(n)(x): n successive evaluations, n >= 0.
Integer iterate(const Polynomial& u, Integer x, std::uint64_t n);

/// u(x) mod p with every intermediate reduced mod p. Throws
/// Error{InvalidModulus} unless p is prime.
std::uint64_t eval_mod(const Polynomial& u, std::uint64_t x, std::uint64_t p);

/// Coefficients of u reduced into [0, p), for repeated evaluation mod p
/// without re-reducing the polynomial.
class ResiduePolynomial {
 public:
  /// The modulus is taken as given; callers check primality.
  ResiduePolynomial(const Polynomial& u, std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t operator()(std::uint64_t x) const noexcept;

 private:
  std::vector<std::uint64_t> coefficients_;
  std::uint64_t modulus_;
};

/// v(x) = -u(-x); v^(n)(-r) = -u^(n)(r).
Polynomial conjugate(const Polynomial& u);

/// v(x) = u(r*x)/r for r >= 1 dividing u(0); r*v^(n)(1) = u^(n)(r).
/// Throws Error{InvalidArgument} for r <= 0, Error{Divisibility} if r does
/// not divide the constant term.
Polynomial reduce_at(const Polynomial& u, const Integer& r);

/// (a*x + b)^(n)(r) = a^n r + b (a^(n-1) + ... + a + 1), n >= 1.
/// Throws Error{NotDynamical} for a = 0, Error{InvalidArgument} for n = 0.
Integer linear_closed_form(const Integer& a, const Integer& b, const Integer& r, std::uint64_t n);

/// Parses the comma-separated constant-first form, e.g. "-3,7,-2".
/// Throws Error{Parse}.
Polynomial parse_polynomial(std::string_view text);

/// Comma-separated constant-first form; inverse of parse_polynomial.
std::string to_text(const Polynomial& u);

/// Human-readable form, e.g. "-2x^2+7x-3".
std::string to_display(const Polynomial& u);

}  // namespace nilorbit
