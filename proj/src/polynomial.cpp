#include "nilorbit/polynomial.hpp"

#include <algorithm>

#include "nilorbit/error.hpp"
#include "nilorbit/numtheory.hpp"

namespace nilorbit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kWordModulusLimit = u64{1} << 32;

}  // namespace

Polynomial::Polynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  while (coefficients_.size() > 1 && coefficients_.back() == 0) coefficients_.pop_back();
  if (coefficients_.empty()) coefficients_.push_back(0);
}

const Integer& Polynomial::operator[](std::size_t i) const {
  static const Integer zero = 0;
  return i < coefficients_.size() ? coefficients_[i] : zero;
}

bool operator<(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
  return std::lexicographical_compare(lhs.coefficients_.begin(), lhs.coefficients_.end(),
                                      rhs.coefficients_.begin(), rhs.coefficients_.end());
}

void require_dynamical(const Polynomial& u) {
  if (u.is_constant()) {
    throw Error(ErrorCode::NotDynamical,
                "constant polynomial " + to_text(u) + " does not define a dynamical map");
  }
}

Integer eval(const Polynomial& u, const Integer& x) {
  const auto& c = u.coefficients();
  Integer acc = c.back();
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Integer iterate(const Polynomial& u, Integer x, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) x = eval(u, x);
  return x;
}

ResiduePolynomial::ResiduePolynomial(const Polynomial& u, std::uint64_t modulus)
    : modulus_(modulus) {
  coefficients_.reserve(u.coefficients().size());
  for (const Integer& c : u.coefficients()) coefficients_.push_back(residue(c, modulus));
}

std::uint64_t ResiduePolynomial::operator()(std::uint64_t x) const noexcept {
  const u64 p = modulus_;
  u64 acc = coefficients_.back();
  if (p < kWordModulusLimit) {
    for (auto it = coefficients_.rbegin() + 1; it != coefficients_.rend(); ++it) {
      acc = (acc * x + *it) % p;
    }
  } else {
    for (auto it = coefficients_.rbegin() + 1; it != coefficients_.rend(); ++it) {
      acc = static_cast<u64>((static_cast<u128>(acc) * x + *it) % p);
    }
  }
  return acc;
}

std::uint64_t eval_mod(const Polynomial& u, std::uint64_t x, std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidModulus, std::to_string(p) + " is not a prime modulus");
  }
  return ResiduePolynomial(u, p)(x % p);
}

Polynomial conjugate(const Polynomial& u) {
  std::vector<Integer> c = u.coefficients();
  // v_i = (-1)^(i+1) c_i
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

Polynomial reduce_at(const Polynomial& u, const Integer& r) {
  if (r <= 0) throw Error(ErrorCode::InvalidArgument, "reduction base point must be positive");
  if (u.constant() % r != 0) {
    throw Error(ErrorCode::Divisibility,
                to_string(r) + " does not divide the constant term " + to_string(u.constant()));
  }
  std::vector<Integer> c = u.coefficients();
  c[0] /= r;
  Integer scale = 1;
  for (std::size_t i = 2; i < c.size(); ++i) {
    scale *= r;
    c[i] *= scale;
  }
  return Polynomial(std::move(c));
}

Integer linear_closed_form(const Integer& a, const Integer& b, const Integer& r, std::uint64_t n) {
  if (a == 0) throw Error(ErrorCode::NotDynamical, "a = 0 does not define a dynamical map");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "iteration count must be positive");
  const Integer an = boost::multiprecision::pow(a, static_cast<unsigned>(n));
  const Integer geometric = a == 1 ? Integer(n) : Integer((an - 1) / (a - 1));
  return an * r + b * geometric;
}

Polynomial parse_polynomial(std::string_view text) {
  std::vector<Integer> coefficients;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view field = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    coefficients.push_back(parse_integer(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coefficients));
}

std::string to_text(const Polynomial& u) {
  std::string out;
  for (const Integer& c : u.coefficients()) {
    if (!out.empty()) out += ',';
    out += to_string(c);
  }
  return out;
}

std::string to_display(const Polynomial& u) {
  std::string out;
  const auto& c = u.coefficients();
  for (int i = u.degree(); i >= 0; --i) {
    const Integer& coef = c[static_cast<std::size_t>(i)];
    if (coef == 0 && !(i == 0 && out.empty())) continue;
    const Integer magnitude = abs(coef);
    if (coef < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (magnitude != 1 || i == 0) out += to_string(magnitude);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace nilorbit
