#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supercong/rational.hpp"

namespace supercong {

class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleAtPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial over Q. coefficients()[i] multiplies x^i;
/// the leading entry is never zero, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients);

  static Poly constant(const Rational& c);
  static Poly x();
  /// c1*x + c0
  static Poly linear(const Rational& c1, const Rational& c0);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt stands for deg(0) = -infinity.
  std::optional<std::size_t> degree() const;
  Rational leading() const;

  Rational operator()(const Rational& x0) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul };

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

/// Euclidean division; remainder has degree < deg(b).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Quotient q with a = b*q. Throws NotDivisible on nonzero remainder and
/// std::domain_error when b is zero.
Poly poly_div_exact(const Poly& a, const Poly& b);

/// Monic gcd (zero when both inputs are zero).
Poly poly_gcd(Poly a, Poly b);

/// prod_{i<k} (base + i); base must have degree <= 1.
Poly pochhammer_poly(const Poly& base, std::uint64_t k);

/// numerator/denominator with a nonzero denominator. normalized() divides out
/// the gcd and makes the denominator monic, pushing its leading scalar into
/// the numerator. Construction does no reduction.
class RatFunc {
 public:
  RatFunc(Poly numerator, Poly denominator);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  RatFunc normalized() const;

  /// Plain evaluation; throws PoleAtPoint when the denominator vanishes.
  Rational operator()(const Rational& x0) const;

 private:
  Poly num_;
  Poly den_;
};

/// Peels the common (x - x0)^m factor by repeated exact division, then
/// evaluates. Throws PoleAtPoint if the denominator keeps a zero at x0.
Rational eval_with_cancellation(const RatFunc& f, const Rational& x0);

}  // namespace supercong
