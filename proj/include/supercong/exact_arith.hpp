#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "supercong/rational.hpp"

namespace supercong {

using Prime = std::uint64_t;

class NonIntegralAtP : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Deterministic primality for the full 64-bit range (Miller-Rabin with the
/// first twelve prime bases).
bool is_prime(std::uint64_t n);

/// p-adic valuation with an explicit infinity for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation finite(long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error when infinite.
  long value() const;

  /// v >= k; infinity satisfies every bound.
  bool at_least(long k) const { return infinite_ || value_ >= k; }

  std::string to_string() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

 private:
  Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
  bool infinite_;
  long value_;
};

class PrimePower {
 public:
  /// Throws std::invalid_argument when p is not prime or k < 1.
  PrimePower(Prime p, unsigned k);

  Prime p() const { return p_; }
  unsigned k() const { return k_; }
  const Integer& modulus() const { return modulus_; }

  /// Same prime, smaller exponent.
  PrimePower lowered(unsigned j) const;

  std::string to_string() const;  // "5^3"

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  Prime p_;
  unsigned k_;
  Integer modulus_;
};

/// Residue in [0, p^k).
class ResidueClass {
 public:
  /// Reduces any integer into [0, m).
  ResidueClass(const Integer& value, const PrimePower& m);

  const Integer& value() const { return value_; }
  const PrimePower& modulus() const { return modulus_; }

  ResidueClass operator+(const ResidueClass& o) const;
  ResidueClass operator-(const ResidueClass& o) const;
  ResidueClass operator*(const ResidueClass& o) const;

  friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  Integer value_;
  PrimePower modulus_;
};

Valuation padic_valuation(const Integer& z, Prime p);
Valuation padic_valuation(const Rational& q, Prime p);

/// a^{-1} mod p^k in [0, p^k). Throws NotInvertible when p | a.
Integer mod_inverse(const Integer& a, const PrimePower& m);

/// num * den^{-1} mod p^k. Throws NonIntegralAtP when v_p(q) < 0.
ResidueClass reduce_mod(const Rational& q, const PrimePower& m);

/// Euler's criterion; p must be an odd prime (std::invalid_argument otherwise).
int legendre_symbol(const Integer& a, Prime p);

}  // namespace supercong
