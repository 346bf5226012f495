#include "supercong/exact_arith.hpp"

#include <array>

namespace supercong {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (u64 b : kBases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

long Valuation::value() const {
  if (infinite_) throw std::logic_error("finite value requested from infinite valuation");
  return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

PrimePower::PrimePower(Prime p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("prime power exponent must be >= 1");
  mpz_ui_pow_ui(modulus_.get_mpz_t(), p, k);
}

PrimePower PrimePower::lowered(unsigned j) const {
  if (j < 1 || j > k_) throw std::invalid_argument("lowered exponent out of range");
  return PrimePower(p_, j);
}

std::string PrimePower::to_string() const { return std::to_string(p_) + "^" + std::to_string(k_); }

ResidueClass::ResidueClass(const Integer& value, const PrimePower& m) : modulus_(m) {
  mpz_mod(value_.get_mpz_t(), value.get_mpz_t(), m.modulus().get_mpz_t());
}

ResidueClass ResidueClass::operator+(const ResidueClass& o) const {
  if (!(modulus_ == o.modulus_)) throw std::invalid_argument("residue modulus mismatch");
  return ResidueClass(value_ + o.value_, modulus_);
}

ResidueClass ResidueClass::operator-(const ResidueClass& o) const {
  if (!(modulus_ == o.modulus_)) throw std::invalid_argument("residue modulus mismatch");
  return ResidueClass(value_ - o.value_, modulus_);
}

ResidueClass ResidueClass::operator*(const ResidueClass& o) const {
  if (!(modulus_ == o.modulus_)) throw std::invalid_argument("residue modulus mismatch");
  return ResidueClass(value_ * o.value_, modulus_);
}

Valuation padic_valuation(const Integer& z, Prime p) {
  if (z == 0) return Valuation::infinity();
  Integer rest;
  const Integer prime(static_cast<unsigned long>(p));
  const auto v = mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t());
  return Valuation::finite(static_cast<long>(v));
}

Valuation padic_valuation(const Rational& q, Prime p) {
  if (q == 0) return Valuation::infinity();
  return Valuation::finite(padic_valuation(q.get_num(), p).value() -
                           padic_valuation(q.get_den(), p).value());
}

Integer mod_inverse(const Integer& a, const PrimePower& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.modulus().get_mpz_t()) == 0) {
    throw NotInvertible(to_string(a) + " is not invertible mod " + m.to_string());
  }
  return inv;
}

ResidueClass reduce_mod(const Rational& q, const PrimePower& m) {
  if (!padic_valuation(q, m.p()).at_least(0)) {
    throw NonIntegralAtP(to_string(q) + " is not p-integral at p=" + std::to_string(m.p()));
  }
  return ResidueClass(q.get_num() * mod_inverse(q.get_den(), m), m);
}

int legendre_symbol(const Integer& a, Prime p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre_symbol needs an odd prime");
  const Integer prime(static_cast<unsigned long>(p));
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), prime.get_mpz_t());
  if (r == 0) return 0;
  Integer e = (prime - 1) / 2;
  mpz_powm(r.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), prime.get_mpz_t());
  return r == 1 ? 1 : -1;
}

}  // namespace supercong
