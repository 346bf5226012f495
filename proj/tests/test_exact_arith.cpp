#include "doctest.h"

#include <set>

#include "supercong/exact_arith.hpp"
#include "supercong/sampling.hpp"

using namespace supercong;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Random rational whose denominator is coprime to p.
Rational p_integral(SplitMix64& rng, Prime p) {
  while (true) {
    Rational q = rng.rational(5000, 400);
    if (padic_valuation(q, p).at_least(0)) return q;
  }
}

}  // namespace

TEST_CASE("rational construction is canonical") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(make_rational(0, 7).get_den() == 1);
  CHECK(parse_rational("-10/4") == r(-5, 2));
  CHECK(parse_rational("12") == r(12));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("padic_valuation") {
  CHECK(padic_valuation(r(50, 3), 5) == Valuation::finite(2));
  CHECK(padic_valuation(r(0), 7).is_infinite());
  CHECK(padic_valuation(r(8, 25), 5) == Valuation::finite(-2));
  CHECK(padic_valuation(r(7, 3), 5) == Valuation::finite(0));
  CHECK(Valuation::infinity() > Valuation::finite(1000000));
  CHECK(Valuation::infinity().at_least(1 << 30));
  CHECK_THROWS_AS(Valuation::infinity().value(), std::logic_error);
}

TEST_CASE("reduce_mod") {
  CHECK(reduce_mod(r(8, 3), PrimePower(5, 2)).value() == 11);
  CHECK(reduce_mod(r(-209), PrimePower(5, 3)).value() == 41);
  CHECK(reduce_mod(r(0), PrimePower(7, 1)).value() == 0);
  CHECK_THROWS_AS(reduce_mod(r(1, 5), PrimePower(5, 2)), NonIntegralAtP);
  CHECK_THROWS_AS(reduce_mod(r(3, 50), PrimePower(5, 1)), NonIntegralAtP);
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(Integer(3), PrimePower(5, 2)) == 17);
  CHECK(mod_inverse(Integer(1), PrimePower(7, 3)) == 1);
  CHECK(mod_inverse(Integer(44), PrimePower(7, 2)) == 39);
  CHECK(mod_inverse(Integer(-1), PrimePower(7, 2)) == 48);
  CHECK_THROWS_AS(mod_inverse(Integer(10), PrimePower(5, 2)), NotInvertible);
}

TEST_CASE("legendre_symbol") {
  CHECK(legendre_symbol(Integer(-1), 5) == 1);
  CHECK(legendre_symbol(Integer(2), 7) == 1);
  CHECK(legendre_symbol(Integer(14), 7) == 0);
  CHECK(legendre_symbol(Integer(-1), 7) == -1);
  CHECK_THROWS_AS(legendre_symbol(Integer(1), 2), std::invalid_argument);
  CHECK_THROWS_AS(legendre_symbol(Integer(1), 9), std::invalid_argument);
}

TEST_CASE("legendre_symbol matches the set of squares") {
  for (Prime p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 97, 199}) {
    std::set<std::uint64_t> squares;
    for (std::uint64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    for (std::int64_t a = -60; a <= 60; ++a) {
      const auto m = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
      const int expected = m == 0 ? 0 : (squares.count(m) ? 1 : -1);
      REQUIRE(legendre_symbol(Integer(static_cast<long>(a)), p) == expected);
    }
    for (std::int64_t a = 1; a < 20; ++a) {
      for (std::int64_t b = 1; b < 20; ++b) {
        CHECK(legendre_symbol(Integer(static_cast<long>(a * b)), p) ==
              legendre_symbol(Integer(static_cast<long>(a)), p) * legendre_symbol(Integer(static_cast<long>(b)), p));
      }
    }
  }
}

TEST_CASE("is_prime agrees with trial division and rejects strong pseudoprimes") {
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == trial_division_prime(n));
  CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));      // spsp(2,3,5,7)
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK_FALSE(is_prime(561));
}

TEST_CASE("PrimePower construction") {
  const PrimePower m(7, 3);
  CHECK(m.modulus() == 343);
  CHECK(m.to_string() == "7^3");
  CHECK(m.lowered(2).modulus() == 49);
  CHECK_THROWS_AS(PrimePower(9, 2), std::invalid_argument);
  CHECK_THROWS_AS(PrimePower(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(PrimePower(5, 0), std::invalid_argument);
}

TEST_CASE("ResidueClass normalizes into [0, p^k)") {
  const PrimePower m(5, 2);
  CHECK(ResidueClass(Integer(-1), m).value() == 24);
  CHECK(ResidueClass(Integer(50), m).value() == 0);
  CHECK((ResidueClass(Integer(20), m) + ResidueClass(Integer(7), m)).value() == 2);
  CHECK((ResidueClass(Integer(3), m) - ResidueClass(Integer(7), m)).value() == 21);
  CHECK_THROWS_AS(ResidueClass(Integer(1), m) * ResidueClass(Integer(1), PrimePower(5, 3)), std::invalid_argument);
}

TEST_CASE("property: reduction is a ring homomorphism on p-integral rationals") {
  SplitMix64 rng(0xA11CE);
  for (Prime p : {3, 5, 7, 13, 199}) {
    for (unsigned k = 1; k <= 4; ++k) {
      const PrimePower m(p, k);
      for (int trial = 0; trial < 50; ++trial) {
        const Rational a = p_integral(rng, p);
        const Rational b = p_integral(rng, p);
        CHECK(reduce_mod(Rational(a + b), m) == reduce_mod(a, m) + reduce_mod(b, m));
        CHECK(reduce_mod(Rational(a * b), m) == reduce_mod(a, m) * reduce_mod(b, m));
        for (unsigned j = 1; j <= k; ++j) {
          const Integer lowered = reduce_mod(a, m).value() % m.lowered(j).modulus();
          CHECK(lowered == reduce_mod(a, m.lowered(j)).value());
        }
      }
    }
  }
}

TEST_CASE("property: valuation is additive over products") {
  SplitMix64 rng(0xBEEF);
  for (int trial = 0; trial < 300; ++trial) {
    Rational a = rng.rational(100000, 100000);
    Rational b = rng.rational(100000, 100000);
    if (a == 0 || b == 0) continue;
    for (Prime p : {2, 3, 5, 7}) {
      CHECK(padic_valuation(Rational(a * b), p).value() ==
            padic_valuation(a, p).value() + padic_valuation(b, p).value());
    }
  }
}
