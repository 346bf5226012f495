#include "doctest.h"

#include "supercong/combinatorics.hpp"
#include "supercong/sampling.hpp"

using namespace supercong;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

Integer factorial(std::uint64_t n) {
  Integer f(1);
  for (std::uint64_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

// E_{2m} = (-1)^m (2m)! [x^{2m}] sec x, with sec x = 1/cos x inverted as a
// power series over Q.
std::vector<Integer> euler_from_secant(std::uint64_t max_m) {
  std::vector<Rational> cos_c(max_m + 1), sec_c(max_m + 1);
  for (std::uint64_t j = 0; j <= max_m; ++j) cos_c[j] = make_rational(Integer(sign_pow(j)), factorial(2 * j));
  for (std::uint64_t m = 0; m <= max_m; ++m) {
    Rational acc = (m == 0) ? Rational(1) : Rational(0);
    for (std::uint64_t j = 1; j <= m; ++j) acc -= cos_c[j] * sec_c[m - j];
    sec_c[m] = acc;  // cos_c[0] == 1
  }
  std::vector<Integer> out;
  for (std::uint64_t m = 0; m <= max_m; ++m) {
    const Rational e = sec_c[m] * Rational(factorial(2 * m)) * sign_pow(m);
    REQUIRE(is_integer(e));
    out.push_back(e.get_num());
  }
  return out;
}

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(r(1, 2), 0) == 1);
  CHECK(pochhammer(r(-1, 2), 2) == r(-1, 4));
  CHECK(pochhammer(r(-3), 5) == 0);
  CHECK(pochhammer(r(1), 5) == 120);
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  for (std::uint64_t n = 0; n <= 40; ++n)
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n); ++k)
      REQUIRE(binomial(n, k) == factorial(n) / (factorial(static_cast<std::uint64_t>(k)) * factorial(n - static_cast<std::uint64_t>(k))));
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0, 1) == 0);
  CHECK(harmonic(2, 1) == r(3, 2));
  CHECK(harmonic(3, 2) == r(49, 36));
  CHECK_THROWS_AS(harmonic(3, 0), std::invalid_argument);
}

TEST_CASE("odd_square_harmonic") {
  CHECK(odd_square_harmonic(0) == 0);
  CHECK(odd_square_harmonic(2) == r(10, 9));
  CHECK(odd_square_harmonic(3) == r(259, 225));
  for (std::uint64_t k = 0; k <= 60; ++k) CHECK(odd_square_harmonic(k) == harmonic(2 * k, 2) - harmonic(k, 2) / 4);
}

TEST_CASE("fermat_quotient2") {
  CHECK(fermat_quotient2(5) == 3);
  CHECK(fermat_quotient2(7) == 9);
  CHECK(fermat_quotient2(11) == 93);
  CHECK_THROWS_AS(fermat_quotient2(2), std::invalid_argument);
  CHECK_THROWS_AS(fermat_quotient2(15), std::invalid_argument);
  for (std::uint64_t p = 3; p < 1000; ++p)
    if (is_prime(p)) REQUIRE(is_integer(fermat_quotient2(p)));
}

TEST_CASE("euler_number") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(8) == 1385);
  CHECK(euler_number(7) == 0);
  const auto oracle = euler_from_secant(30);
  for (std::uint64_t m = 0; m <= 30; ++m) CHECK(euler_number(2 * m) == oracle[m]);
  for (std::uint64_t m = 1; m <= 98; ++m) {
    Integer acc(0);
    for (std::uint64_t j = 0; j <= m; ++j) acc += binomial(2 * m, static_cast<std::int64_t>(2 * j)) * euler_number(2 * j);
    REQUIRE(acc == 0);
    REQUIRE(euler_number(2 * m + 1) == 0);
  }
}

TEST_CASE("central_catalan_summand") {
  CHECK(central_catalan_summand(0) == 1);
  CHECK(central_catalan_summand(1) == r(1, 16));
  CHECK(central_catalan_summand(2) == r(21, 1024));
}

TEST_CASE("Pochhammer ratio facts up to k = 200") {
  Rational c_prev(1);
  for (std::uint64_t k = 0; k <= 200; ++k) {
    const Rational four_k(ipow(Integer(4), k));
    const Rational c2k(binomial(2 * k, static_cast<std::int64_t>(k)));
    CHECK(pochhammer(r(1, 2), k) / pochhammer(r(1), k) == c2k / four_k);
    CHECK(pochhammer(r(-1, 2), k) / pochhammer(r(1, 2), k) == 1 / (1 - 2 * Rational(static_cast<unsigned long>(k))));
    const Rational one_k = pochhammer(r(1), k);
    CHECK(pochhammer(r(1, 4), k) * pochhammer(r(3, 4), k) / (one_k * one_k) ==
          Rational(binomial(4 * k, static_cast<std::int64_t>(2 * k))) * c2k / Rational(ipow(Integer(64), k)));
    CHECK(pochhammer(r(1, 2), k) / pochhammer(r(3, 2), k) == 1 / (2 * Rational(static_cast<unsigned long>(k)) + 1));
  }
}

TEST_CASE("property: pochhammer splits at any index") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = rng.rational(30, 12);
    const auto j = static_cast<std::uint64_t>(rng.uniform(0, 15));
    const auto k = static_cast<std::uint64_t>(rng.uniform(0, 15));
    CHECK(pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + Rational(static_cast<unsigned long>(j)), k));
  }
}

TEST_CASE("SeqCache matches recomputation") {
  SeqCache cache;
  const auto h2 = cache.harmonic_prefix(2, 40);
  REQUIRE(h2->size() == 41);
  for (std::uint64_t k = 0; k <= 40; ++k) CHECK((*h2)[k] == harmonic(k, 2));
  // growing an existing table leaves earlier entries untouched
  const auto grown = cache.harmonic_prefix(2, 80);
  CHECK((*grown)[40] == (*h2)[40]);
  CHECK(cache.harmonic(80, 2) == harmonic(80, 2));
  CHECK(cache.harmonic(17, 1) == harmonic(17, 1));
  CHECK(cache.euler(10) == -50521);
  CHECK(cache.euler(11) == 0);
}
