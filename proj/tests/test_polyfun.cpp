#include "doctest.h"

#include "supercong/combinatorics.hpp"
#include "supercong/hypergeometric.hpp"
#include "supercong/polyfun.hpp"
#include "supercong/sampling.hpp"

using namespace supercong;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

Poly random_poly(SplitMix64& rng, int max_degree) {
  std::vector<Rational> c;
  const auto deg = rng.uniform(0, max_degree);
  for (std::int64_t i = 0; i <= deg; ++i) c.push_back(rng.rational(9, 5));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("poly arithmetic") {
  const Poly x = Poly::x();
  const Poly one = Poly::constant(r(1));
  CHECK(poly_arith(x + one, x - one, PolyOp::mul) == Poly{r(-1), r(0), r(1)});
  CHECK(poly_arith(Poly{r(-1), r(0), r(1)}, Poly{r(1), r(0), r(-1)}, PolyOp::add).is_zero());
  CHECK(poly_arith(Poly{r(0), r(2)}, Poly{r(0), r(0), r(3)}, PolyOp::mul) == Poly{r(0), r(0), r(0), r(6)});
  CHECK(poly_arith(x, x, PolyOp::sub).is_zero());
}

TEST_CASE("degree and trimming") {
  CHECK_FALSE(Poly().degree().has_value());
  CHECK(Poly{r(1), r(0), r(0)}.degree() == 0u);
  CHECK(Poly{r(0), r(0)}.is_zero());
  CHECK((Poly{r(0), r(1)} * Poly()).is_zero());
  CHECK(Poly{r(1), r(-3, 2), r(0), r(1)}.to_string() == "x^3 - (3/2)x + 1");
}

TEST_CASE("poly_div_exact") {
  const Poly x2m1{r(-1), r(0), r(1)};
  CHECK(poly_div_exact(x2m1, Poly{r(-1), r(1)}) == Poly{r(1), r(1)});
  CHECK(poly_div_exact(Poly{r(0), r(1), r(1)}, Poly::x()) == Poly{r(1), r(1)});
  CHECK_THROWS_AS(poly_div_exact(Poly{r(1), r(0), r(1)}, Poly{r(-1), r(1)}), NotDivisible);
  CHECK_THROWS_AS(poly_div_exact(x2m1, Poly()), std::domain_error);
}

TEST_CASE("property: exact division inverts multiplication") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = random_poly(rng, 6);
    Poly b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    CHECK(poly_div_exact(a * b, b) == a);
    auto [q, rem] = poly_divmod(a, b);
    CHECK(q * b + rem == a);
    if (!rem.is_zero()) CHECK(*rem.degree() < *b.degree());
  }
}

TEST_CASE("pochhammer_poly") {
  CHECK(pochhammer_poly(Poly::x(), 2) == Poly{r(0), r(1), r(1)});
  CHECK(pochhammer_poly(Poly::linear(r(1), r(-1)), 3) == Poly{r(0), r(-1), r(0), r(1)});
  CHECK(pochhammer_poly(Poly::x(), 0) == Poly::constant(r(1)));
  CHECK_THROWS_AS(pochhammer_poly(Poly{r(0), r(0), r(1)}, 2), std::invalid_argument);
}

TEST_CASE("property: pochhammer_poly evaluates to the rational Pochhammer symbol") {
  SplitMix64 rng(99);
  for (const Rational& shift : {r(0), r(1, 3), r(-5, 2), r(7)}) {
    const Poly base = Poly::linear(r(1), shift);
    for (std::uint64_t k = 0; k <= 30; ++k) {
      const Poly p = pochhammer_poly(base, k);
      for (int s = 0; s < 20; ++s) {
        const Rational x0 = rng.rational(20, 9);
        REQUIRE(p(x0) == pochhammer(x0 + shift, k));
      }
    }
  }
}

TEST_CASE("eval_with_cancellation") {
  const RatFunc f(Poly{r(-1), r(0), r(1)}, Poly{r(-1), r(1)});
  CHECK(eval_with_cancellation(f, r(1)) == 2);
  CHECK(eval_with_cancellation(RatFunc(Poly{r(-3), r(1)}, Poly{r(-1), r(1)}), r(2)) == -1);
  CHECK(eval_with_cancellation(new6_pochhammer_quotient(2) , r(3)) == new6_pochhammer_quotient(2)(r(3)));
  const RatFunc second(new6_pochhammer_quotient(2).numerator(),
                       new6_pochhammer_quotient(2).denominator() * Poly::linear(r(1), r(-1)));
  CHECK(eval_with_cancellation(second, r(1)) == r(-1, 6));
  CHECK_THROWS_AS(eval_with_cancellation(RatFunc(Poly{r(-1), r(1)}, Poly{r(1), r(-2), r(1)}), r(1)), PoleAtPoint);
  CHECK(eval_with_cancellation(RatFunc(Poly{r(1), r(-2), r(1)}, Poly{r(-1), r(1)}), r(1)) == 0);
  CHECK(eval_with_cancellation(RatFunc(Poly(), Poly{r(-1), r(1)}), r(1)) == 0);
}

TEST_CASE("property: cancellation agrees with direct evaluation away from poles") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly num = random_poly(rng, 5);
    const Poly den = random_poly(rng, 4);
    if (den.is_zero()) continue;
    const RatFunc f(num, den);
    const Rational x0 = rng.rational(10, 7);
    if (den(x0) == 0) continue;
    CHECK(eval_with_cancellation(f, x0) == f(x0));
  }
}

TEST_CASE("RatFunc normalization") {
  // (2x^2 - 2) / (4x - 4) -> (x + 1)/2 with monic denominator: ((1/2)x + 1/2) / 1
  const RatFunc f(Poly{r(-2), r(0), r(2)}, Poly{r(-4), r(4)});
  const RatFunc g = f.normalized();
  CHECK(g.denominator() == Poly::constant(r(1)));
  CHECK(g.numerator() == Poly{r(1, 2), r(1, 2)});
  const RatFunc h = RatFunc(Poly{r(1)}, Poly{r(0), r(0), r(3)}).normalized();
  CHECK(h.denominator().leading() == 1);
  CHECK(poly_gcd(h.numerator(), h.denominator()) == Poly::constant(r(1)));
  CHECK_THROWS_AS(RatFunc(Poly{r(1)}, Poly()), std::domain_error);
  CHECK_THROWS_AS(RatFunc(Poly{r(1)}, Poly::x())(r(0)), PoleAtPoint);
}

TEST_CASE("limits at x = 1 for 2 <= n <= 30") {
  for (std::uint64_t n = 2; n <= 30; ++n) {
    const Rational nq(static_cast<unsigned long>(n));
    const Poly cubic = Poly::x() * Poly::linear(r(2), r(-1)) * Poly::linear(r(2), r(-3));
    CHECK(eval_with_cancellation(RatFunc(new6_quartic(n), cubic), r(1)) == -4 * nq * nq * (nq - 1) * (nq - 1));
    const RatFunc pq = new6_pochhammer_quotient(n);
    const RatFunc over(pq.numerator(), pq.denominator() * Poly::linear(r(1), r(-1)));
    CHECK(eval_with_cancellation(over, r(1)) == -1 / (nq * (nq - 1) * (2 * nq - 1)));
  }
}
