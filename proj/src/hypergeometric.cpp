#include "supercong/hypergeometric.hpp"

#include "supercong/combinatorics.hpp"
#include "supercong/sampling.hpp"

namespace supercong {

namespace {

Rational q(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }

Rational qn(std::uint64_t n) { return Rational(Integer(static_cast<unsigned long>(n))); }

std::string str(const Rational& x) { return to_string(x); }

std::string str(std::uint64_t n) { return std::to_string(n); }

IdentityCheckOutcome outcome(Rational lhs, Rational rhs, ParamList params) {
  IdentityCheckOutcome out{std::move(lhs), std::move(rhs), false, std::move(params)};
  out.equal = (out.lhs == out.rhs);
  return out;
}

// Terms t_0..t_N of a terminating series (or the first budget terms).
std::vector<Rational> pfq_terms(const HyperSeries& s) {
  if (s.argument == 0) return {Rational(1)};
  std::uint64_t last;
  if (auto m = termination_index(s.upper)) {
    last = *m;
  } else if (s.term_budget) {
    if (*s.term_budget == 0) return {};
    last = *s.term_budget - 1;
  } else {
    throw NonTerminating("no upper parameter is a non-positive integer and no term budget was given");
  }
  std::vector<Rational> terms;
  terms.reserve(last + 1);
  Rational term(1);
  terms.push_back(term);
  for (std::uint64_t k = 0; k < last; ++k) {
    const Rational kq = qn(k);
    Rational num = s.argument;
    for (const auto& a : s.upper) num *= a + kq;
    Rational den = qn(k + 1);
    for (const auto& b : s.lower) {
      const Rational factor = b + kq;
      if (factor == 0) {
        throw LowerParamPole("lower parameter " + to_string(b) + " vanishes at term " + std::to_string(k + 1));
      }
      den *= factor;
    }
    term *= num / den;
    terms.push_back(term);
  }
  return terms;
}

Rational sum_of(const std::vector<Rational>& terms, std::size_t count) {
  Rational s(0);
  for (std::size_t i = 0; i < count && i < terms.size(); ++i) s += terms[i];
  return s;
}

void require_at_least(std::uint64_t n, std::uint64_t lo, const char* what) {
  if (n < lo) throw std::invalid_argument(std::string(what) + " needs n >= " + std::to_string(lo));
}

void skip_if_pole(const Rational& x, std::uint64_t n, const std::string& name) {
  if (is_pole_in_range(x, n)) {
    throw SkippedPole(name, "parameter " + name + " = " + to_string(x) + " is an integer in [" +
                                std::to_string(1 - static_cast<std::int64_t>(n)) + ", 0]");
  }
}

HyperSeries b1_series(std::uint64_t n) { return {{-qn(n), qn(n) - 1}, {q(1, 2)}, Rational(1), std::nullopt}; }

HyperSeries b2_series(std::uint64_t n) {
  return {{-qn(n), qn(n) - 1, q(-1, 2)}, {Rational(1), q(1, 2)}, Rational(1), std::nullopt};
}

HyperSeries c1_series(std::uint64_t n) {
  return {{-qn(n), qn(n) + 1, q(1, 4), q(3, 4)}, {Rational(1), q(1, 2), q(3, 2)}, Rational(1), std::nullopt};
}

Rational central_over_4n(std::uint64_t n) {
  return make_rational(binomial(2 * n, static_cast<std::int64_t>(n)), ipow(Integer(4), n));
}

void skip_new6_poles_impl(std::uint64_t n, const Rational& x) {
  for (const Rational& bad : {q(0), q(1), q(1, 2), q(3, 2)}) {
    if (x == bad) throw SkippedPole("x", "closed form has a pole at x = " + to_string(x));
  }
  skip_if_pole(x, n, "x");
  skip_if_pole(q(3, 2) - x, n, "3/2-x");
}

Poly pq_numerator(std::uint64_t n) {
  return pochhammer_poly(Poly::linear(q(1), q(1) - qn(n)), n) *
         pochhammer_poly(Poly::linear(q(-1), q(5, 2) - qn(n)), n);
}

Poly pq_denominator(std::uint64_t n) {
  return pochhammer_poly(Poly::x(), n) * pochhammer_poly(Poly::linear(q(-1), q(3, 2)), n);
}

Poly inner_denominator() {
  return Poly::x() * Poly::linear(q(1), q(-1)) * Poly::linear(q(2), q(-1)) * Poly::linear(q(2), q(-3));
}

}  // namespace

void require_new6_domain(std::uint64_t n, const Rational& x) { skip_new6_poles_impl(n, x); }

bool is_pole_in_range(const Rational& x, std::uint64_t n) {
  if (!is_integer(x) || x > 0) return false;
  return x > -qn(n);
}

std::optional<std::uint64_t> termination_index(const std::vector<Rational>& upper) {
  std::optional<std::uint64_t> best;
  for (const auto& a : upper) {
    if (is_integer(a) && a <= 0) {
      const Integer m = -a.get_num();
      if (!m.fits_ulong_p()) continue;
      const std::uint64_t mi = m.get_ui();
      if (!best || mi < *best) best = mi;
    }
  }
  return best;
}

Rational eval_terminating_pfq(const HyperSeries& s) {
  const auto terms = pfq_terms(s);
  return sum_of(terms, terms.size());
}

IdentityCheckOutcome check_gauss_2f1(std::uint64_t n, const Rational& b, const Rational& c) {
  require_at_least(n, 1, "gauss");
  skip_if_pole(c, n, "c");
  skip_if_pole(c - b, n, "c-b");
  const Rational lhs = eval_terminating_pfq({{-qn(n), b}, {c}, Rational(1), std::nullopt});
  const Rational rhs = pochhammer(c - b, n) / pochhammer(c, n);
  return outcome(lhs, rhs, {{"n", str(n)}, {"b", str(b)}, {"c", str(c)}});
}

IdentityCheckOutcome check_identity_b1(std::uint64_t n) {
  require_at_least(n, 2, "b1");
  const Rational lhs = eval_terminating_pfq(b1_series(n));
  const Rational rhs = q(sign_pow(n - 1)) / (2 * qn(n) - 1);
  return outcome(lhs, rhs, {{"n", str(n)}});
}

IdentityCheckOutcome check_truncation_b3(std::uint64_t n) {
  require_at_least(n, 2, "b3");
  const auto terms = pfq_terms(b1_series(n));
  const Rational direct = sum_of(terms, n);
  const Rational sign = q(sign_pow(n - 1));
  const Rational full = sign / (2 * qn(n) - 1);
  const Rational last = pochhammer(-qn(n), n) * pochhammer(qn(n) - 1, n) / (pochhammer(q(1), n) * pochhammer(q(1, 2), n));
  const Rational four_pow = Rational(ipow(Integer(4), n - 1));
  const Rational middle = full * (1 + four_pow * (2 * qn(n) - 2));
  const Rational closed = sign * (four_pow - (four_pow - 1) / (2 * qn(n) - 1));
  auto out = outcome(direct, closed, {{"n", str(n)}});
  out.equal = out.equal && (middle == closed) && (full - last == closed) && (terms[n] == last);
  return out;
}

IdentityCheckOutcome check_identity_b2(std::uint64_t n) {
  require_at_least(n, 2, "b2");
  const Rational lhs = eval_terminating_pfq(b2_series(n));
  const Rational rhs = 4 * qn(n) * (qn(n) - 1) / (2 * qn(n) - 1);
  return outcome(lhs, rhs, {{"n", str(n)}});
}

IdentityCheckOutcome check_truncation_b8(std::uint64_t n) {
  require_at_least(n, 2, "b8");
  const auto terms = pfq_terms(b2_series(n));
  const Rational direct = sum_of(terms, n);
  const Rational full = 4 * qn(n) * (qn(n) - 1) / (2 * qn(n) - 1);
  const Rational one_n = pochhammer(q(1), n);
  const Rational last = pochhammer(-qn(n), n) * pochhammer(qn(n) - 1, n) * pochhammer(q(-1, 2), n) /
                        (one_n * one_n * pochhammer(q(1, 2), n));
  const Rational closed = (4 * qn(n) * (qn(n) - 1) + q(sign_pow(n)) * Rational(binomial(2 * n - 2, static_cast<std::int64_t>(n)))) /
                          (2 * qn(n) - 1);
  auto out = outcome(direct, closed, {{"n", str(n)}});
  out.equal = out.equal && (full - last == closed) && (terms[n] == last);
  return out;
}

IdentityCheckOutcome check_transformation_new4(std::uint64_t n, const Rational& a, const Rational& b,
                                               const Rational& e, const Rational& f) {
  require_at_least(n, 1, "new4");
  const Rational nq = qn(n);
  const Rational s = e + f - a - b + nq;
  const Rational lower_e = 1 + a - e - nq;
  const Rational lower_f = 1 + a - f - nq;
  skip_if_pole(e, n, "e");
  skip_if_pole(f, n, "f");
  skip_if_pole(lower_e, n, "1+a-e-n");
  skip_if_pole(lower_f, n, "1+a-f-n");
  const Rational lhs = eval_terminating_pfq({{a, b, -nq}, {e, f}, Rational(1), std::nullopt});
  const Rational prefactor = pochhammer(e - a, n) * pochhammer(f - a, n) / (pochhammer(e, n) * pochhammer(f, n));
  const Rational rhs = prefactor * eval_terminating_pfq({{1 - s, a, -nq}, {lower_e, lower_f}, Rational(1), std::nullopt});
  return outcome(lhs, rhs, {{"n", str(n)}, {"a", str(a)}, {"b", str(b)}, {"e", str(e)}, {"f", str(f)}});
}

Poly new6_quartic(std::uint64_t n) {
  const Rational nq = qn(n);
  const Rational n2 = nq * nq;
  return Poly{4 * nq * (nq - 1) * (n2 - nq - 1), 12 * n2 - 12 * nq - 3, -8 * n2 + 8 * nq + 11, q(-12), q(4)};
}

RatFunc new6_inner_closed_form(std::uint64_t n) { return RatFunc(new6_quartic(n), inner_denominator()); }

RatFunc new6_pochhammer_quotient(std::uint64_t n) { return RatFunc(pq_numerator(n), pq_denominator(n)); }

RatFunc new6_rhs(std::uint64_t n) {
  return RatFunc(pq_numerator(n) * new6_quartic(n), pq_denominator(n) * inner_denominator());
}

IdentityCheckOutcome check_identity_new6(std::uint64_t n, const Rational& x) {
  require_at_least(n, 2, "new6");
  require_new6_domain(n, x);
  const Rational nq = qn(n);
  const Rational lhs = eval_terminating_pfq({{nq - 1, q(-1, 2), -nq}, {x, q(3, 2) - x}, Rational(1), std::nullopt});
  const Rational quotient = pochhammer(x + 1 - nq, n) * pochhammer(q(5, 2) - x - nq, n) /
                            (pochhammer(x, n) * pochhammer(q(3, 2) - x, n));
  const Rational rhs = quotient * new6_inner_closed_form(n)(x);
  return outcome(lhs, rhs, {{"n", str(n)}, {"x", str(x)}});
}

IdentityCheckOutcome check_inner_new6(std::uint64_t n, const Rational& x) {
  require_at_least(n, 2, "new6_inner");
  require_new6_domain(n, x);
  const Rational nq = qn(n);
  const Rational lhs = eval_terminating_pfq({{q(-2), nq - 1, -nq}, {-x, x - q(3, 2)}, Rational(1), std::nullopt});
  const Rational rhs = new6_inner_closed_form(n)(x);
  return outcome(lhs, rhs, {{"n", str(n)}, {"x", str(x)}});
}

IdentityCheckOutcome check_new6_at_one(std::uint64_t n) {
  require_at_least(n, 2, "new6_at_one");
  const Rational nq = qn(n);
  const Rational lhs = eval_terminating_pfq({{nq - 1, q(-1, 2), -nq}, {q(1), q(1, 2)}, Rational(1), std::nullopt});
  const Rational rhs = eval_with_cancellation(new6_rhs(n), q(1));
  auto out = outcome(lhs, rhs, {{"n", str(n)}, {"x", "1"}});
  out.equal = out.equal && (rhs == 4 * nq * (nq - 1) / (2 * nq - 1));
  return out;
}

IdentityCheckOutcome check_limit_quartic(std::uint64_t n) {
  require_at_least(n, 2, "limit_quartic");
  const Rational nq = qn(n);
  const Poly den = Poly::x() * Poly::linear(q(2), q(-1)) * Poly::linear(q(2), q(-3));
  const Rational lhs = eval_with_cancellation(RatFunc(new6_quartic(n), den), q(1));
  const Rational rhs = -4 * nq * nq * (nq - 1) * (nq - 1);
  return outcome(lhs, rhs, {{"n", str(n)}});
}

IdentityCheckOutcome check_limit_pochhammer(std::uint64_t n) {
  require_at_least(n, 2, "limit_pochhammer");
  const Rational nq = qn(n);
  const RatFunc f(pq_numerator(n), pq_denominator(n) * Poly::linear(q(1), q(-1)));
  const Rational lhs = eval_with_cancellation(f, q(1));
  const Rational rhs = -1 / (nq * (nq - 1) * (2 * nq - 1));
  return outcome(lhs, rhs, {{"n", str(n)}});
}

IdentityCheckOutcome check_identity_c1(std::uint64_t n) {
  return outcome(eval_terminating_pfq(c1_series(n)), central_over_4n(n), {{"n", str(n)}});
}

IdentityCheckOutcome check_identity_new2(std::uint64_t n, const Rational& f, const Rational& g) {
  require_at_least(n, 1, "new2");
  const Rational d = -qn(n);
  const std::vector<Rational> lower = {1 + f, (1 + f + d - g) / 2, 1 + (f + d - g) / 2};
  skip_if_pole(lower[0], n, "1+f");
  skip_if_pole(lower[1], n, "(1+f+d-g)/2");
  skip_if_pole(lower[2], n, "1+(f+d-g)/2");
  skip_if_pole(g - f, n, "g-f");
  const Rational lhs = eval_terminating_pfq({{d, 1 + f - g, f / 2, (f + 1) / 2}, lower, Rational(1), std::nullopt});
  const Rational rhs = pochhammer(g, n) / pochhammer(g - f, n);
  return outcome(lhs, rhs, {{"n", str(n)}, {"f", str(f)}, {"g", str(g)}});
}

IdentityCheckOutcome check_identity_new2_degenerate(std::uint64_t n) {
  auto out = check_identity_new2(n, q(1, 2), q(1, 2) - qn(n));
  out.equal = out.equal && (out.rhs == central_over_4n(n));
  return out;
}

IdentityCheckOutcome check_identity_c2(std::uint64_t n) {
  const auto terms = pfq_terms(c1_series(n));
  Rational lhs(0);
  Rational odd(0);
  for (std::uint64_t k = 0; k < terms.size(); ++k) {
    if (k > 0) {
      const Integer o(static_cast<unsigned long>(2 * k - 1));
      odd += make_rational(Integer(1), o * o);
    }
    lhs += terms[k] * odd;
  }
  Rational single(0);
  Rational squared(0);
  for (std::uint64_t k = 0; k <= n; ++k) {
    const Integer c = binomial(2 * k, static_cast<std::int64_t>(k));
    const Integer o = Integer(static_cast<unsigned long>(2 * k)) - 1;
    single += make_rational(c, o * o * ipow(Integer(4), k));
    squared += make_rational(c * c, o * o * o * ipow(Integer(16), k));
  }
  const Rational central = central_over_4n(n);
  const Rational two_n1 = 2 * qn(n) + 1;
  const Rational rhs = -central * (3 + odd_square_harmonic(n)) + (2 / two_n1) * single - squared / (two_n1 * central);
  return outcome(lhs, rhs, {{"n", str(n)}});
}

IdentityCheckOutcome check_ratio_b6(std::uint64_t k) {
  return outcome(pochhammer(q(1, 2), k) / pochhammer(q(1), k), central_over_4n(k), {{"k", str(k)}});
}

IdentityCheckOutcome check_ratio_b7(std::uint64_t k) {
  return outcome(pochhammer(q(-1, 2), k) / pochhammer(q(1, 2), k), 1 / (1 - 2 * qn(k)), {{"k", str(k)}});
}

IdentityCheckOutcome check_ratio_c11(std::uint64_t k) {
  const Rational one_k = pochhammer(q(1), k);
  const Rational lhs = pochhammer(q(1, 4), k) * pochhammer(q(3, 4), k) / (one_k * one_k);
  const Rational rhs = make_rational(binomial(4 * k, static_cast<std::int64_t>(2 * k)) * binomial(2 * k, static_cast<std::int64_t>(k)),
                                     ipow(Integer(64), k));
  return outcome(lhs, rhs, {{"k", str(k)}});
}

IdentityCheckOutcome check_ratio_c12(std::uint64_t k) {
  return outcome(pochhammer(q(1, 2), k) / pochhammer(q(3, 2), k), 1 / (2 * qn(k) + 1), {{"k", str(k)}});
}

std::vector<std::array<Rational, 2>> gauss_grid() {
  const std::array<Rational, 5> bs = {q(1), q(2), q(-1, 3), q(5, 3), q(-7, 3)};
  const std::array<Rational, 5> cs = {q(1, 2), q(3, 2), q(-5, 4), q(11, 5), q(7, 2)};
  std::vector<std::array<Rational, 2>> grid;
  for (const auto& b : bs)
    for (const auto& c : cs) grid.push_back({b, c});
  return grid;
}

std::vector<std::array<Rational, 2>> new2_grid() {
  const std::array<Rational, 5> fs = {q(1, 3), q(-2, 3), q(4, 3), q(7, 3), q(-5, 3)};
  const std::array<Rational, 5> gs = {q(1, 5), q(2, 5), q(-3, 5), q(7, 5), q(11, 5)};
  std::vector<std::array<Rational, 2>> grid;
  for (const auto& f : fs)
    for (const auto& g : gs) grid.push_back({f, g});
  return grid;
}

std::vector<std::array<Rational, 4>> new4_tuples(std::uint64_t seed, std::size_t count) {
  SplitMix64 rng(derive_seed(seed, 4));
  std::vector<std::array<Rational, 4>> tuples;
  tuples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::array<Rational, 4> t;
    for (auto& v : t) v = rng.rational(9, 6);
    tuples.push_back(t);
  }
  return tuples;
}

}  // namespace supercong
