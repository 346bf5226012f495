#include "supercong/congruences.hpp"

#include <stdexcept>

#include "supercong/combinatorics.hpp"

namespace supercong {

namespace {

Rational q(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }

Rational qn(std::uint64_t n) { return Rational(Integer(static_cast<unsigned long>(n))); }

// Quantities shared by every check at a fixed odd prime.
struct PrimeData {
  Prime p;
  std::uint64_t half;   // (p-1)/2
  Rational sign;        // (-1)^{(p-1)/2}
  Rational two_pow;     // a = 2^{p-1}
  Rational fermat;      // q_p(2)
  Rational pq;          // p as a rational

  explicit PrimeData(Prime prime) : p(prime), half((prime - 1) / 2) {
    if (prime < 3 || !is_prime(prime)) throw std::invalid_argument("congruence checks need an odd prime, got " + std::to_string(prime));
    sign = q(sign_pow(half));
    two_pow = Rational(pow2(p - 1));
    fermat = fermat_quotient2(p);
    pq = qn(p);
  }
};

CheckResult named(CheckResult r, std::string name, Prime p, ParamList extra = {}) {
  r.name = std::move(name);
  r.p = p;
  ParamList params{{"p", std::to_string(p)}};
  for (auto& kv : extra) params.push_back(std::move(kv));
  r.params = std::move(params);
  return r;
}

Rational sum_binomial_a1(std::uint64_t upto) {
  Rational s(0);
  for (std::uint64_t k = 0; k <= upto; ++k) {
    const Integer o = Integer(static_cast<unsigned long>(2 * k)) - 1;
    s += make_rational(binomial(2 * k, static_cast<std::int64_t>(k)), o * o * ipow(Integer(4), k));
  }
  return s;
}

Rational sum_binomial_a2(std::uint64_t upto) {
  Rational s(0);
  for (std::uint64_t k = 0; k <= upto; ++k) {
    const Integer c = binomial(2 * k, static_cast<std::int64_t>(k));
    const Integer o = Integer(static_cast<unsigned long>(2 * k)) - 1;
    s += make_rational(c * c, o * o * o * ipow(Integer(16), k));
  }
  return s;
}

// Terms t_0..t_upto of prod (upper)_k / prod (lower)_k, no implicit k!.
std::vector<Rational> pochhammer_terms(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                                       std::uint64_t upto) {
  std::vector<Rational> terms;
  terms.reserve(upto + 1);
  Rational t(1);
  terms.push_back(t);
  for (std::uint64_t k = 0; k < upto; ++k) {
    const Rational kq = qn(k);
    for (const auto& a : upper) t *= a + kq;
    for (const auto& b : lower) t /= b + kq;
    terms.push_back(t);
  }
  return terms;
}

Rational total(const std::vector<Rational>& v) {
  Rational s(0);
  for (const auto& x : v) s += x;
  return s;
}

// (1/2)_k (1/4)_k (3/4)_k / ((1)_k^2 (3/2)_k), k = 0..(p-1)/2.
std::vector<Rational> main_terms(std::uint64_t half) {
  return pochhammer_terms({q(1, 2), q(1, 4), q(3, 4)}, {q(1), q(1), q(3, 2)}, half);
}

// (-1/2)_k^3 / ((1)_k^2 (1/2)_k)
Rational cubic_half_sum(std::uint64_t half) {
  return total(pochhammer_terms({q(-1, 2), q(-1, 2), q(-1, 2)}, {q(1), q(1), q(1, 2)}, half));
}

// sum_k T_k * sum_{j<=k} 1/(2j-1)^2 over the main terms.
Rational weighted_main_sum(std::uint64_t half) {
  const auto terms = main_terms(half);
  Rational odd(0);
  Rational s(0);
  for (std::uint64_t k = 0; k < terms.size(); ++k) {
    if (k > 0) {
      const Integer o(static_cast<unsigned long>(2 * k - 1));
      odd += make_rational(Integer(1), o * o);
    }
    s += terms[k] * odd;
  }
  return s;
}

void require_index(std::uint64_t k, std::uint64_t hi, const char* what) {
  if (k > hi) throw std::invalid_argument(std::string(what) + ": index " + std::to_string(k) + " outside 0.." + std::to_string(hi));
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

CheckResult assert_congruent(const Rational& lhs, const Rational& rhs, Prime p, unsigned k) {
  const PrimePower m(p, k);
  CheckResult r;
  r.params = {{"p", std::to_string(p)}};
  r.p = p;
  for (const auto* side : {&lhs, &rhs}) {
    if (!padic_valuation(*side, p).at_least(0)) {
      r.status = Status::skipped;
      r.note = "NonIntegralAtP: " + std::string(side == &lhs ? "lhs" : "rhs") + " has negative " +
               std::to_string(p) + "-adic valuation";
      return r;
    }
  }
  const Valuation v = padic_valuation(Rational(lhs - rhs), p);
  r.difference_valuation = v;
  r.lhs_residue = reduce_mod(lhs, m);
  r.rhs_residue = reduce_mod(rhs, m);
  r.status = v.at_least(static_cast<long>(k)) ? Status::pass : Status::fail;
  r.note = "mod " + m.to_string();
  return r;
}

CheckResult assert_p_integral(const Rational& value, Prime p) {
  CheckResult r;
  r.p = p;
  r.params = {{"p", std::to_string(p)}};
  const Valuation v = padic_valuation(value, p);
  r.difference_valuation = v;
  if (v.at_least(0)) {
    r.status = Status::pass;
    r.lhs_residue = reduce_mod(value, PrimePower(p, 1));
    r.note = "p-integral";
  } else {
    r.status = Status::fail;
    r.lhs_exact = to_string(value);
    r.note = "valuation " + v.to_string() + " < 0";
  }
  return r;
}

CheckResult assert_exact(const Rational& lhs, const Rational& rhs) {
  CheckResult r;
  r.status = (lhs == rhs) ? Status::pass : Status::fail;
  r.lhs_exact = to_string(lhs);
  r.rhs_exact = to_string(rhs);
  r.note = "exact identity";
  return r;
}

Rational main_sum(Prime p) {
  Rational s(0);
  for (std::uint64_t k = 0; k <= (p - 1) / 2; ++k) s += central_catalan_summand(k);
  return s;
}

Rational main_sum_pochhammer(Prime p) { return total(main_terms((p - 1) / 2)); }

CheckResult check_main_a3(Prime p) {
  const PrimeData d(p);
  const Rational a = d.two_pow;
  return named(assert_congruent(main_sum(p), d.sign * (a - (a - 1) * (a - 1)), p, 3), "a3", p);
}

CheckResult check_new7(Prime p) {
  const PrimeData d(p);
  return named(assert_congruent(main_sum(p), d.sign * d.two_pow, p, 2), "new7", p);
}

CheckResult check_a1(Prime p) {
  const PrimeData d(p);
  return named(assert_congruent(sum_binomial_a1(d.half), d.sign * (d.two_pow - d.fermat), p, 2), "a1", p);
}

CheckResult check_a2(Prime p) {
  const PrimeData d(p);
  const Rational& qp = d.fermat;
  const Rational rhs = 2 - 2 * qp - d.pq * (qp * qp - 4 * qp + 3);
  return named(assert_congruent(sum_binomial_a2(d.half), rhs, p, 2), "a2", p);
}

CheckResult check_rv(int i, Prime p) {
  const PrimeData d(p);
  Rational lhs(0);
  std::int64_t disc = 0;
  for (std::uint64_t k = 0; k < p; ++k) {
    const auto sk = static_cast<std::int64_t>(k);
    switch (i) {
      case 1: {
        const Integer c = binomial(2 * k, sk);
        lhs += make_rational(c * c, ipow(Integer(16), k));
        disc = -1;
        break;
      }
      case 2:
        lhs += make_rational(binomial(2 * k, sk) * binomial(3 * k, sk), ipow(Integer(27), k));
        disc = -3;
        break;
      case 3:
        lhs += make_rational(binomial(2 * k, sk) * binomial(4 * k, 2 * sk), ipow(Integer(64), k));
        disc = -2;
        break;
      case 4:
        lhs += make_rational(binomial(3 * k, sk) * binomial(6 * k, 3 * sk), ipow(Integer(432), k));
        disc = -1;
        break;
      default:
        throw std::invalid_argument("check_rv index must be 1..4");
    }
  }
  const int symbol = legendre_symbol(Integer(static_cast<long>(disc)), p);
  auto r = named(assert_congruent(lhs, q(symbol), p, 2), "rv" + std::to_string(i), p);
  r.note += "; legendre(" + std::to_string(disc) + "/p) = " + std::to_string(symbol);
  return r;
}

CheckResult check_sun_euler(Prime p) {
  const PrimeData d(p);
  Rational lhs(0);
  for (std::uint64_t k = 0; k < p; ++k) lhs += central_catalan_summand(k);
  const Integer euler = euler_number(p - 3);
  const Rational rhs = d.sign - 3 * d.pq * d.pq * Rational(euler);
  return named(assert_congruent(lhs, rhs, p, 3), "sun_euler", p);
}

CheckResult check_pochhammer_cong(PochhammerVariant variant, Prime p, std::uint64_t k) {
  const PrimeData d(p);
  require_index(k, d.half, "pochhammer congruence");
  const ParamList kp{{"k", std::to_string(k)}};
  switch (variant) {
    case PochhammerVariant::b4: {
      const Rational lhs = pochhammer((-1 - d.pq) / 2, k) * pochhammer((-1 + d.pq) / 2, k);
      const Rational base = pochhammer(q(-1, 2), k);
      return named(assert_congruent(lhs, base * base, p, 2), "b4", p, kp);
    }
    case PochhammerVariant::c3: {
      const Rational lhs = pochhammer((1 + d.pq) / 2, k) * pochhammer((1 - d.pq) / 2, k);
      const Rational base = pochhammer(q(1, 2), k);
      const Rational rhs = base * base * (1 - d.pq * d.pq * odd_square_harmonic(k));
      return named(assert_congruent(lhs, rhs, p, 4), "c3", p, kp);
    }
    case PochhammerVariant::c5: {
      const Rational lhs = pochhammer((1 + d.pq) / 2, k) * pochhammer((1 - d.pq) / 2, k);
      const Rational base = pochhammer(q(1, 2), k);
      return named(assert_congruent(lhs, base * base, p, 2), "c5", p, kp);
    }
  }
  throw std::invalid_argument("unknown Pochhammer congruence variant");
}

CheckResult check_binomial_cong(BinomialVariant variant, Prime p, std::uint64_t k) {
  const PrimeData d(p);
  switch (variant) {
    case BinomialVariant::new1: {
      require_index(k, p - 1, "new1");
      auto& cache = SeqCache::global();
      const Rational h1 = cache.harmonic(k, 1);
      const Rational h2 = cache.harmonic(k, 2);
      const Rational rhs = q(sign_pow(k)) * (1 - d.pq * h1 + d.pq * d.pq / 2 * (h1 * h1 - h2));
      const Rational lhs(binomial(p - 1, static_cast<std::int64_t>(k)));
      return named(assert_congruent(lhs, rhs, p, 3), "new1", p, {{"k", std::to_string(k)}});
    }
    case BinomialVariant::c8: {
      const Rational lhs(binomial(p - 1, static_cast<std::int64_t>(d.half)));
      const Rational& qp = d.fermat;
      const Rational rhs = d.sign * (1 + 2 * d.pq * qp + d.pq * d.pq * qp * qp);
      return named(assert_congruent(lhs, rhs, p, 3), "c8", p);
    }
  }
  throw std::invalid_argument("unknown binomial congruence variant");
}

CheckResult check_harmonic_cong(HarmonicVariant variant, Prime p) {
  const PrimeData d(p);
  auto& cache = SeqCache::global();
  switch (variant) {
    case HarmonicVariant::b10: {
      const Rational& qp = d.fermat;
      return named(assert_congruent(cache.harmonic(d.half, 1), -2 * qp + d.pq * qp * qp, p, 2), "b10", p);
    }
    case HarmonicVariant::b11:
      return named(assert_congruent(cache.harmonic(d.half, 2), q(0), p, 1), "b11", p);
    case HarmonicVariant::c9:
      return named(assert_congruent(odd_square_harmonic(d.half), q(0), p, 1), "c9", p);
  }
  throw std::invalid_argument("unknown harmonic congruence variant");
}

CheckResult check_c9_split(Prime p) {
  const PrimeData d(p);
  auto& cache = SeqCache::global();
  const Rational rhs = cache.harmonic(p - 1, 2) - cache.harmonic(d.half, 2) / 4;
  return named(assert_exact(odd_square_harmonic(d.half), rhs), "c9_split", p);
}

CheckResult check_intermediate(IntermediateVariant variant, Prime p) {
  const PrimeData d(p);
  const Rational& qp = d.fermat;
  const Rational& a = d.two_pow;
  const Rational& pp = d.pq;
  const std::uint64_t m = d.half;
  switch (variant) {
    case IntermediateVariant::b5: {
      const Rational lhs = total(pochhammer_terms({q(-1, 2), q(-1, 2)}, {q(1), q(1, 2)}, m));
      return named(assert_congruent(lhs, d.sign * (a - qp), p, 2), "b5", p);
    }
    case IntermediateVariant::b9_binom: {
      const Rational c(binomial(p - 1, static_cast<std::int64_t>((p + 1) / 2)));
      const Rational rhs = (pp * pp - 1 + q(sign_pow((p + 1) / 2)) * c) / pp;
      return named(assert_congruent(cubic_half_sum(m), rhs, p, 2), "b9_binom", p);
    }
    case IntermediateVariant::b9_hplus: {
      auto& cache = SeqCache::global();
      const Rational h = cache.harmonic(m + 1, 1);
      const Rational h2 = cache.harmonic(m + 1, 2);
      const Rational rhs = pp / 2 * (h * h - h2 + 2) - h;
      return named(assert_congruent(cubic_half_sum(m), rhs, p, 2), "b9_hplus", p);
    }
    case IntermediateVariant::b9: {
      auto& cache = SeqCache::global();
      const Rational h = cache.harmonic(m, 1);
      const Rational h2 = cache.harmonic(m, 2);
      const Rational rhs = pp / 2 * (h * h + 4 * h - h2 + 6) - h - 2;
      return named(assert_congruent(cubic_half_sum(m), rhs, p, 2), "b9", p);
    }
    case IntermediateVariant::b12: {
      const Rational rhs = 2 * qp - 2 + pp * (qp * qp - 4 * qp + 3);
      return named(assert_congruent(cubic_half_sum(m), rhs, p, 2), "b12", p);
    }
    case IntermediateVariant::c4: {
      const Rational c(binomial(p - 1, static_cast<std::int64_t>(m)));
      const Rational rhs = c / a + pp * pp * weighted_main_sum(m);
      return named(assert_congruent(main_sum_pochhammer(p), rhs, p, 4), "c4", p);
    }
    case IntermediateVariant::c6: {
      const Rational c(binomial(p - 1, static_cast<std::int64_t>(m)));
      const Rational rhs = -(c / a) * (3 + odd_square_harmonic(m)) + 2 / pp * sum_binomial_a1(m) -
                           a / (pp * c) * sum_binomial_a2(m);
      return named(assert_congruent(weighted_main_sum(m), rhs, p, 2), "c6", p);
    }
    case IntermediateVariant::c7: {
      const Rational c(binomial(p - 1, static_cast<std::int64_t>(m)));
      const Rational rhs = c / a - pp * pp / a * c * (3 + odd_square_harmonic(m)) + 2 * pp * sum_binomial_a1(m) -
                           a * pp / c * sum_binomial_a2(m);
      return named(assert_congruent(main_sum_pochhammer(p), rhs, p, 4), "c7", p);
    }
    case IntermediateVariant::c10: {
      const Rational rhs = d.sign * (a - (a - 1) * (a - 1));
      return named(assert_congruent(main_sum_pochhammer(p), rhs, p, 3), "c10", p);
    }
    case IntermediateVariant::c_final: {
      const Rational rhs = d.sign * ((a * a * a - 2 * a * a + 4 * a - 2) / (2 * a - 1) +
                                     3 * (a - 1) * (a - 1) * pp * pp / (a * (2 * a - 1)));
      return named(assert_congruent(main_sum_pochhammer(p), rhs, p, 3), "c_final", p);
    }
  }
  throw std::invalid_argument("unknown intermediate congruence variant");
}

CheckResult check_c4_integrality(Prime p, std::uint64_t k) {
  const PrimeData d(p);
  require_index(k, d.half, "c4_int");
  const Rational value = pochhammer(q(1, 4), k) * pochhammer(q(3, 4), k) / pochhammer(q(3, 2), k);
  return named(assert_p_integral(value, p), "c4_int", p, {{"k", std::to_string(k)}});
}

std::vector<Prime> primes_in(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("primes_in needs lo <= hi");
  std::vector<char> composite(hi + 1, 0);
  std::vector<Prime> primes;
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) primes.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = 1;
  }
  return primes;
}

}  // namespace supercong
