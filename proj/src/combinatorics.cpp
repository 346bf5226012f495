#include "supercong/combinatorics.hpp"

#include <stdexcept>

namespace supercong {

Rational pochhammer(const Rational& a, std::uint64_t k) {
  Rational result(1);
  Rational factor = a;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= factor;
    if (result == 0) break;
    factor += 1;
  }
  return result;
}

Integer binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

Rational harmonic(std::uint64_t k, unsigned r) {
  if (r == 0) throw std::invalid_argument("harmonic order must be positive");
  Rational sum(0);
  for (std::uint64_t j = 1; j <= k; ++j) {
    sum += make_rational(Integer(1), ipow(Integer(static_cast<unsigned long>(j)), r));
  }
  return sum;
}

Rational odd_square_harmonic(std::uint64_t k) {
  Rational sum(0);
  for (std::uint64_t j = 1; j <= k; ++j) {
    const Integer odd(static_cast<unsigned long>(2 * j - 1));
    sum += make_rational(Integer(1), odd * odd);
  }
  return sum;
}

Rational fermat_quotient2(Prime p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("fermat_quotient2 needs an odd prime");
  return make_rational(pow2(p - 1) - 1, Integer(static_cast<unsigned long>(p)));
}

Integer euler_number(std::uint64_t n) { return SeqCache::global().euler(n); }

Rational central_catalan_summand(std::uint64_t k) {
  const Integer num = binomial(4 * k, static_cast<std::int64_t>(2 * k)) *
                      binomial(2 * k, static_cast<std::int64_t>(k));
  const Integer den = Integer(static_cast<unsigned long>(2 * k + 1)) * ipow(Integer(64), k);
  return make_rational(num, den);
}

Integer SeqCache::euler(std::uint64_t n) {
  if (n % 2 == 1) return Integer(0);
  const std::uint64_t m = n / 2;
  std::lock_guard lock(mutex_);
  while (euler_even_.size() <= m) {
    const std::uint64_t next = euler_even_.size();
    Integer acc(0);
    for (std::uint64_t j = 0; j < next; ++j) {
      acc += binomial(2 * next, static_cast<std::int64_t>(2 * j)) * euler_even_[j];
    }
    euler_even_.push_back(-acc);
  }
  return euler_even_[m];
}

std::shared_ptr<const std::vector<Rational>> SeqCache::harmonic_prefix(unsigned r, std::uint64_t kmax) {
  if (r == 0) throw std::invalid_argument("harmonic order must be positive");
  std::lock_guard lock(mutex_);
  auto& slot = harmonic_[r];
  if (slot && slot->size() > kmax) return slot;
  auto table = std::make_shared<std::vector<Rational>>(slot ? *slot : std::vector<Rational>{Rational(0)});
  table->reserve(kmax + 1);
  while (table->size() <= kmax) {
    const std::uint64_t j = table->size();
    table->push_back(table->back() + make_rational(Integer(1), ipow(Integer(static_cast<unsigned long>(j)), r)));
  }
  slot = table;
  return slot;
}

Rational SeqCache::harmonic(std::uint64_t k, unsigned r) { return (*harmonic_prefix(r, k))[k]; }

SeqCache& SeqCache::global() {
  static SeqCache cache;
  return cache;
}

}  // namespace supercong
