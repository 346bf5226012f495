#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "supercong/exact_arith.hpp"
#include "supercong/rational.hpp"

namespace supercong {

/// Rising factorial (a)_k = a(a+1)...(a+k-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, std::uint64_t k);

/// C(n, k); zero outside 0 <= k <= n.
Integer binomial(std::uint64_t n, std::int64_t k);

/// H_k^{(r)} = sum_{j=1..k} 1/j^r.
Rational harmonic(std::uint64_t k, unsigned r);

/// sum_{j=1..k} 1/(2j-1)^2.
Rational odd_square_harmonic(std::uint64_t k);

/// (2^{p-1} - 1)/p for an odd prime p.
Rational fermat_quotient2(Prime p);

/// Secant-family Euler numbers: E_0 = 1, E_odd = 0,
/// sum_{j=0..m} C(2m, 2j) E_{2j} = 0 for m >= 1. Memoized process-wide.
Integer euler_number(std::uint64_t n);

/// C(4k,2k) C(2k,k) / ((2k+1) 64^k).
Rational central_catalan_summand(std::uint64_t k);

/// Memo tables for sequences reused across primes. Thread-safe; every read
/// returns a value equal to a from-scratch recomputation.
class SeqCache {
 public:
  Integer euler(std::uint64_t n);

  /// Prefix sums H_0^{(r)}..H_kmax^{(r)}; the table grows on demand.
  std::shared_ptr<const std::vector<Rational>> harmonic_prefix(unsigned r, std::uint64_t kmax);

  /// Convenience lookup into harmonic_prefix.
  Rational harmonic(std::uint64_t k, unsigned r);

  static SeqCache& global();

 private:
  std::mutex mutex_;
  std::vector<Integer> euler_even_{Integer(1)};  // E_0, E_2, E_4, ...
  std::map<unsigned, std::shared_ptr<const std::vector<Rational>>> harmonic_;
};

}  // namespace supercong
