#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supercong/exact_arith.hpp"
#include "supercong/params.hpp"
#include "supercong/rational.hpp"

namespace supercong {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

/// Outcome of one check instance. For congruences, status == pass exactly
/// when v_p(lhs - rhs) >= the claimed exponent; exact identities carry the
/// two sides as exact strings instead of residues.
struct CheckResult {
  std::string name;
  std::optional<Prime> p;
  ParamList params;
  Status status = Status::skipped;
  std::optional<ResidueClass> lhs_residue;
  std::optional<ResidueClass> rhs_residue;
  std::optional<Valuation> difference_valuation;
  std::optional<std::string> lhs_exact;
  std::optional<std::string> rhs_exact;
  std::string note;
  bool informational = false;
};

/// lhs ≡ rhs (mod p^k) in the sense v_p(lhs - rhs) >= k. A side that is not
/// p-integral yields a skipped result with a NonIntegralAtP note.
CheckResult assert_congruent(const Rational& lhs, const Rational& rhs, Prime p, unsigned k);

/// v_p(value) >= 0; the residue mod p is reported on pass.
CheckResult assert_p_integral(const Rational& value, Prime p);

/// Exact rational equality; both sides are kept as witnesses.
CheckResult assert_exact(const Rational& lhs, const Rational& rhs);

CheckResult check_main_a3(Prime p);
CheckResult check_new7(Prime p);
CheckResult check_a1(Prime p);
CheckResult check_a2(Prime p);
/// i in 1..4: sums with denominators 16^k, 27^k, 64^k, 432^k.
CheckResult check_rv(int i, Prime p);
CheckResult check_sun_euler(Prime p);

enum class PochhammerVariant { b4, c3, c5 };
CheckResult check_pochhammer_cong(PochhammerVariant variant, Prime p, std::uint64_t k);

enum class BinomialVariant { new1, c8 };
/// k is ignored for c8.
CheckResult check_binomial_cong(BinomialVariant variant, Prime p, std::uint64_t k = 0);

enum class HarmonicVariant { b10, b11, c9 };
CheckResult check_harmonic_cong(HarmonicVariant variant, Prime p);
/// sum_{j<=(p-1)/2} 1/(2j-1)^2 = H_{p-1}^{(2)} - H_{(p-1)/2}^{(2)}/4, exactly.
CheckResult check_c9_split(Prime p);

enum class IntermediateVariant { b5, b9_binom, b9_hplus, b9, b12, c4, c6, c7, c10, c_final };
CheckResult check_intermediate(IntermediateVariant variant, Prime p);

/// (1/4)_k (3/4)_k / (3/2)_k is p-integral for 0 <= k <= (p-1)/2.
CheckResult check_c4_integrality(Prime p, std::uint64_t k);

/// Ascending primes in [lo, hi] (sieve of Eratosthenes).
std::vector<Prime> primes_in(std::uint64_t lo, std::uint64_t hi);

/// Left side of the main congruence: sum_{k<=(p-1)/2} C(4k,2k)C(2k,k)/((2k+1)64^k).
Rational main_sum(Prime p);
/// Same quantity written as sum (1/2)_k(1/4)_k(3/4)_k / ((1)_k^2 (3/2)_k).
Rational main_sum_pochhammer(Prime p);

}  // namespace supercong
