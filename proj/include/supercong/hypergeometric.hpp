#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercong/params.hpp"
#include "supercong/polyfun.hpp"
#include "supercong/rational.hpp"

namespace supercong {

class LowerParamPole : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonTerminating : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A parameter tuple outside an identity's domain; reported as skipped,
/// never as a failure.
class SkippedPole : public std::domain_error {
 public:
  SkippedPole(std::string parameter, const std::string& reason)
      : std::domain_error(reason), parameter_(std::move(parameter)) {}
  const std::string& parameter() const { return parameter_; }

 private:
  std::string parameter_;
};

/// pFq(upper; lower; argument). The k! is implicit (an extra lower 1).
struct HyperSeries {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational argument{1};
  /// Number of terms to sum when no upper parameter terminates the series.
  std::optional<std::uint64_t> term_budget;
};

struct IdentityCheckOutcome {
  Rational lhs;
  Rational rhs;
  bool equal = false;
  ParamList params;
};

/// True when x is an integer in [-n+1, 0], i.e. (x)_n vanishes or a lower
/// parameter x would hit zero inside a series of length n.
bool is_pole_in_range(const Rational& x, std::uint64_t n);

/// Smallest m with some upper parameter equal to -m.
std::optional<std::uint64_t> termination_index(const std::vector<Rational>& upper);

/// Exact sum by the term recurrence. Throws LowerParamPole, NonTerminating.
Rational eval_terminating_pfq(const HyperSeries& s);

IdentityCheckOutcome check_gauss_2f1(std::uint64_t n, const Rational& b, const Rational& c);

IdentityCheckOutcome check_identity_b1(std::uint64_t n);
/// sum_{k<n} of the b1 summand against 2^{2n-2} - (2^{2n-2}-1)/(2n-1) (signed),
/// the intermediate (1+4^{n-1}(2n-2))/(2n-1) form, and b1's full sum minus its
/// k = n term. equal requires all of them to agree.
IdentityCheckOutcome check_truncation_b3(std::uint64_t n);
IdentityCheckOutcome check_identity_b2(std::uint64_t n);
IdentityCheckOutcome check_truncation_b8(std::uint64_t n);

IdentityCheckOutcome check_transformation_new4(std::uint64_t n, const Rational& a, const Rational& b,
                                               const Rational& e, const Rational& f);

/// 4x^4 - 12x^3 + (-8n^2+8n+11)x^2 + (12n^2-12n-3)x + 4n(n-1)(n^2-n-1)
Poly new6_quartic(std::uint64_t n);
/// The quartic over x(x-1)(2x-1)(2x-3).
RatFunc new6_inner_closed_form(std::uint64_t n);
/// (x+1-n)_n (5/2-x-n)_n / ((x)_n (3/2-x)_n) as a rational function of x.
RatFunc new6_pochhammer_quotient(std::uint64_t n);
/// Full right side of the x-dependent 3F2 evaluation.
RatFunc new6_rhs(std::uint64_t n);

/// Throws SkippedPole unless x avoids {0, 1, 1/2, 3/2} and the lower-parameter
/// collisions of both x-dependent series.
void require_new6_domain(std::uint64_t n, const Rational& x);

/// 3F2(n-1, -1/2, -n; x, 3/2-x; 1) against the closed form at a sample point.
IdentityCheckOutcome check_identity_new6(std::uint64_t n, const Rational& x);
/// 3F2(-2, n-1, -n; -x, x-3/2; 1) against the quartic quotient.
IdentityCheckOutcome check_inner_new6(std::uint64_t n, const Rational& x);
/// x -> 1: direct 3F2(n-1,-1/2,-n; 1, 1/2; 1) against the cancelled closed form.
IdentityCheckOutcome check_new6_at_one(std::uint64_t n);
/// Limit of quartic/(x(2x-1)(2x-3)) at 1 against -4n^2(n-1)^2.
IdentityCheckOutcome check_limit_quartic(std::uint64_t n);
/// Limit of the Pochhammer quotient over (x-1) at 1 against -1/(n(n-1)(2n-1)).
IdentityCheckOutcome check_limit_pochhammer(std::uint64_t n);

IdentityCheckOutcome check_identity_c1(std::uint64_t n);
IdentityCheckOutcome check_identity_new2(std::uint64_t n, const Rational& f, const Rational& g);
/// f = 1/2, g = -n + 1/2: right side must also equal C(2n,n)/4^n.
IdentityCheckOutcome check_identity_new2_degenerate(std::uint64_t n);
IdentityCheckOutcome check_identity_c2(std::uint64_t n);

/// Pochhammer ratio facts at index k.
IdentityCheckOutcome check_ratio_b6(std::uint64_t k);
IdentityCheckOutcome check_ratio_b7(std::uint64_t k);
IdentityCheckOutcome check_ratio_c11(std::uint64_t k);
IdentityCheckOutcome check_ratio_c12(std::uint64_t k);

/// Fixed 5x5 (b, c) grid for the terminating Gauss sum; pole-free for all n.
std::vector<std::array<Rational, 2>> gauss_grid();
/// Fixed 5x5 (f, g) grid for the 4F3 evaluation; pole-free for all n.
std::vector<std::array<Rational, 2>> new2_grid();
/// Seeded (a, b, e, f) tuples for the 3F2 transformation.
std::vector<std::array<Rational, 4>> new4_tuples(std::uint64_t seed, std::size_t count);

}  // namespace supercong
