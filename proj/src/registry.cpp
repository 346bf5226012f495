#include "supercong/registry.hpp"

#include <algorithm>

#include "supercong/hypergeometric.hpp"
#include "supercong/sampling.hpp"

namespace supercong {

namespace {

constexpr std::size_t kNew4Tuples = 25;
constexpr std::size_t kNew6Samples = 20;
constexpr std::size_t kNew6MaxDraws = 1000;

CheckResult from_outcome(const std::string& name, const IdentityCheckOutcome& o) {
  CheckResult r = assert_exact(o.lhs, o.rhs);
  r.name = name;
  r.params = o.params;
  if (r.status == Status::pass && !o.equal) {
    r.status = Status::fail;
    r.note = "side conditions of the identity do not hold";
  }
  return r;
}

CheckResult skipped(const std::string& name, ParamList params, const std::string& reason) {
  CheckResult r;
  r.name = name;
  r.params = std::move(params);
  r.status = Status::skipped;
  r.note = reason;
  return r;
}

std::vector<Task> n_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Task> t;
  for (std::uint64_t n = lo; n <= hi; ++n) t.push_back({0, n});
  return t;
}

std::function<std::vector<Task>(const Scope&)> n_tasks(std::uint64_t lo, std::uint64_t cap = 0) {
  return [lo, cap](const Scope& s) {
    const std::uint64_t hi = cap ? std::min(cap, s.max_n) : s.max_n;
    return n_range(lo, hi);
  };
}

std::vector<Task> per_prime(const Scope& s) {
  std::vector<Task> t;
  for (Prime p : s.primes) t.push_back({p, 0});
  return t;
}

std::vector<Task> per_prime_half(const Scope& s) {
  std::vector<Task> t;
  for (Prime p : s.primes)
    for (std::uint64_t k = 0; k <= (p - 1) / 2; ++k) t.push_back({p, k});
  return t;
}

std::vector<Task> per_prime_full(const Scope& s) {
  std::vector<Task> t;
  for (Prime p : s.primes)
    for (std::uint64_t k = 0; k < p; ++k) t.push_back({p, k});
  return t;
}

using NCheck = IdentityCheckOutcome (*)(std::uint64_t);

CheckSpec identity(std::string name, std::string tag, std::string domain, NCheck fn, std::uint64_t lo,
                   std::uint64_t cap = 0) {
  return {name, std::move(tag), "exact identity", std::move(domain), Suite::identities, n_tasks(lo, cap),
          [name, fn](const Task& t, const Scope&) { return std::vector<CheckResult>{from_outcome(name, fn(t.index))}; }};
}

CheckSpec per_p(std::string name, std::string tag, std::string modulus, std::function<CheckResult(Prime)> fn) {
  return {std::move(name), std::move(tag), std::move(modulus), "primes p ≥ 5", Suite::congruences, per_prime,
          [fn](const Task& t, const Scope&) { return std::vector<CheckResult>{fn(t.p)}; }};
}

CheckSpec per_pk(std::string name, std::string tag, std::string modulus, std::string domain, bool full_range,
                 std::function<CheckResult(Prime, std::uint64_t)> fn) {
  return {std::move(name), std::move(tag), std::move(modulus), std::move(domain), Suite::congruences,
          full_range ? per_prime_full : per_prime_half,
          [fn](const Task& t, const Scope&) { return std::vector<CheckResult>{fn(t.p, t.index)}; }};
}

template <typename Fn>
std::vector<CheckResult> guarded(const std::string& name, ParamList params, Fn&& fn) {
  try {
    return {fn()};
  } catch (const SkippedPole& e) {
    return {skipped(name, std::move(params), std::string("SkippedPole(") + e.parameter() + "): " + e.what())};
  }
}

std::vector<CheckResult> run_new6(const std::string& name, const Task& t, const Scope& s, bool inner) {
  std::vector<CheckResult> out;
  for (const Rational& x : new6_draws(s.seed, t.index, kNew6Samples)) {
    auto r = guarded(name, {{"n", std::to_string(t.index)}, {"x", to_string(x)}}, [&] {
      return from_outcome(name, inner ? check_inner_new6(t.index, x) : check_identity_new6(t.index, x));
    });
    out.push_back(std::move(r.front()));
  }
  return out;
}

std::vector<CheckSpec> build_registry() {
  std::vector<CheckSpec> r;

  // Identities.
  r.push_back({"gauss", "Eq. (new-3)", "exact identity", "1 ≤ n ≤ min(max_n, 30), 25-point (b, c) grid",
               Suite::identities, n_tasks(1, 30), [](const Task& t, const Scope&) {
                 std::vector<CheckResult> out;
                 for (const auto& [b, c] : gauss_grid()) {
                   auto one = guarded("gauss", {{"n", std::to_string(t.index)}, {"b", to_string(b)}, {"c", to_string(c)}},
                                      [&] { return from_outcome("gauss", check_gauss_2f1(t.index, b, c)); });
                   out.push_back(std::move(one.front()));
                 }
                 return out;
               }});
  r.push_back(identity("b1", "Eq. (b-1)", "n ≥ 2", check_identity_b1, 2));
  r.push_back(identity("b3", "Eq. (b-3)", "n ≥ 2", check_truncation_b3, 2));
  r.push_back(identity("b2", "Eq. (b-2)", "n ≥ 2", check_identity_b2, 2));
  r.push_back(identity("b8", "Eq. (b-8)", "n ≥ 2", check_truncation_b8, 2));
  r.push_back({"new4", "Eq. (new-4)", "exact identity", "1 ≤ n ≤ min(max_n, 10), 25 seeded (a, b, e, f) tuples",
               Suite::identities, n_tasks(1, 10), [](const Task& t, const Scope& s) {
                 std::vector<CheckResult> out;
                 for (const auto& [a, b, e, f] : new4_tuples(s.seed, kNew4Tuples)) {
                   ParamList params{{"n", std::to_string(t.index)}, {"a", to_string(a)}, {"b", to_string(b)},
                                    {"e", to_string(e)}, {"f", to_string(f)}};
                   auto one = guarded("new4", params, [&] {
                     return from_outcome("new4", check_transformation_new4(t.index, a, b, e, f));
                   });
                   out.push_back(std::move(one.front()));
                 }
                 return out;
               }});
  r.push_back({"new6", "Eq. (new-6)", "exact identity", "2 ≤ n ≤ min(max_n, 50), 20 seeded rational x",
               Suite::identities, n_tasks(2, 50),
               [](const Task& t, const Scope& s) { return run_new6("new6", t, s, false); }});
  r.push_back({"new6_inner", "Eq. (new-5)", "exact identity", "2 ≤ n ≤ min(max_n, 50), 20 seeded rational x",
               Suite::identities, n_tasks(2, 50),
               [](const Task& t, const Scope& s) { return run_new6("new6_inner", t, s, true); }});
  r.push_back(identity("new6_at_one", "Eq. (new-6), x -> 1", "2 ≤ n ≤ min(max_n, 50)", check_new6_at_one, 2, 50));
  r.push_back(identity("limit_quartic", "Eq. (b-2), first limit", "2 ≤ n ≤ min(max_n, 30)", check_limit_quartic, 2, 30));
  r.push_back(identity("limit_pochhammer", "Eq. (b-2), second limit", "2 ≤ n ≤ min(max_n, 30)", check_limit_pochhammer, 2, 30));
  r.push_back(identity("c1", "Eq. (c-1)", "n ≥ 0", check_identity_c1, 0, 150));
  r.push_back({"new2", "Eq. (new-2)", "exact identity", "1 ≤ n ≤ min(max_n, 30), 25-point (f, g) grid",
               Suite::identities, n_tasks(1, 30), [](const Task& t, const Scope&) {
                 std::vector<CheckResult> out;
                 for (const auto& [f, g] : new2_grid()) {
                   auto one = guarded("new2", {{"n", std::to_string(t.index)}, {"f", to_string(f)}, {"g", to_string(g)}},
                                      [&] { return from_outcome("new2", check_identity_new2(t.index, f, g)); });
                   out.push_back(std::move(one.front()));
                 }
                 return out;
               }});
  r.push_back(identity("new2_degenerate", "Eq. (new-2), f = 1/2, g = 1/2 - n", "1 ≤ n ≤ min(max_n, 30)",
                       check_identity_new2_degenerate, 1, 30));
  r.push_back(identity("c2", "Eq. (c-2)", "n ≥ 0", check_identity_c2, 0, 150));
  r.push_back(identity("b6", "Eq. (b-6)", "k ≥ 0", check_ratio_b6, 0));
  r.push_back(identity("b7", "Eq. (b-7)", "k ≥ 0", check_ratio_b7, 0));
  r.push_back(identity("c11", "Eq. (c-11)", "k ≥ 0", check_ratio_c11, 0));
  r.push_back(identity("c12", "Eq. (c-12)", "k ≥ 0", check_ratio_c12, 0));

  // Congruences.
  r.push_back(per_p("a3", "Eq. (a-3)", "p^3", check_main_a3));
  r.push_back(per_p("new7", "Eq. (new-7)", "p^2", check_new7));
  r.push_back(per_p("a1", "Eq. (a-1)", "p^2", check_a1));
  r.push_back(per_p("a2", "Eq. (a-2)", "p^2", check_a2));
  for (int i = 1; i <= 4; ++i) {
    r.push_back(per_p("rv" + std::to_string(i), "Rodriguez-Villegas " + std::to_string(i), "p^2",
                      [i](Prime p) { return check_rv(i, p); }));
  }
  r.push_back(per_p("sun_euler", "Z.-H. Sun, Euler numbers", "p^3", check_sun_euler));
  r.push_back(per_pk("b4", "Eq. (b-4)", "p^2", "primes p ≥ 5, 0 ≤ k ≤ (p-1)/2", false,
                     [](Prime p, std::uint64_t k) { return check_pochhammer_cong(PochhammerVariant::b4, p, k); }));
  r.push_back(per_pk("c3", "Eq. (c-3)", "p^4", "primes p ≥ 5, 0 ≤ k ≤ (p-1)/2", false,
                     [](Prime p, std::uint64_t k) { return check_pochhammer_cong(PochhammerVariant::c3, p, k); }));
  r.push_back(per_pk("c5", "Eq. (c-5)", "p^2", "primes p ≥ 5, 0 ≤ k ≤ (p-1)/2", false,
                     [](Prime p, std::uint64_t k) { return check_pochhammer_cong(PochhammerVariant::c5, p, k); }));
  r.push_back(per_pk("new1", "Eq. (new-1)", "p^3", "primes p ≥ 5, 0 ≤ k ≤ p-1", true,
                     [](Prime p, std::uint64_t k) { return check_binomial_cong(BinomialVariant::new1, p, k); }));
  r.push_back(per_p("c8", "Eq. (c-8)", "p^3", [](Prime p) { return check_binomial_cong(BinomialVariant::c8, p); }));
  r.push_back(per_p("b10", "Eq. (b-10)", "p^2", [](Prime p) { return check_harmonic_cong(HarmonicVariant::b10, p); }));
  r.push_back(per_p("b11", "Eq. (b-11)", "p^1", [](Prime p) { return check_harmonic_cong(HarmonicVariant::b11, p); }));
  r.push_back(per_p("c9", "Eq. (c-9)", "p^1", [](Prime p) { return check_harmonic_cong(HarmonicVariant::c9, p); }));
  {
    auto split = per_p("c9_split", "Eq. (c-9), split", "exact identity", check_c9_split);
    r.push_back(std::move(split));
  }
  const std::vector<std::tuple<std::string, std::string, std::string, IntermediateVariant>> mids = {
      {"b5", "Eq. (b-5)", "p^2", IntermediateVariant::b5},
      {"b9_binom", "Eq. (b-9), binomial form", "p^2", IntermediateVariant::b9_binom},
      {"b9_hplus", "Eq. (b-9), H_{(p+1)/2} form", "p^2", IntermediateVariant::b9_hplus},
      {"b9", "Eq. (b-9)", "p^2", IntermediateVariant::b9},
      {"b12", "Eq. (b-12)", "p^2", IntermediateVariant::b12},
      {"c4", "Eq. (c-4)", "p^4", IntermediateVariant::c4},
  };
  for (const auto& [name, tag, mod, variant] : mids) {
    const auto v = variant;
    r.push_back(per_p(name, tag, mod, [v](Prime p) { return check_intermediate(v, p); }));
  }
  r.push_back(per_pk("c4_int", "Eq. (c-4), p-integrality", "p-integral", "primes p ≥ 5, 0 ≤ k ≤ (p-1)/2", false,
                     check_c4_integrality));
  const std::vector<std::tuple<std::string, std::string, std::string, IntermediateVariant>> tail = {
      {"c6", "Eq. (c-6)", "p^2", IntermediateVariant::c6},
      {"c7", "Eq. (c-7)", "p^4", IntermediateVariant::c7},
      {"c_final", "display before Eq. (c-10)", "p^3", IntermediateVariant::c_final},
      {"c10", "Eq. (c-10)", "p^3", IntermediateVariant::c10},
  };
  for (const auto& [name, tag, mod, variant] : tail) {
    const auto v = variant;
    r.push_back(per_p(name, tag, mod, [v](Prime p) { return check_intermediate(v, p); }));
  }
  return r;
}

}  // namespace

std::string to_string(Suite s) { return s == Suite::identities ? "identities" : "congruences"; }

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = build_registry();
  return specs;
}

const CheckSpec* find_check(const std::string& name) {
  for (const auto& spec : registry())
    if (spec.name == name) return &spec;
  return nullptr;
}

std::vector<Rational> new6_draws(std::uint64_t seed, std::uint64_t n, std::size_t count) {
  SplitMix64 rng(derive_seed(seed, 6000 + n));
  std::vector<Rational> draws;
  std::size_t clean = 0;
  while (clean < count && draws.size() < kNew6MaxDraws) {
    Rational x = rng.rational(40, 7);
    bool pole = false;
    try {
      require_new6_domain(n, x);
    } catch (const SkippedPole&) {
      pole = true;
    }
    if (!pole) ++clean;
    draws.push_back(std::move(x));
  }
  return draws;
}

}  // namespace supercong
