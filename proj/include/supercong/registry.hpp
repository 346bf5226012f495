#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "supercong/congruences.hpp"

namespace supercong {

enum class Suite { identities, congruences };

std::string to_string(Suite s);

/// Ranges shared by every check in a run.
struct Scope {
  std::vector<Prime> primes;  // already filtered to the congruence domain
  std::uint64_t max_n = 200;
  std::uint64_t seed = 0x5EED;
};

/// One schedulable unit: a prime and/or an index (n or k).
struct Task {
  Prime p = 0;
  std::uint64_t index = 0;
};

struct CheckSpec {
  std::string name;
  std::string tag;      // equation label, e.g. "Eq. (a-3)"
  std::string modulus;  // "p^3", "exact identity", "p-integral"
  std::string domain;   // human-readable parameter domain
  Suite suite;
  std::function<std::vector<Task>(const Scope&)> tasks;
  std::function<std::vector<CheckResult>(const Task&, const Scope&)> run;
};

/// Every check, in a stable order (identities first, then congruences).
const std::vector<CheckSpec>& registry();

/// nullptr when unknown.
const CheckSpec* find_check(const std::string& name);

/// Draws per n for the x-dependent 3F2 checks: the first `count` pole-free
/// points plus every pole hit before them, in draw order.
std::vector<Rational> new6_draws(std::uint64_t seed, std::uint64_t n, std::size_t count);

}  // namespace supercong
