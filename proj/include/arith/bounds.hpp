#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arith/core.hpp"

namespace arith {

/// The two construction bounds on K_n together with the smallest k attaining
/// each maximum.
struct BoundReport {
  std::int64_t n = 0;
  std::int64_t general_bound = 0;
  int general_k = 0;
  std::int64_t prime_bound = 0;
  int prime_k = 0;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// 2^k n - (k + 2^k - 2) 2^k - 1: every c up to this is realizable with slope 2^k.
std::int64_t general_bound_term(std::int64_t n, int k);
/// 2^k n - (k + 2^k - 3) 2^k - 3: the same for primes.
std::int64_t prime_bound_term(std::int64_t n, int k);

/// Requires n >= 2. Scans k = 1 while 2^k <= n; past that the terms only drop.
BoundReport bound_report(std::int64_t n);

/// The n-interval [lo, hi] on which the slope-2^k general term is maximal.
std::pair<std::int64_t, std::int64_t> optimal_k_range(int k);

struct Factorization {
  Value value = 0;
  std::vector<std::pair<Value, unsigned>> primes;  // ascending, exponent >= 1
};

Value smallest_prime_factor(Value c);
bool is_prime(Value c);
Factorization factorize(Value c);
/// Distinct prime factors in ascending order (empty for c = 1).
std::vector<Value> distinct_primes(Value c);

/// True when every prime factor of c exceeds (n+1)^2 / 4, which rules out
/// any structure on K_n with largest value c.
bool obstructed_general(Value c, std::int64_t n);

/// True when p > n^2/4 + 1 for prime p, which rules out largest value p.
bool obstructed_prime(Value p, std::int64_t n);

/// Exact rational rendering, "13/4" or "10".
std::string general_obstruction_threshold(std::int64_t n);
std::string prime_obstruction_threshold(std::int64_t n);
/// Terminating decimal rendering for the same thresholds, "3.25" or "10".
std::string prime_obstruction_threshold_decimal(std::int64_t n);

}  // namespace arith
