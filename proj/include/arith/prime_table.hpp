#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arith/core.hpp"

namespace arith {

/// Which reason settles whether prime p occurs as the largest value on K_n.
enum class PrimeClass {
  yes_theorem,     // p is at most the prime construction bound
  no_obstruction,  // p > n^2/4 + 1
  yes_quadratic,   // p = k(n - k) + 1 for some 2 <= k <= n - 1
  yes_search,      // feasible, found by the exhaustive search
  no_search,       // infeasible, search exhausted
};

std::string_view to_string(PrimeClass c) noexcept;

/// Requires n >= 3 and p prime.
PrimeClass classify_prime(std::uint64_t n, Value p);

/// One row of the table of attainable prime largest values. Primes up to
/// prime_bound are all attainable and primes above n^2/4 + 1 never are; the
/// three sets partition the primes in between.
struct PrimeTableRow {
  std::uint64_t n = 0;
  std::int64_t prime_bound = 0;
  std::string obstruction_threshold;  // exact decimal, e.g. "3.25"
  std::vector<Value> yes_quadratic;
  std::vector<Value> yes_other;
  std::vector<Value> no_other;

  friend bool operator==(const PrimeTableRow&, const PrimeTableRow&) = default;
};

/// Requires 3 <= n_min <= n_max <= 30.
std::vector<PrimeTableRow> prime_table(std::uint64_t n_min, std::uint64_t n_max);

/// A row in which a smaller prime is infeasible while a larger one is
/// feasible, showing that no single cutoff separates the two.
struct CutoffViolation {
  std::uint64_t n = 0;
  Value infeasible = 0;
  Value feasible = 0;
};

/// First such row in table order, if any.
std::optional<CutoffViolation> find_cutoff_violation(
    const std::vector<PrimeTableRow>& rows);

}  // namespace arith
