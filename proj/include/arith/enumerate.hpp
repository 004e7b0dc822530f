#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "arith/core.hpp"

namespace arith {

struct EnumerateOptions {
  /// n above this needs allow_large; K_8 alone has 159,330,691 structures.
  static constexpr std::uint64_t soft_cap = 7;
  bool allow_large = false;
};

/// Visits every nondecreasing x_1 <= ... <= x_n with sum of 1/x_i = 1 in
/// lexicographic order. The visitor returns false to stop early.
void for_each_unit_fraction_solution(
    std::uint64_t n, const std::function<bool(std::span<const Value>)>& visit,
    EnumerateOptions options = {});

/// Every structure on K_n exactly once, ordered by its denominator tuple.
void enumerate_structures(std::uint64_t n,
                          const std::function<bool(const Structure&)>& visit,
                          EnumerateOptions options = {});

/// Number of structures on K_n. The search tree is split below its first two
/// levels and shared among `jobs` threads; the count does not depend on jobs.
std::uint64_t count_structures(std::uint64_t n, unsigned jobs = 1,
                               EnumerateOptions options = {});

}  // namespace arith
