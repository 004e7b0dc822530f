#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "arith/core.hpp"

namespace arith {

/// target = sum over j of 2^exponents[j], with exponents nonincreasing, each
/// in [0, max_exponent], and at least one of them zero.
struct PowerDecomposition {
  std::uint64_t length = 0;  // number of summands
  unsigned max_exponent = 0;
  std::vector<unsigned> exponents;
  Value target = 0;

  friend bool operator==(const PowerDecomposition&,
                         const PowerDecomposition&) = default;
};

/// c repeated n - c times followed by c ones; sum c(n - c + 1).
/// Requires 1 <= c <= n - 1.
Structure construct_flat(std::uint64_t n, Value c);

/// Writes c as `length` powers of two bounded by 2^max_exponent. Starts from
/// all zeros and repeatedly merges a duplicated exponent b < k into b + 1
/// while resetting its partner to 0, which raises the sum by exactly one.
/// Requires max_exponent <= length <= c <= (length - k + 1) 2^k - 1.
PowerDecomposition decompose_powers(Value c, std::uint64_t length,
                                    unsigned max_exponent);

/// Odd-target variant reaching up to (length - k + 2) 2^k - 3.
PowerDecomposition decompose_powers_odd(Value c, std::uint64_t length,
                                        unsigned max_exponent);

/// 2^k - 1 copies of c, then the powers of two decomposing c over the
/// remaining n - 2^k + 1 slots; sum 2^k c.
Structure construct_geometric(std::uint64_t n, unsigned k, Value c);

/// As construct_geometric for a prime, using the odd decomposition; p = 2
/// goes through construct_flat.
Structure construct_geometric_prime(std::uint64_t n, unsigned k, Value p);

/// k - 1 copies of k(n - k) + 1, n - k copies of k, one 1.
/// For k = 1 there are no copies of the top value and the result is all ones.
Structure construct_quadratic(std::uint64_t n, std::uint64_t k);

enum class ConstructionFamily { flat, geometric, quadratic, geometric_prime };

std::string_view to_string(ConstructionFamily f) noexcept;

struct Construction {
  Structure structure;
  ConstructionFamily family;
};

/// Tries flat, geometric over every admissible k, quadratic, then
/// prime-geometric; returns the first structure whose largest value is c.
/// Succeeds for every c up to the general construction bound.
std::optional<Construction> construct_any(std::uint64_t n, Value c);

}  // namespace arith
