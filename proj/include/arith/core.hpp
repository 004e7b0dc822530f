#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "arith/error.hpp"

namespace arith {

using Value = std::uint64_t;

/// An arithmetical structure on the complete graph K_n: positive integers with
/// no common factor, each dividing their total. Stored in canonical
/// nonincreasing order. The only way to obtain one is through verify(), so
/// every live Structure satisfies its invariants.
class Structure {
 public:
  std::size_t n() const noexcept { return values_.size(); }
  const std::vector<Value>& values() const noexcept { return values_; }
  Value largest() const noexcept { return values_.front(); }
  Value sum() const noexcept { return sum_; }
  /// sum / largest; lies in [1, n].
  Value quotient_b() const noexcept { return b_; }
  /// Number of entries equal to the largest value.
  std::size_t top_multiplicity() const noexcept;

  friend bool operator==(const Structure&, const Structure&) = default;
  friend auto operator<=>(const Structure& a, const Structure& b) {
    return a.values_ <=> b.values_;
  }

 private:
  friend Structure verify(std::span<const Value> values);
  Structure(std::vector<Value> values, Value sum, Value b)
      : values_(std::move(values)), sum_(sum), b_(b) {}

  std::vector<Value> values_;
  Value sum_ = 0;
  Value b_ = 0;
};

/// Checks the defining divisibility condition and returns the canonical
/// Structure. Accepts any ordering.
///
/// Throws Error with code empty, non_positive, common_factor (detail = gcd) or
/// not_divisor (detail = index into the input span of the first value that
/// does not divide the sum).
Structure verify(std::span<const Value> values);

inline Structure verify(std::initializer_list<Value> values) {
  return verify(std::span<const Value>(values.begin(), values.size()));
}

/// Denominators x_1 <= ... <= x_n with sum of 1/x_i equal to 1.
class UnitFractionSolution {
 public:
  /// Validates in integer arithmetic (sum of L/x_i == L with L the lcm).
  /// Throws empty, non_positive, not_unit_sum or overflow.
  static UnitFractionSolution from_denominators(std::span<const Value> xs);

  std::size_t n() const noexcept { return denominators_.size(); }
  const std::vector<Value>& denominators() const noexcept { return denominators_; }
  Value lcm() const noexcept { return lcm_; }

  friend bool operator==(const UnitFractionSolution&,
                         const UnitFractionSolution&) = default;

 private:
  UnitFractionSolution(std::vector<Value> xs, Value lcm)
      : denominators_(std::move(xs)), lcm_(lcm) {}

  std::vector<Value> denominators_;
  Value lcm_ = 0;
};

/// x_i = S / r_i; the lcm of the result equals S.
UnitFractionSolution to_unit_fractions(const Structure& s);

/// r_i = lcm(x) / x_i.
Structure from_unit_fractions(const UnitFractionSolution& u);

/// The all-ones structure (1, ..., 1) on K_n.
Structure all_ones(std::size_t n);

Value checked_lcm(Value a, Value b);

}  // namespace arith
