#include "arith/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace arith {

std::size_t Structure::top_multiplicity() const noexcept {
  return static_cast<std::size_t>(
      std::count(values_.begin(), values_.end(), values_.front()));
}

Value checked_lcm(Value a, Value b) {
  return checked_mul(a / std::gcd(a, b), b);
}

Structure verify(std::span<const Value> values) {
  if (values.empty()) throw Error(Errc::empty, "empty value list");

  Value sum = 0;
  Value g = 0;
  for (Value v : values) {
    if (v < 1) throw Error(Errc::non_positive, "values must be positive");
    sum = checked_add(sum, v);
    g = std::gcd(g, v);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (sum % values[i] != 0) {
      throw Error(Errc::not_divisor,
                  "value " + std::to_string(values[i]) +
                      " does not divide the sum " + std::to_string(sum),
                  i);
    }
  }
  if (g != 1) {
    throw Error(Errc::common_factor,
                "values share the common factor " + std::to_string(g), g);
  }

  std::vector<Value> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const Value b = sum / sorted.front();
  return Structure(std::move(sorted), sum, b);
}

Structure all_ones(std::size_t n) {
  if (n < 1) throw_out_of_range("n must be at least 1");
  const std::vector<Value> ones(n, 1);
  return verify(ones);
}

UnitFractionSolution UnitFractionSolution::from_denominators(
    std::span<const Value> xs) {
  if (xs.empty()) throw Error(Errc::empty, "empty denominator list");
  Value l = 1;
  for (Value x : xs) {
    if (x < 1) throw Error(Errc::non_positive, "denominators must be positive");
    l = checked_lcm(l, x);
  }
  Value total = 0;
  for (Value x : xs) total = checked_add(total, l / x);
  if (total != l) {
    throw Error(Errc::not_unit_sum, "reciprocals do not sum to 1");
  }
  std::vector<Value> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  return UnitFractionSolution(std::move(sorted), l);
}

UnitFractionSolution to_unit_fractions(const Structure& s) {
  std::vector<Value> xs;
  xs.reserve(s.n());
  // values are nonincreasing, so the quotients come out nondecreasing
  for (Value r : s.values()) xs.push_back(s.sum() / r);
  return UnitFractionSolution::from_denominators(xs);
}

Structure from_unit_fractions(const UnitFractionSolution& u) {
  std::vector<Value> rs;
  rs.reserve(u.n());
  for (Value x : u.denominators()) rs.push_back(u.lcm() / x);
  return verify(rs);
}

}  // namespace arith
