#include "arith/prime_table.hpp"

#include <algorithm>

#include "arith/bounds.hpp"
#include "arith/constructions.hpp"
#include "arith/search.hpp"

namespace arith {

std::string_view to_string(PrimeClass c) noexcept {
  switch (c) {
    case PrimeClass::yes_theorem: return "yes_theorem";
    case PrimeClass::no_obstruction: return "no_obstruction";
    case PrimeClass::yes_quadratic: return "yes_quadratic";
    case PrimeClass::yes_search: return "yes_search";
    case PrimeClass::no_search: return "no_search";
  }
  return "unknown";
}

PrimeClass classify_prime(std::uint64_t n, Value p) {
  if (n < 3) throw_out_of_range("classify_prime requires n >= 3");
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  const auto sn = static_cast<std::int64_t>(n);

  if (static_cast<std::int64_t>(p) <= bound_report(sn).prime_bound) {
    return PrimeClass::yes_theorem;
  }
  if (obstructed_prime(p, sn)) return PrimeClass::no_obstruction;
  for (std::uint64_t k = 2; k + 1 <= n; ++k) {
    if (k * (n - k) + 1 == p && construct_quadratic(n, k).largest() == p) {
      return PrimeClass::yes_quadratic;
    }
  }
  return max_value_feasible(n, p).feasible() ? PrimeClass::yes_search
                                             : PrimeClass::no_search;
}

std::vector<PrimeTableRow> prime_table(std::uint64_t n_min, std::uint64_t n_max) {
  if (n_min < 3 || n_min > n_max || n_max > 30) {
    throw_out_of_range("prime_table requires 3 <= n_min <= n_max <= 30");
  }
  std::vector<PrimeTableRow> rows;
  for (std::uint64_t n = n_min; n <= n_max; ++n) {
    const auto sn = static_cast<std::int64_t>(n);
    PrimeTableRow row;
    row.n = n;
    row.prime_bound = bound_report(sn).prime_bound;
    row.obstruction_threshold = prime_obstruction_threshold_decimal(sn);

    for (Value p = static_cast<Value>(std::max<std::int64_t>(row.prime_bound + 1, 2));
         4 * (p - 1) <= n * n; ++p) {
      if (!is_prime(p)) continue;
      switch (classify_prime(n, p)) {
        case PrimeClass::yes_quadratic: row.yes_quadratic.push_back(p); break;
        case PrimeClass::yes_search: row.yes_other.push_back(p); break;
        case PrimeClass::no_search: row.no_other.push_back(p); break;
        // unreachable inside the gap
        case PrimeClass::yes_theorem:
        case PrimeClass::no_obstruction:
          throw Error(Errc::out_of_range, "prime outside the gap");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<CutoffViolation> find_cutoff_violation(
    const std::vector<PrimeTableRow>& rows) {
  for (const auto& row : rows) {
    std::vector<Value> feasible = row.yes_quadratic;
    feasible.insert(feasible.end(), row.yes_other.begin(), row.yes_other.end());
    std::sort(feasible.begin(), feasible.end());
    for (Value bad : row.no_other) {
      auto it = std::upper_bound(feasible.begin(), feasible.end(), bad);
      if (it != feasible.end()) return CutoffViolation{row.n, bad, *it};
    }
  }
  return std::nullopt;
}

}  // namespace arith
