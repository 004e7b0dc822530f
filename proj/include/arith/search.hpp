#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "arith/core.hpp"

namespace arith {

enum class Feasibility { feasible, infeasible };

enum class Reason {
  // infeasible
  general_obstruction,
  prime_obstruction,
  search_exhausted,
  // feasible
  construction,
  quadratic_family,
  search_witness,
};

std::string_view to_string(Feasibility f) noexcept;
std::string_view to_string(Reason r) noexcept;

struct FeasibilityResult {
  std::uint64_t n = 0;
  Value target = 0;
  Feasibility status = Feasibility::infeasible;
  Reason reason = Reason::search_exhausted;
  std::optional<Structure> witness;  // present iff feasible, largest() == target

  bool feasible() const noexcept { return status == Feasibility::feasible; }
};

struct SearchOptions {
  /// When false, skip the obstruction and construction shortcuts and always
  /// run the exhaustive (b, m) search.
  bool fast_paths = true;
};

/// Decides whether some structure on K_n has largest value c. Complete: a
/// negative answer means no such structure exists.
///
/// With S = b c, every value below c divides b c, and the m copies of c leave
/// the remaining n - m values to sum to (b - m) c. For each (b, m) this runs a
/// descending multiset subset-sum over the divisors of b c below c, tracking
/// which prime factors of c are already missed by some chosen value so that
/// only gcd-1 completions are accepted.
FeasibilityResult max_value_feasible(std::uint64_t n, Value c,
                                     SearchOptions options = {});

}  // namespace arith
