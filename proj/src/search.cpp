#include "arith/search.hpp"

#include <algorithm>
#include <unordered_set>

#include "arith/bounds.hpp"
#include "arith/constructions.hpp"

namespace arith {

std::string_view to_string(Feasibility f) noexcept {
  return f == Feasibility::feasible ? "feasible" : "infeasible";
}

std::string_view to_string(Reason r) noexcept {
  switch (r) {
    case Reason::general_obstruction: return "general_obstruction";
    case Reason::prime_obstruction: return "prime_obstruction";
    case Reason::search_exhausted: return "search_exhausted";
    case Reason::construction: return "construction";
    case Reason::quadratic_family: return "quadratic_family";
    case Reason::search_witness: return "search_witness";
  }
  return "unknown";
}

namespace {

std::vector<Value> divisors_below(Value x, Value limit) {
  std::vector<Value> small, large;
  for (Value d = 1; d <= x / d; ++d) {
    if (x % d != 0) continue;
    small.push_back(d);
    if (d != x / d) large.push_back(x / d);
  }
  std::vector<Value> out;
  for (auto it = large.begin(); it != large.end(); ++it) {
    if (*it < limit) out.push_back(*it);
  }
  for (auto it = small.rbegin(); it != small.rend(); ++it) {
    if (*it < limit) out.push_back(*it);
  }
  return out;  // descending
}

// Multiset subset-sum for one (b, m) frame. Values are chosen in descending
// order; a state fails identically wherever it recurs, so failures are cached.
class FrameSearch {
 public:
  FrameSearch(std::vector<Value> divisors, std::vector<std::uint32_t> cover,
              std::uint32_t full_mask)
      : divisors_(std::move(divisors)), cover_(std::move(cover)), full_(full_mask) {}

  bool run(std::uint64_t count, Value target) {
    chosen_.clear();
    failed_.clear();
    return descend(0, count, target, 0);
  }

  const std::vector<Value>& chosen() const noexcept { return chosen_; }

 private:
  struct State {
    std::uint32_t index;
    std::uint32_t count;
    std::uint32_t mask;
    Value target;
    bool operator==(const State&) const = default;
  };
  struct StateHash {
    std::size_t operator()(const State& s) const noexcept {
      std::uint64_t h = s.target * 0x9E3779B97F4A7C15ull;
      h ^= (std::uint64_t{s.index} << 40) ^ (std::uint64_t{s.count} << 20) ^ s.mask;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };

  bool descend(std::size_t index, std::uint64_t count, Value target,
               std::uint32_t mask) {
    if (count == 0) return target == 0 && mask == full_;
    if (index == divisors_.size()) return false;
    const Value d = divisors_[index];
    // every remaining value is at least 1 and at most d
    if (target < count || target > count * d) return false;

    const State key{static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(count), mask, target};
    if (failed_.contains(key)) return false;

    if (d <= target) {
      chosen_.push_back(d);
      if (descend(index, count - 1, target - d, mask | cover_[index])) return true;
      chosen_.pop_back();
    }
    if (descend(index + 1, count, target, mask)) return true;

    failed_.insert(key);
    return false;
  }

  std::vector<Value> divisors_;
  std::vector<std::uint32_t> cover_;
  std::uint32_t full_;
  std::vector<Value> chosen_;
  std::unordered_set<State, StateHash> failed_;
};

FeasibilityResult make_feasible(std::uint64_t n, Value c, Reason reason,
                                Structure witness) {
  FeasibilityResult r;
  r.n = n;
  r.target = c;
  r.status = Feasibility::feasible;
  r.reason = reason;
  r.witness = std::move(witness);
  return r;
}

FeasibilityResult make_infeasible(std::uint64_t n, Value c, Reason reason) {
  FeasibilityResult r;
  r.n = n;
  r.target = c;
  r.status = Feasibility::infeasible;
  r.reason = reason;
  return r;
}

FeasibilityResult exhaustive(std::uint64_t n, Value c) {
  const std::vector<Value> primes = distinct_primes(c);
  if (primes.size() > 31) throw Error(Errc::overflow, "too many prime factors");
  const std::uint32_t full = (std::uint32_t{1} << primes.size()) - 1;

  // sum >= c + (n - 1) forces b >= ceil((c + n - 1) / c); values <= c force b <= n
  const std::uint64_t b_lo = (checked_add(c, n - 1) + c - 1) / c;
  for (std::uint64_t b = b_lo; b <= n; ++b) {
    const Value bc = checked_mul(b, c);
    const std::vector<Value> divisors = divisors_below(bc, c);
    if (divisors.empty()) continue;
    std::vector<std::uint32_t> cover;
    cover.reserve(divisors.size());
    for (Value d : divisors) {
      std::uint32_t bits = 0;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        if (d % primes[i] != 0) bits |= std::uint32_t{1} << i;
      }
      cover.push_back(bits);
    }
    FrameSearch frame(divisors, std::move(cover), full);

    // the top value has multiplicity m < b (b = m would leave nothing to sum)
    for (std::uint64_t m = 1; m <= std::min(b - 1, n - 1); ++m) {
      const std::uint64_t rest = n - m;
      const Value target = checked_mul(b - m, c);
      if (target > checked_mul(rest, divisors.front()) || target < rest) continue;
      if (frame.run(rest, target)) {
        std::vector<Value> values(m, c);
        values.insert(values.end(), frame.chosen().begin(), frame.chosen().end());
        return make_feasible(n, c, Reason::search_witness, verify(values));
      }
    }
  }
  return make_infeasible(n, c, Reason::search_exhausted);
}

}  // namespace

FeasibilityResult max_value_feasible(std::uint64_t n, Value c, SearchOptions options) {
  if (n < 1 || c < 1) throw_out_of_range("max_value_feasible requires n >= 1, c >= 1");
  if (c == 1) return make_feasible(n, c, Reason::construction, all_ones(n));

  if (options.fast_paths) {
    const auto sn = static_cast<std::int64_t>(n);
    if (obstructed_general(c, sn)) {
      return make_infeasible(n, c, Reason::general_obstruction);
    }
    if (is_prime(c) && obstructed_prime(c, sn)) {
      return make_infeasible(n, c, Reason::prime_obstruction);
    }
    if (auto built = construct_any(n, c)) {
      const Reason reason = built->family == ConstructionFamily::quadratic
                                ? Reason::quadratic_family
                                : Reason::construction;
      return make_feasible(n, c, reason, std::move(built->structure));
    }
  }

  FeasibilityResult result = exhaustive(n, c);
  if (result.witness && result.witness->largest() != c) {
    throw Error(Errc::out_of_range, "search produced a witness with the wrong top value");
  }
  return result;
}

}  // namespace arith
