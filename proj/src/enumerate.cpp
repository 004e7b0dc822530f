#include "arith/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace arith {
namespace {

using Wide = unsigned __int128;

Wide wide_gcd(Wide a, Wide b) {
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Wide wide_mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(Errc::overflow, "residual fraction exceeds 128 bits");
  }
  return out;
}

Value narrow(Wide x) {
  if (x > Wide{~Value{0}}) throw Error(Errc::overflow, "denominator exceeds 64 bits");
  return static_cast<Value>(x);
}

void check_n(std::uint64_t n, const EnumerateOptions& options) {
  if (n < 1) throw_out_of_range("enumeration requires n >= 1");
  if (n > EnumerateOptions::soft_cap && !options.allow_large) {
    throw_out_of_range("n = " + std::to_string(n) +
                       " is above the enumeration soft cap; pass the override to proceed");
  }
}

// Depth-first walk over nondecreasing denominators. `num/den` is the part of
// 1 still to be covered by `xs.size() - slot` unit fractions.
class Walker {
 public:
  using Visit = std::function<bool(std::span<const Value>)>;

  Walker(std::uint64_t n, const Visit* visit) : xs_(n), visit_(visit) {}

  // Returns false once the visitor asks to stop.
  bool walk(std::size_t slot, Wide num, Wide den, Value floor) {
    const std::uint64_t left = xs_.size() - slot;
    if (left == 1) {
      if (num != 1 || den < floor) return true;
      xs_[slot] = narrow(den);
      return emit();
    }
    // x > den/num so that something is left for the later slots
    const Wide lo = std::max<Wide>(floor, den / num + 1);
    const Wide hi = wide_mul(left, den) / num;
    for (Wide x = lo; x <= hi; ++x) {
      xs_[slot] = narrow(x);
      Wide next_num = num * x - den;
      Wide next_den = wide_mul(den, x);
      const Wide g = wide_gcd(next_num, next_den);
      next_num /= g;
      next_den /= g;
      if (!walk(slot + 1, next_num, next_den, xs_[slot])) return false;
    }
    return true;
  }

  std::vector<Value>& xs() { return xs_; }
  std::uint64_t count() const { return count_; }

 private:
  bool emit() {
    ++count_;
    return visit_ == nullptr || (*visit_)(xs_);
  }

  std::vector<Value> xs_;
  const Visit* visit_;
  std::uint64_t count_ = 0;
};

struct Branch {
  std::vector<Value> prefix;
  Wide num;
  Wide den;
};

// Prefixes of length `depth` (or shorter complete solutions, counted directly).
void collect_branches(std::uint64_t n, std::size_t depth, std::vector<Branch>& out) {
  std::vector<Value> prefix;
  auto rec = [&](auto&& self, Wide num, Wide den, Value floor) -> void {
    if (prefix.size() == depth) {
      out.push_back({prefix, num, den});
      return;
    }
    const std::uint64_t left = n - prefix.size();
    const Wide lo = std::max<Wide>(floor, den / num + 1);
    const Wide hi = wide_mul(left, den) / num;
    for (Wide x = lo; x <= hi; ++x) {
      Wide next_num = num * x - den;
      Wide next_den = wide_mul(den, x);
      const Wide g = wide_gcd(next_num, next_den);
      prefix.push_back(narrow(x));
      self(self, next_num / g, next_den / g, prefix.back());
      prefix.pop_back();
    }
  };
  rec(rec, 1, 1, 1);
}

}  // namespace

void for_each_unit_fraction_solution(
    std::uint64_t n, const std::function<bool(std::span<const Value>)>& visit,
    EnumerateOptions options) {
  check_n(n, options);
  Walker walker(n, &visit);
  walker.walk(0, 1, 1, 1);
}

void enumerate_structures(std::uint64_t n,
                          const std::function<bool(const Structure&)>& visit,
                          EnumerateOptions options) {
  for_each_unit_fraction_solution(
      n,
      [&](std::span<const Value> xs) {
        return visit(from_unit_fractions(UnitFractionSolution::from_denominators(xs)));
      },
      options);
}

std::uint64_t count_structures(std::uint64_t n, unsigned jobs, EnumerateOptions options) {
  check_n(n, options);
  if (jobs <= 1 || n <= 3) {
    Walker walker(n, nullptr);
    walker.walk(0, 1, 1, 1);
    return walker.count();
  }

  std::vector<Branch> branches;
  collect_branches(n, 2, branches);
  std::vector<std::uint64_t> counts(branches.size(), 0);
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<std::size_t> next{0};

  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < branches.size(); i = next++) {
        const Branch& br = branches[i];
        Walker walker(n, nullptr);
        std::copy(br.prefix.begin(), br.prefix.end(), walker.xs().begin());
        walker.walk(br.prefix.size(), br.num, br.den, br.prefix.back());
        counts[i] = walker.count();
      }
    } catch (...) {
      errors[id] = std::current_exception();
      next = branches.size();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace arith
