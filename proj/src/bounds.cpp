#include "arith/bounds.hpp"

#include <numeric>

namespace arith {
namespace {

std::string rational_string(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

std::int64_t general_bound_term(std::int64_t n, int k) {
  const std::int64_t p = std::int64_t{1} << k;
  return checked_mul(p, n) - checked_mul(k + p - 2, p) - 1;
}

std::int64_t prime_bound_term(std::int64_t n, int k) {
  const std::int64_t p = std::int64_t{1} << k;
  return checked_mul(p, n) - checked_mul(k + p - 3, p) - 3;
}

BoundReport bound_report(std::int64_t n) {
  if (n < 2) throw_out_of_range("bound_report requires n >= 2");
  BoundReport r;
  r.n = n;
  r.general_bound = general_bound_term(n, 1);
  r.general_k = 1;
  r.prime_bound = prime_bound_term(n, 1);
  r.prime_k = 1;
  for (int k = 2; k < 62 && (std::int64_t{1} << k) <= n; ++k) {
    if (const auto g = general_bound_term(n, k); g > r.general_bound) {
      r.general_bound = g;
      r.general_k = k;
    }
    if (const auto p = prime_bound_term(n, k); p > r.prime_bound) {
      r.prime_bound = p;
      r.prime_k = k;
    }
  }
  return r;
}

std::pair<std::int64_t, std::int64_t> optimal_k_range(int k) {
  if (k < 1 || k > 60) throw_out_of_range("optimal_k_range requires 1 <= k <= 60");
  const std::int64_t p = std::int64_t{1} << k;
  return {k + 3 * (p / 2) - 1, k + 3 * p};
}

Value smallest_prime_factor(Value c) {
  if (c < 2) throw_out_of_range("smallest_prime_factor requires c >= 2");
  if (c % 2 == 0) return 2;
  for (Value d = 3; d <= c / d; d += 2) {
    if (c % d == 0) return d;
  }
  return c;
}

bool is_prime(Value c) { return c >= 2 && smallest_prime_factor(c) == c; }

Factorization factorize(Value c) {
  if (c < 2) throw_out_of_range("factorize requires c >= 2");
  Factorization f;
  f.value = c;
  while (c > 1) {
    const Value p = smallest_prime_factor(c);
    unsigned a = 0;
    while (c % p == 0) {
      c /= p;
      ++a;
    }
    f.primes.emplace_back(p, a);
  }
  return f;
}

std::vector<Value> distinct_primes(Value c) {
  std::vector<Value> out;
  if (c < 2) return out;
  for (const auto& [p, a] : factorize(c).primes) out.push_back(p);
  return out;
}

bool obstructed_general(Value c, std::int64_t n) {
  if (c < 2 || n < 1) throw_out_of_range("obstructed_general requires c >= 2, n >= 1");
  const auto lhs = checked_mul(Value{4}, smallest_prime_factor(c));
  const auto rhs = checked_mul(static_cast<Value>(n + 1), static_cast<Value>(n + 1));
  return lhs > rhs;
}

bool obstructed_prime(Value p, std::int64_t n) {
  if (n < 1) throw_out_of_range("obstructed_prime requires n >= 1");
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  const auto lhs = checked_mul(Value{4}, p - 1);
  const auto rhs = checked_mul(static_cast<Value>(n), static_cast<Value>(n));
  return lhs > rhs;
}

std::string general_obstruction_threshold(std::int64_t n) {
  return rational_string(checked_mul(n + 1, n + 1), 4);
}

std::string prime_obstruction_threshold(std::int64_t n) {
  return rational_string(checked_mul(n, n) + 4, 4);
}

std::string prime_obstruction_threshold_decimal(std::int64_t n) {
  const std::int64_t num = checked_mul(n, n) + 4;
  const std::int64_t whole = num / 4;
  switch (num % 4) {
    case 1: return std::to_string(whole) + ".25";
    case 2: return std::to_string(whole) + ".5";
    case 3: return std::to_string(whole) + ".75";
    default: return std::to_string(whole);
  }
}

}  // namespace arith
