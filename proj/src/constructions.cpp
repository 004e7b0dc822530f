#include "arith/constructions.hpp"

#include <algorithm>
#include <functional>

#include "arith/bounds.hpp"

namespace arith {
namespace {

Value pow2(unsigned k) {
  if (k >= 63) throw Error(Errc::overflow, "power of two exceeds 64 bits");
  return Value{1} << k;
}

// k + 2^k - 1 <= n
bool geometric_admissible(std::uint64_t n, unsigned k) {
  return k >= 1 && k < 63 && pow2(k) - 1 + k <= n;
}

Structure assemble_geometric(unsigned k, Value c, const PowerDecomposition& d) {
  std::vector<Value> values(pow2(k) - 1, c);
  for (unsigned e : d.exponents) values.push_back(pow2(e));
  return verify(values);
}

}  // namespace

std::string_view to_string(ConstructionFamily f) noexcept {
  switch (f) {
    case ConstructionFamily::flat: return "flat";
    case ConstructionFamily::geometric: return "geometric";
    case ConstructionFamily::quadratic: return "quadratic";
    case ConstructionFamily::geometric_prime: return "geometric_prime";
  }
  return "unknown";
}

Structure construct_flat(std::uint64_t n, Value c) {
  if (c < 1 || n < 1 || c > n - 1) {
    throw_out_of_range("construct_flat requires 1 <= c <= n - 1");
  }
  std::vector<Value> values(n - c, c);
  values.resize(n, 1);
  return verify(values);
}

PowerDecomposition decompose_powers(Value c, std::uint64_t length,
                                    unsigned max_exponent) {
  const unsigned k = max_exponent;
  if (length < 1 || k > length) {
    throw_out_of_range("decompose_powers requires 0 <= k <= length, length >= 1");
  }
  const Value upper = checked_mul(length - k + 1, pow2(k)) - 1;
  if (c < length || c > upper) {
    throw_out_of_range("decompose_powers: c = " + std::to_string(c) +
                       " outside [" + std::to_string(length) + ", " +
                       std::to_string(upper) + "]");
  }

  // count[e] = number of summands equal to 2^e
  std::vector<std::uint64_t> count(k + 1, 0);
  count[0] = length;
  for (Value sum = length; sum < c; ++sum) {
    unsigned b = 0;
    while (b < k && count[b] < 2) ++b;
    // the range bound guarantees a duplicate below k while sum < c
    if (b == k) throw Error(Errc::out_of_range, "no duplicated exponent below k");
    // one copy of b moves to b + 1, the other to 0
    count[b] -= 2;
    count[b + 1] += 1;
    count[0] += 1;
  }

  PowerDecomposition d;
  d.length = length;
  d.max_exponent = k;
  d.target = c;
  d.exponents.reserve(length);
  for (unsigned e = k + 1; e-- > 0;) d.exponents.insert(d.exponents.end(), count[e], e);
  return d;
}

PowerDecomposition decompose_powers_odd(Value c, std::uint64_t length,
                                        unsigned max_exponent) {
  const unsigned k = max_exponent;
  if (length < 1 || k > length) {
    throw_out_of_range("decompose_powers_odd requires 0 <= k <= length, length >= 1");
  }
  if (c % 2 == 0) throw Error(Errc::not_odd, std::to_string(c) + " is even");
  const Value p = pow2(k);
  const Value upper = checked_mul(length - k + 2, p);
  if (c < length || upper < 3 || c > upper - 3) {
    throw_out_of_range("decompose_powers_odd: c = " + std::to_string(c) +
                       " outside its admissible range");
  }
  const Value flat_upper = (length - k + 1) * p - 1;
  if (c <= flat_upper) return decompose_powers(c, length, k);

  // c' is even and below 2^k - 1, so it is a sum of distinct 2^j, 1 <= j < k
  Value rest = c - flat_upper;
  std::vector<unsigned> digit(k, 0);  // digit[j] = s_j
  for (unsigned j = k - 1; j >= 1; --j) {
    if (rest >= pow2(j)) {
      digit[j] = 1;
      rest -= pow2(j);
    }
  }

  PowerDecomposition d;
  d.length = length;
  d.max_exponent = k;
  d.target = c;
  d.exponents.push_back(0);
  for (unsigned j = 2; j <= k; ++j) d.exponents.push_back(j - 1 + digit[j - 1]);
  d.exponents.insert(d.exponents.end(), length - k, k);
  std::sort(d.exponents.begin(), d.exponents.end(), std::greater<>());
  return d;
}

Structure construct_geometric(std::uint64_t n, unsigned k, Value c) {
  if (n < 2 || !geometric_admissible(n, k)) {
    throw_out_of_range("construct_geometric requires n >= 2, k >= 1, k + 2^k - 1 <= n");
  }
  const std::uint64_t length = n - pow2(k) + 1;
  return assemble_geometric(k, c, decompose_powers(c, length, k));
}

Structure construct_geometric_prime(std::uint64_t n, unsigned k, Value p) {
  if (n < 2 || !geometric_admissible(n, k)) {
    throw_out_of_range(
        "construct_geometric_prime requires n >= 2, k >= 1, k + 2^k - 1 <= n");
  }
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  const std::uint64_t length = n - pow2(k) + 1;
  const Value upper = checked_mul(n - k - pow2(k) + 3, pow2(k)) - 3;
  if (p < length || p > upper) {
    throw_out_of_range("construct_geometric_prime: p outside its admissible range");
  }
  if (p == 2) return construct_flat(n, 2);
  return assemble_geometric(k, p, decompose_powers_odd(p, length, k));
}

Structure construct_quadratic(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || n < 2 || k > n - 1) {
    throw_out_of_range("construct_quadratic requires 1 <= k <= n - 1");
  }
  const Value top = checked_add(checked_mul(k, n - k), 1);
  std::vector<Value> values(k - 1, top);
  values.insert(values.end(), n - k, k);
  values.push_back(1);
  return verify(values);
}

std::optional<Construction> construct_any(std::uint64_t n, Value c) {
  if (n < 1 || c < 1) throw_out_of_range("construct_any requires n >= 1, c >= 1");
  if (c == 1) return Construction{all_ones(n), ConstructionFamily::flat};
  if (c <= n - 1) return Construction{construct_flat(n, c), ConstructionFamily::flat};

  for (unsigned k = 1; geometric_admissible(n, k); ++k) {
    const Value lo = n - pow2(k) + 1;
    const Value hi = (n - k - pow2(k) + 2) * pow2(k) - 1;
    if (c >= lo && c <= hi) {
      return Construction{construct_geometric(n, k, c), ConstructionFamily::geometric};
    }
  }

  for (std::uint64_t k = 2; k + 1 <= n; ++k) {
    if (k * (n - k) + 1 == c) {
      return Construction{construct_quadratic(n, k), ConstructionFamily::quadratic};
    }
  }

  if (is_prime(c)) {
    for (unsigned k = 1; geometric_admissible(n, k); ++k) {
      const Value lo = n - pow2(k) + 1;
      const Value hi = (n - k - pow2(k) + 3) * pow2(k) - 3;
      if (c >= lo && c <= hi) {
        return Construction{construct_geometric_prime(n, k, c),
                            ConstructionFamily::geometric_prime};
      }
    }
  }
  return std::nullopt;
}

}  // namespace arith
