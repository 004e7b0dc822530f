#include <doctest.h>

#include <algorithm>

#include "arith/bounds.hpp"
#include "arith/constructions.hpp"

using namespace arith;

namespace {

// Exhaustive oracle: does some tuple of `length` exponents in [0, k], one of
// them zero, have powers summing to c?
bool brute_force_decomposable(Value c, std::uint64_t length, unsigned k) {
  std::vector<unsigned> e(length, 0);
  while (true) {
    Value sum = 0;
    bool has_zero = false;
    for (unsigned x : e) {
      sum += Value{1} << x;
      has_zero = has_zero || x == 0;
    }
    if (sum == c && has_zero) return true;
    std::size_t i = 0;
    while (i < length && e[i] == k) e[i++] = 0;
    if (i == length) return false;
    ++e[i];
  }
}

void check_decomposition(const PowerDecomposition& d, Value c, std::uint64_t length,
                         unsigned k) {
  REQUIRE(d.target == c);
  REQUIRE(d.length == length);
  REQUIRE(d.max_exponent == k);
  REQUIRE(d.exponents.size() == length);
  REQUIRE(std::is_sorted(d.exponents.rbegin(), d.exponents.rend()));
  REQUIRE(d.exponents.back() == 0);
  Value sum = 0;
  for (unsigned e : d.exponents) {
    REQUIRE(e <= k);
    sum += Value{1} << e;
  }
  REQUIRE(sum == c);
}

Value sum_of(const Structure& s) {
  Value total = 0;
  for (Value v : s.values()) total += v;
  return total;
}

}  // namespace

TEST_CASE("construct_flat") {
  const Structure a = construct_flat(5, 3);
  CHECK(a.values() == std::vector<Value>{3, 3, 1, 1, 1});
  CHECK(a.sum() == 9);
  CHECK(construct_flat(4, 1).values() == std::vector<Value>{1, 1, 1, 1});
  const Structure c = construct_flat(10, 9);
  CHECK(c.values() == std::vector<Value>{9, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(c.sum() == 18);

  CHECK_THROWS_AS(construct_flat(5, 0), Error);
  CHECK_THROWS_AS(construct_flat(5, 5), Error);
  CHECK_THROWS_AS(construct_flat(1, 1), Error);
}

TEST_CASE("decompose_powers examples") {
  CHECK(decompose_powers(5, 5, 2).exponents == std::vector<unsigned>{0, 0, 0, 0, 0});
  CHECK(decompose_powers(15, 5, 2).exponents == std::vector<unsigned>{2, 2, 2, 1, 0});

  REQUIRE(brute_force_decomposable(11, 5, 2));
  check_decomposition(decompose_powers(11, 5, 2), 11, 5, 2);

  CHECK_THROWS_AS(decompose_powers(16, 5, 2), Error);
  CHECK_THROWS_AS(decompose_powers(4, 5, 2), Error);
  CHECK_THROWS_AS(decompose_powers(10, 3, 4), Error);
}

TEST_CASE("decompose_powers_odd examples") {
  CHECK(decompose_powers_odd(17, 5, 2).exponents == std::vector<unsigned>{2, 2, 2, 2, 0});
  CHECK(decompose_powers_odd(7, 7, 3).exponents == std::vector<unsigned>(7, 0));

  REQUIRE(brute_force_decomposable(13, 4, 2));
  const PowerDecomposition d = decompose_powers_odd(13, 4, 2);
  check_decomposition(d, 13, 4, 2);
  CHECK(d.exponents == std::vector<unsigned>{2, 2, 2, 0});

  try {
    decompose_powers_odd(12, 5, 2);
    FAIL("expected not_odd");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_odd);
  }
  CHECK_THROWS_AS(decompose_powers_odd(19, 5, 2), Error);  // above (5-2+2)4-3 = 17
}

TEST_CASE("decompositions are valid over their full ranges, length <= 12") {
  for (std::uint64_t length = 1; length <= 12; ++length) {
    for (unsigned k = 0; k <= length; ++k) {
      const Value p = Value{1} << k;
      for (Value c = length; c <= (length - k + 1) * p - 1; ++c) {
        check_decomposition(decompose_powers(c, length, k), c, length, k);
      }
      if ((length - k + 2) * p >= 3) {
        for (Value c = length; c <= (length - k + 2) * p - 3; ++c) {
          if (c % 2 == 1) check_decomposition(decompose_powers_odd(c, length, k), c, length, k);
        }
      }
    }
  }
}

TEST_CASE("decompositions agree with the brute-force oracle on small instances") {
  for (std::uint64_t length = 1; length <= 6; ++length) {
    for (unsigned k = 0; k <= std::min<std::uint64_t>(length, 3); ++k) {
      const Value p = Value{1} << k;
      for (Value c = length; c <= (length - k + 1) * p - 1; ++c) {
        CHECK(brute_force_decomposable(c, length, k));
      }
    }
  }
}

TEST_CASE("construct_geometric examples") {
  const Structure a = construct_geometric(5, 1, 7);
  CHECK(a.values() == std::vector<Value>{7, 2, 2, 2, 1});
  CHECK(a.sum() == 14);
  const Structure b = construct_geometric(4, 1, 3);
  CHECK(b.values() == std::vector<Value>{3, 1, 1, 1});
  CHECK(b.sum() == 6);
  const Structure c = construct_geometric(7, 2, 5);
  CHECK(c.values() == std::vector<Value>{5, 5, 5, 2, 1, 1, 1});
  CHECK(c.sum() == 20);

  CHECK_THROWS_AS(construct_geometric(5, 3, 7), Error);   // 3 + 8 - 1 > 5
  CHECK_THROWS_AS(construct_geometric(5, 1, 8), Error);   // above 2n - 3
  CHECK_THROWS_AS(construct_geometric(5, 1, 3), Error);   // below n - 1
}

TEST_CASE("construct_geometric_prime examples") {
  const Structure a = construct_geometric_prime(5, 1, 7);
  CHECK(a.values() == std::vector<Value>{7, 2, 2, 2, 1});
  CHECK(a.sum() == 14);
  const Structure b = construct_geometric_prime(9, 2, 17);
  CHECK(b.largest() == 17);
  CHECK(b.top_multiplicity() == 3);
  CHECK(b.sum() == 68);
  CHECK(construct_geometric_prime(3, 1, 2).values() == std::vector<Value>{2, 1, 1});

  try {
    construct_geometric_prime(9, 2, 15);
    FAIL("expected not_prime");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_prime);
  }
}

TEST_CASE("construct_quadratic") {
  const Structure a = construct_quadratic(13, 5);
  CHECK(a.largest() == 41);
  CHECK(a.top_multiplicity() == 4);
  CHECK(std::count(a.values().begin(), a.values().end(), Value{5}) == 8);
  CHECK(a.values().back() == 1);
  CHECK(a.sum() == 205);
  CHECK(construct_quadratic(13, 6).largest() == 43);
  // k = 1 has no copies of the top value
  CHECK(construct_quadratic(4, 1).values() == std::vector<Value>{1, 1, 1, 1});
  CHECK_THROWS_AS(construct_quadratic(4, 4), Error);
  CHECK_THROWS_AS(construct_quadratic(4, 0), Error);
}

TEST_CASE("every construction verifies with its stated sum, n <= 25") {
  for (std::uint64_t n = 2; n <= 25; ++n) {
    for (Value c = 1; c + 1 <= n; ++c) {
      const Structure s = construct_flat(n, c);
      REQUIRE(s.sum() == c * (n - c + 1));
      REQUIRE(sum_of(s) == s.sum());
    }
    for (std::uint64_t k = 1; k + 1 <= n; ++k) {
      const Structure s = construct_quadratic(n, k);
      REQUIRE(s.sum() == k * (k * (n - k) + 1));
      if (k >= 2) REQUIRE(s.largest() == k * (n - k) + 1);
    }
    for (unsigned k = 1; k + (1u << k) - 1 <= n; ++k) {
      const Value p = Value{1} << k;
      for (Value c = n - p + 1; c <= (n - k - p + 2) * p - 1; ++c) {
        const Structure s = construct_geometric(n, k, c);
        REQUIRE(s.sum() == p * c);
        REQUIRE(s.largest() == c);
        REQUIRE(s.values().back() == 1);
      }
      for (Value c = n - p + 1; c <= (n - k - p + 3) * p - 3; ++c) {
        if (!is_prime(c)) continue;
        const Structure s = construct_geometric_prime(n, k, c);
        REQUIRE(s.largest() == c);
        if (c != 2) REQUIRE(s.sum() == p * c);
      }
    }
  }
}

TEST_CASE("construct_any covers everything up to the general bound") {
  for (std::uint64_t n = 2; n <= 25; ++n) {
    const auto bound = bound_report(static_cast<std::int64_t>(n)).general_bound;
    for (Value c = 1; static_cast<std::int64_t>(c) <= bound; ++c) {
      const auto built = construct_any(n, c);
      REQUIRE(built.has_value());
      REQUIRE(built->structure.largest() == c);
      REQUIRE(built->structure.n() == n);
    }
  }
}

TEST_CASE("construct_any examples") {
  const auto a = construct_any(13, 37);
  REQUIRE(a);
  CHECK(a->structure.largest() == 37);

  const auto b = construct_any(5, 1);
  REQUIRE(b);
  CHECK(b->structure.values() == std::vector<Value>(5, 1));

  const auto c = construct_any(13, 41);
  REQUIRE(c);
  CHECK(c->family == ConstructionFamily::quadratic);
  CHECK(c->structure == construct_quadratic(13, 5));

  CHECK_FALSE(construct_any(18, 79).has_value());
  CHECK_FALSE(construct_any(5, 105).has_value());
  CHECK(construct_any(1, 1)->structure.values() == std::vector<Value>{1});
}
