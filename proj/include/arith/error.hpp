#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arith {

enum class Errc {
  empty,
  non_positive,
  not_divisor,
  common_factor,
  out_of_range,
  not_odd,
  not_prime,
  overflow,
  not_unit_sum,
};

std::string_view to_string(Errc code) noexcept;

/// Domain error raised by every operation in the library. `detail()` carries
/// the offending index for not_divisor and the common factor for
/// common_factor; it is zero otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::uint64_t detail = 0)
      : std::runtime_error(what), code_(code), detail_(detail) {}

  Errc code() const noexcept { return code_; }
  std::uint64_t detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::uint64_t detail_;
};

[[noreturn]] void throw_out_of_range(const std::string& what);

// Checked arithmetic. Every product or sum that can grow with the input goes
// through these.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(Errc::overflow, "integer overflow in multiplication");
  }
  return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(Errc::overflow, "integer overflow in addition");
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(Errc::overflow, "integer overflow in multiplication");
  }
  return out;
}

}  // namespace arith
