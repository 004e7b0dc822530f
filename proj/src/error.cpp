#include "arith/error.hpp"

namespace arith {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::empty: return "empty";
    case Errc::non_positive: return "non_positive";
    case Errc::not_divisor: return "not_divisor";
    case Errc::common_factor: return "common_factor";
    case Errc::out_of_range: return "out_of_range";
    case Errc::not_odd: return "not_odd";
    case Errc::not_prime: return "not_prime";
    case Errc::overflow: return "overflow";
    case Errc::not_unit_sum: return "not_unit_sum";
  }
  return "unknown";
}

void throw_out_of_range(const std::string& what) {
  throw Error(Errc::out_of_range, what);
}

}  // namespace arith
