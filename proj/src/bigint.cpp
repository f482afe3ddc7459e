// GCC 11 reports spurious stringop warnings inside cpp_int shifts.
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#pragma GCC diagnostic ignored "-Wstringop-overread"

#include "greedy_spectra/bigint.hpp"

#include <cmath>
#include <limits>

namespace greedy_spectra {

double log_of(const BigInt& value) {
  if (value <= 0) return -std::numeric_limits<double>::infinity();
  const auto bits = boost::multiprecision::msb(value);
  if (bits < 1000) return std::log(value.convert_to<double>());
  const auto shift = bits - 60;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

long double to_long_double(const BigInt& value) {
  if (value == 0) return 0.0L;
  const auto bits = boost::multiprecision::msb(boost::multiprecision::abs(value));
  if (bits > 16000) {
    return value > 0 ? std::numeric_limits<long double>::infinity()
                     : -std::numeric_limits<long double>::infinity();
  }
  return value.convert_to<long double>();
}

}  // namespace greedy_spectra
