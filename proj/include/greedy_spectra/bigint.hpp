#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace greedy_spectra {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

// Natural logarithm of a positive integer that may exceed the double range.
double log_of(const BigInt& value);

// Nearest long double; +inf when out of range.
long double to_long_double(const BigInt& value);

}  // namespace greedy_spectra
