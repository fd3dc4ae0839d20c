#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace boxdim {

// Exact rational scalar used for all state-space geometry and LP work.
// cpp_rational keeps values in lowest terms with a positive denominator,
// so no rounding or normalization happens anywhere downstream.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Malformed or inconsistent input (bad file, violated precondition).
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured resource cap.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p/q" or "p"; the denominator must be a positive integer.
// The result is normalized, so "2/4" parses to 1/2.
Rational parse_rational(const std::string& text);

// Emits "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

}  // namespace boxdim
