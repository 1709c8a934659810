#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace llg {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps lowest terms and a positive
// denominator, which is exactly the invariant the rest of the library needs.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "12", "-3", "2/5", "-7/4". Whitespace around tokens is accepted.
Rational parse_rational(std::string_view s);

std::string to_string(const Rational& q);

}  // namespace llg
