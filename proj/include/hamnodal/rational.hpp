#ifndef HAMNODAL_RATIONAL_HPP
#define HAMNODAL_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hamnodal {

// Exact arithmetic everywhere; the library never touches floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) { return r.sign(); }

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

// Accepts "p" and "p/q" with an optional leading minus sign.
Rational parse_rational(std::string_view text);

}  // namespace hamnodal

#endif
