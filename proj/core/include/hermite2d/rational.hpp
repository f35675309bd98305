#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace hermite2d {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept canonical at all times:
/// denominator > 0 and gcd(|num|, den) = 1 after every operation.
using BigRational = boost::multiprecision::cpp_rational;

/// Builds a canonical rational from any integer pair. Throws
/// std::domain_error when den == 0.
BigRational make_rational(BigInt num, BigInt den);

BigInt factorial(int n);
BigInt binomial(int n, int k);

int sign_of(const BigRational& q);

/// Canonical text form: "n" or "n/d", sign attached to the numerator.
std::string to_string(const BigRational& q);

/// Parses the canonical form. Throws ParseError on anything else.
BigRational parse_rational(std::string_view text);

/// Nearest-double conversion (error well under 4 unit roundoffs).
/// Throws std::overflow_error when |q| exceeds the double range.
double to_double(const BigRational& q);

}  // namespace hermite2d
