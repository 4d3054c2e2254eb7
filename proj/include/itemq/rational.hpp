#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace itemq {

/// Exact arbitrary-precision rational. Expression templates are disabled so
/// the type behaves like a plain value inside Eigen containers and lambdas.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Parses "p/q", an integer, or a plain decimal such as "0.6" (read as 3/5).
/// Throws MalformedInput on anything else.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// 2^-exponent as an exact value.
Rational dyadic(unsigned exponent);

}  // namespace itemq
