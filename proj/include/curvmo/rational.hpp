#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace curvmo {

// Exact arithmetic everywhere outside the Monte Carlo / quadrature paths.
// cpp_rational keeps values in lowest terms with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Builds p/q, normalizing the sign of q. Throws on q == 0.
Rational make_rational(long long num, long long den = 1);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& value);

double to_double(const Rational& value);

/// base^exp for exp >= 0 (0^0 = 1).
Rational rat_pow(const Rational& base, int exp);

BigInt factorial(int n);

/// Integer binomial coefficient; 0 outside 0 <= k <= n.
BigInt int_binomial(int n, int k);

/// Falling factorial [x]_s = x(x-1)...(x-s+1); [x]_0 = 1 and [x]_s = 0 for s < 0.
Rational falling_factorial(const Rational& x, int s);

/// Generalized binomial coefficient [x]_s / s!; 0 for s < 0.
Rational gen_binomial(const Rational& x, int s);

}  // namespace curvmo
