#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace corelimit {

/// Arbitrary-precision integer. Counts routinely exceed 64 bits (the number
/// of modulus-s cores alone is Fib_{s+1}), so every count in this library is
/// a BigInt and probabilities are exact Rationals until a consumer explicitly
/// rounds to double.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// Fibonacci numbers with the convention Fib_1 = Fib_2 = 1.
/// fibonacci(0) is 0 so that the recurrence holds from the start.
BigInt fibonacci(unsigned n);

double to_double(const BigInt& value);
double to_double(const Rational& value);

/// Decimal rendering, e.g. for JSON fields that must stay exact.
std::string decimal_string(const BigInt& value);

/// "num/den" in lowest terms ("n" when the denominator is 1).
std::string rational_string(const Rational& value);

}  // namespace corelimit
