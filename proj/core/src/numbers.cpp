#include "corelimit/numbers.hpp"

namespace corelimit {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: the partial product is C(n-k+i, i) * i!
  }
  return result;
}

BigInt fibonacci(unsigned n) {
  BigInt a = 0, b = 1;  // Fib_0, Fib_1
  for (unsigned i = 0; i < n; ++i) {
    a += b;
    a.swap(b);
  }
  return a;
}

double to_double(const BigInt& value) { return value.convert_to<double>(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string decimal_string(const BigInt& value) { return value.str(); }

std::string rational_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace corelimit
