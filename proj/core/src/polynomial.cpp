#include "corelimit/polynomial.hpp"

#include <stdexcept>

namespace corelimit {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0)
    coefficients_.pop_back();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({BigInt(1)}); }

const BigInt& IntPolynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : kZero;
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::shifted(unsigned power) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(coefficients_.size() + power);
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    out[i + power] = coefficients_[i];
  return IntPolynomial(std::move(out));
}

}  // namespace corelimit
