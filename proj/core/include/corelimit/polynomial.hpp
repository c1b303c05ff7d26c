#pragma once

#include <cstddef>
#include <vector>

#include "corelimit/numbers.hpp"

namespace corelimit {

/// Dense polynomial with arbitrary-precision integer coefficients,
/// constant term first. The zero polynomial stores no coefficients;
/// otherwise the trailing coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial one();

  bool is_zero() const noexcept { return coefficients_.empty(); }

  /// Degree, or -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept {
    return static_cast<std::ptrdiff_t>(coefficients_.size()) - 1;
  }

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }

  /// Coefficient of q^i (zero beyond the degree).
  const BigInt& coefficient(std::size_t i) const;

  BigInt operator()(const BigInt& x) const;
  Rational operator()(const Rational& x) const;

  /// This polynomial times q^power.
  IntPolynomial shifted(unsigned power) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

}  // namespace corelimit
