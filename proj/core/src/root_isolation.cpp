#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "corelimit/normal_approx.hpp"
#include "corelimit/numbers.hpp"
#include "corelimit/polynomial.hpp"

// Exact real-root isolation (Vincent-Collins-Akritas bisection with the
// Descartes variation bound), followed by exact bisection refinement.
// Everything runs on integer coefficients; no floating point touches a sign
// decision, so clustered ill-conditioned roots come out certified.

namespace corelimit {

namespace {

using Coeffs = std::vector<BigInt>;  // ascending, leading entry nonzero

int sign_of(const BigInt& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

// Remove a common power-of-two content; roots and signs are unchanged.
void strip_twos(Coeffs& c) {
  unsigned common = ~0u;
  for (const auto& a : c) {
    if (a == 0) continue;
    const BigInt magnitude = abs(a);
    common = std::min(common, static_cast<unsigned>(lsb(magnitude)));
    if (common == 0) return;
  }
  if (common == ~0u) return;
  for (auto& a : c)
    if (a != 0) a >>= common;
}

// p(x) -> p(x + 1), in place (Ruffini-Horner).
void taylor_shift_one(Coeffs& c) {
  const std::size_t d = c.size() - 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = d - 1; j + 1 > i; --j) c[j] += c[j + 1];
}

// p(x) -> 2^d p(x/2), in place.
void scale_half(Coeffs& c) {
  const std::size_t d = c.size() - 1;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] <<= (d - i);
  strip_twos(c);
}

// Descartes bound on the number of roots of p in (0,1): the sign variation
// count of (1+x)^d p(1/(1+x)), i.e. of the reversed-then-shifted polynomial.
unsigned variations_in_unit_interval(Coeffs c) {
  std::reverse(c.begin(), c.end());
  taylor_shift_one(c);
  unsigned variations = 0;
  int last = 0;
  for (const auto& a : c) {
    const int sign = sign_of(a);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++variations;
    last = sign;
  }
  return variations;
}

// Exact sign of p(num / 2^pow2).
int sign_at_dyadic(const Coeffs& c, const BigInt& num, unsigned pow2) {
  BigInt acc = 0;
  const BigInt step = BigInt(1) << pow2;
  BigInt power = 1;  // 2^{pow2 * (d - i)} built from the top down
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * num + *it * power;
    if (std::next(it) != c.rend()) power *= step;
  }
  return sign_of(acc);
}

// Dyadic isolating interval (lo/2^pow2, hi/2^pow2) around a single simple
// root, or an exact root when lo == hi.
struct Bracket {
  BigInt lo;
  BigInt hi;
  unsigned pow2 = 0;
};

// VCA on the normalized domain (0,1). `node` holds the transformed
// polynomial whose (0,1)-roots are the roots of the original in
// (c/2^h, (c+1)/2^h). Intervals are reported in normalized coordinates.
struct NormalizedInterval {
  BigInt c;
  unsigned h = 0;
  bool exact = false;  // root exactly at c/2^h
};

void isolate_unit(Coeffs node, BigInt c, unsigned h, unsigned depth_cap,
                  std::vector<NormalizedInterval>& out) {
  const unsigned variations = variations_in_unit_interval(node);
  if (variations == 0) return;
  if (variations == 1) {
    out.push_back({std::move(c), h, false});
    return;
  }
  if (h >= depth_cap)
    throw std::runtime_error(
        "real-root isolation did not terminate; polynomial not square-free?");

  scale_half(node);            // left half: roots of node(x/2) in (0,1)
  Coeffs right = node;
  taylor_shift_one(right);     // right half
  if (right.front() == 0) {    // exact root at the midpoint
    out.push_back({2 * c + 1, h + 1, true});
    right.erase(right.begin());
  }
  isolate_unit(std::move(node), 2 * c, h + 1, depth_cap, out);
  isolate_unit(std::move(right), 2 * c + 1, h + 1, depth_cap, out);
}

// Smallest e with all positive roots of p below 2^e (Cauchy-style bound).
unsigned cauchy_exponent(const Coeffs& c) {
  const BigInt lead = abs(c.back());
  BigInt top = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    BigInt magnitude = abs(c[i]);
    if (magnitude > top) top = std::move(magnitude);
  }
  const BigInt bound = 1 + (top + lead - 1) / lead;
  unsigned e = 0;
  while ((BigInt(1) << e) < bound + 1) ++e;
  return e;
}

// Brackets around every positive root of p, in original coordinates.
std::vector<Bracket> isolate_positive(const Coeffs& p) {
  const unsigned e = cauchy_exponent(p);
  // P(x) = p(2^e x): roots squeezed into (0,1)
  Coeffs scaled = p;
  for (std::size_t i = 0; i < scaled.size(); ++i)
    scaled[i] <<= (e * i);
  strip_twos(scaled);

  std::vector<NormalizedInterval> normalized;
  isolate_unit(std::move(scaled), 0, 0, 192, normalized);

  std::vector<Bracket> out;
  out.reserve(normalized.size());
  for (auto& n : normalized) {
    Bracket b;
    if (n.h >= e) {
      b.pow2 = n.h - e;
      b.lo = n.c;
      b.hi = n.exact ? b.lo : b.lo + 1;
    } else {
      b.pow2 = 0;
      b.lo = n.c << (e - n.h);
      b.hi = n.exact ? b.lo : (n.c + 1) << (e - n.h);
    }
    out.push_back(std::move(b));
  }
  return out;
}

// Exact division by the primitive linear factor (2^pow2 x - num).
Coeffs deflate_linear(const Coeffs& p, const BigInt& num, unsigned pow2) {
  const BigInt scale = BigInt(1) << pow2;
  const std::size_t d = p.size() - 1;
  Coeffs q(d);
  BigInt b = 0;
  for (std::size_t i = d; i >= 1; --i) {
    BigInt numerator = p[i] + num * b;
    BigInt remainder;
    divide_qr(numerator, scale, b, remainder);
    if (remainder != 0)
      throw std::logic_error("inexact deflation of a certified root");
    q[i - 1] = b;
  }
  if (-num * q[0] != p[0])
    throw std::logic_error("deflation consistency check failed");
  return q;
}

// Bisect a sign-change bracket down to ~2^-55 relative width. The bracket
// endpoints must not be roots (exact roots are deflated away beforehand).
double refine(const Coeffs& p, Bracket b) {
  int sign_lo = sign_at_dyadic(p, b.lo, b.pow2);
  const int sign_hi = sign_at_dyadic(p, b.hi, b.pow2);
  if (sign_lo == 0 || sign_hi == 0 || sign_lo == sign_hi)
    throw std::runtime_error("isolating interval lost its sign change");

  while (true) {
    // stop once hi - lo <= 2^-55 * max(|mid|, 1)
    const BigInt width = b.hi - b.lo;                  // value: width / 2^pow2
    const BigInt mid_twice = abs(b.hi + b.lo);         // 2|mid| * 2^pow2
    if ((width << 56) <= mid_twice + (BigInt(2) << b.pow2)) break;

    BigInt mid = b.lo + b.hi;  // at pow2 + 1
    ++b.pow2;
    b.lo <<= 1;
    b.hi <<= 1;
    const int sign_mid = sign_at_dyadic(p, mid, b.pow2);
    if (sign_mid == 0)
      return to_double(Rational(mid, BigInt(1) << b.pow2));
    if (sign_mid == sign_lo) {
      b.lo = std::move(mid);
    } else {
      b.hi = std::move(mid);
    }
  }
  return to_double(Rational(b.lo + b.hi, BigInt(2) << b.pow2));
}

}  // namespace

std::vector<double> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("zero polynomial has no root set");

  Coeffs c = p.coefficients();
  std::vector<double> roots;

  std::size_t zero_multiplicity = 0;
  while (zero_multiplicity < c.size() && c[zero_multiplicity] == 0)
    ++zero_multiplicity;
  c.erase(c.begin(), c.begin() + zero_multiplicity);
  if (c.size() <= 1) {
    roots.assign(zero_multiplicity, 0.0);
    return roots;
  }

  // Exact dyadic roots discovered during isolation sit on the boundaries of
  // their neighbors' brackets; deflating them first keeps every remaining
  // bracket strictly sign-changing.
  const auto solve_positive = [](Coeffs p, double orientation,
                                 std::vector<double>& out) {
    std::vector<Bracket> open;
    for (Bracket& b : isolate_positive(p)) {
      if (b.lo == b.hi) {
        out.push_back(orientation *
                      to_double(Rational(b.lo, BigInt(1) << b.pow2)));
        p = deflate_linear(p, b.lo, b.pow2);
      } else {
        open.push_back(std::move(b));
      }
    }
    for (const Bracket& b : open) out.push_back(orientation * refine(p, b));
  };

  // negative roots: positive roots of p(-x), negated
  Coeffs negated = c;
  for (std::size_t i = 1; i < negated.size(); i += 2) negated[i] = -negated[i];
  solve_positive(std::move(negated), -1.0, roots);

  roots.insert(roots.end(), zero_multiplicity, 0.0);
  solve_positive(std::move(c), 1.0, roots);

  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace corelimit
