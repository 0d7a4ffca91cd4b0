#pragma once

#include "psmod/integer.hpp"

#include <string>
#include <utility>
#include <vector>

namespace psmod {

/// Polynomial in x over Q, coefficients in ascending degree with no trailing
/// zeros (the zero polynomial has no coefficients).
struct RatPoly {
  std::vector<Rational> coeffs;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> c);
  static RatPoly constant(const Rational& c);
  static RatPoly x();

  bool is_zero() const { return coeffs.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  const Rational& leading() const { return coeffs.back(); }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs == b.coeffs; }
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a);
RatPoly operator*(const RatPoly& a, const RatPoly& b);

/// Quotient and remainder; throws InvalidDivisor for a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly monic(const RatPoly& a);
RatPoly gcd(RatPoly a, RatPoly b);

/// Terms in descending degree, e.g. "1/2*x^3-4".
std::string to_string(const RatPoly& p);

}  // namespace psmod
