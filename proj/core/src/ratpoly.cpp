#include "psmod/ratpoly.hpp"

#include "psmod/error.hpp"

#include <algorithm>

namespace psmod {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

RatPoly::RatPoly(std::vector<Rational> c) : coeffs(std::move(c)) {
  for (auto& q : coeffs) q.canonicalize();
  trim(coeffs);
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::x() { return RatPoly({Rational(0), Rational(1)}); }

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a) {
  std::vector<Rational> c = a.coeffs;
  for (auto& q : c) q = -q;
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidDivisor, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs;
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree() + 1));
  for (long k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<size_t>(k + b.degree())] / b.leading();
    quo[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (size_t j = 0; j < b.coeffs.size(); ++j) rem[static_cast<size_t>(k) + j] -= q * b.coeffs[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly monic(const RatPoly& a) {
  if (a.is_zero()) return a;
  return a * RatPoly::constant(Rational(1) / a.leading());
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs[static_cast<size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace psmod
