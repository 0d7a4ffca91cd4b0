#pragma once

#include "psmod/integer.hpp"
#include "psmod/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace psmod {

/// u + v*w in Z[w], w^2 = -m. Elements of Z are stored with v == 0.
struct OrderElement {
  Integer u;
  Integer v;

  OrderElement() = default;
  OrderElement(long n) : u(n), v(0) {}  // NOLINT(google-explicit-constructor)
  OrderElement(Integer u_, Integer v_ = 0) : u(std::move(u_)), v(std::move(v_)) {}  // NOLINT

  bool is_zero() const { return u == 0 && v == 0; }

  friend bool operator==(const OrderElement& a, const OrderElement& b) {
    return a.u == b.u && a.v == b.v;
  }
};

/// The base order: Z (m == 0) or Z[sqrt(-m)] with m >= 2 squarefree. All
/// divisor searches are finite because the norm form is positive definite.
class Order {
 public:
  static Order integers() { return Order(0); }
  /// Throws InvalidArgument unless m >= 2 is squarefree.
  static Order quadratic(long m);

  long m() const { return m_; }
  bool is_integers() const { return m_ == 0; }
  /// Rank of the order as a Z-module (1 or 2).
  size_t degree() const { return m_ == 0 ? 1 : 2; }

  OrderElement add(const OrderElement& a, const OrderElement& b) const;
  OrderElement sub(const OrderElement& a, const OrderElement& b) const;
  OrderElement neg(const OrderElement& a) const;
  OrderElement mul(const OrderElement& a, const OrderElement& b) const;
  OrderElement pow(const OrderElement& a, unsigned k) const;
  OrderElement conj(const OrderElement& a) const;
  OrderElement omega() const;

  /// u^2 + m v^2 (for Z this is u^2).
  Integer norm(const OrderElement& a) const;
  /// Index of the principal ideal (a): |u| for Z, the norm otherwise.
  Integer abs_norm(const OrderElement& a) const;

  bool divides(const OrderElement& a, const OrderElement& b) const;
  /// b / a when a divides b; throws InvalidDivisor when a == 0.
  std::optional<OrderElement> quotient(const OrderElement& b, const OrderElement& a) const;
  OrderElement quotient_or_throw(const OrderElement& b, const OrderElement& a) const;

  bool is_unit(const OrderElement& a) const;
  /// Associate-class representative: sign-positive in Z; in Z[w], u > 0 or
  /// (u == 0 and v > 0).
  OrderElement normalize(const OrderElement& a) const;
  bool associates(const OrderElement& a, const OrderElement& b) const;
  /// Candidate ordering: ascending abs_norm, then lexicographic (u, v).
  bool less(const OrderElement& a, const OrderElement& b) const;

  lattice::Vec coords(const OrderElement& a) const;
  OrderElement from_coords(const lattice::Vec& c) const;
  /// Z-basis images {a*1, a*w} in coordinates: the rows of multiplication by a.
  lattice::Rows multiplication_rows(const OrderElement& a) const;

  /// Normalized representatives of all elements of abs_norm n.
  std::vector<OrderElement> elements_of_norm(const Integer& n) const;
  /// Normalized representatives of all elements with 1 <= abs_norm <= bound,
  /// in candidate order.
  std::vector<OrderElement> elements_up_to_norm(const Integer& bound) const;

  std::vector<OrderElement> divisors_up_to_units(const OrderElement& a) const;
  std::vector<OrderElement> common_divisors(const OrderElement& a, const OrderElement& b) const;
  bool is_coprime(const OrderElement& a, const OrderElement& b) const;
  /// A maximal common divisor d: d | a, d | b and a/d, b/d coprime.
  OrderElement mcd(const OrderElement& a, const OrderElement& b) const;

  bool is_atom(const OrderElement& a) const;
  /// Decided on the residue ring O/(a).
  bool is_prime_element(const OrderElement& a) const;
  std::vector<OrderElement> factor_into_atoms(const OrderElement& a) const;

  std::string to_string(const OrderElement& a) const;

  friend bool operator==(const Order& a, const Order& b) { return a.m_ == b.m_; }

 private:
  explicit Order(long m) : m_(m) {}
  void require_nonzero(const OrderElement& a, const char* what) const;
  void require_nonzero_nonunit(const OrderElement& a, const char* what) const;

  long m_;
};

/// The finite ring O/(a) for a nonzero a, elements reduced against the HNF
/// basis of the principal ideal (a).
class ResidueRing {
 public:
  ResidueRing(const Order& order, const OrderElement& modulus);

  const Integer& size() const { return size_; }
  /// Canonical representative of x mod (a).
  OrderElement reduce(const OrderElement& x) const;
  OrderElement mul(const OrderElement& x, const OrderElement& y) const;
  bool is_zero(const OrderElement& x) const;
  /// Additive order of 1.
  Integer characteristic() const;
  /// Every canonical representative, enumerated from the HNF box.
  std::vector<OrderElement> elements() const;
  bool is_integral_domain() const;

 private:
  Order order_;
  lattice::Rows basis_;
  Integer size_;
};

}  // namespace psmod
