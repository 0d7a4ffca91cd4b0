#pragma once

#include "psmod/lattice.hpp"
#include "psmod/order.hpp"

#include <optional>
#include <vector>

namespace psmod {

/// A finitely generated ideal of Z or Z[w], stored as the Z-lattice of its
/// coordinates in Hermite normal form. Construction adjoins w*g for every
/// generator g, so the lattice is always closed under the w-action.
class OIdeal {
 public:
  static OIdeal from_generators(const Order& order, std::vector<OrderElement> gens);
  /// `basis` must already be the lattice of an ideal; it is re-reduced.
  static OIdeal from_lattice(const Order& order, lattice::Rows basis);
  static OIdeal principal(const Order& order, const OrderElement& a);
  static OIdeal unit(const Order& order) { return principal(order, OrderElement(1)); }

  const Order& order() const { return order_; }
  const lattice::Rows& basis() const { return basis_; }
  /// Generators as supplied (or the basis elements for derived ideals).
  const std::vector<OrderElement>& generators() const { return gens_; }
  std::vector<OrderElement> basis_elements() const;

  bool is_zero() const { return basis_.empty(); }
  bool is_unit_ideal() const;
  bool contains(const OrderElement& e) const;
  bool contains(const OIdeal& other) const;

  friend bool operator==(const OIdeal& a, const OIdeal& b) {
    return a.order_ == b.order_ && a.basis_ == b.basis_;
  }

 private:
  OIdeal(Order order, lattice::Rows basis, std::vector<OrderElement> gens)
      : order_(order), basis_(std::move(basis)), gens_(std::move(gens)) {}

  Order order_;
  lattice::Rows basis_;
  std::vector<OrderElement> gens_;
};

inline bool membership(const OrderElement& e, const OIdeal& ideal) { return ideal.contains(e); }

OIdeal sum(const OIdeal& a, const OIdeal& b);
OIdeal product(const OIdeal& a, const OIdeal& b);
OIdeal power(const OIdeal& a, unsigned k);
OIdeal intersection(const OIdeal& a, const OIdeal& b);
/// { t : t*J subset of I }.
OIdeal colon(const OIdeal& i, const OIdeal& j);

/// Hard cap on colon iterations during saturation.
inline constexpr int kSaturationCap = 64;

/// Union over k of (I : s^k), computed by iterating J <- (J : s) until it is
/// stable. Throws InvalidArgument for s == 0, Internal past kSaturationCap.
OIdeal saturation(const OIdeal& ideal, const OrderElement& s);

/// Index [O : I]. Throws InvalidArgument for the zero ideal.
Integer ideal_norm(const OIdeal& ideal);

/// A generator of I when I is principal. An element of I whose norm equals
/// the index of I generates I, and every generator has that norm, so the
/// search over the finitely many elements of that norm is exact.
std::optional<OrderElement> is_principal(const OIdeal& ideal);

}  // namespace psmod
