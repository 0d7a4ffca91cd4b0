#pragma once

#include "psmod/integer.hpp"
#include "psmod/order.hpp"
#include "psmod/ratpoly.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace psmod {

enum class DomainKind { Integers, ImagQuadOrder, PolyOverRationals, Localized };

struct DomainFlags {
  bool is_ufd = false;
  bool is_pid = false;
  bool is_bezout = false;
  bool is_gcd = false;
  bool is_weak_gcd = false;
  bool is_accp = false;
  bool is_atomic = false;
};

/// num / (product of s_generators[i]^exps[i]) in A_S.
struct Fraction {
  OrderElement num;
  std::vector<unsigned> exps;
};

/// An exact element of one of the test-bed domains. Elements of Z and Z[w]
/// share the OrderElement representation; which ring they belong to is a
/// property of the Domain they are used with.
class Element {
 public:
  using Rep = std::variant<OrderElement, RatPoly, Fraction>;

  Element() : rep_(OrderElement()) {}
  Element(long n) : rep_(OrderElement(n)) {}           // NOLINT(google-explicit-constructor)
  Element(OrderElement e) : rep_(std::move(e)) {}     // NOLINT(google-explicit-constructor)
  Element(RatPoly p) : rep_(std::move(p)) {}          // NOLINT(google-explicit-constructor)
  Element(Fraction f) : rep_(std::move(f)) {}         // NOLINT(google-explicit-constructor)

  const Rep& rep() const { return rep_; }
  bool is_order_element() const { return std::holds_alternative<OrderElement>(rep_); }
  /// Throws DomainMismatch unless this holds an OrderElement.
  const OrderElement& order_element() const;
  const RatPoly& poly() const;
  const Fraction& fraction() const;

 private:
  Rep rep_;
};

/// Descriptor of a test-bed integral domain together with its exact
/// arithmetic. Immutable; cheap to copy.
class Domain {
 public:
  static Domain integers();
  /// Z[sqrt(-m)], m >= 2 squarefree.
  static Domain imag_quad(long m);
  static Domain poly_rationals();
  /// A_S for S generated by nonzero nonunits of an Integers/ImagQuadOrder base.
  static Domain localized(const Domain& base, std::vector<OrderElement> s_generators);

  DomainKind kind() const { return kind_; }
  const DomainFlags& flags() const { return flags_; }
  /// The base order (for Localized, the order of the base). Throws for Q[x].
  const Order& order() const;
  const Domain& base() const;
  const std::vector<OrderElement>& s_generators() const { return s_gens_; }
  bool is_order() const {
    return kind_ == DomainKind::Integers || kind_ == DomainKind::ImagQuadOrder;
  }
  bool is_localized() const { return kind_ == DomainKind::Localized; }
  /// True when divisors of an element can be listed up to units.
  bool enumerates_divisors() const { return kind_ != DomainKind::PolyOverRationals; }

  /// Domain literal, e.g. "Z", "Z[w,-5]", "Q[x]", "loc(Z[w,-3]; [2, 1+w, 1-w])".
  std::string to_string() const;

  // ring structure
  Element zero() const;
  Element one() const;
  Element from_integer(const Integer& n) const;
  /// Image of a base-order element in this domain (identity unless Localized).
  Element embed(const OrderElement& a) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, unsigned k) const;
  bool is_zero(const Element& a) const;
  bool equal(const Element& a, const Element& b) const;
  bool is_unit(const Element& a) const;
  bool associates(const Element& a, const Element& b) const;
  /// Candidate order: ascending norm (of the numerator), then (u, v).
  bool less(const Element& a, const Element& b) const;
  /// Throws DomainMismatch when `a` is not of this domain's representation.
  void check(const Element& a) const;

  std::string format(const Element& a) const;

  // localization helpers
  /// s = product of all S-generators.
  OrderElement s_product() const;
  OrderElement monomial_value(const std::vector<unsigned>& exps) const;
  /// Cancels S-generators from the numerator while the matching exponent is
  /// positive.
  Fraction reduce(Fraction f) const;

  friend bool operator==(const Domain& a, const Domain& b);

 private:
  Domain() = default;

  DomainKind kind_ = DomainKind::Integers;
  DomainFlags flags_;
  Order order_ = Order::integers();
  std::shared_ptr<const Domain> base_;
  std::vector<OrderElement> s_gens_;
};

}  // namespace psmod
