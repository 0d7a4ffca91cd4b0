#include "psmod/domain.hpp"

#include "psmod/error.hpp"
#include "psmod/ideals.hpp"

#include <algorithm>

namespace psmod {

namespace {

DomainFlags all_flags() { return {true, true, true, true, true, true, true}; }

DomainFlags noetherian_flags() {
  DomainFlags f;
  f.is_weak_gcd = true;
  f.is_accp = true;
  f.is_atomic = true;
  return f;
}

bool is_plain_integer(const std::string& s) {
  size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::string parenthesize_unless_integer(const std::string& s) {
  return is_plain_integer(s) ? s : "(" + s + ")";
}

}  // namespace

const OrderElement& Element::order_element() const {
  if (const auto* e = std::get_if<OrderElement>(&rep_)) return *e;
  throw Error(ErrorKind::DomainMismatch, "expected an element of Z or Z[w]");
}

const RatPoly& Element::poly() const {
  if (const auto* p = std::get_if<RatPoly>(&rep_)) return *p;
  throw Error(ErrorKind::DomainMismatch, "expected a polynomial over Q");
}

const Fraction& Element::fraction() const {
  if (const auto* f = std::get_if<Fraction>(&rep_)) return *f;
  throw Error(ErrorKind::DomainMismatch, "expected a localized element");
}

Domain Domain::integers() {
  Domain d;
  d.kind_ = DomainKind::Integers;
  d.flags_ = all_flags();
  d.order_ = Order::integers();
  return d;
}

Domain Domain::imag_quad(long m) {
  Domain d;
  d.kind_ = DomainKind::ImagQuadOrder;
  d.order_ = Order::quadratic(m);
  // Z[sqrt(-m)] is a UFD only for m = 2 once m = 1 is excluded: for m = 3 mod 4
  // the order is not integrally closed, otherwise it is maximal with
  // discriminant -4m and class number one only at m = 1, 2.
  d.flags_ = m == 2 ? all_flags() : noetherian_flags();
  return d;
}

Domain Domain::poly_rationals() {
  Domain d;
  d.kind_ = DomainKind::PolyOverRationals;
  d.flags_ = all_flags();
  return d;
}

Domain Domain::localized(const Domain& base, std::vector<OrderElement> s_generators) {
  if (!base.is_order())
    throw Error(ErrorKind::Unsupported, "localization is supported over Z and Z[w] only");
  for (const auto& g : s_generators)
    if (g.is_zero() || base.order().is_unit(g))
      throw Error(ErrorKind::InvalidArgument,
                  "S-generators must be nonzero nonunits, got " + base.order().to_string(g));
  Domain d;
  d.kind_ = DomainKind::Localized;
  d.order_ = base.order();
  d.base_ = std::make_shared<const Domain>(base);
  d.s_gens_ = std::move(s_generators);
  if (base.flags().is_pid) {
    d.flags_ = all_flags();
  } else if (base.order().m() == 3) {
    // inverting the nonprime atoms 2, 1+w, 1-w of Z[sqrt(-3)] leaves a UFD
    const Order& o = base.order();
    auto has = [&](const OrderElement& a) {
      return std::any_of(d.s_gens_.begin(), d.s_gens_.end(),
                         [&](const OrderElement& g) { return o.associates(g, a); });
    };
    d.flags_ = (has(OrderElement(2)) && has(OrderElement(1, 1)) && has(OrderElement(1, -1)))
                   ? all_flags()
                   : noetherian_flags();
  } else {
    d.flags_ = noetherian_flags();
  }
  return d;
}

const Order& Domain::order() const {
  if (kind_ == DomainKind::PolyOverRationals)
    throw Error(ErrorKind::DomainMismatch, "Q[x] has no base order");
  return order_;
}

const Domain& Domain::base() const {
  if (!base_) throw Error(ErrorKind::DomainMismatch, "not a localized domain");
  return *base_;
}

std::string Domain::to_string() const {
  switch (kind_) {
    case DomainKind::Integers:
      return "Z";
    case DomainKind::ImagQuadOrder:
      return "Z[w,-" + std::to_string(order_.m()) + "]";
    case DomainKind::PolyOverRationals:
      return "Q[x]";
    case DomainKind::Localized: {
      std::string out = "loc(" + base_->to_string() + "; [";
      for (size_t i = 0; i < s_gens_.size(); ++i) {
        if (i) out += ", ";
        out += order_.to_string(s_gens_[i]);
      }
      return out + "])";
    }
  }
  return {};
}

void Domain::check(const Element& a) const {
  const bool ok = std::visit(
      [this](const auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, OrderElement>) return is_order();
        else if constexpr (std::is_same_v<T, RatPoly>) return kind_ == DomainKind::PolyOverRationals;
        else return kind_ == DomainKind::Localized && rep.exps.size() == s_gens_.size();
      },
      a.rep());
  if (!ok) throw Error(ErrorKind::DomainMismatch, "element does not belong to " + to_string());
}

Element Domain::zero() const { return from_integer(0); }
Element Domain::one() const { return from_integer(1); }

Element Domain::from_integer(const Integer& n) const {
  switch (kind_) {
    case DomainKind::PolyOverRationals:
      return RatPoly::constant(Rational(n));
    case DomainKind::Localized:
      return Fraction{OrderElement(n), std::vector<unsigned>(s_gens_.size(), 0)};
    default:
      return OrderElement(n);
  }
}

Element Domain::embed(const OrderElement& a) const {
  if (kind_ == DomainKind::Localized) return reduce(Fraction{a, std::vector<unsigned>(s_gens_.size(), 0)});
  if (!is_order()) throw Error(ErrorKind::DomainMismatch, "cannot embed an order element in Q[x]");
  return a;
}

OrderElement Domain::s_product() const {
  OrderElement s(1);
  for (const auto& g : s_gens_) s = order_.mul(s, g);
  return s;
}

OrderElement Domain::monomial_value(const std::vector<unsigned>& exps) const {
  OrderElement s(1);
  for (size_t i = 0; i < exps.size(); ++i) s = order_.mul(s, order_.pow(s_gens_[i], exps[i]));
  return s;
}

Fraction Domain::reduce(Fraction f) const {
  if (f.num.is_zero()) {
    std::fill(f.exps.begin(), f.exps.end(), 0U);
    return f;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < s_gens_.size(); ++i) {
      if (f.exps[i] == 0) continue;
      if (auto q = order_.quotient(f.num, s_gens_[i])) {
        f.num = *q;
        --f.exps[i];
        changed = true;
      }
    }
  }
  return f;
}

Element Domain::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case DomainKind::PolyOverRationals:
      return a.poly() + b.poly();
    case DomainKind::Localized: {
      const Fraction& fa = a.fraction();
      const Fraction& fb = b.fraction();
      std::vector<unsigned> common(s_gens_.size());
      std::vector<unsigned> da(s_gens_.size()), db(s_gens_.size());
      for (size_t i = 0; i < common.size(); ++i) {
        common[i] = std::max(fa.exps[i], fb.exps[i]);
        da[i] = common[i] - fa.exps[i];
        db[i] = common[i] - fb.exps[i];
      }
      OrderElement num = order_.add(order_.mul(fa.num, monomial_value(da)),
                                    order_.mul(fb.num, monomial_value(db)));
      return reduce(Fraction{num, common});
    }
    default:
      return order_.add(a.order_element(), b.order_element());
  }
}

Element Domain::neg(const Element& a) const {
  check(a);
  switch (kind_) {
    case DomainKind::PolyOverRationals:
      return -a.poly();
    case DomainKind::Localized:
      return Fraction{order_.neg(a.fraction().num), a.fraction().exps};
    default:
      return order_.neg(a.order_element());
  }
}

Element Domain::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Domain::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case DomainKind::PolyOverRationals:
      return a.poly() * b.poly();
    case DomainKind::Localized: {
      const Fraction& fa = a.fraction();
      const Fraction& fb = b.fraction();
      std::vector<unsigned> exps(s_gens_.size());
      for (size_t i = 0; i < exps.size(); ++i) exps[i] = fa.exps[i] + fb.exps[i];
      return reduce(Fraction{order_.mul(fa.num, fb.num), exps});
    }
    default:
      return order_.mul(a.order_element(), b.order_element());
  }
}

Element Domain::pow(const Element& a, unsigned k) const {
  Element r = one();
  for (unsigned i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool Domain::is_zero(const Element& a) const {
  check(a);
  switch (kind_) {
    case DomainKind::PolyOverRationals:
      return a.poly().is_zero();
    case DomainKind::Localized:
      return a.fraction().num.is_zero();
    default:
      return a.order_element().is_zero();
  }
}

bool Domain::equal(const Element& a, const Element& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case DomainKind::PolyOverRationals:
      return a.poly() == b.poly();
    case DomainKind::Localized: {
      const Fraction& fa = a.fraction();
      const Fraction& fb = b.fraction();
      return order_.mul(fa.num, monomial_value(fb.exps)) ==
             order_.mul(fb.num, monomial_value(fa.exps));
    }
    default:
      return a.order_element() == b.order_element();
  }
}

bool Domain::is_unit(const Element& a) const {
  check(a);
  switch (kind_) {
    case DomainKind::PolyOverRationals:
      return a.poly().degree() == 0;
    case DomainKind::Localized: {
      const OrderElement& n = a.fraction().num;
      if (n.is_zero()) return false;
      if (order_.is_unit(n)) return true;
      return saturation(OIdeal::principal(order_, n), s_product()).is_unit_ideal();
    }
    default:
      return order_.is_unit(a.order_element());
  }
}

bool Domain::less(const Element& a, const Element& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case DomainKind::PolyOverRationals:
      return a.poly().degree() < b.poly().degree();
    case DomainKind::Localized:
      return order_.less(a.fraction().num, b.fraction().num);
    default:
      return order_.less(a.order_element(), b.order_element());
  }
}

std::string Domain::format(const Element& a) const {
  check(a);
  switch (kind_) {
    case DomainKind::PolyOverRationals:
      return psmod::to_string(a.poly());
    case DomainKind::Localized: {
      const Fraction& f = a.fraction();
      std::vector<std::string> factors;
      for (size_t i = 0; i < f.exps.size(); ++i) {
        if (f.exps[i] == 0) continue;
        std::string g = parenthesize_unless_integer(order_.to_string(s_gens_[i]));
        if (g[0] == '-') g = "(" + g + ")";
        if (f.exps[i] > 1) g += "^" + std::to_string(f.exps[i]);
        factors.push_back(g);
      }
      const std::string num = order_.to_string(f.num);
      if (factors.empty()) return num;
      std::string den = factors[0];
      for (size_t i = 1; i < factors.size(); ++i) den += "*" + factors[i];
      if (factors.size() > 1) den = "(" + den + ")";
      return parenthesize_unless_integer(num) + "/" + den;
    }
    default:
      return order_.to_string(a.order_element());
  }
}

bool operator==(const Domain& a, const Domain& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case DomainKind::Integers:
    case DomainKind::PolyOverRationals:
      return true;
    case DomainKind::ImagQuadOrder:
      return a.order_ == b.order_;
    case DomainKind::Localized:
      return *a.base_ == *b.base_ && a.s_gens_ == b.s_gens_;
  }
  return false;
}

}  // namespace psmod
