#include "psmod/arith.hpp"

#include "psmod/error.hpp"
#include "psmod/ideals.hpp"

#include <algorithm>

namespace psmod {

namespace {

void require_nonzero_divisor(const Domain& d, const Element& a) {
  if (d.is_zero(a)) throw Error(ErrorKind::InvalidDivisor, "division by zero");
}

void require_nonzero_nonunit(const Domain& d, const Element& a, const char* what) {
  if (d.is_zero(a) || d.is_unit(a))
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + ": argument must be a nonzero nonunit, got " + d.format(a));
}

std::vector<Element> wrap(const std::vector<OrderElement>& xs) {
  return {xs.begin(), xs.end()};
}

void sort_candidates(const Domain& d, std::vector<Element>& xs) {
  std::stable_sort(xs.begin(), xs.end(),
                   [&d](const Element& a, const Element& b) { return d.less(a, b); });
}

std::optional<Element> localized_quotient(const Domain& d, const Fraction& b, const Fraction& a) {
  const Order& o = d.order();
  if (b.num.is_zero()) return d.zero();
  const OrderElement s = d.s_product();
  const OIdeal sat = saturation(OIdeal::principal(o, a.num), s);
  if (!sat.contains(b.num)) return std::nullopt;
  OrderElement shifted = b.num;
  for (int k = 0; k <= kSaturationCap; ++k) {
    if (auto q = o.quotient(shifted, a.num)) {
      std::vector<unsigned> exps = b.exps;
      for (auto& e : exps) e += static_cast<unsigned>(k);
      return d.reduce(Fraction{o.mul(*q, d.monomial_value(a.exps)), exps});
    }
    shifted = o.mul(shifted, s);
  }
  throw Error(ErrorKind::Internal, "saturation membership without a witnessing power");
}

std::vector<Element> localized_divisors(const Domain& d, const Fraction& a) {
  const Order& o = d.order();
  const OrderElement s = d.s_product();
  std::vector<OIdeal> keys;
  std::vector<OrderElement> reps;
  size_t previous = 0;
  OrderElement target = a.num;
  for (unsigned k = 0; k <= kLocalizedDivisorDepth; ++k) {
    for (const auto& div : o.divisors_up_to_units(target)) {
      OIdeal key = saturation(OIdeal::principal(o, div), s);
      if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
      keys.push_back(std::move(key));
      reps.push_back(div);
    }
    if (k > 0 && reps.size() == previous) {
      std::vector<Element> out;
      for (const auto& r : reps) out.push_back(d.embed(r));
      sort_candidates(d, out);
      return out;
    }
    previous = reps.size();
    target = o.mul(target, s);
  }
  throw Error(ErrorKind::UnsupportedEnumeration,
              "divisor classes of " + d.format(Element(a)) + " in " + d.to_string() +
                  " did not stabilize");
}

}  // namespace

Integer norm(const Domain& d, const Element& e) {
  if (d.kind() != DomainKind::ImagQuadOrder)
    throw Error(ErrorKind::DomainMismatch, "norm is defined on imaginary quadratic orders only");
  d.check(e);
  return d.order().norm(e.order_element());
}

std::optional<Element> exact_div(const Domain& d, const Element& a, const Element& b) {
  require_nonzero_divisor(d, a);
  d.check(b);
  switch (d.kind()) {
    case DomainKind::PolyOverRationals: {
      auto [q, r] = divmod(b.poly(), a.poly());
      if (!r.is_zero()) return std::nullopt;
      return Element(q);
    }
    case DomainKind::Localized:
      return localized_quotient(d, b.fraction(), a.fraction());
    default: {
      auto q = d.order().quotient(b.order_element(), a.order_element());
      if (!q) return std::nullopt;
      return Element(*q);
    }
  }
}

bool divides(const Domain& d, const Element& a, const Element& b) {
  return exact_div(d, a, b).has_value();
}

Element quotient(const Domain& d, const Element& b, const Element& a) {
  auto q = exact_div(d, a, b);
  if (!q) throw Error(ErrorKind::InvalidArgument, d.format(a) + " does not divide " + d.format(b));
  return *q;
}

bool associates(const Domain& d, const Element& a, const Element& b) {
  if (d.is_zero(a) || d.is_zero(b)) return d.is_zero(a) && d.is_zero(b);
  if (d.is_order()) return d.order().associates(a.order_element(), b.order_element());
  return divides(d, a, b) && divides(d, b, a);
}

bool Domain::associates(const Element& a, const Element& b) const {
  return psmod::associates(*this, a, b);
}

std::vector<Element> divisors_up_to_units(const Domain& d, const Element& a) {
  if (d.is_zero(a)) throw Error(ErrorKind::InvalidArgument, "divisors of zero are not enumerable");
  switch (d.kind()) {
    case DomainKind::PolyOverRationals:
      throw Error(ErrorKind::UnsupportedEnumeration,
                  "divisor enumeration is not supported over Q[x]");
    case DomainKind::Localized:
      return localized_divisors(d, a.fraction());
    default:
      return wrap(d.order().divisors_up_to_units(a.order_element()));
  }
}

std::vector<Element> common_divisors(const Domain& d, const Element& a, const Element& b) {
  if (d.is_zero(a) || d.is_zero(b))
    throw Error(ErrorKind::InvalidArgument, "common_divisors requires nonzero arguments");
  std::vector<Element> out;
  for (const auto& t : divisors_up_to_units(d, a))
    if (divides(d, t, b)) out.push_back(t);
  return out;
}

bool is_coprime(const Domain& d, const Element& a, const Element& b) {
  for (const auto& t : common_divisors(d, a, b))
    if (!d.is_unit(t)) return false;
  return true;
}

Element mcd(const Domain& d, const Element& a, const Element& b) {
  if (d.is_order()) return d.order().mcd(a.order_element(), b.order_element());
  Element acc = d.one();
  Element ra = a;
  Element rb = b;
  for (;;) {
    const auto common = common_divisors(d, ra, rb);
    auto it = std::find_if(common.begin(), common.end(),
                           [&d](const Element& t) { return !d.is_unit(t); });
    if (it == common.end()) break;
    acc = d.mul(acc, *it);
    ra = quotient(d, ra, *it);
    rb = quotient(d, rb, *it);
  }
  if (!is_coprime(d, ra, rb)) throw Error(ErrorKind::Internal, "mcd postcondition violated");
  return acc;
}

bool is_atom(const Domain& d, const Element& a) {
  if (d.is_order()) return d.order().is_atom(a.order_element());
  require_nonzero_nonunit(d, a, "is_atom");
  for (const auto& t : divisors_up_to_units(d, a))
    if (!d.is_unit(t) && !associates(d, t, a)) return false;
  return true;
}

bool is_prime_element(const Domain& d, const Element& a) {
  switch (d.kind()) {
    case DomainKind::PolyOverRationals:
      throw Error(ErrorKind::Unsupported, "primality is not decided over Q[x]");
    case DomainKind::Localized: {
      require_nonzero_nonunit(d, a, "is_prime_element");
      // a is prime in A_S iff, up to A_S-units, it is a single prime of A
      const Order& o = d.order();
      std::vector<OrderElement> kept;
      for (const auto& p : o.factor_into_atoms(a.fraction().num))
        if (!d.is_unit(d.embed(p))) kept.push_back(p);
      if (kept.size() > 1) return false;
      if (o.is_prime_element(kept.front())) return true;
      throw Error(ErrorKind::Unsupported,
                  "cannot decide primality in " + d.to_string() + " of the non-prime atom " +
                      o.to_string(kept.front()));
    }
    default:
      return d.order().is_prime_element(a.order_element());
  }
}

std::vector<Element> factor_into_atoms(const Domain& d, const Element& a) {
  if (d.is_order()) return wrap(d.order().factor_into_atoms(a.order_element()));
  require_nonzero_nonunit(d, a, "factor_into_atoms");
  for (const auto& t : divisors_up_to_units(d, a)) {
    if (d.is_unit(t) || associates(d, t, a)) continue;
    auto left = factor_into_atoms(d, t);
    auto right = factor_into_atoms(d, quotient(d, a, t));
    left.insert(left.end(), right.begin(), right.end());
    sort_candidates(d, left);
    return left;
  }
  return {a};
}

}  // namespace psmod
