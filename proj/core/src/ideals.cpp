#include "psmod/ideals.hpp"

#include "psmod/error.hpp"

namespace psmod {

namespace {

void require_same_order(const OIdeal& a, const OIdeal& b) {
  if (!(a.order() == b.order()))
    throw Error(ErrorKind::DomainMismatch, "ideals live in different orders");
}

}  // namespace

OIdeal OIdeal::from_generators(const Order& order, std::vector<OrderElement> gens) {
  lattice::Rows rows;
  for (const auto& g : gens)
    for (auto& row : order.multiplication_rows(g)) rows.push_back(std::move(row));
  auto basis = lattice::hnf(std::move(rows), order.degree());
  return OIdeal(order, std::move(basis), std::move(gens));
}

OIdeal OIdeal::from_lattice(const Order& order, lattice::Rows basis) {
  std::vector<OrderElement> gens;
  for (const auto& row : basis) gens.push_back(order.from_coords(row));
  return from_generators(order, std::move(gens));
}

OIdeal OIdeal::principal(const Order& order, const OrderElement& a) {
  return from_generators(order, {a});
}

std::vector<OrderElement> OIdeal::basis_elements() const {
  std::vector<OrderElement> out;
  for (const auto& row : basis_) out.push_back(order_.from_coords(row));
  return out;
}

bool OIdeal::is_unit_ideal() const { return contains(OrderElement(1)); }

bool OIdeal::contains(const OrderElement& e) const {
  return lattice::contains(basis_, order_.coords(e));
}

bool OIdeal::contains(const OIdeal& other) const {
  require_same_order(*this, other);
  return lattice::contains_all(basis_, other.basis_);
}

OIdeal sum(const OIdeal& a, const OIdeal& b) {
  require_same_order(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return OIdeal::from_generators(a.order(), std::move(gens));
}

OIdeal product(const OIdeal& a, const OIdeal& b) {
  require_same_order(a, b);
  std::vector<OrderElement> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(a.order().mul(x, y));
  return OIdeal::from_generators(a.order(), std::move(gens));
}

OIdeal power(const OIdeal& a, unsigned k) {
  OIdeal r = OIdeal::unit(a.order());
  for (unsigned i = 0; i < k; ++i) r = product(r, a);
  return r;
}

OIdeal intersection(const OIdeal& a, const OIdeal& b) {
  require_same_order(a, b);
  return OIdeal::from_lattice(a.order(),
                              lattice::intersection(a.basis(), b.basis(), a.order().degree()));
}

OIdeal colon(const OIdeal& i, const OIdeal& j) {
  require_same_order(i, j);
  const Order& order = i.order();
  if (j.is_zero()) return OIdeal::unit(order);
  std::optional<lattice::Rows> acc;
  for (const auto& beta : j.basis_elements()) {
    auto pre = lattice::preimage(order.multiplication_rows(beta), i.basis(), order.degree());
    acc = acc ? lattice::intersection(*acc, pre, order.degree()) : std::move(pre);
  }
  return OIdeal::from_lattice(order, std::move(*acc));
}

OIdeal saturation(const OIdeal& ideal, const OrderElement& s) {
  if (s.is_zero()) throw Error(ErrorKind::InvalidArgument, "saturation by zero");
  const OIdeal by = OIdeal::principal(ideal.order(), s);
  OIdeal cur = ideal;
  for (int step = 0; step < kSaturationCap; ++step) {
    OIdeal next = colon(cur, by);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw Error(ErrorKind::Internal, "saturation did not stabilize within the iteration cap");
}

Integer ideal_norm(const OIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorKind::InvalidArgument, "norm of the zero ideal");
  return lattice::pivot_product(ideal.basis());
}

std::optional<OrderElement> is_principal(const OIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorKind::InvalidArgument, "principality of the zero ideal");
  const Order& order = ideal.order();
  for (const auto& alpha : order.elements_of_norm(ideal_norm(ideal)))
    if (ideal.contains(alpha)) return alpha;
  return std::nullopt;
}

}  // namespace psmod
