#include "psmod/order.hpp"

#include "psmod/error.hpp"

#include <algorithm>

namespace psmod {

Order Order::quadratic(long m) {
  if (m < 2)
    throw Error(ErrorKind::InvalidArgument,
                "quadratic order Z[sqrt(-m)] requires m >= 2 (Gaussian integers are excluded)");
  if (!is_squarefree(Integer(m)))
    throw Error(ErrorKind::InvalidArgument, std::to_string(m) + " is not squarefree");
  return Order(m);
}

OrderElement Order::add(const OrderElement& a, const OrderElement& b) const {
  return {a.u + b.u, a.v + b.v};
}

OrderElement Order::sub(const OrderElement& a, const OrderElement& b) const {
  return {a.u - b.u, a.v - b.v};
}

OrderElement Order::neg(const OrderElement& a) const { return {-a.u, -a.v}; }

OrderElement Order::mul(const OrderElement& a, const OrderElement& b) const {
  return {a.u * b.u - m_ * a.v * b.v, a.u * b.v + a.v * b.u};
}

OrderElement Order::pow(const OrderElement& a, unsigned k) const {
  OrderElement r(1);
  OrderElement base = a;
  while (k > 0) {
    if (k & 1U) r = mul(r, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return r;
}

OrderElement Order::conj(const OrderElement& a) const { return {a.u, -a.v}; }

OrderElement Order::omega() const {
  if (is_integers()) throw Error(ErrorKind::DomainMismatch, "Z has no w");
  return {0, 1};
}

Integer Order::norm(const OrderElement& a) const { return a.u * a.u + m_ * a.v * a.v; }

Integer Order::abs_norm(const OrderElement& a) const {
  return is_integers() ? Integer(abs(a.u)) : norm(a);
}

void Order::require_nonzero(const OrderElement& a, const char* what) const {
  if (a.is_zero()) throw Error(ErrorKind::InvalidDivisor, std::string(what) + ": zero divisor");
}

void Order::require_nonzero_nonunit(const OrderElement& a, const char* what) const {
  if (a.is_zero() || is_unit(a))
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + ": argument must be a nonzero nonunit, got " + to_string(a));
}

std::optional<OrderElement> Order::quotient(const OrderElement& b, const OrderElement& a) const {
  require_nonzero(a, "exact_div");
  if (is_integers()) {
    if (!mpz_divisible_p(b.u.get_mpz_t(), a.u.get_mpz_t())) return std::nullopt;
    return OrderElement(Integer(b.u / a.u));
  }
  const Integer n = norm(a);
  const OrderElement num = mul(b, conj(a));
  if (!mpz_divisible_p(num.u.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.v.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  return OrderElement(Integer(num.u / n), Integer(num.v / n));
}

OrderElement Order::quotient_or_throw(const OrderElement& b, const OrderElement& a) const {
  auto q = quotient(b, a);
  if (!q)
    throw Error(ErrorKind::InvalidArgument, to_string(a) + " does not divide " + to_string(b));
  return *q;
}

bool Order::divides(const OrderElement& a, const OrderElement& b) const {
  return quotient(b, a).has_value();
}

bool Order::is_unit(const OrderElement& a) const { return abs_norm(a) == 1; }

OrderElement Order::normalize(const OrderElement& a) const {
  if (a.u < 0 || (a.u == 0 && a.v < 0)) return neg(a);
  return a;
}

bool Order::associates(const OrderElement& a, const OrderElement& b) const {
  return normalize(a) == normalize(b);
}

bool Order::less(const OrderElement& a, const OrderElement& b) const {
  const Integer na = abs_norm(a);
  const Integer nb = abs_norm(b);
  if (na != nb) return na < nb;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

lattice::Vec Order::coords(const OrderElement& a) const {
  if (is_integers()) return {a.u};
  return {a.u, a.v};
}

OrderElement Order::from_coords(const lattice::Vec& c) const {
  if (is_integers()) return OrderElement(c.at(0));
  return OrderElement(c.at(0), c.at(1));
}

lattice::Rows Order::multiplication_rows(const OrderElement& a) const {
  if (is_integers()) return {coords(a)};
  return {coords(a), coords(mul(a, omega()))};
}

std::vector<OrderElement> Order::elements_of_norm(const Integer& n) const {
  std::vector<OrderElement> out;
  if (n <= 0) return out;
  if (is_integers()) {
    out.emplace_back(n);
    return out;
  }
  const Integer vmax = isqrt(n / m_);
  for (Integer v = 0; v <= vmax; ++v) {
    Integer u;
    if (!is_square(n - m_ * v * v, &u)) continue;
    for (const OrderElement& cand : {OrderElement(u, v), OrderElement(u, Integer(-v))}) {
      OrderElement rep = normalize(cand);
      if (std::find(out.begin(), out.end(), rep) == out.end()) out.push_back(rep);
    }
  }
  std::sort(out.begin(), out.end(),
            [this](const OrderElement& a, const OrderElement& b) { return less(a, b); });
  return out;
}

std::vector<OrderElement> Order::elements_up_to_norm(const Integer& bound) const {
  std::vector<OrderElement> out;
  if (is_integers()) {
    for (Integer k = 1; k <= bound; ++k) out.emplace_back(k);
    return out;
  }
  const Integer vmax = bound >= 0 ? isqrt(bound / m_) : Integer(-1);
  for (Integer v = -vmax; v <= vmax; ++v) {
    const Integer rest = bound - m_ * v * v;
    if (rest < 0) continue;
    const Integer umax = isqrt(rest);
    for (Integer u = 0; u <= umax; ++u) {
      if (u == 0 && v <= 0) continue;
      out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end(),
            [this](const OrderElement& a, const OrderElement& b) { return less(a, b); });
  return out;
}

std::vector<OrderElement> Order::divisors_up_to_units(const OrderElement& a) const {
  if (a.is_zero()) throw Error(ErrorKind::InvalidArgument, "divisors of zero are not enumerable");
  std::vector<OrderElement> out;
  for (const Integer& n : positive_divisors(abs_norm(a)))
    for (const OrderElement& d : elements_of_norm(n))
      if (divides(d, a)) out.push_back(d);
  return out;
}

std::vector<OrderElement> Order::common_divisors(const OrderElement& a,
                                                 const OrderElement& b) const {
  if (a.is_zero() || b.is_zero())
    throw Error(ErrorKind::InvalidArgument, "common_divisors requires nonzero arguments");
  std::vector<OrderElement> out;
  for (const OrderElement& d : divisors_up_to_units(a))
    if (divides(d, b)) out.push_back(d);
  return out;
}

bool Order::is_coprime(const OrderElement& a, const OrderElement& b) const {
  for (const OrderElement& d : common_divisors(a, b))
    if (!is_unit(d)) return false;
  return true;
}

OrderElement Order::mcd(const OrderElement& a, const OrderElement& b) const {
  OrderElement d(1);
  OrderElement ra = a;
  OrderElement rb = b;
  for (;;) {
    const auto common = common_divisors(ra, rb);
    auto it = std::find_if(common.begin(), common.end(),
                           [this](const OrderElement& t) { return !is_unit(t); });
    if (it == common.end()) break;
    d = mul(d, *it);
    ra = quotient_or_throw(ra, *it);
    rb = quotient_or_throw(rb, *it);
  }
  if (!is_coprime(ra, rb)) throw Error(ErrorKind::Internal, "mcd postcondition violated");
  return normalize(d);
}

bool Order::is_atom(const OrderElement& a) const {
  require_nonzero_nonunit(a, "is_atom");
  for (const OrderElement& d : divisors_up_to_units(a))
    if (!is_unit(d) && !associates(d, a)) return false;
  return true;
}

bool Order::is_prime_element(const OrderElement& a) const {
  require_nonzero_nonunit(a, "is_prime_element");
  return ResidueRing(*this, a).is_integral_domain();
}

std::vector<OrderElement> Order::factor_into_atoms(const OrderElement& a) const {
  require_nonzero_nonunit(a, "factor_into_atoms");
  for (const OrderElement& d : divisors_up_to_units(a)) {
    if (is_unit(d) || associates(d, a)) continue;
    auto left = factor_into_atoms(d);
    auto right = factor_into_atoms(quotient_or_throw(a, d));
    left.insert(left.end(), right.begin(), right.end());
    std::sort(left.begin(), left.end(),
              [this](const OrderElement& x, const OrderElement& y) { return less(x, y); });
    return left;
  }
  return {normalize(a)};
}

std::string Order::to_string(const OrderElement& a) const {
  if (a.v == 0) return a.u.get_str();
  std::string w;
  if (a.v == 1)
    w = "w";
  else if (a.v == -1)
    w = "-w";
  else
    w = a.v.get_str() + "w";
  if (a.u == 0) return w;
  return a.u.get_str() + (a.v > 0 ? "+" : "") + w;
}

ResidueRing::ResidueRing(const Order& order, const OrderElement& modulus) : order_(order) {
  if (modulus.is_zero()) throw Error(ErrorKind::InvalidArgument, "residue ring modulo zero");
  lattice::Rows gens = order.multiplication_rows(modulus);
  basis_ = lattice::hnf(std::move(gens), order.degree());
  size_ = lattice::pivot_product(basis_);
}

OrderElement ResidueRing::reduce(const OrderElement& x) const {
  lattice::Vec c = order_.coords(x);
  for (size_t i = 0; i < basis_.size(); ++i) {
    const Integer q = floor_div(c[i], basis_[i][i]);
    for (size_t k = i; k < c.size(); ++k) c[k] -= q * basis_[i][k];
  }
  return order_.from_coords(c);
}

OrderElement ResidueRing::mul(const OrderElement& x, const OrderElement& y) const {
  return reduce(order_.mul(x, y));
}

bool ResidueRing::is_zero(const OrderElement& x) const { return reduce(x).is_zero(); }

Integer ResidueRing::characteristic() const {
  if (order_.is_integers()) return basis_[0][0];
  Integer g;
  mpz_gcd(g.get_mpz_t(), basis_[0][1].get_mpz_t(), basis_[1][1].get_mpz_t());
  return basis_[0][0] * (basis_[1][1] / g);
}

std::vector<OrderElement> ResidueRing::elements() const {
  std::vector<OrderElement> out;
  if (order_.is_integers()) {
    for (Integer u = 0; u < basis_[0][0]; ++u) out.emplace_back(u);
    return out;
  }
  for (Integer u = 0; u < basis_[0][0]; ++u)
    for (Integer v = 0; v < basis_[1][1]; ++v) out.emplace_back(u, v);
  return out;
}

bool ResidueRing::is_integral_domain() const {
  if (size_ == 1) return false;
  const Integer p = characteristic();
  // a finite domain is a field of prime characteristic
  if (!is_prime(p)) return false;
  if (size_ == p) return true;
  // size p^2 and characteristic p: the ring is F_p[w]/(w^2 + m), and
  // multiplication by u + w is singular iff u^2 + m = 0 mod p
  for (Integer u = 0; u < p; ++u)
    if (is_zero(order_.mul(OrderElement(u, 1), OrderElement(Integer(-u), 1)))) return false;
  return true;
}

}  // namespace psmod
