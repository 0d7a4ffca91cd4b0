#include "psmod/modules.hpp"

#include "psmod/arith.hpp"
#include "psmod/error.hpp"

#include <algorithm>

namespace psmod {

namespace {

void require_order_domain(const Domain& d) {
  if (!d.is_order() && d.kind() != DomainKind::PolyOverRationals)
    throw Error(ErrorKind::Unsupported,
                "f.g. modules are built over Z, Z[w] or Q[x]; use a localized view for " +
                    d.to_string());
}

lattice::Rows transpose(const lattice::Rows& rows, size_t ncols) {
  lattice::Rows out(ncols, lattice::Vec(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < ncols; ++j) out[j][i] = rows[i][j];
  return out;
}

Integer dot(const lattice::Vec& a, const lattice::Vec& b) {
  Integer s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Rows spanning the A-submodule A*x of the coordinate lattice.
lattice::Rows cyclic_rows(const FgModule& m, const Vector& x) {
  const Order& o = m.domain().order();
  lattice::Rows rows{m.coords(x)};
  if (o.degree() == 2) {
    Vector wx;
    for (const auto& e : x) wx.push_back(o.mul(o.omega(), e.order_element()));
    rows.push_back(m.coords(wx));
  }
  return rows;
}

lattice::Rows scaled_lattice(const FgModule& m, const OrderElement& a) {
  const Order& o = m.domain().order();
  lattice::Rows rows;
  for (const auto& v : m.basis_vectors()) {
    Vector av;
    for (const auto& e : v) av.push_back(o.mul(a, e.order_element()));
    rows.push_back(m.coords(av));
  }
  return lattice::hnf(std::move(rows), m.ambient_rank() * o.degree());
}

/// { t in A : t*x in a*M } for a base vector x.
OIdeal base_colon(const FgModule& m, const OrderElement& a, const std::vector<OrderElement>& x) {
  const Order& o = m.domain().order();
  const size_t ncols = m.ambient_rank() * o.degree();
  Vector xv(x.begin(), x.end());
  const lattice::Rows images = cyclic_rows(m, xv);
  const lattice::Rows target = scaled_lattice(m, a);
  return OIdeal::from_lattice(o, lattice::preimage(images, target, ncols));
}

std::vector<OrderElement> base_vector(const Vector& v) {
  std::vector<OrderElement> out;
  for (const auto& e : v) out.push_back(e.order_element());
  return out;
}

/// Scalar of A or A_S as (numerator, denominator exponents).
Fraction as_fraction(const LocModuleView& m, const Element& a) {
  if (a.is_order_element())
    return Fraction{a.order_element(), std::vector<unsigned>(m.s_generators().size(), 0)};
  m.localized().check(a);
  return a.fraction();
}

OrderElement s_power(const Domain& loc, unsigned k) {
  return loc.order().pow(loc.s_product(), k);
}

std::optional<Vector> loc_divide(const LocModuleView& m, const Element& a, const Vector& v) {
  const Domain& loc = m.localized();
  const Order& o = loc.order();
  const Fraction fa = as_fraction(m, a);
  if (fa.num.is_zero()) throw Error(ErrorKind::InvalidDivisor, "division by zero");
  auto [numer, sigma] = m.numerator_form(v);
  const OIdeal colon = base_colon(m.base(), fa.num, numer);
  if (!saturation(colon, loc.s_product()).is_unit_ideal()) return std::nullopt;
  for (unsigned k = 0; k <= static_cast<unsigned>(kSaturationCap); ++k) {
    const OrderElement sk = s_power(loc, k);
    if (!colon.contains(sk)) continue;
    std::vector<unsigned> exps = sigma;
    for (auto& e : exps) e += k;
    const OrderElement beta = loc.monomial_value(fa.exps);
    Vector z;
    for (const auto& xi : numer) {
      const OrderElement w = o.quotient_or_throw(o.mul(sk, xi), fa.num);
      z.push_back(loc.reduce(Fraction{o.mul(w, beta), exps}));
    }
    return z;
  }
  throw Error(ErrorKind::Internal, "saturated colon without a witnessing power");
}

std::vector<Element> coordinate_common_divisors(const Domain& d, const Vector& x) {
  std::vector<Element> nonzero;
  for (const auto& e : x)
    if (!d.is_zero(e)) nonzero.push_back(e);
  if (nonzero.empty()) throw Error(ErrorKind::InvalidArgument, "zero vector has no divisors");
  std::vector<Element> out;
  for (const auto& t : divisors_up_to_units(d, nonzero.front())) {
    bool all = std::all_of(nonzero.begin() + 1, nonzero.end(),
                           [&](const Element& e) { return divides(d, t, e); });
    if (all) out.push_back(t);
  }
  return out;
}

void require_member_nonzero(const Vector& x, const Module& m) {
  check_vector(m, x);
  if (is_zero_vector(m, x)) throw Error(ErrorKind::InvalidArgument, "x must be nonzero");
  if (!module_membership(x, m)) throw Error(ErrorKind::InvalidArgument, "x is not in M");
}

}  // namespace

FgModule FgModule::from_generators(const Domain& domain, size_t rank, std::vector<Vector> gens) {
  require_order_domain(domain);
  if (rank == 0) throw Error(ErrorKind::InvalidArgument, "ambient rank must be positive");
  FgModule m(domain);
  m.rank_ = rank;
  for (const auto& g : gens) {
    if (g.size() != rank)
      throw Error(ErrorKind::RankMismatch, "generator length " + std::to_string(g.size()) +
                                               " differs from rank " + std::to_string(rank));
    for (const auto& e : g) domain.check(e);
  }
  m.gens_ = std::move(gens);
  if (domain.kind() == DomainKind::PolyOverRationals) {
    if (rank != 1) throw Error(ErrorKind::Unsupported, "modules over Q[x] must have rank 1");
    for (const auto& g : m.gens_) m.qgen_ = gcd(m.qgen_, g[0].poly());
    return m;
  }
  lattice::Rows rows;
  for (const auto& g : m.gens_) {
    for (auto& r : cyclic_rows(m, g)) rows.push_back(std::move(r));
  }
  m.lattice_ = lattice::hnf(std::move(rows), rank * domain.order().degree());
  return m;
}

FgModule FgModule::free(const Domain& domain, size_t rank) {
  std::vector<Vector> gens;
  for (size_t i = 0; i < rank; ++i) {
    Vector e(rank, domain.zero());
    e[i] = domain.one();
    gens.push_back(std::move(e));
  }
  return from_generators(domain, rank, std::move(gens));
}

size_t FgModule::rank() const {
  if (domain_.kind() == DomainKind::PolyOverRationals) return qgen_.is_zero() ? 0 : 1;
  return lattice_.size() / domain_.order().degree();
}

bool FgModule::is_zero() const {
  return domain_.kind() == DomainKind::PolyOverRationals ? qgen_.is_zero() : lattice_.empty();
}

bool FgModule::contains(const Vector& v) const {
  if (v.size() != rank_)
    throw Error(ErrorKind::RankMismatch, "vector length " + std::to_string(v.size()) +
                                             " differs from rank " + std::to_string(rank_));
  if (domain_.kind() == DomainKind::PolyOverRationals) {
    if (qgen_.is_zero()) return v[0].poly().is_zero();
    return divides(domain_, qgen_, v[0]);
  }
  return lattice::contains(lattice_, coords(v));
}

std::vector<Vector> FgModule::basis_vectors() const {
  if (domain_.kind() == DomainKind::PolyOverRationals) {
    if (qgen_.is_zero()) return {};
    return {Vector{Element(qgen_)}};
  }
  std::vector<Vector> out;
  for (const auto& row : lattice_) out.push_back(from_coords(row));
  return out;
}

lattice::Vec FgModule::coords(const Vector& v) const {
  const Order& o = domain_.order();
  lattice::Vec out;
  for (const auto& e : v) {
    domain_.check(e);
    for (auto& c : o.coords(e.order_element())) out.push_back(std::move(c));
  }
  return out;
}

Vector FgModule::from_coords(const lattice::Vec& c) const {
  const Order& o = domain_.order();
  const size_t deg = o.degree();
  Vector out;
  for (size_t i = 0; i < rank_; ++i) {
    lattice::Vec block(c.begin() + static_cast<std::ptrdiff_t>(i * deg),
                       c.begin() + static_cast<std::ptrdiff_t>((i + 1) * deg));
    out.emplace_back(o.from_coords(block));
  }
  return out;
}

bool operator==(const FgModule& a, const FgModule& b) {
  return a.domain_ == b.domain_ && a.rank_ == b.rank_ && a.lattice_ == b.lattice_ &&
         a.qgen_ == b.qgen_;
}

LocModuleView::LocModuleView(FgModule base, std::vector<OrderElement> s_generators)
    : base_(std::move(base)), loc_(Domain::localized(base_.domain(), std::move(s_generators))) {}

std::pair<std::vector<OrderElement>, std::vector<unsigned>> LocModuleView::numerator_form(
    const Vector& v) const {
  const size_t k = s_generators().size();
  std::vector<unsigned> sigma(k, 0);
  for (const auto& e : v) {
    loc_.check(e);
    const auto& exps = e.fraction().exps;
    for (size_t j = 0; j < k; ++j) sigma[j] = std::max(sigma[j], exps[j]);
  }
  std::vector<OrderElement> numer;
  for (const auto& e : v) {
    const Fraction& f = e.fraction();
    std::vector<unsigned> cofactor(k);
    for (size_t j = 0; j < k; ++j) cofactor[j] = sigma[j] - f.exps[j];
    numer.push_back(loc_.order().mul(f.num, loc_.monomial_value(cofactor)));
  }
  return {numer, sigma};
}

const Domain& element_domain(const Module& m) {
  if (const auto* f = std::get_if<FgModule>(&m)) return f->domain();
  return std::get<LocModuleView>(m).localized();
}

const Domain& scalar_domain(const Module& m) {
  if (const auto* f = std::get_if<FgModule>(&m)) return f->domain();
  return std::get<LocModuleView>(m).base().domain();
}

size_t ambient_rank(const Module& m) {
  return std::visit([](const auto& x) { return x.ambient_rank(); }, m);
}

Element to_element_domain(const Module& m, const Element& a) {
  const Domain& d = element_domain(m);
  if (d.is_localized() && a.is_order_element()) return d.embed(a.order_element());
  d.check(a);
  return a;
}

Vector scale(const Module& m, const Element& a, const Vector& v) {
  const Domain& d = element_domain(m);
  const Element s = to_element_domain(m, a);
  Vector out;
  for (const auto& e : v) out.push_back(d.mul(s, e));
  return out;
}

bool vectors_equal(const Module& m, const Vector& v, const Vector& w) {
  const Domain& d = element_domain(m);
  if (v.size() != w.size()) return false;
  for (size_t i = 0; i < v.size(); ++i)
    if (!d.equal(v[i], w[i])) return false;
  return true;
}

bool is_zero_vector(const Module& m, const Vector& v) {
  const Domain& d = element_domain(m);
  return std::all_of(v.begin(), v.end(), [&d](const Element& e) { return d.is_zero(e); });
}

std::string format_vector(const Domain& d, const Vector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += d.format(v[i]);
  }
  return out + ")";
}

void check_vector(const Module& m, const Vector& v) {
  if (v.size() != ambient_rank(m))
    throw Error(ErrorKind::RankMismatch, "vector length " + std::to_string(v.size()) +
                                             " differs from ambient rank " +
                                             std::to_string(ambient_rank(m)));
  for (const auto& e : v) element_domain(m).check(e);
}

bool module_membership(const Vector& v, const Module& m) {
  check_vector(m, v);
  if (const auto* f = std::get_if<FgModule>(&m)) return f->contains(v);
  const auto& view = std::get<LocModuleView>(m);
  return loc_divide(view, view.base().domain().one(), v).has_value();
}

std::optional<Vector> divide_in_module(const Element& a, const Vector& v, const Module& m) {
  check_vector(m, v);
  if (const auto* view = std::get_if<LocModuleView>(&m)) return loc_divide(*view, a, v);
  const auto& f = std::get<FgModule>(m);
  const Domain& d = f.domain();
  if (d.is_zero(a)) throw Error(ErrorKind::InvalidDivisor, "division by zero");
  Vector z;
  for (const auto& e : v) {
    auto q = exact_div(d, a, e);
    if (!q) return std::nullopt;
    z.push_back(std::move(*q));
  }
  if (!f.contains(z)) return std::nullopt;
  return z;
}

OIdeal colon_ideal(const Element& a, const Vector& x, const Module& m) {
  check_vector(m, x);
  if (is_zero_vector(m, x)) throw Error(ErrorKind::InvalidArgument, "colon_ideal: x must be nonzero");
  if (const auto* f = std::get_if<FgModule>(&m)) {
    if (!f->domain().is_order())
      throw Error(ErrorKind::Unsupported, "colon ideals are computed over Z and Z[w] only");
    if (f->domain().is_zero(a))
      throw Error(ErrorKind::InvalidArgument, "colon_ideal: a must be nonzero");
    return base_colon(*f, a.order_element(), base_vector(x));
  }
  const auto& view = std::get<LocModuleView>(m);
  const Fraction fa = as_fraction(view, a);
  if (fa.num.is_zero()) throw Error(ErrorKind::InvalidArgument, "colon_ideal: a must be nonzero");
  auto [numer, sigma] = view.numerator_form(x);
  return saturation(base_colon(view.base(), fa.num, numer), view.localized().s_product());
}

bool is_primitive(const Vector& x, const Module& m) {
  require_member_nonzero(x, m);
  if (const auto* view = std::get_if<LocModuleView>(&m)) {
    if (!view->s_generators().empty()) return false;
    const auto numer = view->numerator_form(x).first;
    return is_primitive(Vector(numer.begin(), numer.end()), Module(view->base()));
  }
  const auto& f = std::get<FgModule>(m);
  if (f.domain().kind() == DomainKind::PolyOverRationals)
    return x[0].poly().degree() == f.basis_vectors()[0][0].poly().degree();
  const size_t ncols = f.ambient_rank() * f.domain().order().degree();
  const lattice::Rows ax = lattice::hnf(cyclic_rows(f, x), ncols);
  // equations cutting out the Q-span of A*x
  const lattice::Rows normals = lattice::kernel(transpose(ax, ncols), ax.size());
  lattice::Rows line_part;
  if (normals.empty()) {
    line_part = f.lattice();
  } else {
    lattice::Rows images;
    for (const auto& row : f.lattice()) {
      lattice::Vec img;
      for (const auto& n : normals) img.push_back(dot(n, row));
      images.push_back(std::move(img));
    }
    for (const auto& lambda : lattice::kernel(images, normals.size())) {
      lattice::Vec y(ncols, Integer(0));
      for (size_t j = 0; j < lambda.size(); ++j) y = lattice::add(y, lattice::scaled(f.lattice()[j], lambda[j]));
      line_part.push_back(std::move(y));
    }
  }
  return lattice::hnf(std::move(line_part), ncols) == ax;
}

bool is_irreducible_element(const Vector& x, const Module& m) {
  require_member_nonzero(x, m);
  if (const auto* view = std::get_if<LocModuleView>(&m)) {
    if (!view->s_generators().empty()) return false;
    const auto numer = view->numerator_form(x).first;
    return is_irreducible_element(Vector(numer.begin(), numer.end()), Module(view->base()));
  }
  const auto& f = std::get<FgModule>(m);
  const Domain& d = f.domain();
  if (d.kind() == DomainKind::PolyOverRationals)
    return x[0].poly().degree() == f.basis_vectors()[0][0].poly().degree();
  for (const auto& t : coordinate_common_divisors(d, x)) {
    if (d.is_unit(t)) continue;
    if (divide_in_module(t, x, m)) return false;
  }
  return true;
}

FgModule direct_sum(const FgModule& a, const FgModule& b) {
  if (!(a.domain() == b.domain()))
    throw Error(ErrorKind::DomainMismatch, "direct_sum: summands over different domains");
  const Domain& d = a.domain();
  const size_t n = a.ambient_rank() + b.ambient_rank();
  std::vector<Vector> gens;
  for (const auto& g : a.generators()) {
    Vector v = g;
    v.resize(n, d.zero());
    gens.push_back(std::move(v));
  }
  for (const auto& g : b.generators()) {
    Vector v(a.ambient_rank(), d.zero());
    v.insert(v.end(), g.begin(), g.end());
    gens.push_back(std::move(v));
  }
  return FgModule::from_generators(d, n, std::move(gens));
}

Module direct_sum(const Module& a, const Module& b) {
  if (a.index() != b.index())
    throw Error(ErrorKind::DomainMismatch, "direct_sum: cannot mix plain and localized modules");
  if (const auto* fa = std::get_if<FgModule>(&a)) return direct_sum(*fa, std::get<FgModule>(b));
  const auto& va = std::get<LocModuleView>(a);
  const auto& vb = std::get<LocModuleView>(b);
  if (!(va.localized() == vb.localized()))
    throw Error(ErrorKind::DomainMismatch, "direct_sum: summands localized at different sets");
  return LocModuleView(direct_sum(va.base(), vb.base()), va.s_generators());
}

}  // namespace psmod
