#include "psmod/constructions.hpp"

#include "psmod/arith.hpp"
#include "psmod/error.hpp"

#include <algorithm>

namespace psmod {

namespace {

void trim(OPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

/// All coefficient elements u + v*w with |u|, |v| <= h.
std::vector<OrderElement> coefficient_box(const Order& o, long h) {
  std::vector<OrderElement> out;
  const long vmax = o.is_integers() ? 0 : h;
  for (long u = -h; u <= h; ++u)
    for (long v = -vmax; v <= vmax; ++v) out.emplace_back(Integer(u), Integer(v));
  return out;
}

/// Every nonzero combination sum lambda_i * g_i with lambda_i from `box`.
std::vector<Vector> combinations(const Module& m, const std::vector<Vector>& gens,
                                 const std::vector<OrderElement>& box) {
  const Domain& ed = element_domain(m);
  std::vector<Vector> out;
  std::vector<size_t> idx(gens.size(), 0);
  for (;;) {
    Vector x(ambient_rank(m), ed.zero());
    for (size_t i = 0; i < gens.size(); ++i) {
      const Vector term = scale(m, box[idx[i]], gens[i]);
      for (size_t j = 0; j < x.size(); ++j) x[j] = ed.add(x[j], term[j]);
    }
    if (!is_zero_vector(m, x)) out.push_back(std::move(x));
    size_t k = 0;
    while (k < idx.size() && ++idx[k] == box.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

std::optional<Element> nonunit_scalar_divisor(const FgModule& m, const Vector& x) {
  const Domain& d = m.domain();
  auto first = std::find_if(x.begin(), x.end(), [&d](const Element& e) { return !d.is_zero(e); });
  for (const auto& t : divisors_up_to_units(d, *first)) {
    if (d.is_unit(t)) continue;
    if (divide_in_module(t, x, Module(m))) return t;
  }
  return std::nullopt;
}

}  // namespace

NonprimeAtomReport nonprime_atom_set(const Domain& d, const Integer& norm_bound) {
  if (!d.is_order())
    throw Error(ErrorKind::Unsupported, "nonprime atoms are enumerated over Z and Z[w] only");
  if (norm_bound < 2) throw Error(ErrorKind::InvalidArgument, "norm bound must be at least 2");
  const Order& o = d.order();
  NonprimeAtomReport report{MultiplicativeSet{d, {}, false}, {}};
  for (const auto& a : o.elements_up_to_norm(norm_bound)) {
    if (o.is_unit(a) || !o.is_atom(a)) continue;
    const bool prime = o.is_prime_element(a);
    report.atoms.push_back({a, prime});
    if (!prime) report.set.generators.push_back(a);
  }
  return report;
}

std::vector<SplitVerdict> splitting_check(const MultiplicativeSet& s,
                                          const std::vector<OrderElement>& primes) {
  const Order& o = s.base.order();
  OrderElement prod(1);
  for (const auto& g : s.generators) prod = o.mul(prod, g);
  std::vector<SplitVerdict> out;
  for (const auto& p : primes) {
    const OIdeal pi = OIdeal::principal(o, p);
    OIdeal sat = saturation(pi, prod);
    const bool pass = sat == pi;
    out.push_back({p, pass, std::move(sat)});
  }
  return out;
}

OPoly poly_mul(const Order& o, const OPoly& f, const OPoly& g) {
  if (f.empty() || g.empty()) return {};
  OPoly out(f.size() + g.size() - 1, OrderElement(0));
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) out[i + j] = o.add(out[i + j], o.mul(f[i], g[j]));
  trim(out);
  return out;
}

Content content(const Order& o, const OPoly& f) {
  OPoly p = f;
  trim(p);
  return Content{p, OIdeal::from_generators(o, p)};
}

DedekindMertens dedekind_mertens_exponent(const Order& o, const OPoly& f_in, const OPoly& g_in) {
  OPoly f = f_in;
  OPoly g = g_in;
  trim(f);
  trim(g);
  if (f.empty() || g.empty())
    throw Error(ErrorKind::InvalidArgument, "content exponent needs nonzero polynomials");
  const OIdeal cf = content(o, f).content_ideal;
  const OIdeal cg = content(o, g).content_ideal;
  const OIdeal cfg = content(o, poly_mul(o, f, g)).content_ideal;
  auto sides = [&](unsigned m) {
    return std::make_pair(product(power(cf, m), cfg), product(power(cf, m + 1), cg));
  };
  const unsigned bound = static_cast<unsigned>(g.size());  // deg(g) + 1
  for (unsigned m = 1; m <= bound; ++m) {
    auto [lhs, rhs] = sides(m);
    if (!(lhs == rhs)) continue;
    DedekindMertens out{m, lhs, rhs, false};
    if (m >= 2) {
      auto [pl, pr] = sides(m - 1);
      if (pl == pr) throw Error(ErrorKind::Internal, "content exponent is not minimal");
      out.predecessor_fails = true;
    }
    return out;
  }
  throw Error(ErrorKind::Internal, "no content exponent up to deg(g)+1");
}

Submodule::Submodule(Module ambient, std::vector<Vector> generators)
    : ambient_(std::move(ambient)), gens_(std::move(generators)), den_(1) {
  const Domain& a = scalar_domain(ambient_);
  if (!a.is_order())
    throw Error(ErrorKind::Unsupported, "submodules are tracked over Z and Z[w] only");
  for (const auto& g : gens_)
    if (!module_membership(g, ambient_))
      throw Error(ErrorKind::InvalidArgument,
                  "generator " + format_vector(element_domain(ambient_), g) +
                      " is not in the ambient module");
  const size_t n = ambient_rank(ambient_);
  std::vector<Vector> numer;
  if (const auto* view = std::get_if<LocModuleView>(&ambient_)) {
    const Domain& loc = view->localized();
    std::vector<unsigned> sigma(loc.s_generators().size(), 0);
    for (const auto& g : gens_)
      for (const auto& e : g)
        for (size_t j = 0; j < sigma.size(); ++j)
          sigma[j] = std::max(sigma[j], e.fraction().exps[j]);
    den_ = loc.monomial_value(sigma);
    for (const auto& g : gens_) {
      Vector v;
      for (const auto& e : g) {
        std::vector<unsigned> cof(sigma.size());
        for (size_t j = 0; j < sigma.size(); ++j) cof[j] = sigma[j] - e.fraction().exps[j];
        v.emplace_back(a.order().mul(e.fraction().num, loc.monomial_value(cof)));
      }
      numer.push_back(std::move(v));
    }
  } else {
    numer = gens_;
  }
  numerators_ = FgModule::from_generators(a, n, std::move(numer));
}

bool Submodule::contains(const Vector& v) const {
  check_vector(ambient_, v);
  if (const auto* view = std::get_if<LocModuleView>(&ambient_)) {
    const Domain& loc = view->localized();
    const Element den = loc.embed(den_);
    Vector numer;
    for (const auto& e : v) {
      const Fraction f = loc.mul(den, e).fraction();
      if (std::any_of(f.exps.begin(), f.exps.end(), [](unsigned k) { return k > 0; }))
        return false;
      numer.emplace_back(f.num);
    }
    return numerators_->contains(numer);
  }
  return numerators_->contains(v);
}

bool Submodule::contains(const Submodule& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const Vector& g) { return contains(g); });
}

EnvelopeStep ps_envelope_step(const Submodule& n, const EnvelopeBounds& bounds) {
  const Module& m = n.ambient();
  const Domain& a_dom = scalar_domain(m);
  if (!a_dom.flags().is_weak_gcd)
    throw Error(ErrorKind::Unsupported, a_dom.to_string() + " is not a weak GCD domain");
  const Order& o = a_dom.order();
  std::vector<Element> scalars;
  if (bounds.norm_bound >= 1)
    for (const auto& e : o.elements_up_to_norm(bounds.norm_bound))
      if (!o.is_unit(e)) scalars.emplace_back(e);
  EnvelopeStep out{n, {}, false};
  if (scalars.empty() || bounds.height <= 0 || n.generators().empty()) return out;
  out.searched = true;

  std::vector<Vector> gens = n.generators();
  for (const auto& x : combinations(m, n.generators(), coefficient_box(o, bounds.height))) {
    for (const auto& a : scalars) {
      auto w = divide_in_module(a, x, m);
      if (!w || out.module.contains(*w)) continue;
      for (const auto& b : scalars) {
        if (!is_coprime(a_dom, a, b)) continue;
        if (!n.contains(scale(m, b, *w))) continue;
        out.adjoined.push_back({a, b, x, *w});
        gens.push_back(*w);
        out.module = Submodule(m, gens);
        break;
      }
    }
  }
  return out;
}

Envelope ps_envelope(const Submodule& n, const EnvelopeBounds& bounds) {
  Submodule cur = n;
  for (unsigned i = 0; i < bounds.max_iterations; ++i) {
    EnvelopeStep step = ps_envelope_step(cur, bounds);
    if (!step.searched) return {cur, false, i};
    if (step.adjoined.empty()) return {cur, true, i};
    cur = std::move(step.module);
  }
  return {cur, false, bounds.max_iterations};
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::HoldsOnSample: return "holds_on_sample";
    case Verdict::Refuted: return "refuted";
    case Verdict::Vacuous: return "vacuous";
  }
  return "";
}

ClassifyReport classify_module_sample(const FgModule& m, size_t budget) {
  const Domain& d = m.domain();
  if (!d.is_order())
    throw Error(ErrorKind::Unsupported, "classification samples modules over Z and Z[w] only");
  ClassifyReport report;
  const lattice::Rows& basis = m.lattice();
  if (basis.empty() || budget == 0) return report;
  const Module mod(m);
  const size_t ncols = basis.front().size();
  bool all_primitive = true;
  for (long h = 1; report.sampled < budget; ++h) {
    std::vector<long> c(basis.size(), -h);
    for (;;) {
      const bool on_shell = std::any_of(c.begin(), c.end(), [h](long k) { return k == h || k == -h; });
      if (on_shell) {
        lattice::Vec coords(ncols, Integer(0));
        for (size_t j = 0; j < basis.size(); ++j)
          coords = lattice::add(coords, lattice::scaled(basis[j], Integer(c[j])));
        if (!lattice::is_zero(coords)) {
          const Vector x = m.from_coords(coords);
          Vector atom = x;
          Element cof = d.one();
          while (auto t = nonunit_scalar_divisor(m, atom)) {
            atom = *divide_in_module(*t, atom, mod);
            cof = d.mul(cof, *t);
          }
          const bool prim = is_primitive(atom, mod);
          all_primitive = all_primitive && prim;
          report.witnesses.push_back({x, atom, cof, prim});
          if (++report.sampled == budget) break;
        }
      }
      size_t k = 0;
      while (k < c.size() && ++c[k] > h) c[k++] = -h;
      if (k == c.size()) break;
    }
  }
  report.atomic = Verdict::HoldsOnSample;
  report.factorable = all_primitive ? Verdict::HoldsOnSample : Verdict::Refuted;
  return report;
}

}  // namespace psmod
