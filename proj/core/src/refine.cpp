#include "psmod/refine.hpp"

#include "psmod/arith.hpp"
#include "psmod/error.hpp"

#include <algorithm>
#include <functional>

namespace psmod {

namespace {

constexpr int kReductionCap = 256;

bool is_unsupported_enumeration(const Error& e) {
  return e.kind() == ErrorKind::UnsupportedEnumeration;
}

std::optional<Element> nonunit_common_divisor(const Domain& s, const Element& a, const Element& b) {
  if (s.kind() == DomainKind::PolyOverRationals) {
    RatPoly g = gcd(a.poly(), b.poly());
    if (g.degree() > 0) return Element(g);
    return std::nullopt;
  }
  for (const auto& t : common_divisors(s, a, b))
    if (!s.is_unit(t)) return t;
  return std::nullopt;
}

/// A scalar of `s` from a divisor representative of the element domain.
Element as_scalar(const Domain& s, const Element& t) {
  if (s.is_order() && !t.is_order_element()) return t.fraction().num;
  return t;
}

std::optional<Element> common_module_factor(const Instance& inst, const Vector& x,
                                             const Vector& y) {
  const Domain& ed = element_domain(inst.module);
  if (ed.kind() == DomainKind::PolyOverRationals) return std::nullopt;
  auto first = std::find_if(x.begin(), x.end(), [&ed](const Element& e) { return !ed.is_zero(e); });
  for (const auto& rep : divisors_up_to_units(ed, *first)) {
    if (ed.is_unit(rep)) continue;
    const Element t = as_scalar(inst.scalars, rep);
    if (inst.scalars.is_unit(t)) continue;
    if (divide_in_module(t, x, inst.module) && divide_in_module(t, y, inst.module)) return t;
  }
  return std::nullopt;
}

std::optional<Element> cross_factor(const Instance& inst, const Element& scalar,
                                    const Vector& v) {
  const Domain& s = inst.scalars;
  if (s.is_unit(scalar)) return std::nullopt;
  for (const auto& t : divisors_up_to_units(s, scalar)) {
    if (s.is_unit(t)) continue;
    if (divide_in_module(t, v, inst.module)) return t;
  }
  return std::nullopt;
}

Certificate unknown(const std::string& why) {
  Certificate c;
  c.outcome = Outcome::Unknown;
  c.bounds = why;
  return c;
}

Certificate decide(const Instance& inst, bool descending) {
  const Domain& s = inst.scalars;
  std::vector<Element> candidates;
  try {
    candidates = common_divisors(s, inst.a, inst.b);
  } catch (const Error& e) {
    if (is_unsupported_enumeration(e)) return unknown(e.what());
    throw;
  }
  if (descending) std::reverse(candidates.begin(), candidates.end());
  Certificate cert;
  cert.outcome = Outcome::NotRefinable;
  for (const auto& t : candidates) {
    const Vector tx = scale(inst.module, t, inst.x);
    auto z = divide_in_module(inst.b, tx, inst.module);
    CandidateRecord rec{t, z.has_value(), z ? "t*x in b*M" : "t*x not in b*M"};
    cert.candidates.push_back(std::move(rec));
    if (z) {
      Refinement r{t, quotient(s, inst.b, t), quotient(s, inst.a, t), std::move(*z)};
      if (!verify(inst, r)) throw Error(ErrorKind::Internal, "engine produced an invalid table");
      cert.outcome = Outcome::Found;
      cert.refinement = std::move(r);
      return cert;
    }
  }
  return cert;
}

using Divides = std::function<bool(const OrderElement&)>;

/// n = n1*n2 with first(n1) and second(n2), n1 running over divisor classes.
std::optional<std::pair<OrderElement, OrderElement>> split(const Order& o, const OrderElement& n,
                                                           const Divides& first,
                                                           const Divides& second) {
  for (const auto& n1 : o.divisors_up_to_units(n)) {
    const OrderElement n2 = o.quotient_or_throw(n, n1);
    if (first(n1) && second(n2)) return std::make_pair(n1, n2);
  }
  return std::nullopt;
}

[[noreturn]] void not_primal(const std::string& what, const std::string& pair) {
  throw Error(ErrorKind::NotPrimal, what + " admits no split along " + pair);
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Found: return "found";
    case Outcome::NotRefinable: return "not_refinable";
    case Outcome::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Reduction::Kind k) {
  switch (k) {
    case Reduction::Kind::CommonAB: return "a,b";
    case Reduction::Kind::CommonXY: return "x,y";
    case Reduction::Kind::CommonAY: return "a,y";
    case Reduction::Kind::CommonBX: return "b,x";
  }
  return "";
}

Instance make_instance(const Domain& scalars, Module module, Element a, Element b, Vector x,
                       Vector y) {
  const bool fits = scalars == scalar_domain(module) ||
                    (std::holds_alternative<LocModuleView>(module) &&
                     scalars == std::get<LocModuleView>(module).localized());
  if (!fits)
    throw Error(ErrorKind::DomainMismatch,
                "scalars " + scalars.to_string() + " do not act on the given module");
  scalars.check(a);
  scalars.check(b);
  check_vector(module, x);
  check_vector(module, y);
  if (scalars.is_zero(a) || scalars.is_zero(b))
    throw Error(ErrorKind::InvalidArgument, "instance scalars a and b must be nonzero");
  if (is_zero_vector(module, x) || is_zero_vector(module, y))
    throw Error(ErrorKind::InvalidArgument, "instance elements x and y must be nonzero");
  if (!module_membership(x, module) || !module_membership(y, module))
    throw Error(ErrorKind::InvalidArgument, "instance elements x and y must lie in the module");
  if (!vectors_equal(module, scale(module, a, x), scale(module, b, y)))
    throw Error(ErrorKind::InvalidArgument, "a*x differs from b*y");
  return Instance{scalars, std::move(module), std::move(a), std::move(b), std::move(x),
                  std::move(y)};
}

Instance make_instance(Module module, Element a, Element b, Vector x, Vector y) {
  const Domain scalars = scalar_domain(module);
  return make_instance(scalars, std::move(module), std::move(a), std::move(b), std::move(x),
                       std::move(y));
}

bool verify(const Instance& inst, const Refinement& r) {
  const Domain& s = inst.scalars;
  const Module& m = inst.module;
  return s.equal(inst.a, s.mul(r.c, r.e)) && s.equal(inst.b, s.mul(r.c, r.d)) &&
         vectors_equal(m, inst.x, scale(m, r.d, r.z)) &&
         vectors_equal(m, inst.y, scale(m, r.e, r.z));
}

Reduced reduce_instance(const Instance& inst, const ReduceOptions& opts) {
  Reduced out{inst, {}};
  Instance& cur = out.instance;
  const Domain& s = cur.scalars;
  for (int step = 0; step < kReductionCap; ++step) {
    try {
      if (auto t = nonunit_common_divisor(s, cur.a, cur.b)) {
        cur.a = quotient(s, cur.a, *t);
        cur.b = quotient(s, cur.b, *t);
        out.log.push_back({Reduction::Kind::CommonAB, *t});
        continue;
      }
      if (auto t = common_module_factor(cur, cur.x, cur.y)) {
        cur.x = *divide_in_module(*t, cur.x, cur.module);
        cur.y = *divide_in_module(*t, cur.y, cur.module);
        out.log.push_back({Reduction::Kind::CommonXY, *t});
        continue;
      }
      if (opts.cross_cancel && s.enumerates_divisors()) {
        if (auto t = cross_factor(cur, cur.a, cur.y)) {
          cur.a = quotient(s, cur.a, *t);
          cur.y = *divide_in_module(*t, cur.y, cur.module);
          out.log.push_back({Reduction::Kind::CommonAY, *t});
          continue;
        }
        if (auto t = cross_factor(cur, cur.b, cur.x)) {
          cur.b = quotient(s, cur.b, *t);
          cur.x = *divide_in_module(*t, cur.x, cur.module);
          out.log.push_back({Reduction::Kind::CommonBX, *t});
          continue;
        }
      }
    } catch (const Error& e) {
      if (!is_unsupported_enumeration(e)) throw;
    }
    return out;
  }
  throw Error(ErrorKind::Internal, "reduction did not terminate");
}

Refinement lift(const Domain& scalars, const Module& m, const std::vector<Reduction>& log,
                Refinement r) {
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    switch (it->kind) {
      case Reduction::Kind::CommonAB: r.c = scalars.mul(r.c, it->t); break;
      case Reduction::Kind::CommonXY: r.z = scale(m, it->t, r.z); break;
      case Reduction::Kind::CommonAY: r.e = scalars.mul(r.e, it->t); break;
      case Reduction::Kind::CommonBX: r.d = scalars.mul(r.d, it->t); break;
    }
  }
  return r;
}

Certificate find_refinement(const Instance& inst, const FindOptions& opts) {
  if (!opts.reduce) return decide(inst, opts.descending);
  Reduced red = reduce_instance(inst, opts.reduce_options);
  Certificate cert = decide(red.instance, opts.descending);
  if (cert.outcome == Outcome::Found) {
    cert.refinement = lift(inst.scalars, inst.module, red.log, *cert.refinement);
    if (!verify(inst, *cert.refinement))
      throw Error(ErrorKind::Internal, "lifted refinement fails verification");
  } else if (cert.outcome == Outcome::NotRefinable) {
    cert = decide(inst, opts.descending);
  }
  cert.reductions = std::move(red.log);
  return cert;
}

Certificate ufd_fast_path(const Instance& inst) {
  const Domain& s = inst.scalars;
  if (!s.flags().is_ufd)
    throw Error(ErrorKind::Unsupported, s.to_string() + " is not flagged as a UFD");
  Element c = s.one();
  if (s.kind() == DomainKind::PolyOverRationals) {
    c = gcd(inst.a.poly(), inst.b.poly());
  } else if (!s.is_unit(inst.a)) {
    Element rest = inst.b;
    for (const auto& p : factor_into_atoms(s, inst.a)) {
      if (auto q = exact_div(s, p, rest)) {
        c = s.mul(c, p);
        rest = *q;
      }
    }
  }
  const Element d = quotient(s, inst.b, c);
  const Element e = quotient(s, inst.a, c);
  Certificate cert;
  auto z = divide_in_module(d, inst.x, inst.module);
  cert.candidates.push_back({c, z.has_value(), z ? "t*x in b*M" : "t*x not in b*M"});
  if (!z) {
    cert.outcome = Outcome::NotRefinable;
    return cert;
  }
  Refinement r{c, d, e, std::move(*z)};
  if (!verify(inst, r)) throw Error(ErrorKind::Internal, "fast path produced an invalid table");
  cert.outcome = Outcome::Found;
  cert.refinement = std::move(r);
  return cert;
}

Instance localize(const Instance& inst, const std::vector<OrderElement>& s_generators) {
  const auto* fg = std::get_if<FgModule>(&inst.module);
  if (!fg || !inst.scalars.is_order())
    throw Error(ErrorKind::Unsupported, "localize expects an instance over Z or Z[w]");
  LocModuleView view(*fg, s_generators);
  const Domain loc = view.localized();
  auto embed = [&loc](const Vector& v) {
    Vector out;
    for (const auto& e : v) out.push_back(loc.embed(e.order_element()));
    return out;
  };
  return make_instance(loc, view, loc.embed(inst.a.order_element()),
                       loc.embed(inst.b.order_element()), embed(inst.x), embed(inst.y));
}

Refinement nagata_lift(const Refinement& over_as, const Instance& inst,
                       const std::vector<OrderElement>& s_generators) {
  const auto* fg = std::get_if<FgModule>(&inst.module);
  if (!fg || !inst.scalars.is_order())
    throw Error(ErrorKind::Unsupported, "nagata_lift expects an instance over Z or Z[w]");
  const Domain& a_dom = inst.scalars;
  const Order& o = a_dom.order();
  const Module& m = inst.module;
  std::vector<OrderElement> gens;
  for (const auto& g : s_generators)
    if (!o.is_unit(g)) gens.push_back(g);
  if (gens.empty()) {
    if (!verify(inst, over_as))
      throw Error(ErrorKind::InvalidArgument, "the given table does not refine the instance");
    return over_as;
  }

  const Instance linst = localize(inst, gens);
  if (!verify(linst, over_as))
    throw Error(ErrorKind::InvalidArgument, "the given table does not refine the instance over A_S");
  const Domain& loc = linst.scalars;
  const auto& view = std::get<LocModuleView>(linst.module);
  const OrderElement sprod = loc.s_product();
  auto fmt = [&o](const OrderElement& e) { return o.to_string(e); };
  auto vfmt = [&a_dom](const Vector& v) { return format_vector(a_dom, v); };
  auto in_m = [&](const OrderElement& k, const Vector& v) {
    return divide_in_module(Element(k), v, m).has_value();
  };
  auto mdiv = [&](const Vector& v, const OrderElement& k) {
    return *divide_in_module(Element(k), v, m);
  };

  // Move the denominators of c and e onto d and z so that a = a1*a2 in A.
  const Fraction& fc = over_as.c.fraction();
  const Fraction& fe = over_as.e.fraction();
  const OrderElement r = o.mul(loc.monomial_value(fc.exps), loc.monomial_value(fe.exps));
  auto rs = split(o, r, [&](const OrderElement& r1) { return o.divides(r1, fc.num); },
                  [&](const OrderElement& r2) { return o.divides(r2, fe.num); });
  if (!rs) not_primal("r = " + fmt(r), "(" + fmt(fc.num) + ", " + fmt(fe.num) + ")");
  const OrderElement a1 = o.quotient_or_throw(fc.num, rs->first);
  const OrderElement a2 = o.quotient_or_throw(fe.num, rs->second);
  const Element dprime = quotient(loc, linst.b, loc.embed(a1));
  const Vector zprime = *divide_in_module(dprime, linst.x, linst.module);

  // d' = b1/s and z' = zn/t with zn in M
  const OrderElement b1 = dprime.fraction().num;
  const OrderElement s = loc.monomial_value(dprime.fraction().exps);
  auto [znum, texps] = view.numerator_form(zprime);
  Vector zn(znum.begin(), znum.end());
  OrderElement t = loc.monomial_value(texps);
  for (int k = 0; !fg->contains(zn); ++k) {
    if (k == kSaturationCap) throw Error(ErrorKind::Internal, "no S-multiple of z lies in M");
    for (auto& e : zn) e = o.mul(sprod, e.order_element());
    t = o.mul(t, sprod);
  }

  auto ss = split(o, s, [&](const OrderElement& s1) { return o.divides(s1, b1); },
                  [&](const OrderElement& s2) { return in_m(s2, zn); });
  if (!ss) not_primal("s = " + fmt(s), "(b1 = " + fmt(b1) + ", z = " + vfmt(zn) + ")");
  const auto [s1, s2] = *ss;
  const OrderElement b1s1 = o.quotient_or_throw(b1, s1);
  auto s34 = split(o, s2, [&](const OrderElement& s3) { return o.divides(s3, b1s1); },
                   [&](const OrderElement& s4) { return o.divides(s4, a1); });
  if (!s34) not_primal("s2 = " + fmt(s2), "(b1/s1 = " + fmt(b1s1) + ", a1 = " + fmt(a1) + ")");
  const auto [s3, s4] = *s34;
  const OrderElement c1 = o.quotient_or_throw(a1, s4);
  const OrderElement d = o.quotient_or_throw(b1s1, s3);
  const OrderElement c2 = o.mul(a2, s4);
  const Vector zz = mdiv(zn, s4);

  auto ts = split(o, t, [&](const OrderElement& t1) { return o.divides(t1, d); },
                  [&](const OrderElement& t2) { return in_m(t2, zz); });
  if (!ts) not_primal("t = " + fmt(t), "(d = " + fmt(d) + ", z = " + vfmt(zz) + ")");
  const auto [t1, t2] = *ts;
  const Vector z2 = mdiv(zz, t2);
  auto t34 = split(o, t1, [&](const OrderElement& t3) { return o.divides(t3, c2); },
                   [&](const OrderElement& t4) { return in_m(t4, z2); });
  if (!t34) not_primal("t1 = " + fmt(t1), "(c2 = " + fmt(c2) + ", z/t2 = " + vfmt(z2) + ")");
  const auto [t3, t4] = *t34;

  Refinement out{o.mul(c1, t3), o.quotient_or_throw(d, t3), o.quotient_or_throw(c2, t3),
                 mdiv(z2, t4)};
  if (!verify(inst, out)) throw Error(ErrorKind::Internal, "lifted table fails verification");
  return out;
}

Element lcm_via_product_refinement(const Domain& d, const Element& a, const Element& b,
                                   const std::vector<Element>& multiples) {
  if (!d.flags().is_gcd)
    throw Error(ErrorKind::Unsupported, d.to_string() + " is not flagged as a GCD domain");
  if (d.is_zero(a) || d.is_zero(b))
    throw Error(ErrorKind::InvalidArgument, "lcm: a and b must be nonzero");
  if (multiples.empty()) throw Error(ErrorKind::InvalidArgument, "lcm: no multiples given");
  Vector x;
  Vector y;
  for (const auto& f : multiples) {
    auto fa = exact_div(d, a, f);
    auto fb = exact_div(d, b, f);
    if (!fa || !fb)
      throw Error(ErrorKind::InvalidArgument, d.format(f) + " is not a common multiple of " +
                                                  d.format(a) + " and " + d.format(b));
    x.push_back(*fa);
    y.push_back(*fb);
  }
  Module m = FgModule::free(d, multiples.size());
  if (is_zero_vector(m, x)) throw Error(ErrorKind::InvalidArgument, "lcm: all multiples are zero");
  const Instance inst = make_instance(m, a, b, x, y);
  FindOptions opts;
  opts.descending = true;
  const Certificate cert = find_refinement(inst, opts);
  if (cert.outcome != Outcome::Found)
    throw Error(ErrorKind::Internal, "product instance over a GCD domain did not refine");
  Element l = quotient(d, d.mul(a, b), cert.refinement->c);
  if (d.is_order()) l = d.order().normalize(l.order_element());
  if (!divides(d, a, l) || !divides(d, b, l) ||
      !std::all_of(multiples.begin(), multiples.end(),
                   [&](const Element& f) { return divides(d, l, f); }))
    throw Error(ErrorKind::Internal, "lcm postcondition violated");
  return l;
}

Certificate direct_sum_refinement(const Instance& inst, const Module& first,
                                  const Module& second) {
  const size_t n1 = ambient_rank(first);
  if (n1 + ambient_rank(second) != ambient_rank(inst.module))
    throw Error(ErrorKind::RankMismatch, "summand ranks do not add up to the instance rank");
  const Domain& s = inst.scalars;
  const Vector x1(inst.x.begin(), inst.x.begin() + static_cast<std::ptrdiff_t>(n1));
  const Vector x2(inst.x.begin() + static_cast<std::ptrdiff_t>(n1), inst.x.end());
  std::vector<Element> stage1;
  try {
    stage1 = common_divisors(s, inst.a, inst.b);
  } catch (const Error& e) {
    if (is_unsupported_enumeration(e)) return unknown(e.what());
    throw;
  }
  Certificate cert;
  cert.outcome = Outcome::NotRefinable;
  for (const auto& c : stage1) {
    const Element bc = quotient(s, inst.b, c);
    if (!divide_in_module(bc, x1, first)) {
      cert.candidates.push_back({c, false, "(b/c) does not divide x1"});
      continue;
    }
    const Element ac = quotient(s, inst.a, c);
    for (const auto& c2 : common_divisors(s, ac, bc)) {
      if (!divide_in_module(quotient(s, bc, c2), x2, second)) continue;
      const Element t = s.mul(c, c2);
      const Element d = quotient(s, inst.b, t);
      auto z = divide_in_module(d, inst.x, inst.module);
      if (!z) throw Error(ErrorKind::Internal, "componentwise split does not assemble");
      Refinement r{t, d, quotient(s, inst.a, t), std::move(*z)};
      if (!verify(inst, r)) throw Error(ErrorKind::Internal, "componentwise table invalid");
      cert.candidates.push_back({c, true, "stage two found c' = " + s.format(c2)});
      cert.outcome = Outcome::Found;
      cert.refinement = std::move(r);
      return cert;
    }
    cert.candidates.push_back({c, false, "no stage-two divisor"});
  }
  return cert;
}

}  // namespace psmod
