#include "gen.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace tu;
using psmod::ErrorKind;

namespace {

std::vector<std::string> set_of(const Domain& d, const NonprimeAtomReport& r) {
  std::vector<std::string> out;
  for (const auto& g : r.set.generators) out.push_back(d.order().to_string(g));
  return out;
}

}  // namespace

TEST(NonprimeAtoms, Examples) {
  EXPECT_EQ(set_of(quad(3), nonprime_atom_set(quad(3), 4)), (std::vector<std::string>{"1-w", "1+w", "2"}));
  const auto five = set_of(quad(5), nonprime_atom_set(quad(5), 9));
  for (const char* a : {"2", "3", "1+w", "1-w"})
    EXPECT_NE(std::find(five.begin(), five.end(), a), five.end()) << a;
  EXPECT_EQ(std::find(five.begin(), five.end(), "w"), five.end());
  EXPECT_TRUE(nonprime_atom_set(z(), 50).set.generators.empty());
  EXPECT_ERROR_KIND(nonprime_atom_set(z(), 1), ErrorKind::InvalidArgument);
}

TEST(NonprimeAtoms, VerdictsMatchResidueRings) {
  for (long m : {3L, 5L, 6L}) {
    const oracle::Ring r(m);
    for (const auto& a : nonprime_atom_set(quad(m), 30).atoms)
      EXPECT_EQ(a.prime, r.is_prime_by_residues(gen::to_q(a.atom))) << m << " " << quad(m).order().to_string(a.atom);
  }
}

TEST(Splitting, Examples) {
  const Domain d = quad(5);
  const MultiplicativeSet s{d, {2, 3, oe(d, "1+w"), oe(d, "1-w")}, false};
  EXPECT_TRUE(splitting_check(s, {oe(d, "w")}).front().pass);
  EXPECT_TRUE(splitting_check({z(), {2}, false}, {3}).front().pass);
  const auto v = splitting_check({d, {2}, false}, {oe(d, "1+w")}).front();
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.saturated, ideal(d, "[3, 1+w]"));
}

TEST(Splitting, PrimesOutsideNonprimeAtomsOfZw3) {
  const Domain d = quad(3);
  const NonprimeAtomReport r = nonprime_atom_set(d, 4);
  std::vector<OrderElement> primes;
  for (const auto& e : d.order().elements_up_to_norm(25))
    if (!d.order().is_unit(e) && d.order().is_prime_element(e)) primes.push_back(e);
  ASSERT_FALSE(primes.empty());
  for (const auto& v : splitting_check(r.set, primes)) {
    EXPECT_TRUE(v.pass) << d.order().to_string(v.p);
  }
}

TEST(DedekindMertens, Examples) {
  const Domain d5 = quad(5);
  const OPoly f = parse_opoly(d5, "2+(1+w)X");
  const OPoly g = parse_opoly(d5, "2+(1-w)X");
  EXPECT_EQ(format_opoly(d5.order(), poly_mul(d5.order(), f, g)), "4+4*X+6*X^2");
  const DedekindMertens r = dedekind_mertens_exponent(d5.order(), f, g);
  EXPECT_EQ(r.m, 1u);
  // c(fg) = (2), so both sides are c(f)(2) = (4, 2+2w).
  EXPECT_EQ(r.lhs, ideal(d5, "[4, 2+2w]"));
  EXPECT_EQ(r.rhs, r.lhs);
  const Domain d3 = quad(3);
  const OPoly h = parse_opoly(d3, "(1+w)+2X");
  EXPECT_EQ(dedekind_mertens_exponent(d3.order(), h, h).m, 1u);
  const OPoly zf = parse_opoly(z(), "6+4X");
  EXPECT_EQ(dedekind_mertens_exponent(z().order(), zf, parse_opoly(z(), "3+9X^2")).m, 1u);
  EXPECT_ERROR_KIND(dedekind_mertens_exponent(z().order(), {}, zf), ErrorKind::InvalidArgument);
}

TEST(DedekindMertens, NonInvertibleContentBreaksGauss) {
  // c(f) = c(g) = (2, 1+w) is not invertible in Z[w,-3]: c(fg) = (4) is
  // strictly smaller than c(f)c(g) = 2(2, 1+w), yet m = 1 already works.
  const Domain d = quad(3);
  const Order& o = d.order();
  const OPoly f = parse_opoly(d, "2+(1+w)X");
  const OPoly g = parse_opoly(d, "2-(1-w)X");
  const OIdeal cfg = content(o, poly_mul(o, f, g)).content_ideal;
  EXPECT_EQ(cfg, ideal(d, "[4]"));
  EXPECT_FALSE(cfg == product(content(o, f).content_ideal, content(o, g).content_ideal));
  const DedekindMertens r = dedekind_mertens_exponent(o, f, g);
  EXPECT_EQ(r.m, 1u);
  EXPECT_EQ(r.lhs, r.rhs);
}

TEST(Envelope, IdentityOverIntegers) {
  const Module m = mod(z(), "rank 2 gens [(1,0),(0,1)]");
  const Submodule n(m, {vec(z(), "(2,4)"), vec(z(), "(0,6)")});
  const Envelope e = ps_envelope(n, {36, 1, 8});
  EXPECT_TRUE(e.stabilized);
  EXPECT_EQ(e.iterations, 0u);
  EXPECT_TRUE(e.module == n);
}

TEST(Envelope, EmptySearchIsNotStable) {
  const Module m = mod(z(), "rank 1 gens [1]");
  const Submodule n(m, {vec(z(), "2")});
  const Envelope e = ps_envelope(n, {0, 0, 8});
  EXPECT_FALSE(e.stabilized);
  EXPECT_TRUE(e.module == n);
}

TEST(Envelope, AdjoinsQuotientInLocalization) {
  const Domain d = quad(5);
  std::vector<OrderElement> s = nonprime_atom_set(d, 9).set.generators;
  const Module m = LocModuleView(FgModule::free(d, 1), s);
  const Domain& l = element_domain(m);
  const Submodule n(m, {vec(l, "1")});
  const EnvelopeStep step = ps_envelope_step(n, {9, 1, 8});
  EXPECT_TRUE(step.module.contains(vec(l, "(1-w)/3")));
  EXPECT_TRUE(step.module.contains(n));
  EXPECT_FALSE(n.contains(vec(l, "(1-w)/3")));
  const bool has_triple = std::any_of(step.adjoined.begin(), step.adjoined.end(), [&](const Adjoined& a) {
    return vectors_equal(m, a.quotient, vec(l, "(1-w)/3"));
  });
  EXPECT_TRUE(has_triple);
  EXPECT_TRUE(is_coprime(d, el(d, "3"), el(d, "1+w")));
}

TEST(Envelope, RejectsForeignGeneratorsAndNonOrders) {
  const Module m = mod(z(), "rank 2 gens [(2,0),(0,2)]");
  EXPECT_ERROR_KIND(Submodule(m, {vec(z(), "(1,0)")}), ErrorKind::InvalidArgument);
  const Domain qx = parse_domain("Q[x]");
  EXPECT_ERROR_KIND(Submodule(mod(qx, "rank 1 gens [1]"), {vec(qx, "x")}), ErrorKind::Unsupported);
}

TEST(Classify, Examples) {
  const FgModule z2 = FgModule::free(z(), 2);
  const ClassifyReport r = classify_module_sample(z2, 50);
  EXPECT_EQ(r.sampled, 50u);
  EXPECT_EQ(r.atomic, Verdict::HoldsOnSample);
  EXPECT_EQ(r.factorable, Verdict::HoldsOnSample);
  for (const auto& w : r.witnesses) { EXPECT_TRUE(w.atom_primitive); }

  const FgModule sub = FgModule::from_generators(z(), 2, {vec(z(), "(2,0)"), vec(z(), "(0,2)")});
  const ClassifyReport s = classify_module_sample(sub, 30);
  for (const auto& w : s.witnesses)
    if (format_vector(z(), w.element) == "(2, 0)") { EXPECT_EQ(format_vector(z(), w.atom), "(2, 0)"); }

  const FgModule zero = FgModule::from_generators(z(), 2, {});
  const ClassifyReport v = classify_module_sample(zero, 10);
  EXPECT_EQ(v.atomic, Verdict::Vacuous);
  EXPECT_EQ(v.factorable, Verdict::Vacuous);
}
