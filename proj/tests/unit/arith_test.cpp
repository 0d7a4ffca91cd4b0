#include "gen.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace tu;
using psmod::ErrorKind;

TEST(Norm, QuadraticFormula) {
  const Domain d = quad(5);
  EXPECT_EQ(norm(d, el(d, "1+w")), 6);
  EXPECT_EQ(norm(d, d.zero()), 0);
  EXPECT_EQ(norm(d, el(d, "2")) * norm(d, el(d, "3")), norm(d, el(d, "6")));
  EXPECT_EQ(norm(d, el(d, "6")), 36);
}

TEST(Norm, OnlyForQuadraticOrders) { EXPECT_ERROR_KIND(norm(z(), el(z(), "3")), ErrorKind::DomainMismatch); }

TEST(Divides, ExactQuotients) {
  const Domain d = quad(5);
  EXPECT_TRUE(divides(d, el(d, "1+w"), el(d, "6")));
  EXPECT_TRUE(d.equal(*exact_div(d, el(d, "1+w"), el(d, "6")), el(d, "1-w")));
  EXPECT_TRUE(divides(d, el(d, "2+w"), d.zero()));
  EXPECT_FALSE(divides(d, el(d, "2"), el(d, "1+w")));
  EXPECT_FALSE(exact_div(d, el(d, "2"), el(d, "1+w")).has_value());
}

TEST(Divides, ZeroDivisorRejected) {
  const Domain d = quad(5);
  EXPECT_ERROR_KIND(divides(d, d.zero(), el(d, "3")), ErrorKind::InvalidDivisor);
  EXPECT_ERROR_KIND(quotient(d, el(d, "2"), el(d, "1+w")), ErrorKind::InvalidArgument);
}

TEST(Divisors, UpToUnits) {
  const Domain d = quad(5);
  EXPECT_EQ(formatted(d, divisors_up_to_units(d, el(d, "2"))), (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(formatted(z(), divisors_up_to_units(z(), el(z(), "6"))),
            (std::vector<std::string>{"1", "2", "3", "6"}));
  EXPECT_EQ(formatted(d, divisors_up_to_units(d, el(d, "6"))),
            (std::vector<std::string>{"1", "2", "1-w", "1+w", "3", "6"}));
}

TEST(Divisors, PolynomialsHaveNoEnumeration) {
  const Domain q = Domain::poly_rationals();
  EXPECT_ERROR_KIND(divisors_up_to_units(q, el(q, "x^2-1")), ErrorKind::UnsupportedEnumeration);
}

TEST(CommonDivisors, CoprimeAndMcd) {
  const Domain d = quad(5);
  EXPECT_TRUE(is_coprime(d, el(d, "3"), el(d, "1+w")));
  EXPECT_FALSE(is_coprime(d, el(d, "2"), el(d, "6")));
  EXPECT_EQ(z().format(mcd(z(), el(z(), "12"), el(z(), "18"))), "6");
  EXPECT_EQ(d.format(mcd(d, el(d, "6"), el(d, "2+2w"))), "2");
}

TEST(Atoms, NonprimeAtomInZw3) {
  const Domain d = quad(3);
  EXPECT_TRUE(is_atom(d, el(d, "2")));
  EXPECT_FALSE(is_prime_element(d, el(d, "2")));
  EXPECT_TRUE(is_atom(d, el(d, "1+w")));
  EXPECT_FALSE(is_prime_element(d, el(d, "1-w")));
}

TEST(Atoms, PrimesAndFactorizations) {
  const Domain d = quad(5);
  EXPECT_TRUE(is_prime_element(d, el(d, "w")));
  EXPECT_EQ(formatted(z(), factor_into_atoms(z(), el(z(), "12"))), (std::vector<std::string>{"2", "2", "3"}));
  const auto f = factor_into_atoms(d, el(d, "6"));
  Element prod = d.one();
  for (const auto& a : f) {
    EXPECT_TRUE(is_atom(d, a));
    prod = d.mul(prod, a);
  }
  EXPECT_TRUE(associates(d, prod, el(d, "6")));
}

TEST(Localized, DivisibilityThroughSaturation) {
  const Domain a = quad(3);
  const Domain l = Domain::localized(a, {oe(a, "2"), oe(a, "1+w"), oe(a, "1-w")});
  EXPECT_TRUE(l.is_unit(el(l, "2")));
  EXPECT_TRUE(l.is_unit(el(l, "(1+w)/4")));
  EXPECT_FALSE(l.is_unit(el(l, "5")));
  EXPECT_TRUE(divides(l, el(l, "1+w"), el(l, "5")));
  EXPECT_FALSE(divides(l, el(l, "5"), el(l, "7")));
  EXPECT_TRUE(l.equal(quotient(l, el(l, "10"), el(l, "5")), el(l, "2")));
  EXPECT_TRUE(is_prime_element(l, el(l, "5")));
}

TEST(Localized, SaturationDecidesMembership) {
  // 3 = (1+w) * 3/(1+w) needs 3/(1+w) = (1-w)/2 in A_S, which holds once 2 is inverted.
  const Domain a = quad(5);
  const Domain l = Domain::localized(a, {oe(a, "2")});
  EXPECT_TRUE(divides(l, el(l, "1+w"), el(l, "3")));
  EXPECT_FALSE(divides(quad(5), el(a, "1+w"), el(a, "3")));
}

class ArithProperty : public ::testing::TestWithParam<long> {};

TEST_P(ArithProperty, ExactDivRoundTrip) {
  const Domain d = GetParam() == 0 ? z() : quad(GetParam());
  gen::Rng rng(11 + static_cast<unsigned>(GetParam()));
  for (int i = 0; i < 300; ++i) {
    const Element a = d.embed(gen::element(rng, d.order(), 200));
    const Element q = d.embed(gen::element(rng, d.order(), 200));
    const auto back = exact_div(d, a, d.mul(a, q));
    ASSERT_TRUE(back.has_value());
    EXPECT_TRUE(d.equal(*back, q));
  }
}

TEST_P(ArithProperty, DivisorListsAreCompleteAndSound) {
  const Domain d = GetParam() == 0 ? z() : quad(GetParam());
  gen::Rng rng(23 + static_cast<unsigned>(GetParam()));
  for (int i = 0; i < 100; ++i) {
    const Element dv = d.embed(gen::element(rng, d.order(), 30));
    const Element q = d.embed(gen::element(rng, d.order(), 30));
    const Element a = d.mul(dv, q);
    const auto divs = divisors_up_to_units(d, a);
    for (const auto& t : divs) { EXPECT_TRUE(divides(d, t, a)); }
    EXPECT_TRUE(std::any_of(divs.begin(), divs.end(), [&](const Element& t) { return associates(d, t, dv); }))
        << d.format(dv) << " missing from divisors of " << d.format(a);
  }
}

TEST_P(ArithProperty, PrimesAreAtomsAndMatchResidueRing) {
  const long m = GetParam();
  const Domain d = m == 0 ? z() : quad(m);
  const oracle::Ring r(m);
  for (const auto& e : d.order().elements_up_to_norm(Integer(40))) {
    if (d.order().is_unit(e)) continue;
    const Element x = d.embed(e);
    const bool prime = is_prime_element(d, x);
    if (prime) { EXPECT_TRUE(is_atom(d, x)) << d.format(x); }
    EXPECT_EQ(prime, r.is_prime_by_residues(gen::to_q(e))) << d.format(x);
  }
}

TEST_P(ArithProperty, McdLeavesCoprimeCofactors) {
  const Domain d = GetParam() == 0 ? z() : quad(GetParam());
  gen::Rng rng(5 + static_cast<unsigned>(GetParam()));
  for (int i = 0; i < 100; ++i) {
    const Element a = d.embed(gen::element(rng, d.order(), 150));
    const Element b = d.embed(gen::element(rng, d.order(), 150));
    const Element g = mcd(d, a, b);
    EXPECT_TRUE(is_coprime(d, quotient(d, a, g), quotient(d, b, g)));
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, ArithProperty, ::testing::Values(0L, 2L, 3L, 5L, 6L));

TEST(NormProperty, MultiplicativeOnRandomPairs) {
  const Domain d = quad(5);
  gen::Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Element a = d.embed(gen::element(rng, d.order(), 10000));
    const Element b = d.embed(gen::element(rng, d.order(), 10000));
    EXPECT_EQ(norm(d, d.mul(a, b)), norm(d, a) * norm(d, b));
  }
}
