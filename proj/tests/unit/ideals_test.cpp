#include "gen.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace tu;
using psmod::ErrorKind;

namespace {

oracle::Rows oracle_rows(const lattice::Rows& rows) {
  oracle::Rows out;
  for (const auto& r : rows) {
    oracle::Row row;
    for (const auto& e : r) row.push_back(e.get_si());
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST(Ideals, Membership) {
  EXPECT_TRUE(membership(6, ideal(z(), "[2]")));
  const Domain d = quad(5);
  EXPECT_FALSE(membership(3, ideal(d, "[2, 1+w]")));
  // (3, 1+w) and (3, 1-w) are the two distinct primes over 3.
  EXPECT_FALSE(membership(oe(d, "1-w"), ideal(d, "[3, 1+w]")));
  EXPECT_TRUE(membership(oe(d, "1-w"), ideal(d, "[3, 1-w]")));
  EXPECT_TRUE(membership(oe(d, "4+w"), ideal(d, "[3, 1+w]")));
}

TEST(Ideals, Arithmetic) {
  const Domain d = quad(5);
  const OIdeal p = ideal(d, "[2, 1+w]");
  EXPECT_EQ(product(p, p), ideal(d, "[2]"));
  EXPECT_EQ(colon(p, OIdeal::unit(d.order())), p);
  EXPECT_EQ(intersection(ideal(z(), "[4]"), ideal(z(), "[6]")), ideal(z(), "[12]"));
  EXPECT_EQ(sum(ideal(z(), "[4]"), ideal(z(), "[6]")), ideal(z(), "[2]"));
}

TEST(Ideals, Saturation) {
  const Domain d = quad(5);
  EXPECT_EQ(saturation(ideal(d, "[1+w]"), 2), ideal(d, "[3, 1+w]"));
  EXPECT_EQ(saturation(ideal(d, "[1+w]"), -1), ideal(d, "[1+w]"));
  EXPECT_EQ(saturation(ideal(z(), "[12]"), 2), ideal(z(), "[3]"));
  EXPECT_ERROR_KIND(saturation(ideal(z(), "[12]"), 0), ErrorKind::InvalidArgument);
}

TEST(Ideals, NormAndPrincipality) {
  const Domain d = quad(5);
  EXPECT_EQ(ideal_norm(ideal(d, "[3, 1+w]")), 3);
  EXPECT_FALSE(is_principal(ideal(d, "[3, 1+w]")).has_value());
  EXPECT_FALSE(is_principal(ideal(d, "[2, 1+w]")).has_value());
  const Domain e = quad(3);
  const auto g = is_principal(ideal(e, "[2]"));
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(e.order().to_string(*g), "2");
  EXPECT_ERROR_KIND(ideal_norm(ideal(d, "[0]")), ErrorKind::InvalidArgument);
}

TEST(Ideals, HnfMatchesIndependentReduction) {
  for (long m : {0L, 2L, 3L, 5L}) {
    const Domain d = m == 0 ? z() : quad(m);
    const oracle::Ring r(m);
    gen::Rng rng(31 + static_cast<unsigned>(m));
    for (int i = 0; i < 60; ++i) {
      std::vector<OrderElement> gens;
      std::vector<oracle::Q> qs;
      for (long k = rng.range(1, 3); k > 0; --k) {
        gens.push_back(gen::element(rng, d.order(), 60));
        qs.push_back(gen::to_q(gens.back()));
      }
      EXPECT_EQ(oracle_rows(OIdeal::from_generators(d.order(), gens).basis()), r.ideal_lattice(qs));
    }
  }
}

class IdealProperty : public ::testing::TestWithParam<long> {};

TEST_P(IdealProperty, LatticeOrderingAndColon) {
  const Domain d = quad(GetParam());
  const Order& o = d.order();
  gen::Rng rng(41 + static_cast<unsigned>(GetParam()));
  auto rand_ideal = [&] {
    std::vector<OrderElement> g;
    for (long k = rng.range(1, 2); k >= 0; --k) g.push_back(gen::element(rng, o, 50));
    return OIdeal::from_generators(o, g);
  };
  for (int i = 0; i < 60; ++i) {
    const OIdeal a = rand_ideal();
    const OIdeal b = rand_ideal();
    const OIdeal ab = product(a, b);
    const OIdeal meet = intersection(a, b);
    EXPECT_TRUE(meet.contains(ab));
    EXPECT_TRUE(a.contains(meet));
    EXPECT_TRUE(sum(a, b).contains(a));
    EXPECT_TRUE(a.contains(product(colon(a, b), b)));
    // canonical form: adding a combination of generators changes nothing
    auto gens = a.generators();
    gens.push_back(o.add(o.mul(gens.front(), gen::element(rng, o, 10)), gens.back()));
    EXPECT_EQ(OIdeal::from_generators(o, gens), a);
  }
}

TEST_P(IdealProperty, SaturationIdempotentAndPrincipalSound) {
  const Domain d = quad(GetParam());
  const Order& o = d.order();
  gen::Rng rng(43 + static_cast<unsigned>(GetParam()));
  for (int i = 0; i < 60; ++i) {
    const OIdeal a = OIdeal::from_generators(o, {gen::element(rng, o, 80), gen::element(rng, o, 80)});
    const OrderElement s = gen::element(rng, o, 12);
    const OIdeal sat = saturation(a, s);
    EXPECT_EQ(saturation(sat, s), sat);
    if (const auto g = is_principal(a)) { EXPECT_EQ(OIdeal::principal(o, *g), a); }
    const OrderElement x = gen::element(rng, o, 400);
    EXPECT_EQ(ideal_norm(OIdeal::principal(o, x)), o.norm(x));
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, IdealProperty, ::testing::Values(2L, 3L, 5L, 7L));
