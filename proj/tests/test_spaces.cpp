#include <gtest/gtest.h>

#include <random>

#include "dialg/dialg.hpp"
#include "oracles.hpp"

using namespace dialg;

namespace {

Polynomial random_poly(std::mt19937& rng, const MonomialBasis& plain, int terms) {
  std::uniform_int_distribution<std::size_t> pick(0, plain.dimension() - 1);
  std::uniform_int_distribution<int> coef(-4, 4);
  Polynomial p;
  for (int k = 0; k < terms; ++k) p.add(plain.at(pick(rng)), ratio(coef(rng), 1 + static_cast<long>(rng() % 3)));
  return p;
}

}  // namespace

TEST(Dimensions, Formulas) {
  for (std::size_t n = 2; n <= 5; ++n) {
    EXPECT_EQ(make_basis(n, Ambient::Plain).dimension(), catalan(n - 1) * factorial(n));
    EXPECT_EQ(make_basis(n, Ambient::Dialgebra).dimension(), catalan(n - 1) * n * factorial(n));
  }
}

TEST(Dimensions, RightAnticommutativeMatchesQuotient) {
  for (std::size_t n = 2; n <= 5; ++n) {
    IdentityModule ideal(make_basis(n, Ambient::Plain));
    if (n >= 3) add_generator(ideal, library::right_anticommutativity().poly);
    EXPECT_EQ(make_basis(n, Ambient::RightAnticommutative).dimension(), ideal.basis().dimension() - ideal.rank())
        << "degree " << n;
  }
  EXPECT_EQ(ra_degree4_basis().dimension(), 60u);
}

TEST(RaDegreeFour, Sequence) {
  const auto b = ra_degree4_basis();
  ASSERT_EQ(b.dimension(), oracle::kRaDegree4.size());
  for (std::size_t i = 0; i < b.dimension(); ++i) EXPECT_EQ(print_compact(b.at(i)), oracle::kRaDegree4[i]) << i;
  EXPECT_EQ(b.variables(), vars({"a", "b", "c", "d"}));
}

TEST(AssociationTypes, Examples) {
  const auto plain = association_types(4, Ambient::Plain);
  const char* expected[] = {"((ab)c)d", "(a(bc))d", "(ab)(cd)", "a(b(cd))", "a((bc)d)"};
  ASSERT_EQ(plain.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(print_compact(plain[i].shape), expected[i]);
  EXPECT_EQ(association_types(2, Ambient::Dialgebra).size(), 2u);
  EXPECT_EQ(association_types(4, Ambient::Dialgebra).size(), 20u);
  EXPECT_EQ(association_types(4, Ambient::RightAnticommutative).size(), 4u);
}

TEST(Straighten, Examples) {
  const auto b = ra_degree4_basis();
  const auto at = [&](const char* s) { return *b.index_of(parse_polynomial(s).terms().begin()->first); };
  auto v = straighten(parse_polynomial("(a*b)*(d*c)"), b);
  EXPECT_EQ(v[at("(a*b)*(c*d)")], -1);
  v = straighten(parse_polynomial("((a*b)*c)*d"), b);
  EXPECT_EQ(v[0], 1);
  v = straighten(parse_polynomial("a*(b*(c*d))"), b);
  EXPECT_EQ(v[at("a*((c*d)*b)")], -1);
  EXPECT_EQ(std::count_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; }), 1);
  v = straighten(parse_polynomial("(a*(c*b))*d"), b);
  EXPECT_EQ(v[at("(a*(b*c))*d")], -1);
  v = straighten(parse_polynomial("a*((c*b)*d)"), b);
  EXPECT_EQ(v[at("a*((b*c)*d)")], -1);
}

TEST(Straighten, BasisIsFixed) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto b = make_basis(n, Ambient::RightAnticommutative);
    for (std::size_t i = 0; i < b.dimension(); ++i) {
      const auto loc = locate(b.at(i), b);
      ASSERT_TRUE(loc);
      EXPECT_EQ(loc->first, 1);
      EXPECT_EQ(loc->second, i);
    }
  }
}

TEST(Straighten, IdempotentAndLinear) {
  std::mt19937 rng(3);
  const auto plain = make_basis(4, Ambient::Plain);
  const auto b = ra_degree4_basis();
  for (int k = 0; k < 100; ++k) {
    const Polynomial p = random_poly(rng, plain, 6);
    const Polynomial q = random_poly(rng, plain, 6);
    const auto sp = straighten(p, b);
    EXPECT_EQ(straighten(from_coordinates(sp, b), b), sp);
    const auto spq = straighten(p + Rational(2, 3) * q, b);
    const auto sq = straighten(q, b);
    for (std::size_t i = 0; i < spq.size(); ++i) EXPECT_EQ(spq[i], sp[i] + Rational(2, 3) * sq[i]);
  }
}

TEST(Straighten, DialgebraIsCanonicalization) {
  const auto b = make_basis(3, Ambient::Dialgebra);
  const auto v = straighten(parse_polynomial("((x -| y) |- z) - ((x |- y) |- z)"), b);
  EXPECT_TRUE(std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; }));
  EXPECT_THROW(straighten(parse_polynomial("(x*y)*z"), b), SignatureError);
  EXPECT_THROW(straighten(parse_polynomial("x*y"), make_basis(3, Ambient::Plain)), DegreeError);
}

TEST(Orbit, Sizes) {
  EXPECT_EQ(sn_orbit(library::di_malcev().poly).size(), 24u);
  EXPECT_EQ(sn_orbit(poly("x")).size(), 1u);
  const auto s = sn_orbit(parse_polynomial("x*y + y*x"));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], s[1]);
  const auto o = sn_orbit(parse_polynomial("x*(y*z)"));
  EXPECT_EQ(o[0], parse_polynomial("x*(y*z)"));
  EXPECT_EQ(o[1], parse_polynomial("x*(z*y)"));
  EXPECT_EQ(o[5], parse_polynomial("z*(y*x)"));
}

TEST(Lift, Counts) {
  EXPECT_EQ(lift(library::leibniz().poly, var("t")).size(), 8u);
  EXPECT_EQ(lift(library::associative_dialgebra()[0].poly, var("t")).size(), 16u);
  EXPECT_EQ(lift(library::associative_dialgebra()[0].poly, var("t"), {var("x")}).size(), 12u);
  EXPECT_THROW(lift(library::leibniz().poly, var("x")), Error);
}

TEST(Lift, BarIdentityStaysZero) {
  for (const Identity& bar : library::bar_identities()) {
    EXPECT_FALSE(bar.poly.is_zero());
    for (const Polynomial& p : lift(bar.poly, var("t"))) EXPECT_TRUE(p.is_zero());
  }
}

TEST(Lift, ProducesConsequences) {
  const Polynomial leib = library::leibniz().poly;
  const auto b = make_basis(Ambient::Plain, {var("t"), var("x"), var("y"), var("z")});
  IdentityModule m(b);
  add_generator(m, leib);
  EXPECT_GT(m.rank(), 0u);
  for (const Polynomial& p : lift(leib, var("t"))) EXPECT_TRUE(m.contains(p));
}
