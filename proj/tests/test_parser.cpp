#include <gtest/gtest.h>

#include <random>

#include "dialg/dialg.hpp"

using namespace dialg;

TEST(Parse, LeftAssociatorIdentity) {
  const auto f = parse_file("al: (x -| y) -| z - x -| (y -| z) = 0\n");
  ASSERT_EQ(f.entries.size(), 1u);
  EXPECT_EQ(f.entries[0].parsed.poly, parse_polynomial("al(x,y,z)"));
}

TEST(Parse, SingleLeaf) {
  const Polynomial p = parse_polynomial("x");
  EXPECT_EQ(p, poly("x"));
  EXPECT_EQ(p.degree(), 1u);
}

TEST(Parse, RationalCoefficient) {
  const Polynomial p = parse_polynomial("2/3 * ((a*b)*c)");
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coefficient(parse_polynomial("(a*b)*c").terms().begin()->first), Rational(2, 3));
}

TEST(Parse, RightSideMovesAcross) {
  EXPECT_EQ(parse_polynomial("x*y = y*x"), parse_polynomial("x*y - y*x"));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_polynomial("x*y*z"), ParseError);
  EXPECT_THROW(parse_polynomial("(x*y"), ParseError);
  EXPECT_THROW(parse_polynomial("foo(x,y)"), ParseError);
  EXPECT_THROW(parse_polynomial("al(x,y)"), ParseError);
  try {
    parse_file("signature: algebra\nok: x*y\nbad: (x*y) + * z\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 5u);
  }
}

TEST(Parse, FileRules) {
  EXPECT_THROW(parse_file("a: x*y\na: y*x\n"), ParseError);
  EXPECT_THROW(parse_file("signature: algebra\na: x -| y\n"), ParseError);
  EXPECT_THROW(parse_file("a: x*y\nsignature: algebra\n"), ParseError);
  EXPECT_THROW(parse_file("just words\n"), ParseError);
  const auto f = parse_file("# comment\nsignature: dialgebra\n\nl: dicom(x,y)   # trailing\n");
  EXPECT_EQ(f.signature, Signature::Dialgebra);
  ASSERT_EQ(f.entries.size(), 1u);
  EXPECT_EQ(f.entries[0].label, "l");
  EXPECT_EQ(f.entries[0].line, 4u);
}

TEST(Print, Examples) {
  EXPECT_EQ(print(parse_polynomial("dicom(x,y)")), "(x -| y) - (y |- x)");
  EXPECT_EQ(print(Polynomial{}), "0");
  EXPECT_EQ(print(ra_degree4_basis().at(24)), "(a*(b*c))*d");
  EXPECT_EQ(print_compact(ra_degree4_basis().at(24)), "(a(bc))d");
}

TEST(Print, RoundTrip) {
  std::mt19937 rng(11);
  for (Ambient amb : {Ambient::Plain, Ambient::Dialgebra}) {
    const auto basis = make_basis(4, amb);
    std::uniform_int_distribution<std::size_t> pick(0, basis.dimension() - 1);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int k = 0; k < 50; ++k) {
      Polynomial p;
      for (int j = 0; j < 4; ++j) p.add(basis.at(pick(rng)), ratio(coef(rng), 1 + static_cast<long>(rng() % 3)));
      EXPECT_EQ(parse_polynomial(print(p)), p) << print(p);
    }
  }
}

TEST(Print, FileRoundTripIsIdempotent) {
  const auto f = parse_file("signature: dialgebra\nx1: al(x,y,z)\nx2: 1/2 * (x -| y) - (y |- x)\n");
  const std::string once = print_file(f);
  EXPECT_EQ(print_file(parse_file(once)), once);
}

TEST(Json, Shape) {
  const auto j = to_json("d", parse_polynomial("dicom(x,y)"));
  EXPECT_EQ(j["label"], "d");
  EXPECT_EQ(j["signature"], "dialgebra");
  EXPECT_EQ(j["monomials"].size(), 2u);
}
