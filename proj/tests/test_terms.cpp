#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "dialg/dialg.hpp"

using namespace dialg;

namespace {

// Every binary tree on the given leaves with every assignment of -| and |- tags.
std::vector<Term> tagged_trees(std::span<const Variable> leaves) {
  if (leaves.size() == 1) return {Term::leaf(leaves[0])};
  std::vector<Term> out;
  for (std::size_t k = 1; k < leaves.size(); ++k) {
    auto ls = tagged_trees(leaves.first(k));
    auto rs = tagged_trees(leaves.subspan(k));
    for (const Term& l : ls)
      for (const Term& r : rs) {
        out.push_back(left(l, r));
        out.push_back(right(l, r));
      }
  }
  return out;
}

Term flip(const Term& t) {
  return Term::binary(t.tag().kind == OpKind::Left ? OpTag::right() : OpTag::left(), t.child(0), t.child(1));
}

// One application of a bar identity, in either direction, anywhere in t.
std::vector<Term> bar_moves(const Term& t) {
  std::vector<Term> out;
  if (t.is_leaf()) return out;
  const Term& l = t.child(0);
  const Term& r = t.child(1);
  if (t.tag().kind == OpKind::Right && !l.is_leaf()) out.push_back(Term::binary(t.tag(), flip(l), r));
  if (t.tag().kind == OpKind::Left && !r.is_leaf()) out.push_back(Term::binary(t.tag(), l, flip(r)));
  for (Term& n : bar_moves(l)) out.push_back(Term::binary(t.tag(), std::move(n), r));
  for (Term& n : bar_moves(r)) out.push_back(Term::binary(t.tag(), l, std::move(n)));
  return out;
}

Term random_tree(std::mt19937& rng, std::vector<Variable> leaves) {
  std::shuffle(leaves.begin(), leaves.end(), rng);
  std::vector<Term> pool;
  for (const Variable& v : leaves) pool.push_back(Term::leaf(v));
  while (pool.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 2);
    const std::size_t i = pick(rng);
    Term t = rng() % 2 ? left(pool[i], pool[i + 1]) : right(pool[i], pool[i + 1]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i), pool.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    pool.insert(pool.begin() + static_cast<std::ptrdiff_t>(i), std::move(t));
  }
  return pool.front();
}

}  // namespace

TEST(Canonicalize, BarClassesAreShapeCenterPairs) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto leaves = default_variables(n);
    const auto trees = tagged_trees(leaves);
    std::map<Term, std::size_t> cls;
    std::size_t classes = 0;
    for (const Term& t : trees) {
      if (cls.contains(t)) continue;
      std::vector<Term> stack{t};
      cls[t] = classes;
      while (!stack.empty()) {
        Term cur = stack.back();
        stack.pop_back();
        for (Term& m : bar_moves(cur)) {
          if (cls.try_emplace(m, classes).second) stack.push_back(std::move(m));
        }
      }
      ++classes;
    }
    EXPECT_EQ(classes, catalan(n - 1) * n) << "degree " << n;
    std::map<std::size_t, Term> rep;
    std::set<Term> seen;
    for (const Term& t : trees) {
      const Term c = canonicalize(t);
      auto [it, fresh] = rep.try_emplace(cls.at(t), c);
      EXPECT_EQ(it->second, c);
      if (fresh) {
        EXPECT_TRUE(seen.insert(c).second);
      }
    }
  }
}

TEST(Canonicalize, Examples) {
  const Term a = left(leaf("x"), leaf("y"));
  EXPECT_EQ(canonicalize(right(a, leaf("z"))), canonicalize(right(right(leaf("x"), leaf("y")), leaf("z"))));
  EXPECT_EQ(center(canonicalize(right(a, leaf("z")))), var("z"));
  EXPECT_EQ(canonicalize(leaf("x")), leaf("x"));
  const Term p = right(left(left(leaf("x"), leaf("y")), leaf("w")), leaf("z"));
  const Term q = right(left(right(leaf("x"), leaf("y")), leaf("w")), leaf("z"));
  EXPECT_EQ(canonicalize(p), canonicalize(q));
}

TEST(Canonicalize, Idempotent) {
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int k = 0; k < 200; ++k) {
      const Term t = random_tree(rng, default_variables(n));
      const Term c = canonicalize(t);
      EXPECT_EQ(canonicalize(c), c);
      EXPECT_EQ(center(c), center_recursive(t));
    }
  }
}

TEST(Canonicalize, RejectsMixedSignature) {
  EXPECT_THROW(canonicalize(times(left(leaf("x"), leaf("y")), leaf("z"))), SignatureError);
}

TEST(Center, Examples) {
  EXPECT_EQ(center(leaf("x")), var("x"));
  EXPECT_EQ(center(left(right(leaf("x"), leaf("y")), leaf("z"))), var("y"));
  const Term t = right(leaf("x"), right(leaf("y"), left(leaf("z"), leaf("t"))));
  EXPECT_EQ(center(t), var("z"));
  EXPECT_EQ(center_recursive(t), var("z"));
}

TEST(Counts, MultilinearMonomials) {
  EXPECT_EQ(make_basis(2, Ambient::Dialgebra).dimension(), 4u);
  EXPECT_EQ(make_basis(3, Ambient::Dialgebra).dimension(), 36u);
  EXPECT_EQ(make_basis(4, Ambient::Dialgebra).dimension(), 480u);
  EXPECT_EQ(make_basis(4, Ambient::Plain).dimension(), 120u);
}

TEST(Macros, Expansions) {
  EXPECT_EQ(parse_polynomial("dicom(x,y)"), parse_polynomial("(x -| y) - (y |- x)"));
  EXPECT_EQ(parse_polynomial("ax(x,y,z)"), parse_polynomial("((x |- y) -| z) - (x |- (y -| z))"));
  const Polynomial st = parse_polynomial("St(x,y,z)");
  EXPECT_EQ(st.size(), 6u);
  EXPECT_EQ(st, parse_polynomial("al(x,y,z) + ar(y,z,x) + ax(z,x,y)"));
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(parse_polynomial("x*y"), {{var("x"), poly("a")}, {var("y"), poly("b")}}),
            parse_polynomial("a*b"));
  const Polynomial leib = parse_polynomial("(x*y)*z - (x*z)*y - x*(y*z)");
  EXPECT_EQ(substitute(leib, {{var("x"), poly("x")}, {var("y"), poly("y")}, {var("z"), poly("z")}}), leib);
  const Polynomial d = parse_polynomial("dicom(x,y)");
  EXPECT_EQ(substitute(d, {{var("x"), parse_polynomial("x -| y")}}),
            parse_polynomial("((x -| y) -| y) - (y |- (x -| y))"));
  EXPECT_EQ(substitute(d, {{var("x"), parse_polynomial("x -| y")}}), parse_polynomial("dicom(x -| y, y)"));
}

TEST(Collapse, Examples) {
  EXPECT_EQ(collapse_right_anticommutative(parse_polynomial("dicom(x,y)")), parse_polynomial("2*(x*y)"));
  EXPECT_EQ(collapse_right_anticommutative(parse_polynomial("((x -| y) -| z) + ((y |- z) |- x) + ((z |- x) -| y)")),
            parse_polynomial("((x*y)*z) + (x*(z*y)) - ((x*z)*y)"));
  EXPECT_EQ(collapse_right_anticommutative(parse_polynomial("x |- (y -| z)")), parse_polynomial("-((y*z)*x)"));
}

TEST(Collapse, SendsMonomialsToSignedMonomials) {
  const auto basis = make_basis(4, Ambient::Dialgebra);
  for (const Term& t : basis.monomials()) {
    const Polynomial c = collapse_right_anticommutative(Polynomial(t));
    ASSERT_EQ(c.size(), 1u);
    const Rational k = c.terms().begin()->second;
    EXPECT_TRUE(k == 1 || k == -1);
  }
}

TEST(Linearize, Alternativity) {
  const Polynomial lin = linearize(parse_polynomial("as(x,x,y)"), var("x"));
  EXPECT_TRUE(lin.is_multilinear());
  EXPECT_EQ(lin.variables().size(), 3u);
}
