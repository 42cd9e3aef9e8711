#include <gtest/gtest.h>

#include <random>

#include "qdham/expr.hpp"
#include "qdham/isomorphism.hpp"

namespace qdham {
namespace {

TEST(ExprTest, Constructors) {
  EXPECT_EQ(parse_expr("kn(4)"), complete(4));
  EXPECT_EQ(parse_expr("e(3)"), empty(3));
  EXPECT_EQ(parse_expr("star(3)"), star(3));
  EXPECT_EQ(parse_expr("path(5)"), path(5));
  EXPECT_EQ(parse_expr("cycle(6)"), cycle(6));
  EXPECT_EQ(parse_expr("bip(2,5)"), complete_bipartite(2, 5));
  EXPECT_EQ(parse_expr("h(2,4)"), build_h(2, 4));
  EXPECT_EQ(parse_expr("rep(3, kn(2))"), repeat(3, complete(2)));
  EXPECT_EQ(parse_expr("comp(kn(3))"), empty(3));
}

TEST(ExprTest, TableGraph) {
  const Graph g = parse_expr("join(kn(3), bip(2,5))");
  EXPECT_EQ(g.order(), 10u);
  EXPECT_EQ(g, join(complete(3), complete_bipartite(2, 5)));
}

TEST(ExprTest, WhitespaceIsInsignificant) {
  EXPECT_EQ(parse_expr("  join ( kn ( 3 ) ,\n union( kn(1),star(3) ) ) "),
            parse_expr("join(kn(3),union(kn(1),star(3)))"));
}

TEST(ExprTest, SelfComplementaryCycle) {
  EXPECT_TRUE(is_isomorphic(parse_expr("comp(cycle(5))"), cycle(5)));
}

TEST(ExprTest, ArityErrors) {
  try {
    parse_expr("join(kn(3), union(bip(2,5)))");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 26u);
    EXPECT_NE(std::string(e.what()).find("union takes 2 arguments"), std::string::npos);
  }
  EXPECT_THROW(parse_expr("kn(3, 4)"), ParseError);
  EXPECT_THROW(parse_expr("kn()"), ParseError);
  EXPECT_THROW(parse_expr("comp(3)"), ParseError);
  EXPECT_THROW(parse_expr("join(3, kn(2))"), ParseError);
}

TEST(ExprTest, SyntaxErrors) {
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("foo(3)"), ParseError);
  EXPECT_THROW(parse_expr("kn(3"), ParseError);
  EXPECT_THROW(parse_expr("kn(3))"), ParseError);
  EXPECT_THROW(parse_expr("kn(-3)"), ParseError);
  try {
    parse_expr("kn(3) x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
}

TEST(ExprTest, ParameterRangeErrorsPointAtTheNode) {
  try {
    parse_expr("join(kn(3), kn(0))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 12u);
  }
  EXPECT_THROW(parse_expr("e(0)"), ParseError);
  EXPECT_THROW(parse_expr("cycle(2)"), ParseError);
  EXPECT_THROW(parse_expr("h(3,5)"), ParseError);
  EXPECT_THROW(parse_expr("rep(0, kn(1))"), ParseError);
  EXPECT_THROW(parse_expr("rep(5000, kn(5000))"), ParseError);
}

Expr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 10 : 6);
  std::uniform_int_distribution<std::uint64_t> small(1, 4);
  Expr e;
  switch (pick(rng)) {
    case 0: e.kind = ExprKind::Kn; e.ints = {small(rng)}; break;
    case 1: e.kind = ExprKind::E; e.ints = {small(rng)}; break;
    case 2: e.kind = ExprKind::Star; e.ints = {small(rng)}; break;
    case 3: e.kind = ExprKind::Path; e.ints = {small(rng)}; break;
    case 4: e.kind = ExprKind::Cycle; e.ints = {small(rng) + 2}; break;
    case 5: e.kind = ExprKind::Bip; e.ints = {small(rng), small(rng)}; break;
    case 6: {
      const std::uint64_t t = small(rng);
      e.kind = ExprKind::H;
      e.ints = {t, 2 * t + small(rng) - 1};
      break;
    }
    case 7: e.kind = ExprKind::Join; e.args = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)}; break;
    case 8: e.kind = ExprKind::Union; e.args = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)}; break;
    case 9: e.kind = ExprKind::Rep; e.ints = {small(rng)}; e.args = {random_expr(rng, depth - 1)}; break;
    default: e.kind = ExprKind::Comp; e.args = {random_expr(rng, depth - 1)}; break;
  }
  return e;
}

TEST(ExprTest, PrintParseRoundTripProperty) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Expr e = random_expr(rng, 3);
    const std::string text = print_expr(e);
    EXPECT_EQ(parse_expr_ast(text), e) << text;
    EXPECT_EQ(print_expr(parse_expr_ast(text)), text);
  }
}

}  // namespace
}  // namespace qdham
