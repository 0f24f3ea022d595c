#include <gtest/gtest.h>

#include <mincomp/parse.hpp>

using namespace mincomp;

TEST(Parse, Examples) {
  auto f = parse_set_expression("fin:1,3,7");
  EXPECT_EQ(f.kind(), IntegerSet::Kind::Finite);
  EXPECT_EQ(f.elements(), (std::vector<Int>{1, 3, 7}));
  auto e = parse_set_expression("ep:m=2;A=0;F=3");
  EXPECT_EQ(e.ep(), ep_canonicalize(2, {0}, {}, {3}));
  auto l = parse_set_expression("gen:lacunary(lambda=2,start=1)");
  EXPECT_TRUE(l.is_lazy());
  EXPECT_TRUE(l.gap_promise());
  for (std::size_t i = 0; i + 1 < 40; ++i) EXPECT_GE(l.at(i + 1), 2 * l.at(i));
  EXPECT_EQ(l.at(10), 1024);
}

TEST(Parse, Whitespace) {
  auto a = parse_set_expression("  ep : m = 5 ; A = 0 , 1 ; B = -3 ; F = 2 ");
  EXPECT_EQ(a.ep(), ep_canonicalize(5, {0, 1}, {-3}, {2}));
  auto b = parse_set_expression("gen: lacunary( lambda = 1.5 , start = 4 )");
  EXPECT_EQ(b.at(2), 9);
}

TEST(Parse, PositionedErrors) {
  try {
    parse_set_expression("fin:1,,3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column, 7u);
  }
  try {
    parse_set_expression("ep:m=2;Q=1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column, 8u);
  }
  EXPECT_THROW(parse_set_expression("ep:m=0;A=1"), ParseError);
  EXPECT_THROW(parse_set_expression("ep:m=3"), ParseError);
  EXPECT_THROW(parse_set_expression("gen:nope"), ParseError);
  EXPECT_THROW(parse_set_expression("gen:lacunary(lambda=1)"), ParseError);
  EXPECT_THROW(parse_set_expression("bogus"), ParseError);
  EXPECT_THROW(parse_set_expression("fin:1 trailing"), ParseError);
}

TEST(Parse, SemanticRepair) {
  // F overlapping the progression is folded in, nothing is dropped
  auto s = parse_set_expression("ep:m=3;A=0;F=6,1");
  EXPECT_EQ(print(s), "ep:m=3;A=0;F=1");
}

TEST(Parse, RoundTrip) {
  const char* exprs[] = {
      "fin:",
      "fin:-5,0,12",
      "ep:m=5;A=0,1;B=-3;F=2",
      "ep:m=4;A=0,2",
      "ep:m=2;A=0;B=-8,-4;F=-3,1",
      "per:m=3;R=0,1",
      "ts:m=2;L=1;H=0;lo=-3;hi=4;M=-3,0,1",
      "gen:pow2",
      "gen:pow3",
      "gen:mersenne",
      "gen:squares",
      "gen:cubes",
      "gen:powers(base=5)",
      "gen:lacunary(lambda=3/2,start=4)",
      "interval-union:2^2k..2^2k+1",
      "shift(-7,gen:pow2)",
  };
  for (auto* x : exprs) {
    auto s = parse_set_expression(x);
    auto t = parse_set_expression(print(s));
    EXPECT_EQ(print(s), print(t)) << x;
    EXPECT_TRUE(same_on(s, t, Window(-1000, 1000))) << x;
  }
}
