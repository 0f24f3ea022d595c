#include <gtest/gtest.h>

#include <mincomp/intset.hpp>
#include <mincomp/parse.hpp>

#include "oracle.hpp"

using namespace mincomp;
using oracle::i64;

namespace {

std::vector<Int> V(std::initializer_list<long long> xs) { return std::vector<Int>(xs.begin(), xs.end()); }

std::vector<i64> win(const IntegerSet& s, i64 lo, i64 hi) { return oracle::to64(s.enumerate(lo, hi)); }

}  // namespace

TEST(EpCanonicalize, RedundantStart) {
  auto e = ep_canonicalize(2, V({0, 2}), {}, {});
  EXPECT_EQ(e.m, 2);
  EXPECT_EQ(e.A, V({0}));
  EXPECT_TRUE(e.B.empty());
  EXPECT_TRUE(e.F.empty());
}

TEST(EpCanonicalize, Identity) {
  auto e = ep_canonicalize(1, V({0}), {}, {});
  EXPECT_EQ(e.m, 1);
  EXPECT_EQ(e.A, V({0}));
}

TEST(EpCanonicalize, MinimalPeriod) {
  auto e = ep_canonicalize(4, V({0, 2}), {}, {});
  EXPECT_EQ(e.m, 2);
  EXPECT_EQ(e.A, V({0}));
  auto s = IntegerSet::ep(e);
  EXPECT_EQ(win(s, 0, 64), oracle::expand_ep(4, {0, 2}, {}, {}, 0, 64));
}

TEST(EpCanonicalize, FoldsPrefixAndRepairsF) {
  // 3 lies on the progression 2N+1 from 1; 7 is absorbed as well
  auto e = ep_canonicalize(2, V({1}), V({}), V({-3, 7}));
  EXPECT_EQ(e.A, V({1}));
  EXPECT_EQ(e.B, V({-3}));
  EXPECT_TRUE(e.F.empty());
  // an element just below the start extends the progression
  auto g = ep_canonicalize(3, V({6}), V({3}), V({1}));
  EXPECT_EQ(g.A, V({3}));
  EXPECT_TRUE(g.B.empty());
  EXPECT_EQ(g.F, V({1}));
}

TEST(EpCanonicalize, Rejects) {
  EXPECT_THROW(ep_canonicalize(0, V({0}), {}, {}), Error);
  EXPECT_THROW(ep_canonicalize(-2, V({0}), {}, {}), Error);
  EXPECT_THROW(ep_canonicalize(3, {}, {}, V({1})), Error);
}

TEST(EpCanonicalize, IdempotentSweep) {
  // every A ⊆ [0,6) (nonempty), small B/F, m in 1..6
  for (i64 m = 1; m <= 6; ++m)
    for (std::uint64_t am = 1; am < 64; ++am)
      for (i64 extra = -4; extra <= 4; extra += 2) {
        std::vector<i64> A, F = {extra}, B = {extra - 5};
        for (i64 i = 0; i < 6; ++i)
          if ((am >> i) & 1) A.push_back(i);
        auto e1 = ep_canonicalize(m, oracle::toInt(A), oracle::toInt(B), oracle::toInt(F));
        auto e2 = ep_canonicalize(e1.m, e1.A, e1.B, e1.F);
        ASSERT_EQ(e1, e2);
        auto s = IntegerSet::ep(e1);
        ASSERT_EQ(win(s, -20, 60), oracle::expand_ep(m, A, B, F, -20, 60));
        // canonical invariants
        std::set<i64> ares;
        for (auto& a : e1.A) ares.insert(mod(a, e1.m));
        ASSERT_EQ(ares.size(), e1.A.size());
        for (auto& b : e1.B) {
          ASSERT_TRUE(ares.count(mod(b, e1.m)));
          ASSERT_LT(b, *e1.start_of(mod(b, e1.m)));
          ASSERT_FALSE(s.member(b + e1.m) && b + e1.m == *e1.start_of(mod(b, e1.m)));
        }
        for (auto& f : e1.F) ASSERT_FALSE(ares.count(mod(f, e1.m)));
      }
}

TEST(Member, Examples) {
  EXPECT_FALSE(IntegerSet::ep(1, V({0})).member(-1));
  EXPECT_TRUE(IntegerSet::ep(2, V({0}), V({-4}), V({3})).member(-4));
  auto mers = parse_set_expression("gen:mersenne");
  EXPECT_TRUE(mers.member(7));
  EXPECT_FALSE(mers.member(8));
  EXPECT_EQ(win(mers, 0, 20), (std::vector<i64>{1, 3, 7, 15}));
}

TEST(EnumerateWindow, Examples) {
  EXPECT_EQ(win(IntegerSet::ep(3, V({0})), -2, 7), (std::vector<i64>{0, 3, 6}));
  EXPECT_EQ(win(IntegerSet::finite({1, 3, 7}), 2, 6), (std::vector<i64>{3}));
  EXPECT_EQ(win(IntegerSet::ep(4, V({0, 1, 2})), 0, 11), oracle::expand_ep(4, {0, 1, 2}, {}, {}, 0, 11));
}

TEST(EnumerateWindow, AgreesWithMember) {
  auto s = IntegerSet::ep(5, V({0, 3}), V({-7}), V({-1, 1}));
  for (i64 lo = -40; lo <= 40; lo += 13)
    for (i64 hi = lo; hi <= lo + 50; hi += 7) {
      std::vector<i64> expect;
      for (i64 z = lo; z <= hi; ++z)
        if (s.member(z)) expect.push_back(z);
      ASSERT_EQ(win(s, lo, hi), expect);
    }
  // far windows
  for (i64 z = -10000; z <= 10000; z += 997) ASSERT_EQ(s.member(z), (mod(z, 5) == 0 || mod(z, 5) == 3) && z >= 0);
}

TEST(EnumerateWindow, FullResidueTail) {
  auto s = IntegerSet::ep(4, V({0, 1, 2, 3}), V({}), V({}));
  EXPECT_EQ(s.ep().m, 1);
  EXPECT_EQ(s.enumerate(1000, 1003).size(), 4u);
}

TEST(Density, Examples) {
  auto d1 = density(ep_canonicalize(1, V({0}), {}, {}), false);
  EXPECT_EQ(d1.upper_banach, 1);
  EXPECT_EQ(d1.lower_banach, 0);
  EXPECT_EQ(d1.eventual_density, 1);
  auto d2 = density(ep_canonicalize(4, V({0, 1, 2}), {}, {}), true);
  EXPECT_EQ(d2.upper_banach, Rational(3, 4));
  EXPECT_EQ(d2.lower_banach, Rational(3, 4));
}

TEST(Density, CountingOracle) {
  auto e = ep_canonicalize(5, V({0, 1}), {}, {});
  auto d = density(e, true);
  // count residues over 5*10^3 consecutive integers
  i64 n = 0, len = 5000;
  for (i64 z = 0; z < len; ++z) n += (z % 5 == 0 || z % 5 == 1);
  EXPECT_EQ(d.upper_banach, Rational(n, len));
  EXPECT_EQ(d.lower_banach, Rational(2, 5));
}

TEST(Density, TranslationInvariantTwoSided) {
  for (i64 t = -7; t <= 7; ++t) {
    auto s = translate(IntegerSet::from_shape(periodic_shape(6, {0, 1, 4})), t);
    auto d = density(s.shape());
    EXPECT_EQ(d.upper_banach, Rational(1, 2));
    EXPECT_EQ(d.lower_banach, Rational(1, 2));
  }
}

TEST(Translate, Examples) {
  EXPECT_EQ(translate(IntegerSet::finite({1, 3}), 2).elements(), V({3, 5}));
  EXPECT_EQ(reflect(IntegerSet::finite({1, 3})).elements(), V({-3, -1}));
  auto s = IntegerSet::ep(2, V({0}), {}, V({3}));
  auto t = translate(s, -3);
  for (i64 z = -20; z <= 20; ++z) ASSERT_EQ(t.member(z), s.member(z + 3)) << z;
  // canonical form of the shifted set: 2N-3 plus the isolated 0
  EXPECT_EQ(t.ep().A, V({-3}));
  EXPECT_EQ(t.ep().F, V({0}));
}

TEST(Translate, LazyAndComposition) {
  auto p = parse_set_expression("gen:pow2");
  auto q = translate(translate(p, 5), -2);
  for (i64 z = -10; z <= 100; ++z) ASSERT_EQ(q.member(z), p.member(z - 3));
  EXPECT_EQ(print(q), "shift(3,gen:pow2)");
}

TEST(Reflect, EpExactAndLazyWindow) {
  auto s = IntegerSet::ep(3, V({1}), V({-2}), V({0}));
  auto r = reflect(s);
  EXPECT_EQ(r.kind(), IntegerSet::Kind::TwoSided);
  for (i64 z = -50; z <= 50; ++z) ASSERT_EQ(r.member(z), s.member(-z));
  EXPECT_THROW(reflect(parse_set_expression("gen:pow2")), Unsupported);
  auto rl = reflect(parse_set_expression("gen:pow2"), Window(0, 20));
  EXPECT_EQ(rl.elements(), V({-16, -8, -4, -2, -1}));
}

TEST(TwoSided, CanonicalAndOps) {
  // (-inf,-1] u [5,inf) via union of rays
  auto a = IntegerSet::from_shape(ray_below(-1));
  auto b = IntegerSet::from_shape(ray_above(5));
  auto u = unite(a, b);
  for (i64 z = -30; z <= 30; ++z) ASSERT_EQ(u.member(z), z <= -1 || z >= 5);
  auto i = intersect(u, IntegerSet::from_shape(periodic_shape(2, {0})));
  for (i64 z = -30; z <= 30; ++z) ASSERT_EQ(i.member(z), (z <= -1 || z >= 5) && mod(z, 2) == 0);
  auto d = subtract(IntegerSet::ep(1, V({0})), IntegerSet::finite({1, 4}));
  EXPECT_EQ(print(d), "ep:m=1;A=5;B=0,2,3");
  auto z = unite(a, IntegerSet::ep(1, V({0})));
  EXPECT_EQ(print(z), "per:m=1;R=0");
  EXPECT_EQ(z.shape(), periodic_shape(1, {0}));
}

TEST(TwoSided, CountMatchesEnumerate) {
  TwoSidedSet t;
  t.m = 3;
  t.low = {true, false, true};
  t.high = {false, true, false};
  t.lo_cut = -4;
  t.hi_cut = 6;
  t.mid = V({-4, 0, 2, 3, 6});
  t = canonical(t);
  for (i64 a = -30; a <= 30; a += 5)
    for (i64 b = a - 1; b <= a + 40; b += 3) {
      auto e = enumerate(t, a, b);
      ASSERT_EQ(count_in(t, a, b), Int(e.size()));
      for (i64 z = a; z <= b; ++z) ASSERT_EQ(std::binary_search(e.begin(), e.end(), Int(z)), t.member(z));
    }
}

TEST(Lazy, MonotonicityViolationIsLoud) {
  auto bad = IntegerSet::lazy(std::make_shared<FunctionGen>(
      "bad", [](std::size_t i) { return Int(i == 5 ? 3 : static_cast<long long>(i * 10)); }, true));
  EXPECT_THROW(bad.enumerate(0, 100), Error);
}

TEST(Lazy, GeneratorsPrefix) {
  EXPECT_EQ(win(parse_set_expression("gen:pow3"), 0, 100), (std::vector<i64>{1, 3, 9, 27, 81}));
  EXPECT_EQ(win(parse_set_expression("gen:squares"), 0, 30), (std::vector<i64>{0, 1, 4, 9, 16, 25}));
  EXPECT_EQ(win(parse_set_expression("gen:lacunary(lambda=3/2,start=4)"), 0, 40),
            (std::vector<i64>{4, 6, 9, 14, 21, 32}));
  std::vector<i64> iu;
  for (i64 k = 0; (i64{1} << (2 * k)) <= 63; ++k)
    for (i64 x = i64{1} << (2 * k); x < (i64{1} << (2 * k + 1)); ++x)
      if (x <= 63) iu.push_back(x);
  EXPECT_EQ(win(parse_set_expression("interval-union:2^2k..2^2k+1"), 0, 63), iu);
  // huge values: index lookups stay exact
  auto p3 = parse_set_expression("gen:pow3");
  Int big = boost::multiprecision::pow(Int(3), 500);
  EXPECT_TRUE(p3.member(big));
  EXPECT_FALSE(p3.member(big + 1));
  EXPECT_EQ(p3.count_in(1, big), Int(501));
}

TEST(Lazy, IntervalUnionByValue) {
  auto iu = parse_set_expression("interval-union:2^2k..2^2k+1");
  Int p = boost::multiprecision::pow(Int(4), 272);
  EXPECT_TRUE(iu.member(p));
  EXPECT_TRUE(iu.member(2 * p - 1));
  EXPECT_FALSE(iu.member(2 * p));
  EXPECT_EQ(iu.enumerate(2 * p - 2, 4 * p), (std::vector<Int>{2 * p - 2, 2 * p - 1, 4 * p}));
  // elements below 4^k number (4^k - 1)/3
  EXPECT_EQ(iu.count_in(0, p - 1), (p - 1) / 3);
  auto& g = iu.lazy_state()->generator();
  EXPECT_EQ(*g.wide_gap_from(Int(2), Int(2)), 7);
  EXPECT_EQ(*g.wide_gap_from(Int(8), Int(40)), 127);
  auto sh = translate(iu, -5);
  EXPECT_TRUE(sh.member(p - 5));
  EXPECT_EQ(sh.count_in(-10, p - 6), (p - 1) / 3);
}
