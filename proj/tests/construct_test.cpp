#include <gtest/gtest.h>

#include <mincomp/construct.hpp>
#include <mincomp/lazy.hpp>
#include <mincomp/parse.hpp>

#include <random>

#include "oracle.hpp"

using namespace mincomp;
using oracle::i64;

namespace {

IntegerSet gen(const std::string& e) { return parse_set_expression(e); }

std::vector<i64> prefix(const IntegerSet& C, i64 hi) { return oracle::to64(C.enumerate(C.min(), hi)); }

// pairs (c, w) with c + w = z, by membership of z - w for every w of the finite W
i64 count_pairs(const IntegerSet& C, const std::vector<Int>& W, const Int& z) {
  i64 n = 0;
  for (auto& w : W) n += C.member(z - w);
  return n;
}

bool covers(const IntegerSet& C, const std::vector<Int>& W, i64 lo, i64 hi) {
  for (i64 z = lo; z <= hi; ++z)
    if (!count_pairs(C, W, z)) return false;
  return true;
}

std::vector<Int> step_values(const ConstructionTrace& tr, const char* phase, std::optional<Int> TraceStep::*f) {
  std::vector<Int> v;
  for (auto& s : tr.steps)
    if (s.phase == phase && s.i > 0 && s.*f) v.push_back(*(s.*f));
  return v;
}

struct Case {
  std::string expr;
  int d_depth;      // int64-safe depth for the D oracle
  i64 prefix_hi;    // prefix of C the oracle may read
};

// five sets with a gap promise
const std::vector<Case> kSets = {
    {"gen:pow2", 5, i64{1} << 50},
    {"gen:mersenne", 4, i64{1} << 50},
    {"gen:squares", 5, 40'000'000},
    {"gen:cubes", 4, 20'000'000'000},
    {"gen:lacunary(lambda=3/2,start=4)", 5, 200'000'000'000},
};

}  // namespace

TEST(BuildD, Examples) {
  auto mers = gen("gen:mersenne");
  EXPECT_EQ(oracle::to64(build_d(mers, 0).D), (std::vector<i64>{-1}));

  auto d2 = build_d(mers, 2);
  EXPECT_EQ(d2.D.size(), 3u);
  auto ws = minkowski_window(mers, IntegerSet::finite(d2.D), Window(-2, 0));
  EXPECT_TRUE(ws.complete);
  EXPECT_EQ(oracle::to64(ws.elements), (std::vector<i64>{-2, -1, 0}));

  auto lac = gen("gen:lacunary(lambda=2,start=1)");
  auto d3 = build_d(lac, 3);
  EXPECT_EQ(d3.D.size(), 4u);
  for (i64 z = -3; z <= 0; ++z) {
    auto rc = rep_count(z, lac, IntegerSet::finite(d3.D));
    EXPECT_TRUE(rc.exact);
    ASSERT_TRUE(rc.count);
    EXPECT_GE(*rc.count, 1u);
    EXPECT_EQ(static_cast<i64>(*rc.count), count_pairs(lac, d3.D, z));
  }
}

TEST(BuildD, MatchesOracle) {
  for (auto& cs : kSets) {
    auto C = gen(cs.expr);
    auto r = build_d(C, cs.d_depth);
    // the oracle wants c_1 >= 1
    i64 s = r.trace.shift.convert_to<i64>();
    auto Cp = prefix(C, cs.prefix_hi);
    for (auto& v : Cp) v += s;
    auto o = oracle::filling_negatives(Cp, cs.d_depth);
    for (auto& v : o.D) v += s;
    EXPECT_EQ(oracle::to64(r.D), o.D) << cs.expr;
    EXPECT_EQ(oracle::to64(step_values(r.trace, "d", &TraceStep::y)), o.y) << cs.expr;
    EXPECT_EQ(oracle::to64(step_values(r.trace, "d", &TraceStep::t)), o.t) << cs.expr;
    EXPECT_EQ(oracle::to64(step_values(r.trace, "d", &TraceStep::x)), o.x) << cs.expr;
  }
}

TEST(BuildD, TraceInvariants) {
  for (auto& cs : kSets) {
    auto C = gen(cs.expr);
    auto r = build_d(C, 8);
    ASSERT_EQ(r.D.size(), 9u);
    ASSERT_EQ(r.trace.steps.size(), 9u);
    EXPECT_EQ(*r.trace.steps[0].x, -C.min() - r.trace.shift);
    for (auto& st : r.trace.steps) {
      EXPECT_EQ(st.phase, "d");
      if (st.i == 0) continue;
      EXPECT_LE(*st.y, -st.i) << cs.expr;
      EXPECT_LT(*st.x, *st.y);
      // h is strictly increasing, so its runs chain with no overlap
      for (std::size_t q = 1; q < st.h_values.size(); ++q) {
        auto& a = st.h_values[q - 1];
        auto& b = st.h_values[q];
        EXPECT_EQ(b.from, a.to + 1);
        EXPECT_GT(b.h_from, a.h_from + (a.to - a.from));
      }
    }
    EXPECT_TRUE(covers(C, r.D, -8, 0)) << cs.expr;
    EXPECT_LE(r.next_uncovered, -9);
  }
}

TEST(BuildD, ShiftWhenZeroInC) {
  auto sq = gen("gen:squares");
  auto r = build_d(sq, 3);
  EXPECT_EQ(r.trace.shift, 1);
  EXPECT_TRUE(covers(sq, r.D, -3, 0));
  EXPECT_EQ(r.D.back(), 0);  // -c_1 of the shifted set, moved back
}

TEST(BuildD, Deterministic) {
  auto C = gen("gen:pow3");
  auto a = build_d(C, 6), b = build_d(C, 6);
  EXPECT_EQ(a.D, b.D);
  ASSERT_EQ(a.trace.steps.size(), b.trace.steps.size());
  for (std::size_t q = 0; q < a.trace.steps.size(); ++q) {
    EXPECT_EQ(a.trace.steps[q].y, b.trace.steps[q].y);
    EXPECT_EQ(a.trace.steps[q].t, b.trace.steps[q].t);
    EXPECT_EQ(a.trace.steps[q].exploration, b.trace.steps[q].exploration);
  }
}

TEST(BuildD, Errors) {
  EXPECT_THROW(build_d(IntegerSet::ep(2, {Int(0)}), 2), Error);
  EXPECT_THROW(build_d(gen("gen:pow2"), -1), Error);
  auto plain = IntegerSet::lazy(std::make_shared<FunctionGen>("n+1", [](std::size_t i) { return Int(i + 1); }, false));
  EXPECT_THROW(build_d(plain, 2), Error);
  EXPECT_THROW(build_d(gen("gen:squares"), 4, 3), LimitExceeded);
}

TEST(BuildW, Examples) {
  auto mers = gen("gen:mersenne");
  auto w1 = build_w(mers, 1);
  ASSERT_EQ(w1.witnesses.size(), 1u);
  EXPECT_EQ(w1.witnesses[0].c, 1);
  EXPECT_EQ(count_pairs(mers, w1.W, w1.z[0]), 1);
  EXPECT_EQ(rep_count(w1.z[0], mers, IntegerSet::finite(w1.W)).count, 1u);

  auto lac = gen("gen:lacunary(lambda=2,start=1)");
  auto w4 = build_w(lac, 4, kDefaultBudget, 8);
  EXPECT_LE(w4.coverage.lo, -10);
  auto r = verify_mac(lac, IntegerSet::finite(w4.W), Window(-10, w4.z[3]), Window(1, 8));
  EXPECT_EQ(r.verdict, MacVerdict::CertifiedOnWindow);

  auto iu = build_w(gen("interval-union:2^2k..2^2k+1"), 2);
  EXPECT_EQ(iu.z.size(), 2u);
  EXPECT_FALSE(iu.stalled);
}

TEST(BuildW, StepsFollowTheDefinition) {
  for (auto& cs : kSets) {
    auto C = gen(cs.expr);
    auto r = build_w(C, 6);
    ASSERT_EQ(r.z.size(), 6u) << cs.expr;
    auto Cv = prefix(C, 100'000);
    // rebuild W_i from D and the recorded z_i, recomputing z_i and k_i independently
    std::vector<Int> W = r.D;
    Int kmax = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      i64 z = 0;
      while (count_pairs(C, W, z)) ++z;
      EXPECT_EQ(z, r.z[i]) << cs.expr << " i=" << i + 1;
      kmax = std::max(kmax, Int(Cv[i + 1] - Cv[i]));
      W.push_back(z - Cv[i]);
      for (Int v = z - Cv[0] + 1; v <= z - Cv[0] + kmax; ++v) W.push_back(v);
      EXPECT_EQ(r.witnesses[i].c, Cv[i]);
      EXPECT_EQ(r.witnesses[i].z, z);
      EXPECT_EQ(*r.trace.steps[r.trace.steps.size() - 6 + i].k, kmax);
    }
    std::sort(W.begin(), W.end());
    W.erase(std::unique(W.begin(), W.end()), W.end());
    EXPECT_EQ(r.W, W) << cs.expr;
  }
}

TEST(BuildW, UniqueRepresentationAndGrowth) {
  for (auto& cs : kSets) {
    auto C = gen(cs.expr);
    auto r = build_w(C, 6);
    auto Cv = prefix(C, 100'000);
    for (std::size_t i = 0; i < r.z.size(); ++i) {
      EXPECT_EQ(count_pairs(C, r.W, r.z[i]), 1) << cs.expr << " z_" << i + 1;
      auto rc = rep_count(r.z[i], C, IntegerSet::finite(r.W));
      EXPECT_TRUE(rc.exact);
      EXPECT_EQ(rc.count, 1u);
      if (i > 0) {
        EXPECT_GT(r.z[i], Cv[i] + r.z[i - 1]) << cs.expr;
      }
    }
    EXPECT_TRUE(r.z_increase_all);
    // the prefix covers everything the construction promises
    EXPECT_TRUE(covers(C, r.W, std::max(r.coverage.lo, Int(-200)).convert_to<i64>(), r.coverage.hi.convert_to<i64>()))
        << cs.expr;
    EXPECT_GE(r.coverage.hi, r.z.back());
  }
}

TEST(BuildW, Errors) {
  EXPECT_THROW(build_w(gen("gen:pow2"), 0), Error);
  EXPECT_THROW(build_w(IntegerSet::finite({1, 2, 4}), 2), Error);
}

TEST(BuildCominimal, Examples) {
  struct {
    std::string expr;
    Window w;
  } cases[] = {
      {"gen:lacunary(lambda=2,start=1)", Window(-10, 10)},
      {"gen:powers(base=3)", Window(-8, 8)},
      {"gen:mersenne", Window(-5, 5)},
      {"gen:squares", Window(-10, 10)},
      {"interval-union:2^2k..2^2k+1", Window(-10, 10)},
  };
  for (auto& cs : cases) {
    auto C = gen(cs.expr);
    auto p = build_cominimal(C, cs.w);
    EXPECT_TRUE(p.certified) << cs.expr;
    EXPECT_EQ(p.c_report.verdict, MacVerdict::CertifiedOnWindow) << cs.expr;
    EXPECT_EQ(p.w_report.verdict, MacVerdict::CertifiedOnWindow) << cs.expr;
    EXPECT_TRUE(revalidate(p.c_report, C, p.W));
    EXPECT_TRUE(revalidate(p.w_report, p.W, C));
    // pruning again changes nothing
    Window zone(std::min(cs.w.lo, Int(0)), p.support.hi);
    EXPECT_EQ(prune_to_minimal(p.W.elements(), C, zone), p.W.elements()) << cs.expr;
    EXPECT_TRUE(std::includes(p.W_full.begin(), p.W_full.end(), p.W.elements().begin(), p.W.elements().end()));
  }
}

TEST(BuildCominimal, Deterministic) {
  auto C = gen("gen:mersenne");
  auto a = build_cominimal(C, Window(-6, 6)), b = build_cominimal(C, Window(-6, 6));
  EXPECT_EQ(a.W.elements(), b.W.elements());
  EXPECT_EQ(a.trace.steps.size(), b.trace.steps.size());
}

TEST(RestCover, Examples) {
  auto N = IntegerSet::from_shape(naturals_shape());
  auto one = finite_rest_cover({0}, N);
  EXPECT_TRUE(same_on(one.W, N, Window(-50, 50)));

  auto r01 = finite_rest_cover({0, 1}, N);
  auto want01 = subtract(N, IntegerSet::finite({1, 4}));
  EXPECT_TRUE(same_on(r01.W, want01, Window(-50, 50)));
  EXPECT_EQ(oracle::to64(r01.witnesses), (std::vector<i64>{2, 4}));
  auto W01 = oracle::to64(r01.W.enumerate(0, 40));
  EXPECT_EQ(oracle::pair_sums({0, 1}, W01, 0, 30).size(), 31u);
  EXPECT_TRUE(oracle::pair_sums({1}, W01, 2, 2).empty());
  EXPECT_TRUE(oracle::pair_sums({0}, W01, 4, 4).empty());

  auto r02 = finite_rest_cover({0, 2}, N);
  EXPECT_TRUE(same_on(r02.W, subtract(N, IntegerSet::finite({2, 8})), Window(-50, 50)));
  EXPECT_EQ(oracle::to64(r02.witnesses), (std::vector<i64>{4, 8}));
}

TEST(RestCover, Errors) {
  EXPECT_THROW(finite_rest_cover({0, 2}, IntegerSet::ep(2, {Int(0)})), Error);
  EXPECT_THROW(finite_rest_cover({}, IntegerSet::from_shape(naturals_shape())), Error);
  EXPECT_THROW(finite_rest_cover({0}, gen("gen:pow2")), Unsupported);
}

TEST(RestCover, RandomInstances) {
  std::mt19937 rng(3);
  int done = 0;
  for (int rep = 0; rep < 300; ++rep) {
    std::vector<i64> F;
    for (i64 f = -3; f <= 5; ++f)
      if (rng() % 4 == 0) F.push_back(f);
    if (F.empty()) continue;
    // W: a ray from some point plus a few scattered elements below it
    i64 start = static_cast<i64>(rng() % 6) - F.front();
    std::vector<Int> extra;
    for (i64 v = start - 8; v < start; ++v)
      if (rng() % 3 == 0) extra.push_back(v);
    auto W = unite(IntegerSet::from_shape(ray_above(start)), IntegerSet::finite(extra));
    // F + W must reach every natural number
    bool ok = true;
    auto Wv = oracle::to64(W.enumerate(start - 8, 200));
    auto base = oracle::pair_sums(F, Wv, 0, 150);
    if (static_cast<i64>(base.size()) != 151) ok = false;
    if (!ok) {
      EXPECT_THROW(finite_rest_cover(oracle::toInt(F), W), Error);
      continue;
    }
    auto rc = finite_rest_cover(oracle::toInt(F), W);
    ++done;
    // W' by the formula, in coordinates where f_1 = 0
    const i64 f1 = F.front(), fk = F.back() - f1, k = static_cast<i64>(F.size());
    std::set<i64> removed;
    for (i64 i = 1; i <= k; ++i)
      for (i64 j = 0; j < k; ++j)
        if (j != i - 1) removed.insert(2 * i * fk - (F[j] - f1));
    for (i64 w = -30; w <= 80; ++w) {
      i64 n = w + f1;
      bool want = (W.member(w) || n >= 0) && !removed.count(n);
      ASSERT_EQ(rc.W.member(w), want) << "w=" << w;
    }
    auto Wp = oracle::to64(rc.W.enumerate(-30, 200));
    EXPECT_EQ(oracle::pair_sums(F, Wp, -20, 150), oracle::pair_sums(F, Wv, -20, 150));
    ASSERT_EQ(static_cast<i64>(rc.witnesses.size()), k);
    for (i64 i = 0; i < k; ++i) {
      auto rest = F;
      rest.erase(rest.begin() + i);
      i64 z = rc.witnesses[i].convert_to<i64>();
      EXPECT_EQ(z, 2 * (i + 1) * fk);
      EXPECT_TRUE(oracle::pair_sums(rest, Wp, z, z).empty());
      EXPECT_EQ(oracle::pair_count(F, Wp, z), 1);
    }
  }
  EXPECT_GT(done, 20);
}

TEST(RayCover, TilesAndIsMinimal) {
  // F + W = T on a descending ray, every f needed
  struct {
    std::vector<Int> F;
    RayTarget T;
  } cases[] = {
      {{0, 1}, RayTarget{1, -1, {}}},
      {{1, 4}, RayTarget{3, -3, {}}},
      {{-1, 3}, RayTarget{2, -2, {Int(-4)}}},
      {{3}, RayTarget{2, -1, {Int(-3), Int(-7)}}},
  };
  for (auto& cs : cases) {
    auto rc = minimal_ray_cover(cs.F, cs.T);
    ASSERT_TRUE(rc);
    auto Wv = oracle::to64(rc->W.enumerate(-200, 50));
    auto Fv = oracle::to64(cs.F);
    auto sums = oracle::pair_sums(Fv, Wv, -120, 40);
    std::vector<i64> want;
    for (i64 t = -120; t <= 40; ++t)
      if (cs.T.member(t)) want.push_back(t);
    EXPECT_EQ(sums, want);
    ASSERT_EQ(rc->witnesses.size(), cs.F.size());
    for (std::size_t i = 0; i < Fv.size(); ++i) {
      auto rest = Fv;
      rest.erase(rest.begin() + i);
      i64 z = rc->witnesses[i].convert_to<i64>();
      EXPECT_TRUE(cs.T.member(z));
      EXPECT_TRUE(oracle::pair_sums(rest, Wv, z, z).empty());
    }
  }
  EXPECT_FALSE(minimal_ray_cover({0, 1}, RayTarget{1, -1, {Int(-2)}}));
}

TEST(RemarkFamily, Examples) {
  struct {
    std::vector<Int> F;
    Window w;
  } cases[] = {{{1}, Window(-15, 15)}, {{1, 4}, Window(-20, 20)}, {{4}, Window(-20, 20)}, {{1, 7, 10}, Window(-20, 20)}};
  for (auto& cs : cases) {
    auto r = build_remark_family(cs.F, cs.w);
    EXPECT_EQ(r.report.verdict, MacVerdict::CertifiedOnWindow);
    EXPECT_TRUE(revalidate(r.report, r.C, r.Y));
    EXPECT_TRUE(r.Y.member(0));
    for (i64 v = -29; v <= 30; v += 3) EXPECT_TRUE(r.Y.member(v)) << v;
    // F + W' is the negative multiples of 3
    auto Wv = oracle::to64(r.W_prime.enumerate(-150, 10));
    auto sums = oracle::pair_sums(oracle::to64(cs.F), Wv, -90, 10);
    std::vector<i64> want;
    for (i64 t = -90; t < 0; ++t)
      if (t % 3 == 0) want.push_back(t);
    EXPECT_EQ(sums, want);
  }
  EXPECT_THROW(build_remark_family({2}, Window(-5, 5)), Error);
  EXPECT_THROW(build_remark_family({-2}, Window(-5, 5)), Error);
  EXPECT_THROW(build_remark_family({}, Window(-5, 5)), Error);
}

TEST(ThmSuff, Examples) {
  auto evens = ep_canonicalize(2, {Int(0)}, {}, {Int(-1)});
  auto ne = check_necessary(evens);
  ASSERT_TRUE(ne.pass);
  auto re = build_thm_suff(evens, ne, Window(-30, 30));
  EXPECT_EQ(re.report.verdict, MacVerdict::CertifiedOnWindow);
  EXPECT_TRUE(revalidate(re.report, re.C, re.W));

  auto five = ep_canonicalize(5, {Int(0), Int(1)}, {}, {Int(3)});
  auto n5 = check_necessary(five);
  ASSERT_TRUE(n5.pass);
  auto r5 = build_thm_suff(five, n5, Window(-30, 30));
  EXPECT_EQ(r5.report.verdict, MacVerdict::CertifiedOnWindow);
  EXPECT_TRUE(revalidate(r5.report, r5.C, r5.W));
  ASSERT_EQ(r5.classes.size(), 2u);
  for (auto& cl : r5.classes) {
    EXPECT_TRUE(r5.W.member(cl.y));
    EXPECT_EQ(cl.y, n5.y.at(mod(cl.a0, 5)));
  }
}

TEST(ThmSuff, Hypotheses) {
  auto no_y = ep_canonicalize(5, {Int(0), Int(1)}, {}, {Int(2)});
  auto n = check_necessary(no_y);
  EXPECT_FALSE(n.pass);
  EXPECT_THROW(build_thm_suff(no_y, n, Window(-5, 5)), Error);
  NecessaryResult fake;
  fake.pass = true;
  EXPECT_THROW(build_thm_suff(ep_canonicalize(4, {Int(0)}, {}, {Int(1)}), fake, Window(-5, 5)), Error);
  EXPECT_THROW(build_thm_suff(ep_canonicalize(7, {Int(0), Int(1), Int(2)}, {}, {Int(3)}), fake, Window(-5, 5)), Error);
  EXPECT_THROW(build_thm_suff(ep_canonicalize(5, {Int(0), Int(1)}, {}, {Int(2), Int(3)}), fake, Window(-5, 5)), Error);
  EXPECT_THROW(build_thm_suff(ep_canonicalize(5, {Int(0)}, {}, {Int(2)}), fake, Window(-5, 5)), Error);
}
