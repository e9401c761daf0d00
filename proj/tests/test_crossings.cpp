#include <gtest/gtest.h>

#include "crystal/context.hpp"
#include "crystal/lusztig_crystal.hpp"

using namespace crystal;

namespace {

const CrossingPath* find(const std::vector<CrossingPath>& ps, const IntVec& positions, const IntVec& arrivals) {
  for (const auto& g : ps)
    if (g.positions() == positions && g.arrival_wires() == arrivals) return &g;
  return nullptr;
}

}  // namespace

TEST(Crossings, ColorOneOfSl3IsASingleVertex) {
  const auto ps = enumerate_crossings(parse_word("1,2,1"), 1);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0].positions(), IntVec{1});
  EXPECT_EQ(ps[0].arrival_wires(), IntVec{1});
  EXPECT_EQ(ps[0].r(), (IntVec{1, 0, 0}));
  EXPECT_EQ(ps[0].s(), (IntVec{1, 0, 0}));
}

TEST(Crossings, ColorTwoOfSl3) {
  const auto ps = enumerate_crossings(parse_word("1,2,1"), 2);
  ASSERT_EQ(ps.size(), 2u);
  const auto* ga = find(ps, {1, 2}, {2, 1});
  const auto* gb = find(ps, {1, 3, 2}, {2, 2, 3});
  ASSERT_TRUE(ga && gb);
  EXPECT_EQ(turning_points(*ga), (std::vector<int>{1, 2}));
  EXPECT_EQ(ga->r(), (IntVec{-1, 1, 0}));
  EXPECT_EQ(ga->s(), (IntVec{0, 1, 0}));
  EXPECT_EQ(gb->r(), (IntVec{0, 0, 1}));
  EXPECT_EQ(gb->s(), (IntVec{-1, 1, 1}));
  const auto& geo = context(parse_word("1,2,1")).geometry();
  EXPECT_TRUE(precedes(geo, *ga, *gb));
  EXPECT_FALSE(precedes(geo, *gb, *ga));
  EXPECT_TRUE(precedes(geo, *gb, *gb));
}

TEST(Crossings, RankFiveExample) {
  const auto w = parse_word("2,1,2,3,4,3,2,1,3,2");
  const auto ps = enumerate_crossings(w, 3);
  const auto* g = find(ps, {1, 2, 3, 7, 9, 6, 4}, {3, 3, 1, 2, 2, 4, 4});
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(turning_points(*g), (std::vector<int>{2, 3, 9}));
  EXPECT_EQ(g->r(), (IntVec{0, -1, 1, 0, 0, 0, 0, 0, 1, 0}));
  EXPECT_EQ(g->s(), (IntVec{-1, 0, 0, 1, 0, -1, 1, 0, 1, 0}));
  const auto* gp = find(ps, {1, 3, 4}, {3, 2, 1});
  ASSERT_NE(gp, nullptr);
  const auto& geo = context(w).geometry();
  EXPECT_TRUE(precedes(geo, *gp, *g));
  EXPECT_FALSE(precedes(geo, *g, *gp));
}

TEST(Rigorous, Sl3InequalityVectors) {
  const auto w = parse_word("1,2,1");
  std::set<IntVec> r1, r2;
  for (const auto& g : enumerate_rigorous(w, 1)) {
    EXPECT_EQ(g.kind(), PathKind::rigorous);
    r1.insert(g.r());
  }
  for (const auto& g : enumerate_rigorous(w, 2)) r2.insert(g.r());
  EXPECT_EQ(r1, (std::set<IntVec>{{1, 0, 0}, {0, 1, -1}}));
  EXPECT_EQ(r2, (std::set<IntVec>{{0, 0, 1}}));
}

TEST(Crossings, StraightPassRule) {
  EXPECT_TRUE(straight_pass_allowed(2, 3, 1));
  EXPECT_FALSE(straight_pass_allowed(2, 1, 2));
  EXPECT_TRUE(straight_pass_allowed(2, 1, 3));
  EXPECT_FALSE(straight_pass_allowed(2, 4, 3));
}

TEST(Crossings, IdentitiesOverAllWordsUpToRankFive) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& w : enumerate_words(n)) {
      if (n == 5 && w.letters()[0] != 2) continue;  // a third of rank five keeps this quick
      const auto& ctx = context(w);
      for (int a = 1; a < n; ++a) {
        ASSERT_FALSE(ctx.crossings(a).paths.empty());
        ASSERT_FALSE(ctx.rigorous(a).paths.empty());
        for (const auto& g : ctx.crossings(a).paths) {
          EXPECT_EQ(g.r(), F_map(w, g.s())) << w.str();
          for (int b = 1; b < n; ++b) {
            int sum = 0;
            for (int k = 0; k < w.length(); ++k)
              if (w.letters()[k] == b) sum += g.s()[k];
            EXPECT_EQ(sum, a == b ? 1 : 0);
          }
          EXPECT_FALSE(validate_path(ctx.diagram(), g));
          EXPECT_EQ(level_in(ctx.diagram(), g, 0), a);
          EXPECT_EQ(level_out(ctx.diagram(), g, g.length() - 1), a + 1);
        }
      }
    }
}

TEST(Crossings, ValidatorRejectsMalformedPaths) {
  const WiringDiagram d(parse_word("1,2,1"));
  EXPECT_FALSE(validate_path(d, CrossingPath(3, 2, PathKind::crossing, {{1, 2, 1}, {2, 1, 3}})));
  EXPECT_TRUE(validate_path(d, CrossingPath(3, 2, PathKind::crossing, {{2, 1, 3}})));
  EXPECT_TRUE(validate_path(d, CrossingPath(3, 2, PathKind::crossing, {{1, 2, 1}, {3, 2, 3}})));
  EXPECT_TRUE(validate_path(d, CrossingPath(3, 2, PathKind::crossing, {{1, 2, 3}, {2, 1, 3}})));
}

// Every oriented simple path from start to target that the validator accepts is enumerated.
TEST(Crossings, EnumerationIsCompleteAgainstBruteForce) {
  for (const auto& w : enumerate_words(4)) {
    const WiringDiagram d(w);
    for (int a = 1; a < 4; ++a) {
      const auto ps = enumerate_crossings(d, a);
      std::set<std::vector<PathStep>> found;
      for (const auto& g : ps) found.insert(g.steps());
      std::set<std::vector<PathStep>> brute;
      std::vector<PathStep> cur{{d.leftmost(a), a, d.vertex(d.leftmost(a)).other(a)}};
      std::function<void()> rec = [&] {
        const CrossingPath g(4, a, PathKind::crossing, cur);
        if (cur.back().position == d.leftmost(a + 1)) {
          if (!validate_path(d, g)) brute.insert(cur);
          return;
        }
        const Vertex& v = d.vertex(cur.back().position);
        for (int wire : {v.inversion.p, v.inversion.q}) {
          const auto nxt = orient(d, a, false).next(wire, v.position);
          if (!nxt) continue;
          bool used = false;
          for (const auto& st : cur) used = used || st.position == *nxt;
          if (used) continue;
          cur.push_back({*nxt, wire, d.vertex(*nxt).other(wire)});
          rec();
          cur.pop_back();
        }
      };
      rec();
      EXPECT_EQ(found, brute) << w.str() << " color " << a;
    }
  }
}

TEST(Order, PartialOrderOnAllPathSetsOfRankFour) {
  for (const auto& w : enumerate_words(4)) {
    const auto& ctx = context(w);
    for (int a = 1; a < 4; ++a)
      for (const CrossingSet* set : {&ctx.crossings(a), &ctx.rigorous(a)}) {
        const auto& o = set->order;
        const std::size_t m = o.size();
        for (std::size_t i = 0; i < m; ++i) {
          EXPECT_TRUE(o[i][i]);
          for (std::size_t j = 0; j < m; ++j) {
            if (i != j) EXPECT_FALSE(o[i][j] && o[j][i]);
            for (std::size_t k = 0; k < m; ++k)
              if (o[i][j] && o[j][k]) EXPECT_TRUE(o[i][k]);
          }
        }
      }
  }
}

TEST(SelectExtremal, TieBreaking) {
  const auto& set = context(parse_word("1,2,1")).crossings(2);
  const auto ia = set.paths[0].positions() == IntVec{1, 2} ? 0u : 1u;
  auto e = select_extremal({1, 1, 0}, set, Weighting::r, Extremum::min);
  EXPECT_EQ(e.value, 0);
  EXPECT_EQ(e.index, ia);
  e = select_extremal({2, 1, 0}, set, Weighting::r, Extremum::min);
  EXPECT_EQ(e.value, 0);
  EXPECT_EQ(e.index, 1 - ia);
  e = select_extremal({0, 0, 0}, set, Weighting::r, Extremum::max);
  EXPECT_EQ(e.index, 1 - ia);
  EXPECT_THROW(select_extremal({0, 0, 0}, CrossingSet{}, Weighting::r, Extremum::min), Error);
}
