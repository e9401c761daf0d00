#include <gtest/gtest.h>

#include "crystal/wiring.hpp"

using namespace crystal;

TEST(Wiring, VerticesOfSl3) {
  const WiringDiagram d(parse_word("1,2,1"));
  ASSERT_EQ(d.size(), 3);
  EXPECT_EQ(d.vertex(1).inversion, (Inversion{1, 2}));
  EXPECT_EQ(d.vertex(2).inversion, (Inversion{1, 3}));
  EXPECT_EQ(d.vertex(3).inversion, (Inversion{2, 3}));
  EXPECT_EQ(d.vertex(1).level, 0);
  EXPECT_EQ(d.vertex(2).level, 1);
  EXPECT_EQ(d.vertex(3).level, 0);
}

TEST(Wiring, FirstVertexOfTheRankFiveExample) {
  const WiringDiagram d(parse_word("2,1,2,3,4,3,2,1,3,2"));
  EXPECT_EQ(d.vertex(1).inversion, (Inversion{2, 3}));
  EXPECT_EQ(d.vertex(1).level, 1);
}

TEST(Wiring, GapTablesSimulateTheWord) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& w : enumerate_words(n)) {
      const WiringDiagram d(w);
      // independent simulation: heights swap at i_k - 1 and i_k
      std::vector<int> at(n);
      std::iota(at.begin(), at.end(), 1);
      for (int h = 0; h < n; ++h) EXPECT_EQ(d.wire_at(0, h), h + 1);
      std::set<Inversion> seen;
      for (int k = 1; k <= w.length(); ++k) {
        const int i = w.letter(k);
        const Inversion inv{std::min(at[i - 1], at[i]), std::max(at[i - 1], at[i])};
        EXPECT_EQ(d.vertex(k).inversion, inv);
        EXPECT_EQ(d.vertex(k).level, i - 1);
        EXPECT_TRUE(seen.insert(inv).second);
        std::swap(at[i - 1], at[i]);
        for (int h = 0; h < n; ++h) EXPECT_EQ(d.wire_at(k, h), at[h]);
      }
      for (int p = 1; p <= n; ++p) EXPECT_EQ(d.height_of(p, w.length()), n - p);
    }
}

TEST(Wiring, LeftmostAndRightmostVertices) {
  const WiringDiagram d(parse_word("1,2,1"));
  EXPECT_EQ(d.leftmost(1), 1);
  EXPECT_EQ(d.rightmost(1), 2);
  EXPECT_EQ(d.leftmost(3), 2);
  EXPECT_EQ(d.rightmost(3), 3);
  EXPECT_EQ(d.wire_vertices(2), (std::vector<int>{1, 3}));
}

TEST(Orientation, RightwardWiresAreAtMostA) {
  const WiringDiagram d(parse_word("1,2,1"));
  const auto o2 = orient(d, 2, false);
  EXPECT_TRUE(o2.rightward(1));
  EXPECT_TRUE(o2.rightward(2));
  EXPECT_FALSE(o2.rightward(3));
  const auto o1 = orient(d, 1, false);
  EXPECT_TRUE(o1.rightward(1));
  EXPECT_FALSE(o1.rightward(2));
  const auto r1 = orient(d, 1, true);
  EXPECT_FALSE(r1.rightward(1));
  EXPECT_TRUE(r1.rightward(2));
  EXPECT_THROW(orient(d, 3, false), Error);
  for (const auto& w : enumerate_words(4)) {
    const WiringDiagram dd(w);
    for (int a = 1; a < 4; ++a) {
      const auto o = orient(dd, a, false);
      int count = 0;
      for (int p = 1; p <= 4; ++p) count += o.rightward(p);
      EXPECT_EQ(count, a);
    }
  }
}

TEST(Orientation, NextVertexFollowsTheWire) {
  const WiringDiagram d(parse_word("1,2,1"));
  const auto o = orient(d, 2, false);
  EXPECT_EQ(o.next(1, 1), std::optional<int>(2));
  EXPECT_EQ(o.next(1, 2), std::nullopt);
  EXPECT_EQ(o.next(3, 3), std::optional<int>(2));
}

TEST(Geometry, ExactCoordinates) {
  const WiringDiagram d(parse_word("1,2,1"));
  const auto geo = planar_geometry(d);
  EXPECT_EQ(geo.vertex_point(2).x, Rational(2));
  EXPECT_EQ(geo.vertex_point(2).y, Rational(3, 2));
  const auto line = geo.polyline(1);
  EXPECT_EQ(line.front().x, Rational(0));
  EXPECT_EQ(line.front().y, Rational(0));
  EXPECT_EQ(line.back().x, Rational(4));
  EXPECT_EQ(line.back().y, Rational(2));
}

TEST(Geometry, ClosedPointInPolygon) {
  const std::vector<Point> square{{Rational(0), Rational(0)}, {Rational(2), Rational(0)}, {Rational(2), Rational(2)}, {Rational(0), Rational(2)}};
  EXPECT_TRUE(inside_closed({Rational(1), Rational(1)}, square));
  EXPECT_TRUE(inside_closed({Rational(2), Rational(1)}, square));
  EXPECT_TRUE(inside_closed({Rational(0), Rational(0)}, square));
  EXPECT_FALSE(inside_closed({Rational(3), Rational(1)}, square));
  EXPECT_FALSE(inside_closed({Rational(1), Rational(5, 2)}, square));
}

TEST(Wiring, AsciiHasOneRowPerWireHeight) {
  const WiringDiagram d(parse_word("1,2,1"));
  const auto art = d.ascii();
  EXPECT_EQ(std::count(art.begin(), art.end(), '\n'), 3);
}
