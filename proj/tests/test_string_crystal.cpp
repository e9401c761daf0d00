#include <gtest/gtest.h>

#include <random>

#include "crystal/star_involution.hpp"

using namespace crystal;

namespace {

const ReducedWord w121 = parse_word("1,2,1");
const ReducedWord w212 = parse_word("2,1,2");

// Hand-written statistics for (1,2,1).
IntVec eta121(const IntVec& x) { return {x[0] - x[1] + 2 * x[2], x[1] - x[2], x[2]}; }
int eps_star2(const IntVec& x) { return std::max(x[1] - x[0], x[2]); }

std::vector<IntVec> box(int len, int bound) {
  std::vector<IntVec> out{{}};
  for (int k = 0; k < len; ++k) {
    std::vector<IntVec> next;
    for (const auto& p : out)
      for (int v = 0; v <= bound; ++v) {
        auto q = p;
        q.push_back(v);
        next.push_back(q);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Eta, Sl3Values) {
  EXPECT_EQ(eta(w121, {1, 1, 0}), (IntVec{0, 1, 0}));
  EXPECT_EQ(eta(w121, {0, 0, 0}), (IntVec{0, 0, 0}));
  for (const auto& x : box(3, 3)) EXPECT_EQ(eta(w121, x), eta121(x));
  for (const auto& w : enumerate_words(4)) {
    const IntVec x{3, 1, 4, 1, 5, 9};
    EXPECT_EQ(eta(w, x).back(), 9);
  }
}

TEST(Weights, PairingValues) {
  EXPECT_EQ(wt_pairing(w121, {2, 2}, {2, 1, 0}, 2), 2);
  EXPECT_EQ(wt_pairing(w121, {0, 0}, {1, 0, 0}, 1), -2);
  EXPECT_EQ(wt_pairing(w121, {3, 5}, {0, 0, 0}, 2), 5);
  EXPECT_THROW(wt_pairing(w121, {1, -1}, {0, 0, 0}, 1), Error);
  EXPECT_THROW(wt_pairing(w121, {1, 1, 1}, {0, 0, 0}, 1), Error);
}

TEST(BInfinity, Operators) {
  EXPECT_EQ(binf_f(w121, {0, 0, 0}, 1), (IntVec{1, 0, 0}));
  EXPECT_EQ(binf_f(w121, {0, 1, 0}, 1), (IntVec{0, 1, 1}));
  EXPECT_EQ(binf_e(w121, {0, 0, 0}, 1), std::nullopt);
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    const IntVec x = random_cone_point(w121, rng, t % 10);
    for (int a = 1; a <= 2; ++a) {
      EXPECT_EQ(binf_e(w121, binf_f(w121, x, a), a), x);
      int expect = -1 << 20;
      for (int k = 0; k < 3; ++k)
        if (w121.letters()[k] == a) expect = std::max(expect, eta121(x)[k]);
      EXPECT_EQ(binf_eps(w121, x, a), expect);
    }
  }
}

TEST(Psi, InvolutiveThreeMove) {
  EXPECT_EQ(psi(w121, w212, {2, 3, 1}), (IntVec{1, 3, 2}));
  EXPECT_EQ(psi(w212, w121, {1, 3, 2}), (IntVec{2, 3, 1}));
  EXPECT_EQ(psi(w121, w121, {4, 2, 1}), (IntVec{4, 2, 1}));
  EXPECT_THROW(psi(w121, w212, {0, 0, 1}), Error);
}

TEST(Psi, LiteralVariantIsNotInvolutive) {
  Options lit;
  lit.psi = PsiVariant::literal;
  const IntVec y = psi(w121, w212, {2, 3, 1}, lit);
  bool back = false;
  try {
    back = psi(w212, w121, y, lit) == IntVec{2, 3, 1};
  } catch (const Error&) {
  }
  EXPECT_FALSE(back);
}

TEST(Psi, TwoMoveSwaps) {
  const auto w = parse_word("1,3,2,1,3,2");
  const IntVec x = psi_move(w.letters(), {MoveKind::two, 1}, {1, 2, 3, 4, 5, 6});
  EXPECT_EQ(x, (IntVec{2, 1, 3, 4, 5, 6}));
}

TEST(StarStructure, EpsilonBothRoutes) {
  for (const auto& x : box(3, 4)) {
    if (!context(w121).in_string_cone(x)) continue;
    EXPECT_EQ(eps_star(w121, x, 1), x[0]);
    EXPECT_EQ(eps_star_psi(w121, x, 1), x[0]);
    EXPECT_EQ(eps_star(w121, x, 2), eps_star2(x));
    EXPECT_EQ(eps_star_psi(w121, x, 2), eps_star2(x));
  }
  EXPECT_EQ(eps_star(w121, {1, 2, 0}, 2), 1);
}

TEST(StarStructure, IntroductionBranches) {
  EXPECT_EQ(star_f(w121, {1, 1, 0}, 2), (IntVec{1, 2, 0}));
  EXPECT_EQ(star_f(w121, {2, 1, 0}, 2), (IntVec{1, 2, 1}));
  EXPECT_EQ(star_e(w121, {1, 2, 1}, 2), (IntVec{2, 1, 0}));
  EXPECT_EQ(star_e(w121, {0, 0, 0}, 2), std::nullopt);
}

TEST(StarStructure, LiteralESignDoesNotInvertF) {
  Options lit;
  lit.e_sign = ESign::literal;
  EXPECT_NE(star_e(w121, star_f(w121, {2, 1, 0}, 2), 2, lit), std::optional<IntVec>(IntVec{2, 1, 0}));
}

TEST(StarStructure, RoutesAgreeOnRankFour) {
  std::mt19937 rng(9);
  for (const auto& w : enumerate_words(4))
    for (int t = 0; t < 100; ++t) {
      const IntVec x = random_cone_point(w, rng, t % 12);
      for (int a = 1; a < 4; ++a) {
        EXPECT_EQ(star_f(w, x, a), star_f_psi(w, x, a));
        EXPECT_EQ(star_e(w, x, a), star_e_psi(w, x, a));
        EXPECT_EQ(star_e(w, star_f(w, x, a), a), x);
      }
    }
}

TEST(BZ, Operators) {
  EXPECT_EQ(bz_f(w121, {2, 2}, {1, 1, 0}, 2), (IntVec{1, 2, 0}));
  // phi_1 = eps*_1 + wt = 1 + 0 at (1,1,0) for lambda = (1,1)
  EXPECT_EQ(bz_phi(w121, {1, 1}, {1, 1, 0}, 1), 1);
  EXPECT_EQ(bz_f(w121, {1, 1}, {1, 1, 0}, 1), (IntVec{2, 1, 0}));
  EXPECT_EQ(bz_eps(w121, {1, 1}, {0, 0, 0}, 1), 0);
  EXPECT_EQ(bz_eps(w121, {1, 1}, {0, 0, 0}, 2), 0);
  EXPECT_THROW(bz_f(w121, {1, 1}, {5, 0, 0}, 1), Error);
}

TEST(NZ, Operators) {
  EXPECT_EQ(nz_f(w121, {1, 1}, {0, 0, 0}, 2), (IntVec{0, 1, 0}));
  for (int a = 1; a <= 2; ++a) EXPECT_EQ(nz_e(w121, {1, 1}, {0, 0, 0}, a), std::nullopt);
  EXPECT_THROW(nz_e(w121, {1, 1}, {2, 0, 0}, 1), Error);
}

TEST(NZ, LiteralTieBreakLeavesTheCone) {
  Options lit;
  lit.nz = NzTieBreak::literal;
  const auto y = nz_f(w121, {1, 1}, {0, 0, 0}, 1, lit);
  ASSERT_TRUE(y);
  EXPECT_EQ(*y, (IntVec{0, 0, 1}));
  EXPECT_FALSE(context(w121).in_string_cone(*y));
  EXPECT_EQ(nz_f(w121, {1, 1}, {0, 0, 0}, 1), (IntVec{1, 0, 0}));
}
