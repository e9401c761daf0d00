#include <gtest/gtest.h>

#include "crystal/words.hpp"

using namespace crystal;

namespace {

// Independent evaluation of p_j = s_{i_1} ... s_{i_{j-1}}(i_j), q_j likewise with i_j + 1.
std::vector<Inversion> reflections_by_formula(int n, const std::vector<int>& letters) {
  std::vector<Inversion> out;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    auto apply = [&](int x) {
      for (std::size_t t = j; t-- > 0;) {
        const int i = letters[t];
        if (x == i) x = i + 1;
        else if (x == i + 1) x = i;
      }
      return x;
    };
    const int p = apply(letters[j]), q = apply(letters[j] + 1);
    out.push_back({std::min(p, q), std::max(p, q)});
  }
  (void)n;
  return out;
}

}  // namespace

TEST(Permutation, ComposesTranspositionsInWordOrder) {
  EXPECT_EQ(permutation_of(parse_word("1,2,1")).images(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(permutation_of(parse_word("1")).images(), (std::vector<int>{2, 1}));
  EXPECT_EQ(permutation_of(parse_word("2,1,2,3,4,3,2,1,3,2")).images(), (std::vector<int>{5, 4, 3, 2, 1}));
}

TEST(Permutation, RejectsLettersOutOfRange) {
  const std::vector<int> bad{1, 3, 1};
  EXPECT_THROW(permutation_of(3, bad), Error);
}

TEST(ReducedWord, RecognizesLongestWords) {
  EXPECT_TRUE(is_reduced_longest(3, std::vector<int>{1, 2, 1}));
  EXPECT_FALSE(is_reduced_longest(3, std::vector<int>{1, 1, 2}));
  EXPECT_FALSE(is_reduced_longest(3, std::vector<int>{1, 2}));
  EXPECT_TRUE(is_reduced_longest(5, std::vector<int>{2, 1, 2, 3, 4, 3, 2, 1, 3, 2}));
  EXPECT_THROW(ReducedWord(3, {1, 1, 2}), Error);
}

TEST(ReducedWord, ParseInfersRank) {
  const auto w = parse_word("1,2,1,3,2,1");
  EXPECT_EQ(w.n(), 4);
  EXPECT_EQ(w.length(), 6);
  EXPECT_EQ(w.str(), "1,2,1,3,2,1");
  EXPECT_THROW(parse_word("1,2"), Error);
  EXPECT_THROW(parse_word("1,x,1"), Error);
}

TEST(Moves, ThreeMoveOnSl3) {
  const auto w = parse_word("1,2,1");
  const Move m{MoveKind::three, 1};
  EXPECT_EQ(apply_move(w, m), parse_word("2,1,2"));
  EXPECT_EQ(apply_move(apply_move(w, m), m), w);
}

TEST(Moves, TwoMoveSwapsCommutingLetters) {
  const auto w = parse_word("1,3,2,1,3,2");
  const auto v = apply_move(w, {MoveKind::two, 1});
  EXPECT_EQ(v.letters(), (std::vector<int>{3, 1, 2, 1, 3, 2}));
  EXPECT_TRUE(is_reduced_longest(4, v.letters()));
}

TEST(Moves, InapplicableMoveNamesKindAndPosition) {
  const auto w = parse_word("1,2,1");
  try {
    apply_move(w, {MoveKind::two, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("2-move@1"), std::string::npos);
  }
}

TEST(Moves, PathsReplayBetweenAllWordsOfRankFour) {
  const auto ws = enumerate_words(4);
  for (const auto& from : ws)
    for (const auto& to : ws) {
      ReducedWord cur = from;
      for (const auto& m : move_path(from, to)) cur = apply_move(cur, m);
      EXPECT_EQ(cur, to);
    }
  EXPECT_TRUE(move_path(parse_word("1,2,1"), parse_word("1,2,1")).empty());
  const auto p = move_path(parse_word("1,2,1"), parse_word("2,1,2"));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].kind, MoveKind::three);
  EXPECT_FALSE(move_path(iota0(4), parse_word("3,2,3,1,2,3")).empty());
}

TEST(Moves, PathToInitialLetter) {
  for (const auto& w : enumerate_words(4))
    for (int a = 1; a <= 3; ++a) {
      auto [target, moves] = path_to_initial_letter(w, a);
      EXPECT_EQ(target.letter(1), a);
      ReducedWord cur = w;
      for (const auto& m : moves) cur = apply_move(cur, m);
      EXPECT_EQ(cur, target);
    }
}

TEST(ReflectionOrdering, MatchesFormulaAndKnownPrefix) {
  const auto w = parse_word("2,1,2,3,4,3,2,1,3,2");
  const auto ord = reflection_ordering(w);
  const std::vector<Inversion> prefix{{2, 3}, {1, 3}, {1, 2}, {1, 4}, {1, 5}, {4, 5}, {2, 5}, {3, 5}, {2, 4}};
  ASSERT_EQ(ord.size(), 10u);
  EXPECT_TRUE(std::equal(prefix.begin(), prefix.end(), ord.begin()));
  EXPECT_EQ(ord[9], (Inversion{3, 4}));
  EXPECT_EQ(reflection_ordering(parse_word("1,2,1")), (std::vector<Inversion>{{1, 2}, {1, 3}, {2, 3}}));
  for (int n = 3; n <= 5; ++n)
    for (const auto& v : enumerate_words(n)) EXPECT_EQ(reflection_ordering(v), reflections_by_formula(n, v.letters()));
}

TEST(Enumeration, CountsAndClosure) {
  EXPECT_EQ(enumerate_words(3), (std::vector<ReducedWord>{parse_word("1,2,1"), parse_word("2,1,2")}));
  EXPECT_EQ(enumerate_words(4).size(), 16u);
  EXPECT_EQ(enumerate_words(5).size(), 768u);
  for (const auto& w : enumerate_words(4)) EXPECT_TRUE(is_reduced_longest(4, w.letters()));
  EXPECT_THROW(enumerate_words(7), Error);
}

TEST(Iota0, WordAndInvolutions) {
  EXPECT_EQ(iota0(3).letters(), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(iota0(4).letters(), (std::vector<int>{1, 2, 1, 3, 2, 1}));
  EXPECT_EQ(star_word(parse_word("1,2,1")), parse_word("2,1,2"));
  EXPECT_EQ(op_word(parse_word("1,3,2,1,3,2")), parse_word("2,3,1,2,3,1"));
}
