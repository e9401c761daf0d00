#pragma once

// Reduced words of the longest permutation w0 in S_n, braid moves between
// them, and the reflection orderings they induce on inversions.

#include <algorithm>
#include <compare>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "crystal/core.hpp"

namespace crystal {

/// One-line notation: images()[x-1] is the image of x.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
        throw Error("permutation: images are not a bijection of [n]");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }

  static Permutation longest(int n) {
    std::vector<int> im(n);
    for (int k = 0; k < n; ++k) im[k] = n - k;
    return Permutation(std::move(im));
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_.at(x - 1); }
  const std::vector<int>& images() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct Inversion {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const Inversion&, const Inversion&) = default;
};

inline std::string to_string(const Inversion& inv) {
  return "(" + std::to_string(inv.p) + "," + std::to_string(inv.q) + ")";
}

constexpr int positive_root_count(int n) noexcept { return n * (n - 1) / 2; }

/// Composition of simple transpositions, rightmost factor applied first.
/// Letters must lie in [n-1]; reducedness is not required.
inline Permutation permutation_of(int n, std::span<const int> letters) {
  if (n < 2) throw Error("rank parameter n must be at least 2");
  for (int l : letters)
    if (l < 1 || l > n - 1)
      throw Error("letter " + std::to_string(l) + " out of range [1," + std::to_string(n - 1) + "]");
  std::vector<int> im(n);
  for (int x = 1; x <= n; ++x) {
    int y = x;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (y == *it)
        y = *it + 1;
      else if (y == *it + 1)
        y = *it;
    }
    im[x - 1] = y;
  }
  return Permutation(std::move(im));
}

/// True iff the letters spell a reduced word of w0. Never throws.
inline bool is_reduced_longest(int n, std::span<const int> letters) {
  if (n < 2 || static_cast<int>(letters.size()) != positive_root_count(n)) return false;
  for (int l : letters)
    if (l < 1 || l > n - 1) return false;
  // Scan the wiring: every pair may swap at most once.
  std::vector<int> at_height(n);
  std::iota(at_height.begin(), at_height.end(), 1);
  std::vector<std::vector<bool>> crossed(n + 1, std::vector<bool>(n + 1, false));
  for (int l : letters) {
    int lo = at_height[l - 1], hi = at_height[l];
    if (lo > hi || crossed[lo][hi]) return false;
    crossed[lo][hi] = true;
    std::swap(at_height[l - 1], at_height[l]);
  }
  return permutation_of(n, letters) == Permutation::longest(n);
}

class ReducedWord {
 public:
  ReducedWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    if (!is_reduced_longest(n_, letters_))
      throw Error("not a reduced word for w0 with n=" + std::to_string(n_) + ": " + join(letters_));
  }

  int n() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  int rank() const noexcept { return n_ - 1; }
  /// 1-based position.
  int letter(int position) const { return letters_.at(position - 1); }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::string str() const { return join(letters_); }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord& a, const ReducedWord& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  int n_;
  std::vector<int> letters_;
};

/// Parses a comma-separated word and infers n from its length.
inline ReducedWord parse_word(std::string_view text) {
  IntVec letters = parse_int_list(text);
  int n = 2;
  while (positive_root_count(n) < static_cast<int>(letters.size())) ++n;
  return ReducedWord(n, std::move(letters));
}

inline Permutation permutation_of(const ReducedWord& w) { return permutation_of(w.n(), w.letters()); }

enum class MoveKind { two, three };

struct Move {
  MoveKind kind = MoveKind::two;
  int position = 1;  // 1-based index of the first letter touched
  friend bool operator==(const Move&, const Move&) = default;
};

inline std::string to_string(const Move& m) {
  return std::string(m.kind == MoveKind::two ? "2-move@" : "3-move@") + std::to_string(m.position);
}

inline bool move_applicable(std::span<const int> letters, const Move& m) {
  const int len = static_cast<int>(letters.size());
  const int k = m.position - 1;
  if (m.kind == MoveKind::two) {
    if (k < 0 || k + 1 >= len) return false;
    return std::abs(letters[k] - letters[k + 1]) > 1;
  }
  if (k < 0 || k + 2 >= len) return false;
  return letters[k] == letters[k + 2] && std::abs(letters[k] - letters[k + 1]) == 1;
}

inline std::vector<int> apply_move_letters(std::vector<int> letters, const Move& m) {
  if (!move_applicable(letters, m))
    throw Error("move " + to_string(m) + " is not applicable to " + join(letters));
  const int k = m.position - 1;
  if (m.kind == MoveKind::two) {
    std::swap(letters[k], letters[k + 1]);
  } else {
    const int outer = letters[k];
    letters[k] = letters[k + 2] = letters[k + 1];
    letters[k + 1] = outer;
  }
  return letters;
}

inline ReducedWord apply_move(const ReducedWord& w, const Move& m) {
  return ReducedWord(w.n(), apply_move_letters(w.letters(), m));
}

/// 2-moves in increasing position, then 3-moves in increasing position.
inline std::vector<Move> applicable_moves(std::span<const int> letters) {
  std::vector<Move> out;
  const int len = static_cast<int>(letters.size());
  for (MoveKind kind : {MoveKind::two, MoveKind::three})
    for (int pos = 1; pos < len; ++pos)
      if (Move m{kind, pos}; move_applicable(letters, m)) out.push_back(m);
  return out;
}

namespace detail {

// Breadth-first search in the move graph from `from` until `accept` holds.
// Neighbours are explored in applicable_moves() order, so results are reproducible.
template <class Accept>
std::optional<std::pair<std::vector<int>, std::vector<Move>>> bfs_moves(const std::vector<int>& from, Accept accept,
                                                                         bool two_moves_only = false) {
  std::map<std::vector<int>, std::pair<std::vector<int>, Move>> parent;
  std::deque<std::vector<int>> queue{from};
  parent.emplace(from, std::make_pair(std::vector<int>{}, Move{}));
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    if (accept(cur)) {
      std::vector<Move> path;
      for (std::vector<int> v = cur; v != from;) {
        const auto& [prev, mv] = parent.at(v);
        path.push_back(mv);
        v = prev;
      }
      std::reverse(path.begin(), path.end());
      return std::make_pair(cur, std::move(path));
    }
    for (const Move& m : applicable_moves(cur)) {
      if (two_moves_only && m.kind != MoveKind::two) continue;
      std::vector<int> next = apply_move_letters(cur, m);
      if (parent.contains(next)) continue;
      parent.emplace(next, std::make_pair(cur, m));
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Shortest sequence of moves turning `from` into `to`.
inline std::vector<Move> move_path(const ReducedWord& from, const ReducedWord& to) {
  if (from.n() != to.n()) throw Error("move_path: words have different rank");
  auto found = detail::bfs_moves(from.letters(), [&](const std::vector<int>& w) { return w == to.letters(); });
  if (!found) throw Error("internal error: " + to.str() + " unreachable from " + from.str());
  return std::move(found->second);
}

/// Shortest path using 2-moves only; nullopt if none exists.
inline std::optional<std::vector<Move>> commutation_path(const ReducedWord& from, const ReducedWord& to) {
  if (from.n() != to.n()) throw Error("commutation_path: words have different rank");
  auto found = detail::bfs_moves(
      from.letters(), [&](const std::vector<int>& w) { return w == to.letters(); }, true);
  if (!found) return std::nullopt;
  return std::move(found->second);
}

/// Nearest word (in the move graph) whose first letter is `a`, with the moves reaching it.
inline std::pair<ReducedWord, std::vector<Move>> path_to_initial_letter(const ReducedWord& from, int a) {
  if (a < 1 || a > from.rank()) throw Error("color out of range");
  auto found = detail::bfs_moves(from.letters(), [&](const std::vector<int>& w) { return w.front() == a; });
  if (!found) throw Error("internal error: no word starting with " + std::to_string(a));
  return {ReducedWord(from.n(), std::move(found->first)), std::move(found->second)};
}

/// p_j = s_{i_1}...s_{i_{j-1}}(i_j), q_j = s_{i_1}...s_{i_{j-1}}(i_j + 1).
inline std::vector<Inversion> reflection_ordering(const ReducedWord& w) {
  std::vector<Inversion> out;
  out.reserve(w.length());
  const auto& letters = w.letters();
  for (int j = 0; j < w.length(); ++j) {
    std::span<const int> prefix(letters.data(), j);
    Permutation sigma = permutation_of(w.n(), prefix);
    out.push_back({sigma(letters[j]), sigma(letters[j] + 1)});
  }
  return out;
}

struct EnumerationLimits {
  int max_rank = 6;
};

/// All reduced words of w0, as the move-closure of one seed word, sorted.
inline std::vector<ReducedWord> enumerate_words(int n, EnumerationLimits limits = {}) {
  if (n < 2 || n > limits.max_rank)
    throw Error("enumerate_words: n=" + std::to_string(n) + " outside supported range [2," +
                std::to_string(limits.max_rank) + "]");
  std::vector<int> seed;
  for (int k = 1; k < n; ++k)
    for (int j = k; j >= 1; --j) seed.push_back(j);
  std::set<std::vector<int>> seen{seed};
  std::vector<std::vector<int>> frontier{seed};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (const Move& m : applicable_moves(w)) {
        auto v = apply_move_letters(w, m);
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  std::vector<ReducedWord> out;
  out.reserve(seen.size());
  for (const auto& w : seen) out.emplace_back(n, w);
  return out;
}

/// (1, 2,1, 3,2,1, ..., n-1,...,1)
inline ReducedWord iota0(int n) {
  if (n < 2) throw Error("iota0: n must be at least 2");
  std::vector<int> letters;
  for (int k = 1; k < n; ++k)
    for (int j = k; j >= 1; --j) letters.push_back(j);
  return ReducedWord(n, std::move(letters));
}

/// Letterwise a -> n - a.
inline ReducedWord star_word(const ReducedWord& w) {
  std::vector<int> letters = w.letters();
  for (int& l : letters) l = w.n() - l;
  return ReducedWord(w.n(), std::move(letters));
}

inline ReducedWord op_word(const ReducedWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  return ReducedWord(w.n(), std::move(letters));
}

}  // namespace crystal
