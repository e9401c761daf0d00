#pragma once

// Per-word data computed once and shared: diagram, geometry, crossing sets,
// rigorous path sets and move paths to words with a given first letter.

#include <map>
#include <memory>
#include <mutex>

#include "crystal/crossings.hpp"

namespace crystal {

class WordContext {
 public:
  explicit WordContext(const ReducedWord& w) : word_(w), diagram_(w), geometry_(diagram_) {
    const int rank = w.rank();
    crossings_.resize(rank + 1);
    rigorous_.resize(rank + 1);
    for (int a = 1; a <= rank; ++a) {
      crossings_[a] = CrossingSet(geometry_, enumerate_crossings(diagram_, a));
      rigorous_[a] = CrossingSet(geometry_, enumerate_rigorous(diagram_, a));
      auto [target, moves] = path_to_initial_letter(w, a);
      initial_word_.push_back(target);
      initial_moves_.push_back(std::move(moves));
    }
  }
  WordContext(const WordContext&) = delete;
  WordContext& operator=(const WordContext&) = delete;

  const ReducedWord& word() const noexcept { return word_; }
  int n() const noexcept { return word_.n(); }
  int size() const noexcept { return word_.length(); }
  const WiringDiagram& diagram() const noexcept { return diagram_; }
  const PlanarGeometry& geometry() const noexcept { return geometry_; }
  const CrossingSet& crossings(int a) const { return crossings_.at(check(a)); }
  const CrossingSet& rigorous(int a) const { return rigorous_.at(check(a)); }
  /// Nearest word beginning with a, and the moves that reach it.
  const ReducedWord& initial_word(int a) const { return initial_word_.at(check(a) - 1); }
  const std::vector<Move>& initial_moves(int a) const { return initial_moves_.at(check(a) - 1); }

  /// Membership in the string cone via the rigorous path inequalities.
  bool in_string_cone(const IntVec& x) const {
    if (static_cast<int>(x.size()) != size()) return false;
    for (int a = 1; a < n(); ++a)
      for (const auto& g : rigorous_[a].paths)
        if (dot(x, g.r()) < 0) return false;
    return true;
  }

 private:
  int check(int a) const {
    if (a < 1 || a > word_.rank()) throw Error("color " + std::to_string(a) + " out of range");
    return a;
  }

  ReducedWord word_;
  WiringDiagram diagram_;
  PlanarGeometry geometry_;
  std::vector<CrossingSet> crossings_;
  std::vector<CrossingSet> rigorous_;
  std::vector<ReducedWord> initial_word_;
  std::vector<std::vector<Move>> initial_moves_;
};

/// Thread-safe memo of word contexts; entries are immutable once built.
class ContextCache {
 public:
  std::shared_ptr<const WordContext> get(const ReducedWord& w) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = map_.find(w); it != map_.end()) return it->second;
    }
    auto ctx = std::make_shared<const WordContext>(w);
    std::lock_guard lock(mutex_);
    return map_.emplace(w, std::move(ctx)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<ReducedWord, std::shared_ptr<const WordContext>> map_;
};

inline ContextCache& default_cache() {
  static ContextCache cache;
  return cache;
}

inline const WordContext& context(const ReducedWord& w) { return *default_cache().get(w); }

}  // namespace crystal
