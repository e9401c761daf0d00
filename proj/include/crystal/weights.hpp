#pragma once

// Weights of sl_n in epsilon coordinates, dominant weights, and move-path memo.

#include <map>
#include <mutex>
#include <utility>

#include "crystal/words.hpp"

namespace crystal {

/// Weight (mu_1, ..., mu_n) in epsilon coordinates; <mu, h_a> = mu_a - mu_{a+1}.
using Weight = IntVec;

inline int pairing(const Weight& mu, int a) { return mu.at(a - 1) - mu.at(a); }

/// alpha_{p,q} = e_p - e_q
inline Weight root(int n, int p, int q) {
  Weight w(n, 0);
  w.at(p - 1) += 1;
  w.at(q - 1) -= 1;
  return w;
}

inline Weight simple_root(int n, int a) { return root(n, a, a + 1); }

/// Validates a dominant weight given by its coordinates (lambda_1, ..., lambda_{n-1}).
inline IntVec check_lambda(int n, const IntVec& lambda) {
  if (lambda.empty()) return IntVec(n - 1, 0);
  if (static_cast<int>(lambda.size()) != n - 1)
    throw Error("lambda must have " + std::to_string(n - 1) + " entries, got " + std::to_string(lambda.size()));
  if (!nonnegative(lambda)) throw Error("lambda must be dominant (nonnegative entries)");
  return lambda;
}

/// sum_a lambda_a omega_a with omega_a = e_1 + ... + e_a
inline Weight dominant_weight(int n, const IntVec& lambda) {
  const IntVec l = check_lambda(n, lambda);
  Weight w(n, 0);
  for (int k = n - 2; k >= 0; --k) w[k] = w[k + 1] + l[k];
  return w;
}

/// lambda* with lambda*_b = lambda_{n-b}
inline IntVec lambda_star(const IntVec& lambda) { return IntVec(lambda.rbegin(), lambda.rend()); }

/// (lambda_{i_1}, ..., lambda_{i_N})
inline IntVec lambda_bar(const ReducedWord& w, const IntVec& lambda) {
  const IntVec l = check_lambda(w.n(), lambda);
  IntVec out;
  for (int i : w.letters()) out.push_back(l[i - 1]);
  return out;
}

/// Coordinate-sum bound for B(lambda): the height of lambda - w0 lambda.
inline int depth_bound(int n, const IntVec& lambda) {
  const IntVec l = check_lambda(n, lambda);
  int h = 0;
  for (int a = 1; a < n; ++a) h += l[a - 1] * a * (n - a);
  return h;
}

inline const std::vector<Move>& cached_move_path(const ReducedWord& from, const ReducedWord& to) {
  static std::mutex mutex;
  static std::map<std::pair<ReducedWord, ReducedWord>, std::vector<Move>> memo;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(from, to);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  return memo.emplace(std::move(key), move_path(from, to)).first->second;
}

}  // namespace crystal
