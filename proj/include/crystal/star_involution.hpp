#pragma once

// The Kashiwara *-involution on Lusztig and string data, with the linear
// closed form for the word iota0 = (1, 2,1, 3,2,1, ...).

#include <random>

#include "crystal/lusztig_crystal.hpp"

namespace crystal {

using Matrix = std::vector<IntVec>;

namespace detail {

// Maximal descending blocks (k, k-1, ..., 1) of iota0 as (start, length), 0-based.
inline std::vector<std::pair<int, int>> iota0_blocks(int n) {
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (int k = 1; k < n; ++k) {
    out.emplace_back(start, k);
    start += k;
  }
  return out;
}

}  // namespace detail

/// String datum along iota0 of the element with iota0-Lusztig datum x: on each block at
/// positions l..l+m the coordinate l+j is x_l + ... + x_{l+m-j}.
inline IntVec lusztig_to_string_iota0(int n, const IntVec& x) {
  if (static_cast<int>(x.size()) != positive_root_count(n)) throw Error("vector length does not match n");
  IntVec out(x.size());
  for (auto [start, len] : detail::iota0_blocks(n)) {
    const int m = len - 1;
    for (int j = 0; j <= m; ++j) {
      int acc = 0;
      for (int t = 0; t <= m - j; ++t) acc += x[start + t];
      out[start + j] = acc;
    }
  }
  return out;
}

inline IntVec string_to_lusztig_iota0(int n, const IntVec& y) {
  if (static_cast<int>(y.size()) != positive_root_count(n)) throw Error("vector length does not match n");
  IntVec out(y.size());
  for (auto [start, len] : detail::iota0_blocks(n)) {
    const int m = len - 1;
    for (int t = 0; t <= m; ++t) out[start + t] = y[start + m - t] - (t > 0 ? y[start + m - t + 1] : 0);
  }
  return out;
}

/// (word, x) -> (word*^op, x^op)
inline std::pair<ReducedWord, IntVec> star_lusztig(const ReducedWord& w, const IntVec& x) {
  return {op_word(star_word(w)), IntVec(x.rbegin(), x.rend())};
}

/// The *-involution from iota0-string data to iota0*-string data; linear.
inline IntVec star_iota0(int n, const IntVec& y) {
  const ReducedWord i0 = iota0(n);
  const ReducedWord from = op_word(star_word(i0));
  const ReducedWord to = star_word(i0);
  static std::mutex mutex;
  static std::map<int, std::vector<Move>> paths;
  std::vector<Move> moves;
  {
    std::lock_guard lock(mutex);
    auto it = paths.find(n);
    if (it == paths.end()) {
      auto p = commutation_path(from, to);
      if (!p) throw Error("internal error: iota0 and its reverse are not commutation equivalent");
      it = paths.emplace(n, std::move(*p)).first;
    }
    moves = it->second;
  }
  IntVec lus = string_to_lusztig_iota0(n, y);
  std::reverse(lus.begin(), lus.end());
  lus = phi_along(from, moves, std::move(lus));
  // the diagram automorphism a -> n-a identifies str o b on iota0* with that on iota0
  return lusztig_to_string_iota0(n, lus);
}

/// The *-involution between string data of arbitrary words, pivoting through iota0.
inline IntVec star_string(const ReducedWord& from, const ReducedWord& to, const IntVec& x, const Options& opt = {}) {
  if (from.n() != to.n()) throw Error("star_string: words of different rank");
  const int n = from.n();
  IntVec y = psi(from, iota0(n), x, opt);
  y = star_iota0(n, y);
  return psi(star_word(iota0(n)), to, y, opt);
}

/// A random string cone point reached by a random walk of f operators from 0.
inline IntVec random_cone_point(const ReducedWord& w, std::mt19937& rng, int steps) {
  IntVec x(w.length(), 0);
  std::uniform_int_distribution<int> color(1, w.rank());
  for (int s = 0; s < steps; ++s) x = binf_f(w, x, color(rng));
  return x;
}

inline long long determinant(Matrix m) {
  const std::size_t d = m.size();
  std::vector<std::vector<long long>> a(d, std::vector<long long>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a[i][j] = m[i][j];
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < d && a[p][k] == 0) ++p;
      if (p == d) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i)
      for (std::size_t j = k + 1; j < d; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * (d ? a[d - 1][d - 1] : 1);
}

inline IntVec apply_matrix(const Matrix& m, const IntVec& x) {
  IntVec out;
  for (const auto& row : m) out.push_back(static_cast<int>(dot(row, x)));
  return out;
}

/// Inverse of a unimodular integer matrix by exact Gauss-Jordan elimination.
inline Matrix inverse_unimodular(const Matrix& m) {
  using Q = boost::rational<long long>;
  const std::size_t d = m.size();
  std::vector<std::vector<Q>> a(d, std::vector<Q>(2 * d, Q(0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = Q(m[i][j]);
    a[i][d + i] = Q(1);
  }
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t p = k;
    while (p < d && a[p][k] == Q(0)) ++p;
    if (p == d) throw Error("inverse_unimodular: singular matrix");
    std::swap(a[k], a[p]);
    const Q pivot = a[k][k];
    for (auto& v : a[k]) v /= pivot;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == k || a[i][k] == Q(0)) continue;
      const Q factor = a[i][k];
      for (std::size_t j = 0; j < 2 * d; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  Matrix out(d, IntVec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Q v = a[i][d + j];
      if (v.denominator() != 1) throw Error("inverse_unimodular: matrix is not unimodular");
      out[i][j] = static_cast<int>(v.numerator());
    }
  return out;
}

/// Matrix of star_iota0, after checking additivity on basis pairs and random cone pairs.
inline Matrix star_matrix_iota0(int n, unsigned seed = 7, int random_pairs = 100) {
  const int len = positive_root_count(n);
  const ReducedWord i0 = iota0(n);
  std::vector<IntVec> columns;
  for (int k = 0; k < len; ++k) columns.push_back(star_iota0(n, unit_vector(len, k)));
  auto check = [&](const IntVec& u, const IntVec& v) {
    if (star_iota0(n, add(u, v)) != add(star_iota0(n, u), star_iota0(n, v)))
      throw Error("star map for iota0 is not additive at (" + join(u) + ") + (" + join(v) + ")");
  };
  for (int i = 0; i < len; ++i)
    for (int j = i; j < len; ++j) check(unit_vector(len, i), unit_vector(len, j));
  std::mt19937 rng(seed);
  for (int t = 0; t < random_pairs; ++t) check(random_cone_point(i0, rng, 1 + t % 12), random_cone_point(i0, rng, 1 + (t * 7) % 12));
  Matrix m(len, IntVec(len));
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j) m[i][j] = columns[j][i];
  return m;
}

}  // namespace crystal
