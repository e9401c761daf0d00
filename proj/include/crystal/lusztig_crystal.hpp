#pragma once

// Crystal structures on Lusztig data through the crossing formula, the
// transition maps Phi, and the linear maps F and G relating string and
// Lusztig data.

#include <optional>

#include "crystal/string_crystal.hpp"

namespace crystal {

/// F(x)_k = x_k + sum_{l>k} c_{i_k,i_l} x_l, defined on all of Z^N.
inline IntVec F_map(const ReducedWord& w, const IntVec& x) { return eta(w, x); }

inline IntVec F_inv(const ReducedWord& w, const IntVec& y) {
  const int len = w.length();
  if (static_cast<int>(y.size()) != len) throw Error("F_inv: vector length does not match word length");
  IntVec x(len);
  for (int k = len - 1; k >= 0; --k) {
    long acc = y[k];
    for (int l = k + 1; l < len; ++l) acc -= cartan(w.letters()[k], w.letters()[l]) * x[l];
    x[k] = static_cast<int>(acc);
  }
  return x;
}

// Lusztig data.

inline int root_pairing(const Inversion& beta, int a) {
  return (beta.p == a) - (beta.p == a + 1) - (beta.q == a) + (beta.q == a + 1);
}

inline Weight lusztig_weight(const ReducedWord& w, const IntVec& lambda, const IntVec& x) {
  Weight mu = dominant_weight(w.n(), lambda);
  const auto& verts = context(w).diagram().vertices();
  for (int k = 0; k < w.length(); ++k) {
    mu[verts[k].inversion.p - 1] -= x.at(k);
    mu[verts[k].inversion.q - 1] += x.at(k);
  }
  return mu;
}

inline int lusztig_wt_pairing(const ReducedWord& w, const IntVec& lambda, const IntVec& x, int a) {
  const IntVec l = check_lambda(w.n(), lambda);
  const auto& verts = context(w).diagram().vertices();
  long acc = l.at(a - 1);
  for (int k = 0; k < w.length(); ++k) acc -= static_cast<long>(x.at(k)) * root_pairing(verts[k].inversion, a);
  return static_cast<int>(acc);
}

inline int lusztig_eps(const ReducedWord& w, const IntVec& x, int a) {
  return static_cast<int>(select_extremal(x, context(w).crossings(a), Weighting::s, Extremum::max).value);
}

inline int lusztig_eps_star(const ReducedWord& w, const IntVec& x, int a) {
  return lusztig_eps(op_word(star_word(w)), IntVec(x.rbegin(), x.rend()), a);
}

inline bool in_lusztig_polytope(const ReducedWord& w, const IntVec& lambda, const IntVec& x) {
  const IntVec l = check_lambda(w.n(), lambda);
  if (static_cast<int>(x.size()) != w.length() || !nonnegative(x)) return false;
  for (int a = 1; a < w.n(); ++a)
    if (lusztig_eps_star(w, x, a) > l[a - 1]) return false;
  return true;
}

inline void require_lusztig(const ReducedWord& w, const IntVec& lambda, const IntVec& x) {
  if (!in_lusztig_polytope(w, lambda, x))
    throw Error("x=(" + join(x) + ") is not in L(" + join(lambda) + ") of " + w.str());
}

inline int lusztig_phi(const ReducedWord& w, const IntVec& lambda, const IntVec& x, int a) {
  return lusztig_eps(w, x, a) + lusztig_wt_pairing(w, lambda, x, a);
}

/// Without lambda this is the B(infinity) operator; with lambda it is gated by phi.
inline std::optional<IntVec> lusztig_f(const ReducedWord& w, const IntVec& x, int a,
                                       const std::optional<IntVec>& lambda = std::nullopt) {
  if (lambda) {
    require_lusztig(w, *lambda, x);
    if (lusztig_phi(w, *lambda, x, a) <= 0) return std::nullopt;
  }
  const auto& set = context(w).crossings(a);
  IntVec y = add(x, set.paths[select_extremal(x, set, Weighting::s, Extremum::max).index].r());
  if (!nonnegative(y)) throw Error("internal error: Lusztig f left the positive orthant at x=" + join(x));
  return y;
}

inline std::optional<IntVec> lusztig_e(const ReducedWord& w, const IntVec& x, int a,
                                       const std::optional<IntVec>& lambda = std::nullopt, const Options& opt = {}) {
  if (lambda) require_lusztig(w, *lambda, x);
  const auto& set = context(w).crossings(a);
  const Extremal ext = select_extremal(x, set, Weighting::s, Extremum::min);
  if (ext.value <= 0) return std::nullopt;
  const IntVec& r = set.paths[ext.index].r();
  if (opt.e_sign == ESign::literal) return add(x, r);
  IntVec y = sub(x, r);
  if (!nonnegative(y)) throw Error("internal error: Lusztig e left the positive orthant at x=" + join(x));
  return y;
}

// Transition maps between Lusztig data.

inline IntVec phi_move(const std::vector<int>& letters, const Move& m, IntVec x) {
  if (!move_applicable(letters, m)) throw Error("phi: move " + to_string(m) + " not applicable");
  const int k = m.position - 1;
  if (m.kind == MoveKind::two) {
    std::swap(x[k], x[k + 1]);
    return x;
  }
  const int p = x[k], q = x[k + 1], r = x[k + 2];
  const int mn = std::min(p, r);
  x[k] = q + r - mn;
  x[k + 1] = mn;
  x[k + 2] = p + q - mn;
  return x;
}

inline IntVec phi_along(const ReducedWord& from, const std::vector<Move>& moves, IntVec x) {
  std::vector<int> letters = from.letters();
  for (const Move& m : moves) {
    x = phi_move(letters, m, std::move(x));
    letters = apply_move_letters(std::move(letters), m);
  }
  return x;
}

inline IntVec phi_back(const ReducedWord& from, const std::vector<Move>& moves, IntVec y) {
  std::vector<std::vector<int>> words{from.letters()};
  for (const Move& m : moves) words.push_back(apply_move_letters(words.back(), m));
  for (std::size_t t = moves.size(); t-- > 0;) y = phi_move(words[t + 1], moves[t], std::move(y));
  return y;
}

inline IntVec phi_transition(const ReducedWord& from, const ReducedWord& to, const IntVec& x) {
  if (from.n() != to.n()) throw Error("phi_transition: words of different rank");
  if (static_cast<int>(x.size()) != from.length() || !nonnegative(x)) throw Error("phi_transition: x must lie in N^N");
  return phi_along(from, cached_move_path(from, to), x);
}

inline int lusztig_eps_phi(const ReducedWord& w, const IntVec& x, int a) {
  return phi_along(w, context(w).initial_moves(a), x).front();
}

inline IntVec lusztig_f_phi(const ReducedWord& w, const IntVec& x, int a) {
  const auto& moves = context(w).initial_moves(a);
  IntVec y = phi_along(w, moves, x);
  y.front() += 1;
  return phi_back(w, moves, std::move(y));
}

inline std::optional<IntVec> lusztig_e_phi(const ReducedWord& w, const IntVec& x, int a) {
  const auto& moves = context(w).initial_moves(a);
  IntVec y = phi_along(w, moves, x);
  if (y.front() <= 0) return std::nullopt;
  y.front() -= 1;
  return phi_back(w, moves, std::move(y));
}

// The bijection G between S*(lambda) and L(lambda*).

inline IntVec G_map(const ReducedWord& w, const IntVec& lambda, const IntVec& x) {
  require_bz(w, lambda, x);
  return sub(lambda_bar(w, lambda), F_map(w, x));
}

inline IntVec G_inv(const ReducedWord& w, const IntVec& lambda, const IntVec& y) {
  require_lusztig(w, lambda_star(check_lambda(w.n(), lambda)), y);
  return F_inv(w, sub(lambda_bar(w, lambda), y));
}

}  // namespace crystal
