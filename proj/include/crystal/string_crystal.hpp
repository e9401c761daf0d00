#pragma once

// Crystal structures on string data: B(infinity) through the eta statistics,
// the transition maps Psi, the *-structure by the dual crossing formula, and
// the B(lambda) structures on the Littelmann-BZ and Nakashima-Zelevinsky points.

#include <optional>

#include "crystal/context.hpp"
#include "crystal/weights.hpp"

namespace crystal {

enum class PsiVariant { involutive, literal };
enum class ESign { corrected, literal };
enum class NzTieBreak { consistent, literal };

struct Options {
  PsiVariant psi = PsiVariant::involutive;
  ESign e_sign = ESign::corrected;
  NzTieBreak nz = NzTieBreak::consistent;
};

inline IntVec eta(const ReducedWord& w, const IntVec& x) {
  const int len = w.length();
  if (static_cast<int>(x.size()) != len) throw Error("eta: vector length does not match word length");
  IntVec out(len);
  for (int k = 0; k < len; ++k) {
    long acc = x[k];
    for (int l = k + 1; l < len; ++l) acc += cartan(w.letters()[k], w.letters()[l]) * x[l];
    out[k] = static_cast<int>(acc);
  }
  return out;
}

/// <lambda - sum_k x_k alpha_{i_k}, h_a>
inline int wt_pairing(const ReducedWord& w, const IntVec& lambda, const IntVec& x, int a) {
  const IntVec l = check_lambda(w.n(), lambda);
  long acc = l.at(a - 1);
  for (int k = 0; k < w.length(); ++k) acc -= cartan(a, w.letters()[k]) * x.at(k);
  return static_cast<int>(acc);
}

inline Weight string_weight(const ReducedWord& w, const IntVec& lambda, const IntVec& x) {
  Weight mu = dominant_weight(w.n(), lambda);
  for (int k = 0; k < w.length(); ++k) {
    mu[w.letters()[k] - 1] -= x.at(k);
    mu[w.letters()[k]] += x.at(k);
  }
  return mu;
}

namespace detail {

struct EtaArg {
  int value;
  int first;  // minimal maximizing position, 0-based
  int last;   // maximal maximizing position, 0-based
};

inline EtaArg eta_argmax(const ReducedWord& w, const IntVec& x, int a) {
  if (a < 1 || a > w.rank()) throw Error("color " + std::to_string(a) + " out of range");
  const IntVec h = eta(w, x);
  EtaArg best{0, -1, -1};
  for (int k = 0; k < w.length(); ++k) {
    if (w.letters()[k] != a) continue;
    if (best.first < 0 || h[k] > best.value) best = {h[k], k, k};
    else if (h[k] == best.value) best.last = k;
  }
  return best;
}

inline void require_cone(const WordContext& ctx, const IntVec& x) {
  if (!ctx.in_string_cone(x)) throw Error("x=(" + join(x) + ") is not in the string cone of " + ctx.word().str());
}

}  // namespace detail

// B(infinity) through eta.

inline int binf_eps(const ReducedWord& w, const IntVec& x, int a) { return detail::eta_argmax(w, x, a).value; }

inline int binf_phi(const ReducedWord& w, const IntVec& x, int a) { return binf_eps(w, x, a) + wt_pairing(w, {}, x, a); }

inline IntVec binf_f(const ReducedWord& w, IntVec x, int a) {
  x[detail::eta_argmax(w, x, a).first] += 1;
  return x;
}

inline std::optional<IntVec> binf_e(const ReducedWord& w, IntVec x, int a) {
  const auto arg = detail::eta_argmax(w, x, a);
  if (arg.value <= 0) return std::nullopt;
  x[arg.last] -= 1;
  return x;
}

// Transition maps.

/// Local transition for one move applied to the word with the given letters.
inline IntVec psi_move(const std::vector<int>& letters, const Move& m, IntVec x, PsiVariant variant = PsiVariant::involutive) {
  if (!move_applicable(letters, m)) throw Error("psi: move " + to_string(m) + " not applicable");
  const int k = m.position - 1;
  if (m.kind == MoveKind::two) {
    std::swap(x[k], x[k + 1]);
    return x;
  }
  const int p = x[k], q = x[k + 1], r = x[k + 2];
  x[k] = std::max(r, q - p);
  x[k + 1] = p + r;
  x[k + 2] = variant == PsiVariant::involutive ? std::min(p, q - r) : std::min(p, r);
  return x;
}

inline IntVec psi_along(const ReducedWord& from, const std::vector<Move>& moves, IntVec x, PsiVariant variant = PsiVariant::involutive) {
  std::vector<int> letters = from.letters();
  for (const Move& m : moves) {
    x = psi_move(letters, m, std::move(x), variant);
    letters = apply_move_letters(std::move(letters), m);
  }
  return x;
}

/// Undoes psi_along by replaying the moves backwards from the target word.
inline IntVec psi_back(const ReducedWord& from, const std::vector<Move>& moves, IntVec y, PsiVariant variant = PsiVariant::involutive) {
  std::vector<std::vector<int>> words{from.letters()};
  for (const Move& m : moves) words.push_back(apply_move_letters(words.back(), m));
  for (std::size_t t = moves.size(); t-- > 0;) y = psi_move(words[t + 1], moves[t], std::move(y), variant);
  return y;
}

inline IntVec psi(const ReducedWord& from, const ReducedWord& to, const IntVec& x, const Options& opt = {}) {
  if (from.n() != to.n()) throw Error("psi: words of different rank");
  detail::require_cone(context(from), x);
  return psi_along(from, cached_move_path(from, to), x, opt.psi);
}

// The *-structure on string data.

inline int eps_star_psi(const ReducedWord& w, const IntVec& x, int a, const Options& opt = {}) {
  const auto& ctx = context(w);
  return psi_along(w, ctx.initial_moves(a), x, opt.psi).front();
}

inline IntVec star_f_psi(const ReducedWord& w, const IntVec& x, int a, const Options& opt = {}) {
  const auto& ctx = context(w);
  IntVec y = psi_along(w, ctx.initial_moves(a), x, opt.psi);
  y.front() += 1;
  return psi_back(w, ctx.initial_moves(a), std::move(y), opt.psi);
}

inline std::optional<IntVec> star_e_psi(const ReducedWord& w, const IntVec& x, int a, const Options& opt = {}) {
  const auto& ctx = context(w);
  IntVec y = psi_along(w, ctx.initial_moves(a), x, opt.psi);
  if (y.front() <= 0) return std::nullopt;
  y.front() -= 1;
  return psi_back(w, ctx.initial_moves(a), std::move(y), opt.psi);
}

inline int eps_star(const ReducedWord& w, const IntVec& x, int a) {
  return static_cast<int>(select_extremal(x, context(w).crossings(a), Weighting::r, Extremum::min).value);
}

inline IntVec star_f(const ReducedWord& w, const IntVec& x, int a) {
  const auto& set = context(w).crossings(a);
  return add(x, set.paths[select_extremal(x, set, Weighting::r, Extremum::min).index].s());
}

inline std::optional<IntVec> star_e(const ReducedWord& w, const IntVec& x, int a, const Options& opt = {}) {
  const auto& set = context(w).crossings(a);
  const Extremal ext = select_extremal(x, set, Weighting::r, Extremum::max);
  if (ext.value <= 0) return std::nullopt;
  const IntVec& s = set.paths[ext.index].s();
  return opt.e_sign == ESign::corrected ? sub(x, s) : add(x, s);
}

// Littelmann-Berenstein-Zelevinsky polytope points as B(lambda).

inline bool in_bz_polytope(const ReducedWord& w, const IntVec& lambda, const IntVec& x) {
  const auto& ctx = context(w);
  if (!ctx.in_string_cone(x)) return false;
  const IntVec lb = lambda_bar(w, lambda);
  const IntVec h = eta(w, x);
  for (int k = 0; k < w.length(); ++k)
    if (h[k] > lb[k]) return false;
  return true;
}

inline void require_bz(const ReducedWord& w, const IntVec& lambda, const IntVec& x) {
  if (!in_bz_polytope(w, lambda, x))
    throw Error("x=(" + join(x) + ") is not in the string polytope S*(" + join(lambda) + ") of " + w.str());
}

inline int bz_eps(const ReducedWord& w, const IntVec& lambda, const IntVec& x, int a) {
  require_bz(w, lambda, x);
  return eps_star(w, x, a);
}

inline int bz_phi(const ReducedWord& w, const IntVec& lambda, const IntVec& x, int a) {
  return bz_eps(w, lambda, x, a) + wt_pairing(w, lambda, x, a);
}

inline std::optional<IntVec> bz_f(const ReducedWord& w, const IntVec& lambda, const IntVec& x, int a) {
  if (bz_phi(w, lambda, x, a) <= 0) return std::nullopt;
  return star_f(w, x, a);
}

inline std::optional<IntVec> bz_e(const ReducedWord& w, const IntVec& lambda, const IntVec& x, int a, const Options& opt = {}) {
  require_bz(w, lambda, x);
  return star_e(w, x, a, opt);
}

inline std::optional<IntVec> bz_f_psi(const ReducedWord& w, const IntVec& lambda, const IntVec& x, int a, const Options& opt = {}) {
  require_bz(w, lambda, x);
  if (eps_star_psi(w, x, a, opt) + wt_pairing(w, lambda, x, a) <= 0) return std::nullopt;
  return star_f_psi(w, x, a, opt);
}

inline std::optional<IntVec> bz_e_psi(const ReducedWord& w, const IntVec& lambda, const IntVec& x, int a, const Options& opt = {}) {
  require_bz(w, lambda, x);
  return star_e_psi(w, x, a, opt);
}

// Nakashima-Zelevinsky polytope points as B(lambda).

inline bool in_nz_polytope(const ReducedWord& w, const IntVec& lambda, const IntVec& x) {
  const auto& ctx = context(w);
  if (!ctx.in_string_cone(x)) return false;
  const IntVec l = check_lambda(w.n(), lambda);
  for (int a = 1; a < w.n(); ++a)
    for (const auto& g : ctx.crossings(a).paths)
      if (dot(x, g.r()) > l[a - 1]) return false;
  return true;
}

inline void require_nz(const ReducedWord& w, const IntVec& lambda, const IntVec& x) {
  if (!in_nz_polytope(w, lambda, x))
    throw Error("x=(" + join(x) + ") is not in the string polytope S(" + join(lambda) + ") of " + w.str());
}

inline int nz_eps(const ReducedWord& w, const IntVec& lambda, const IntVec& x, int a) {
  require_nz(w, lambda, x);
  return binf_eps(w, x, a);
}

inline int nz_phi(const ReducedWord& w, const IntVec& lambda, const IntVec& x, int a) {
  return nz_eps(w, lambda, x, a) + wt_pairing(w, lambda, x, a);
}

inline std::optional<IntVec> nz_f(const ReducedWord& w, const IntVec& lambda, IntVec x, int a, const Options& opt = {}) {
  if (nz_phi(w, lambda, x, a) <= 0) return std::nullopt;
  const auto arg = detail::eta_argmax(w, x, a);
  x[opt.nz == NzTieBreak::consistent ? arg.first : arg.last] += 1;
  return x;
}

inline std::optional<IntVec> nz_e(const ReducedWord& w, const IntVec& lambda, IntVec x, int a, const Options& opt = {}) {
  require_nz(w, lambda, x);
  const auto arg = detail::eta_argmax(w, x, a);
  if (arg.value <= 0) return std::nullopt;
  x[opt.nz == NzTieBreak::consistent ? arg.last : arg.first] -= 1;
  return x;
}

}  // namespace crystal
