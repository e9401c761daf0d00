#pragma once

// Reference machinery: elementary crystals and tensor products, crystal
// structures as interchangeable objects, graph generation and comparison,
// axiom checks, and transport of elements between isomorphic crystals.

#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>

#include "crystal/star_involution.hpp"

namespace crystal {

/// Integer or minus infinity.
struct ExtInt {
  bool neg_inf = false;
  long value = 0;

  static ExtInt minus_infinity() { return {true, 0}; }
  ExtInt operator+(long k) const { return neg_inf ? *this : ExtInt{false, value + k}; }
  ExtInt operator-(long k) const { return *this + (-k); }
  friend bool operator==(const ExtInt&, const ExtInt&) = default;
  friend bool operator<(const ExtInt& x, const ExtInt& y) {
    if (x.neg_inf) return !y.neg_inf;
    if (y.neg_inf) return false;
    return x.value < y.value;
  }
  friend bool operator>(const ExtInt& x, const ExtInt& y) { return y < x; }
  friend bool operator>=(const ExtInt& x, const ExtInt& y) { return !(x < y); }
  std::string str() const { return neg_inf ? "-inf" : std::to_string(value); }
};

inline ExtInt max(const ExtInt& x, const ExtInt& y) { return x < y ? y : x; }

struct Factor {
  enum class Kind { b_infinity, elementary, r_lambda } kind = Kind::b_infinity;
  int color = 0;   // elementary: b_color(index)
  int index = 0;
  IntVec lambda;   // r_lambda, fundamental-weight coordinates

  static Factor binf() { return {}; }
  static Factor elem(int a, int k) { return {Kind::elementary, a, k, {}}; }
  static Factor r(IntVec lambda) { return {Kind::r_lambda, 0, 0, std::move(lambda)}; }
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct TensorElement {
  int n = 2;
  std::vector<Factor> factors;
  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

inline ExtInt factor_eps(const Factor& f, int a) {
  switch (f.kind) {
    case Factor::Kind::b_infinity: return {false, 0};
    case Factor::Kind::elementary: return f.color == a ? ExtInt{false, -f.index} : ExtInt::minus_infinity();
    case Factor::Kind::r_lambda: return {false, -f.lambda.at(a - 1)};
  }
  return {};
}

inline ExtInt factor_phi(const Factor& f, int a) {
  switch (f.kind) {
    case Factor::Kind::b_infinity: return {false, 0};
    case Factor::Kind::elementary: return f.color == a ? ExtInt{false, f.index} : ExtInt::minus_infinity();
    case Factor::Kind::r_lambda: return {false, 0};
  }
  return {};
}

inline Weight factor_wt(int n, const Factor& f) {
  switch (f.kind) {
    case Factor::Kind::b_infinity: return Weight(n, 0);
    case Factor::Kind::elementary: {
      Weight w = simple_root(n, f.color);
      for (int& c : w) c *= f.index;
      return w;
    }
    case Factor::Kind::r_lambda: return dominant_weight(n, f.lambda);
  }
  return {};
}

struct TensorStats {
  ExtInt eps, phi;
  Weight wt;
};

namespace detail {

// Statistics of the prefix products F_1 (x) ... (x) F_j for j = 1..m.
inline std::vector<TensorStats> prefix_stats(const TensorElement& t, int a) {
  std::vector<TensorStats> out;
  for (const Factor& f : t.factors) {
    TensorStats cur{factor_eps(f, a), factor_phi(f, a), factor_wt(t.n, f)};
    if (!out.empty()) {
      const TensorStats& left = out.back();
      cur = {max(left.eps, cur.eps - pairing(left.wt, a)), max(cur.phi, left.phi + pairing(cur.wt, a)), add(left.wt, cur.wt)};
    }
    out.push_back(std::move(cur));
  }
  return out;
}

}  // namespace detail

inline ExtInt tensor_eps(const TensorElement& t, int a) { return detail::prefix_stats(t, a).back().eps; }
inline ExtInt tensor_phi(const TensorElement& t, int a) { return detail::prefix_stats(t, a).back().phi; }
inline Weight tensor_wt(const TensorElement& t) {
  Weight w(t.n, 0);
  for (const Factor& f : t.factors) w = add(w, factor_wt(t.n, f));
  return w;
}

/// Kashiwara operator on a left-associated tensor product; nullopt stands for 0.
inline std::optional<TensorElement> tensor_op(TensorElement t, int a, bool raise) {
  const auto stats = detail::prefix_stats(t, a);
  std::size_t j = t.factors.size() - 1;
  while (j > 0) {
    const ExtInt left_phi = stats[j - 1].phi;
    const ExtInt right_eps = factor_eps(t.factors[j], a);
    if (raise ? left_phi >= right_eps : left_phi > right_eps)
      --j;
    else
      break;
  }
  Factor& f = t.factors[j];
  switch (f.kind) {
    case Factor::Kind::b_infinity:
      if (raise) return std::nullopt;
      throw Error("tensor_op: f acts on the b_infinity factor");
    case Factor::Kind::elementary:
      if (f.color != a) return std::nullopt;
      f.index += raise ? 1 : -1;
      return t;
    case Factor::Kind::r_lambda: return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<TensorElement> tensor_f(const TensorElement& t, int a) { return tensor_op(t, a, false); }
inline std::optional<TensorElement> tensor_e(const TensorElement& t, int a) { return tensor_op(t, a, true); }

/// b_inf (x) b_{i_N}(-x_N) (x) ... (x) b_{i_1}(-x_1), optionally (x) r_lambda.
inline TensorElement string_tensor(const ReducedWord& w, const IntVec& x, const std::optional<IntVec>& lambda = std::nullopt) {
  TensorElement t{w.n(), {Factor::binf()}};
  for (int k = w.length() - 1; k >= 0; --k) t.factors.push_back(Factor::elem(w.letters()[k], -x.at(k)));
  if (lambda) t.factors.push_back(Factor::r(check_lambda(w.n(), *lambda)));
  return t;
}

inline IntVec string_of_tensor(const ReducedWord& w, const TensorElement& t) {
  IntVec x(w.length());
  for (int k = 0; k < w.length(); ++k) x[k] = -t.factors.at(w.length() - k).index;
  return x;
}

/// Checks Lambda_a(x) = (e*_a)^m x (x) b_a(-m) with m = eps*_a(x) through the weight and eps* bookkeeping.
inline bool embedding_check(const ReducedWord& w, const IntVec& x, int a) {
  const int m = eps_star(w, x, a);
  IntVec y = x;
  for (int t = 0; t < m; ++t) {
    auto next = star_e(w, y, a);
    if (!next) return false;
    y = *next;
  }
  if (eps_star(w, y, a) != 0) return false;
  Weight expected = string_weight(w, {}, x);
  expected = add(expected, [&] {
    Weight r = simple_root(w.n(), a);
    for (int& c : r) c *= m;
    return r;
  }());
  if (string_weight(w, {}, y) != expected) return false;
  return star_e(w, y, a) == std::nullopt;
}

// Crystal structures as values.

struct CrystalStructure {
  std::string name;
  int n = 2;
  bool finite = false;
  IntVec highest;
  std::function<std::optional<IntVec>(const IntVec&, int)> f;
  std::function<std::optional<IntVec>(const IntVec&, int)> e;
  std::function<int(const IntVec&, int)> eps;
  std::function<int(const IntVec&, int)> phi;
  std::function<Weight(const IntVec&)> wt;
};

namespace structures {

inline CrystalStructure binf(const ReducedWord& w) {
  return {"binf", w.n(), false, IntVec(w.length(), 0),
          [w](const IntVec& x, int a) { return std::optional<IntVec>(binf_f(w, x, a)); },
          [w](const IntVec& x, int a) { return binf_e(w, x, a); },
          [w](const IntVec& x, int a) { return binf_eps(w, x, a); },
          [w](const IntVec& x, int a) { return binf_phi(w, x, a); },
          [w](const IntVec& x) { return string_weight(w, {}, x); }};
}

inline CrystalStructure binf_tensor(const ReducedWord& w) {
  return {"binf-tensor", w.n(), false, IntVec(w.length(), 0),
          [w](const IntVec& x, int a) -> std::optional<IntVec> {
            auto t = tensor_f(string_tensor(w, x), a);
            if (!t) return std::nullopt;
            return string_of_tensor(w, *t);
          },
          [w](const IntVec& x, int a) -> std::optional<IntVec> {
            auto t = tensor_e(string_tensor(w, x), a);
            if (!t) return std::nullopt;
            return string_of_tensor(w, *t);
          },
          [w](const IntVec& x, int a) { return static_cast<int>(tensor_eps(string_tensor(w, x), a).value); },
          [w](const IntVec& x, int a) { return static_cast<int>(tensor_phi(string_tensor(w, x), a).value); },
          [w](const IntVec& x) { return tensor_wt(string_tensor(w, x)); }};
}

inline CrystalStructure star(const ReducedWord& w, Options opt = {}) {
  return {"star", w.n(), false, IntVec(w.length(), 0),
          [w](const IntVec& x, int a) { return std::optional<IntVec>(star_f(w, x, a)); },
          [w, opt](const IntVec& x, int a) { return star_e(w, x, a, opt); },
          [w](const IntVec& x, int a) { return eps_star(w, x, a); },
          [w](const IntVec& x, int a) { return eps_star(w, x, a) + wt_pairing(w, {}, x, a); },
          [w](const IntVec& x) { return string_weight(w, {}, x); }};
}

inline CrystalStructure star_psi_route(const ReducedWord& w, Options opt = {}) {
  return {"star-psi", w.n(), false, IntVec(w.length(), 0),
          [w, opt](const IntVec& x, int a) { return std::optional<IntVec>(star_f_psi(w, x, a, opt)); },
          [w, opt](const IntVec& x, int a) { return star_e_psi(w, x, a, opt); },
          [w, opt](const IntVec& x, int a) { return eps_star_psi(w, x, a, opt); },
          [w, opt](const IntVec& x, int a) { return eps_star_psi(w, x, a, opt) + wt_pairing(w, {}, x, a); },
          [w](const IntVec& x) { return string_weight(w, {}, x); }};
}

inline CrystalStructure bz(const ReducedWord& w, const IntVec& lambda, Options opt = {}) {
  const IntVec l = check_lambda(w.n(), lambda);
  return {"bz", w.n(), true, IntVec(w.length(), 0),
          [w, l](const IntVec& x, int a) { return bz_f(w, l, x, a); },
          [w, l, opt](const IntVec& x, int a) { return bz_e(w, l, x, a, opt); },
          [w, l](const IntVec& x, int a) { return bz_eps(w, l, x, a); },
          [w, l](const IntVec& x, int a) { return bz_phi(w, l, x, a); },
          [w, l](const IntVec& x) { return string_weight(w, l, x); }};
}

inline CrystalStructure bz_psi_route(const ReducedWord& w, const IntVec& lambda, Options opt = {}) {
  const IntVec l = check_lambda(w.n(), lambda);
  return {"bz-psi", w.n(), true, IntVec(w.length(), 0),
          [w, l, opt](const IntVec& x, int a) { return bz_f_psi(w, l, x, a, opt); },
          [w, l, opt](const IntVec& x, int a) { return bz_e_psi(w, l, x, a, opt); },
          [w, l, opt](const IntVec& x, int a) {
            require_bz(w, l, x);
            return eps_star_psi(w, x, a, opt);
          },
          [w, l, opt](const IntVec& x, int a) { return eps_star_psi(w, x, a, opt) + wt_pairing(w, l, x, a); },
          [w, l](const IntVec& x) { return string_weight(w, l, x); }};
}

/// B(lambda) on S*(lambda) transported from L(lambda*) through G, with f and e exchanged.
inline CrystalStructure bz_via_lusztig(const ReducedWord& w, const IntVec& lambda) {
  const IntVec l = check_lambda(w.n(), lambda);
  const IntVec ls = lambda_star(l);
  return {"bz-lusztig", w.n(), true, IntVec(w.length(), 0),
          [w, l, ls](const IntVec& x, int a) -> std::optional<IntVec> {
            auto y = lusztig_e(w, G_map(w, l, x), a, ls);
            if (!y) return std::nullopt;
            return G_inv(w, l, *y);
          },
          [w, l, ls](const IntVec& x, int a) -> std::optional<IntVec> {
            auto y = lusztig_f(w, G_map(w, l, x), a, ls);
            if (!y) return std::nullopt;
            return G_inv(w, l, *y);
          },
          [w, l, ls](const IntVec& x, int a) { return lusztig_phi(w, ls, G_map(w, l, x), a); },
          [w, l](const IntVec& x, int a) { return lusztig_eps(w, G_map(w, l, x), a); },
          [w, l, ls](const IntVec& x) {
            Weight mu = lusztig_weight(w, ls, G_map(w, l, x));
            for (int& c : mu) c = -c;
            // -wt of L(lambda*) is a weight of sl_n only up to the center; normalize to that of lambda
            const Weight ref = string_weight(w, l, x);
            const int shift = ref.back() - mu.back();
            for (int& c : mu) c += shift;
            return mu;
          }};
}

inline CrystalStructure nz(const ReducedWord& w, const IntVec& lambda, Options opt = {}) {
  const IntVec l = check_lambda(w.n(), lambda);
  return {"nz", w.n(), true, IntVec(w.length(), 0),
          [w, l, opt](const IntVec& x, int a) { return nz_f(w, l, x, a, opt); },
          [w, l, opt](const IntVec& x, int a) { return nz_e(w, l, x, a, opt); },
          [w, l](const IntVec& x, int a) { return nz_eps(w, l, x, a); },
          [w, l](const IntVec& x, int a) { return nz_phi(w, l, x, a); },
          [w, l](const IntVec& x) { return string_weight(w, l, x); }};
}

/// The subcrystal of B(infinity) (x) R_lambda, computed factor by factor.
inline CrystalStructure nz_tensor(const ReducedWord& w, const IntVec& lambda) {
  const IntVec l = check_lambda(w.n(), lambda);
  auto op = [w, l](const IntVec& x, int a, bool raise) -> std::optional<IntVec> {
    auto t = tensor_op(string_tensor(w, x, l), a, raise);
    if (!t) return std::nullopt;
    return string_of_tensor(w, *t);
  };
  return {"nz-tensor", w.n(), true, IntVec(w.length(), 0),
          [op](const IntVec& x, int a) { return op(x, a, false); },
          [op](const IntVec& x, int a) { return op(x, a, true); },
          [w, l](const IntVec& x, int a) { return static_cast<int>(tensor_eps(string_tensor(w, x, l), a).value); },
          [w, l](const IntVec& x, int a) { return static_cast<int>(tensor_phi(string_tensor(w, x, l), a).value); },
          [w, l](const IntVec& x) { return tensor_wt(string_tensor(w, x, l)); }};
}

/// Lusztig data: B(infinity) without lambda, L(lambda) with it.
inline CrystalStructure lusztig(const ReducedWord& w, const std::optional<IntVec>& lambda = std::nullopt, Options opt = {}) {
  const IntVec l = lambda ? check_lambda(w.n(), *lambda) : IntVec(w.rank(), 0);
  return {lambda ? "lusztig" : "lusztig-binf", w.n(), lambda.has_value(), IntVec(w.length(), 0),
          [w, lambda](const IntVec& x, int a) { return lusztig_f(w, x, a, lambda); },
          [w, lambda, opt](const IntVec& x, int a) { return lusztig_e(w, x, a, lambda, opt); },
          [w, lambda](const IntVec& x, int a) {
            if (lambda) require_lusztig(w, *lambda, x);
            return lusztig_eps(w, x, a);
          },
          [w, l](const IntVec& x, int a) { return lusztig_phi(w, l, x, a); },
          [w, l](const IntVec& x) { return lusztig_weight(w, l, x); }};
}

inline CrystalStructure lusztig_phi_route(const ReducedWord& w) {
  return {"lusztig-phi", w.n(), false, IntVec(w.length(), 0),
          [w](const IntVec& x, int a) { return std::optional<IntVec>(lusztig_f_phi(w, x, a)); },
          [w](const IntVec& x, int a) { return lusztig_e_phi(w, x, a); },
          [w](const IntVec& x, int a) { return lusztig_eps_phi(w, x, a); },
          [w](const IntVec& x, int a) { return lusztig_eps_phi(w, x, a) + lusztig_wt_pairing(w, {}, x, a); },
          [w](const IntVec& x) { return lusztig_weight(w, {}, x); }};
}

}  // namespace structures

// Graphs.

struct Edge {
  int source = 0;
  int color = 0;
  int target = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct CrystalGraph {
  std::string structure;
  int n = 2;
  std::vector<IntVec> nodes;  // sorted
  std::vector<Edge> edges;    // f-arrows, sorted
  int root = 0;

  int index_of(const IntVec& x) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
    return it != nodes.end() && *it == x ? static_cast<int>(it - nodes.begin()) : -1;
  }
};

/// Breadth-first closure from the seed under f (and e for finite structures). Infinite
/// structures need a depth bound; edges leaving the explored set are dropped.
inline CrystalGraph generate_graph(const CrystalStructure& s, const std::optional<IntVec>& seed = std::nullopt,
                                   std::optional<int> depth = std::nullopt, std::size_t max_nodes = 1000000) {
  if (!s.finite && !depth) throw Error("generate_graph: structure " + s.name + " is infinite; give a depth bound");
  const IntVec start = seed.value_or(s.highest);
  std::map<IntVec, int> dist{{start, 0}};
  std::deque<IntVec> queue{start};
  while (!queue.empty()) {
    IntVec x = std::move(queue.front());
    queue.pop_front();
    const int d = dist.at(x);
    if (depth && d >= *depth) continue;
    for (int a = 1; a < s.n; ++a)
      for (bool lower : {true, false}) {
        if (!lower && !s.finite) continue;
        auto y = lower ? s.f(x, a) : s.e(x, a);
        if (!y || dist.contains(*y)) continue;
        if (dist.size() >= max_nodes) throw Error("generate_graph: node bound exceeded");
        dist.emplace(*y, d + 1);
        queue.push_back(std::move(*y));
      }
  }
  CrystalGraph g{s.name, s.n, {}, {}, 0};
  for (const auto& [x, d] : dist) g.nodes.push_back(x);
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (int a = 1; a < s.n; ++a) {
      auto y = s.f(g.nodes[i], a);
      if (!y) continue;
      const int j = g.index_of(*y);
      if (j >= 0) g.edges.push_back({static_cast<int>(i), a, j});
    }
  std::sort(g.edges.begin(), g.edges.end());
  g.root = g.index_of(start);
  return g;
}

struct GraphReport {
  bool equal = true;
  std::size_t discrepancy_count = 0;
  std::vector<std::string> discrepancies;  // first ten

  void note(std::string msg) {
    equal = false;
    ++discrepancy_count;
    if (discrepancies.size() < 10) discrepancies.push_back(std::move(msg));
  }
};

using NodeMap = std::function<IntVec(const IntVec&)>;

/// Equality of node sets and colored f-arrows after mapping the nodes of g1.
inline GraphReport compare_graphs(const CrystalGraph& g1, const CrystalGraph& g2, const NodeMap& map = nullptr) {
  GraphReport rep;
  std::vector<IntVec> image;
  for (const auto& x : g1.nodes) image.push_back(map ? map(x) : x);
  std::set<IntVec> set1(image.begin(), image.end()), set2(g2.nodes.begin(), g2.nodes.end());
  if (set1.size() != image.size()) rep.note("node map is not injective");
  for (const auto& x : set1)
    if (!set2.contains(x)) rep.note("node (" + join(x) + ") only in " + g1.structure);
  for (const auto& x : set2)
    if (!set1.contains(x)) rep.note("node (" + join(x) + ") only in " + g2.structure);
  std::set<std::tuple<IntVec, int, IntVec>> e1, e2;
  for (const auto& e : g1.edges) e1.emplace(image[e.source], e.color, image[e.target]);
  for (const auto& e : g2.edges) e2.emplace(g2.nodes[e.source], e.color, g2.nodes[e.target]);
  auto describe = [](const auto& e) {
    return "(" + join(std::get<0>(e)) + ") -" + std::to_string(std::get<1>(e)) + "-> (" + join(std::get<2>(e)) + ")";
  };
  for (const auto& e : e1)
    if (!e2.contains(e)) rep.note("arrow " + describe(e) + " only in " + g1.structure);
  for (const auto& e : e2)
    if (!e1.contains(e)) rep.note("arrow " + describe(e) + " only in " + g2.structure);
  return rep;
}

/// The unique isomorphism of connected crystal graphs sending root to root, if any.
inline std::optional<std::map<IntVec, IntVec>> canonical_isomorphism(const CrystalGraph& g1, const CrystalGraph& g2) {
  if (g1.nodes.size() != g2.nodes.size() || g1.edges.size() != g2.edges.size()) return std::nullopt;
  auto adjacency = [](const CrystalGraph& g) {
    std::vector<std::map<int, std::pair<int, int>>> adj(g.nodes.size());  // color -> (f target, e target)
    for (const auto& e : g.edges) {
      adj[e.source][e.color].first = e.target + 1;
      adj[e.target][e.color].second = e.source + 1;
    }
    return adj;
  };
  const auto a1 = adjacency(g1), a2 = adjacency(g2);
  std::vector<int> img(g1.nodes.size(), -1);
  std::deque<int> queue{g1.root};
  img[g1.root] = g2.root;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& [c, nb] : a1[u]) {
      auto it = a2[img[u]].find(c);
      if (it == a2[img[u]].end()) return std::nullopt;
      for (int side = 0; side < 2; ++side) {
        const int v1 = side ? nb.second : nb.first, v2 = side ? it->second.second : it->second.first;
        if ((v1 == 0) != (v2 == 0)) return std::nullopt;
        if (v1 == 0) continue;
        if (img[v1 - 1] == -1) {
          img[v1 - 1] = v2 - 1;
          queue.push_back(v1 - 1);
        } else if (img[v1 - 1] != v2 - 1) {
          return std::nullopt;
        }
      }
    }
  }
  std::map<IntVec, IntVec> out;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[i] < 0) return std::nullopt;
    out.emplace(g1.nodes[i], g2.nodes[img[i]]);
  }
  if (!compare_graphs(g1, g2, [&out](const IntVec& x) { return out.at(x); }).equal) return std::nullopt;
  return out;
}

/// Axioms C1-C4 (C5 is vacuous: all statistics here are finite) plus normality
/// (eps = number of e steps, and phi = number of f steps for finite structures).
inline GraphReport check_axioms(const CrystalStructure& s, const CrystalGraph& g) {
  GraphReport rep;
  auto at = [](const IntVec& x) { return "(" + join(x) + ")"; };
  for (const auto& x : g.nodes) {
    const Weight w = s.wt(x);
    for (int a = 1; a < s.n; ++a) {
      const int ep = s.eps(x, a), ph = s.phi(x, a);
      if (ph != ep + pairing(w, a)) rep.note("C1 fails at " + at(x) + " color " + std::to_string(a));
      auto ex = s.e(x, a);
      if (ex) {
        if (g.index_of(*ex) >= 0 || s.finite) {
          if (s.wt(*ex) != add(w, simple_root(s.n, a)) || s.phi(*ex, a) != ph + 1 || s.eps(*ex, a) != ep - 1)
            rep.note("C2 fails at " + at(x) + " color " + std::to_string(a));
          if (s.f(*ex, a) != x) rep.note("C4 fails: f e != id at " + at(x) + " color " + std::to_string(a));
        }
      }
      auto fx = s.f(x, a);
      if (fx && (s.finite || g.index_of(*fx) >= 0)) {
        if (s.wt(*fx) != sub(w, simple_root(s.n, a)) || s.phi(*fx, a) != ph - 1 || s.eps(*fx, a) != ep + 1)
          rep.note("C3 fails at " + at(x) + " color " + std::to_string(a));
        if (s.e(*fx, a) != x) rep.note("C4 fails: e f != id at " + at(x) + " color " + std::to_string(a));
      }
      if (ep < 0) rep.note("negative eps at " + at(x));
      if ((ep > 0) != ex.has_value()) rep.note("e defined iff eps > 0 fails at " + at(x) + " color " + std::to_string(a));
      if (s.finite) {
        if (ph < 0) rep.note("negative phi at " + at(x));
        if ((ph > 0) != fx.has_value()) rep.note("f defined iff phi > 0 fails at " + at(x) + " color " + std::to_string(a));
      }
    }
  }
  return rep;
}

/// Descends to the highest weight with src.e (smallest color first) and replays
/// the reversed color sequence with dst.f.
inline IntVec transport(const IntVec& x, const CrystalStructure& src, const CrystalStructure& dst, bool smallest_first = true) {
  std::vector<int> colors;
  IntVec y = x;
  for (;;) {
    int chosen = 0;
    for (int t = 1; t < src.n; ++t) {
      const int a = smallest_first ? t : src.n - t;
      if (src.eps(y, a) > 0) {
        chosen = a;
        break;
      }
    }
    if (!chosen) break;
    auto next = src.e(y, chosen);
    if (!next) throw Error("transport: e kills an element with positive eps");
    y = std::move(*next);
    colors.push_back(chosen);
  }
  if (y != src.highest) throw Error("transport: descent stalled at (" + join(y) + ")");
  IntVec z = dst.highest;
  for (auto it = colors.rbegin(); it != colors.rend(); ++it) {
    auto next = dst.f(z, *it);
    if (!next) throw Error("transport: f kills an element during replay");
    z = std::move(*next);
  }
  return z;
}

/// str_w(b_w(x)): string datum (by e-descent along w) of the element with w-Lusztig datum x.
inline IntVec string_of_lusztig(const ReducedWord& w, const IntVec& x) {
  IntVec y = x, out;
  for (int a : w.letters()) {
    const int m = lusztig_eps(w, y, a);
    out.push_back(m);
    for (int t = 0; t < m; ++t) y = *lusztig_e(w, y, a);
  }
  if (y != IntVec(w.length(), 0)) throw Error("internal error: string datum descent did not reach the highest weight");
  return out;
}

}  // namespace crystal
