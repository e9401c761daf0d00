#pragma once

// Reineke crossings and rigorous paths in an oriented wiring diagram, their
// turning points, the vectors r and s, and the region order between paths.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crystal/wiring.hpp"

namespace crystal {

enum class PathKind { crossing, rigorous };

inline std::string to_string(PathKind k) { return k == PathKind::crossing ? "crossing" : "rigorous"; }

struct PathStep {
  int position = 0;
  int arrival_wire = 0;
  int other_wire = 0;
  friend auto operator<=>(const PathStep&, const PathStep&) = default;
};

class CrossingPath {
 public:
  CrossingPath(int n, int a, PathKind kind, std::vector<PathStep> steps) : n_(n), a_(a), kind_(kind), steps_(std::move(steps)) {
    if (steps_.empty()) throw Error("crossing path without vertices");
    const int len = n * (n - 1) / 2;
    const int m = static_cast<int>(steps_.size());
    turning_.assign(m, false);
    for (int s = 0; s + 1 < m; ++s) turning_[s] = steps_[s + 1].arrival_wire != steps_[s].arrival_wire;
    turning_[m - 1] = steps_[m - 1].arrival_wire != a + 1;
    r_.assign(len, 0);
    s_.assign(len, 0);
    for (int s = 0; s < m; ++s) {
      const auto& st = steps_[s];
      const int k = st.position - 1;
      if (turning_[s]) r_[k] = st.other_wire > st.arrival_wire ? 1 : -1;
      const bool straddles = std::min(st.arrival_wire, st.other_wire) <= a && std::max(st.arrival_wire, st.other_wire) > a;
      if (straddles)
        s_[k] = 1;
      else if (!turning_[s])
        s_[k] = -1;
    }
  }

  int n() const noexcept { return n_; }
  int color() const noexcept { return a_; }
  PathKind kind() const noexcept { return kind_; }
  const std::vector<PathStep>& steps() const noexcept { return steps_; }
  int length() const noexcept { return static_cast<int>(steps_.size()); }
  const std::vector<bool>& turning() const noexcept { return turning_; }
  const IntVec& r() const noexcept { return r_; }
  const IntVec& s() const noexcept { return s_; }

  /// Wire along which the path leaves step s (the exit wire a+1 after the last step).
  int departure_wire(int s) const { return s + 1 < length() ? steps_[s + 1].arrival_wire : a_ + 1; }

  IntVec positions() const {
    IntVec out;
    for (const auto& st : steps_) out.push_back(st.position);
    return out;
  }
  IntVec arrival_wires() const {
    IntVec out;
    for (const auto& st : steps_) out.push_back(st.arrival_wire);
    return out;
  }

  friend bool operator==(const CrossingPath& x, const CrossingPath& y) {
    return x.a_ == y.a_ && x.kind_ == y.kind_ && x.steps_ == y.steps_;
  }

 private:
  int n_;
  int a_;
  PathKind kind_;
  std::vector<PathStep> steps_;
  std::vector<bool> turning_;
  IntVec r_;
  IntVec s_;
};

inline std::vector<int> turning_points(const CrossingPath& g) {
  std::vector<int> out;
  for (int s = 0; s < g.length(); ++s)
    if (g.turning()[s]) out.push_back(g.steps()[s].position);
  std::sort(out.begin(), out.end());
  return out;
}

inline const IntVec& r_vec(const CrossingPath& g) { return g.r(); }
inline const IntVec& s_vec(const CrossingPath& g) { return g.s(); }

/// A straight pass along wire p through its crossing with q.
inline bool straight_pass_allowed(int a, int p, int q) { return (q <= a && p > q) || (q >= a + 1 && p < q); }

/// 1-based height of the arrival wire just before the vertex of step s.
inline int level_in(const WiringDiagram& d, const CrossingPath& g, int s) {
  OrientedDiagram od(d, g.color(), g.kind() == PathKind::rigorous);
  const auto& st = g.steps().at(s);
  return d.height_of(st.arrival_wire, od.arrival_gap(st.arrival_wire, st.position)) + 1;
}

/// 1-based height of the departure wire just after the vertex of step s.
inline int level_out(const WiringDiagram& d, const CrossingPath& g, int s) {
  OrientedDiagram od(d, g.color(), g.kind() == PathKind::rigorous);
  const auto& st = g.steps().at(s);
  const int w = g.departure_wire(s);
  return d.height_of(w, od.departure_gap(w, st.position)) + 1;
}

namespace detail {

inline void path_dfs(const OrientedDiagram& od, int target, PathKind kind, std::vector<PathStep>& steps,
                     std::vector<bool>& visited, std::vector<CrossingPath>& out) {
  const WiringDiagram& d = od.base();
  const int a = od.color();
  const PathStep cur = steps.back();
  if (cur.position == target) {
    out.emplace_back(d.n(), a, kind, steps);
    return;
  }
  int options[2] = {std::min(cur.arrival_wire, cur.other_wire), std::max(cur.arrival_wire, cur.other_wire)};
  for (int w : options) {
    if (w == cur.arrival_wire && !straight_pass_allowed(a, cur.arrival_wire, cur.other_wire)) continue;
    std::optional<int> nxt = od.next(w, cur.position);
    if (!nxt || visited[*nxt]) continue;
    visited[*nxt] = true;
    steps.push_back({*nxt, w, d.vertex(*nxt).other(w)});
    path_dfs(od, target, kind, steps, visited, out);
    steps.pop_back();
    visited[*nxt] = false;
  }
}

inline std::vector<CrossingPath> enumerate_paths(const WiringDiagram& d, int a, PathKind kind) {
  const bool rig = kind == PathKind::rigorous;
  OrientedDiagram od(d, a, rig);
  const int start = rig ? d.rightmost(a) : d.leftmost(a);
  const int target = rig ? d.rightmost(a + 1) : d.leftmost(a + 1);
  std::vector<PathStep> steps{{start, a, d.vertex(start).other(a)}};
  std::vector<bool> visited(d.size() + 1, false);
  visited[start] = true;
  std::vector<CrossingPath> out;
  path_dfs(od, target, kind, steps, visited, out);
  std::sort(out.begin(), out.end(), [](const CrossingPath& x, const CrossingPath& y) {
    if (x.positions() != y.positions()) return x.positions() < y.positions();
    return x.arrival_wires() < y.arrival_wires();
  });
  if (kind == PathKind::crossing) {
    for (const auto& g : out)
      for (int s = 0; s < g.length(); ++s)
        if (level_out(d, g, s) - level_in(d, g, s) != g.s()[g.steps()[s].position - 1])
          throw Error("internal error: level bookkeeping fails on a crossing of color " + std::to_string(a));
  }
  return out;
}

}  // namespace detail

inline std::vector<CrossingPath> enumerate_crossings(const WiringDiagram& d, int a) {
  return detail::enumerate_paths(d, a, PathKind::crossing);
}
inline std::vector<CrossingPath> enumerate_rigorous(const WiringDiagram& d, int a) {
  return detail::enumerate_paths(d, a, PathKind::rigorous);
}
inline std::vector<CrossingPath> enumerate_crossings(const ReducedWord& w, int a) {
  return enumerate_crossings(WiringDiagram(w), a);
}
inline std::vector<CrossingPath> enumerate_rigorous(const ReducedWord& w, int a) {
  return enumerate_rigorous(WiringDiagram(w), a);
}

/// Independent re-check of a path against the definition; returns a reason on failure.
inline std::optional<std::string> validate_path(const WiringDiagram& d, const CrossingPath& g) {
  const int a = g.color();
  const bool rig = g.kind() == PathKind::rigorous;
  const auto& steps = g.steps();
  const int start = rig ? d.rightmost(a) : d.leftmost(a);
  const int target = rig ? d.rightmost(a + 1) : d.leftmost(a + 1);
  if (steps.front().position != start || steps.front().arrival_wire != a) return "wrong start";
  if (steps.back().position != target) return "wrong end";
  std::set<int> seen;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& st = steps[s];
    const Vertex& v = d.vertex(st.position);
    if (!v.on_wire(st.arrival_wire) || v.other(st.arrival_wire) != st.other_wire)
      return "step " + std::to_string(s) + " has wrong wire labels";
    if (!seen.insert(st.position).second) return "vertex repeated";
    if (s + 1 < steps.size()) {
      const auto& nx = steps[s + 1];
      const int w = nx.arrival_wire;
      if (!v.on_wire(w)) return "departure wire not at vertex";
      const bool forward = (w <= a) != rig;
      const auto& vs = d.wire_vertices(w);
      auto it = std::find(vs.begin(), vs.end(), st.position);
      auto jt = std::find(vs.begin(), vs.end(), nx.position);
      if (jt == vs.end() || (jt - it) != (forward ? 1 : -1)) return "edge not in oriented diagram";
      if (w == st.arrival_wire && !straight_pass_allowed(a, w, st.other_wire)) return "forbidden fragment";
    }
  }
  return std::nullopt;
}

/// Closed polygon bounded by the path and the boundary stubs along wires a and a+1.
inline std::vector<Point> region_polygon(const PlanarGeometry& geo, const CrossingPath& g) {
  const WiringDiagram& d = geo.diagram();
  const int a = g.color();
  const Rational edge = g.kind() == PathKind::rigorous ? Rational(d.size() + 1) : Rational(0);
  const auto& steps = g.steps();
  std::vector<Point> poly = geo.stretch(a, edge, steps.front().position);
  auto append = [&poly](std::vector<Point> pts) { poly.insert(poly.end(), pts.begin() + 1, pts.end()); };
  for (std::size_t s = 0; s + 1 < steps.size(); ++s)
    append(geo.stretch(steps[s + 1].arrival_wire, steps[s].position, steps[s + 1].position));
  append(geo.stretch(a + 1, steps.back().position, edge));
  return poly;
}

inline bool precedes(const PlanarGeometry& geo, const CrossingPath& g1, const CrossingPath& g2) {
  if (g1.color() != g2.color() || g1.kind() != g2.kind()) throw Error("precedes: paths of different color or kind");
  const auto poly = region_polygon(geo, g2);
  for (const auto& st : g1.steps())
    if (!inside_closed(geo.vertex_point(st.position), poly)) return false;
  return true;
}

/// All paths of one color and kind with their order relation.
struct CrossingSet {
  std::vector<CrossingPath> paths;
  std::vector<std::vector<bool>> order;  // order[i][j] iff paths[i] precedes paths[j]

  CrossingSet() = default;
  CrossingSet(const PlanarGeometry& geo, std::vector<CrossingPath> ps) : paths(std::move(ps)) {
    const std::size_t m = paths.size();
    order.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) order[i][j] = i == j || precedes(geo, paths[i], paths[j]);
  }
};

enum class Weighting { r, s };
enum class Extremum { min, max };

struct Extremal {
  long value = 0;
  std::size_t index = 0;
};

/// Maximum of <x, r> (or <x, s>) over the set, and the order-minimal (or maximal) maximizer.
inline Extremal select_extremal(const IntVec& x, const CrossingSet& set, Weighting weight, Extremum which) {
  if (set.paths.empty()) throw Error("select_extremal: empty path set");
  std::vector<long> vals;
  vals.reserve(set.paths.size());
  for (const auto& g : set.paths) vals.push_back(dot(x, weight == Weighting::r ? g.r() : g.s()));
  const long best = *std::max_element(vals.begin(), vals.end());
  std::vector<std::size_t> arg;
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] == best) arg.push_back(i);
  if (arg.size() == 1) return {best, arg.front()};
  std::vector<std::size_t> extremal;
  for (std::size_t i : arg) {
    bool dominated = false;
    for (std::size_t j : arg) {
      if (i == j) continue;
      if (which == Extremum::min ? set.order[j][i] : set.order[i][j]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) extremal.push_back(i);
  }
  if (extremal.size() != 1)
    throw Error("select_extremal: " + std::to_string(extremal.size()) + " extremal maximizers at x=" + join(x));
  return {best, extremal.front()};
}

}  // namespace crystal
