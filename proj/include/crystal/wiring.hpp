#pragma once

// Wiring diagrams of reduced words, their orientations relative to a color,
// and exact planar coordinates for region tests.

#include <boost/rational.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crystal/words.hpp"

namespace crystal {

struct Vertex {
  int position = 0;  // 1-based
  Inversion inversion;
  int level = 0;  // wires strictly below the crossing

  bool on_wire(int p) const noexcept { return inversion.p == p || inversion.q == p; }
  int other(int p) const { return p == inversion.p ? inversion.q : inversion.p; }
};

class WiringDiagram {
 public:
  explicit WiringDiagram(ReducedWord word) : word_(std::move(word)) {
    const int n = word_.n(), len = word_.length();
    gaps_.reserve(len + 1);
    std::vector<int> at_height(n);
    std::iota(at_height.begin(), at_height.end(), 1);
    gaps_.push_back(at_height);
    wire_vertices_.assign(n + 1, {});
    for (int k = 1; k <= len; ++k) {
      const int i = word_.letter(k);
      int lo = at_height[i - 1], hi = at_height[i];
      if (lo > hi) std::swap(lo, hi);
      vertices_.push_back({k, {lo, hi}, i - 1});
      wire_vertices_[lo].push_back(k);
      wire_vertices_[hi].push_back(k);
      std::swap(at_height[i - 1], at_height[i]);
      gaps_.push_back(at_height);
    }
    heights_.assign(len + 1, std::vector<int>(n + 1, 0));
    for (int g = 0; g <= len; ++g)
      for (int h = 0; h < n; ++h) heights_[g][gaps_[g][h]] = h;
  }

  const ReducedWord& word() const noexcept { return word_; }
  int n() const noexcept { return word_.n(); }
  int size() const noexcept { return word_.length(); }

  /// Wire at 0-based height h in gap g (gap g lies between vertex g and g+1).
  int wire_at(int gap, int height) const { return gaps_.at(gap).at(height); }
  int height_of(int wire, int gap) const { return heights_.at(gap).at(wire); }
  const std::vector<std::vector<int>>& gap_tables() const noexcept { return gaps_; }

  const Vertex& vertex(int position) const { return vertices_.at(position - 1); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  /// Positions of the vertices on wire p, left to right.
  const std::vector<int>& wire_vertices(int p) const { return wire_vertices_.at(p); }
  int leftmost(int p) const { return wire_vertices(p).front(); }
  int rightmost(int p) const { return wire_vertices(p).back(); }

  std::string ascii() const {
    const int n = this->n(), len = size();
    std::ostringstream out;
    for (int h = n - 1; h >= 0; --h) {
      for (int g = 0; g <= len; ++g) {
        out << wire_at(g, h);
        if (g == len) break;
        const int i = word_.letter(g + 1);
        if (h == i - 1 || h == i)
          out << (h == i ? " \\ " : " / ");
        else
          out << " - ";
      }
      out << '\n';
    }
    return out.str();
  }

 private:
  ReducedWord word_;
  std::vector<std::vector<int>> gaps_;
  std::vector<std::vector<int>> heights_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<int>> wire_vertices_;
};

inline WiringDiagram build(const ReducedWord& word) { return WiringDiagram(word); }

/// The diagram with wires p <= a pointing right (left if reversed) and the others opposite.
class OrientedDiagram {
 public:
  OrientedDiagram(const WiringDiagram& base, int a, bool reversed) : base_(&base), a_(a), reversed_(reversed) {
    if (a < 1 || a > base.n() - 1) throw Error("color " + std::to_string(a) + " out of range");
  }

  const WiringDiagram& base() const noexcept { return *base_; }
  int color() const noexcept { return a_; }
  bool reversed() const noexcept { return reversed_; }
  bool rightward(int wire) const noexcept { return (wire <= a_) != reversed_; }

  /// Next vertex along `wire` after `position` in the wire's direction; nullopt at a boundary stub.
  std::optional<int> next(int wire, int position) const {
    const auto& vs = base_->wire_vertices(wire);
    auto it = std::find(vs.begin(), vs.end(), position);
    if (it == vs.end()) throw Error("vertex " + std::to_string(position) + " not on wire " + std::to_string(wire));
    if (rightward(wire)) {
      if (++it == vs.end()) return std::nullopt;
      return *it;
    }
    if (it == vs.begin()) return std::nullopt;
    return *--it;
  }

  /// Gap on the side from which `wire` enters `position`.
  int arrival_gap(int wire, int position) const { return rightward(wire) ? position - 1 : position; }
  int departure_gap(int wire, int position) const { return rightward(wire) ? position : position - 1; }

 private:
  const WiringDiagram* base_;
  int a_;
  bool reversed_;
};

inline OrientedDiagram orient(const WiringDiagram& diagram, int a, bool reversed) {
  return OrientedDiagram(diagram, a, reversed);
}

using Rational = boost::rational<long long>;

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Vertex k sits at (k, i_k - 1/2); wire p has height from its gap table at x = k +- 1/2,
/// and runs from x = 0 to x = N + 1.
class PlanarGeometry {
 public:
  explicit PlanarGeometry(const WiringDiagram& d) : diagram_(&d), wires_(d.n() + 1) {
    const Rational half(1, 2);
    const int len = d.size();
    for (int p = 1; p <= d.n(); ++p) {
      auto& line = wires_[p];
      line.push_back({0, d.height_of(p, 0)});
      for (int k : d.wire_vertices(p)) {
        line.push_back({Rational(k) - half, d.height_of(p, k - 1)});
        line.push_back(vertex_point(k));
        line.push_back({Rational(k) + half, d.height_of(p, k)});
      }
      line.push_back({len + 1, d.height_of(p, len)});
    }
  }

  Point vertex_point(int k) const { return {k, Rational(diagram_->word().letter(k)) - Rational(1, 2)}; }

  const std::vector<Point>& polyline(int wire) const { return wires_.at(wire); }

  /// Points of `wire` with x between x_from and x_to inclusive, ordered from x_from to x_to.
  std::vector<Point> stretch(int wire, Rational x_from, Rational x_to) const {
    std::vector<Point> out;
    const Rational lo = std::min(x_from, x_to), hi = std::max(x_from, x_to);
    for (const Point& pt : wires_.at(wire))
      if (pt.x >= lo && pt.x <= hi) out.push_back(pt);
    if (x_from > x_to) std::reverse(out.begin(), out.end());
    return out;
  }

  const WiringDiagram& diagram() const noexcept { return *diagram_; }

 private:
  const WiringDiagram* diagram_;
  std::vector<std::vector<Point>> wires_;
};

inline PlanarGeometry planar_geometry(const WiringDiagram& d) { return PlanarGeometry(d); }

namespace detail {

inline bool on_segment(const Point& p, const Point& a, const Point& b) {
  const Rational cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  if (cross != Rational(0)) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace detail

/// Even-odd test on a closed polygon; points on the boundary count as inside.
inline bool inside_closed(const Point& p, const std::vector<Point>& polygon) {
  const std::size_t m = polygon.size();
  bool inside = false;
  for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
    const Point& a = polygon[i];
    const Point& b = polygon[j];
    if (detail::on_segment(p, a, b)) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      const Rational x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

}  // namespace crystal
