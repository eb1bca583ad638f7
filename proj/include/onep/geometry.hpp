#pragma once

// Exact straight-line drawings: rational points, segment intersection and a
// validator for geometric 1-planar drawings.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "onep/graph.hpp"

namespace onep {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

inline Point lerp(const Point& a, const Point& b, const Rational& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

inline Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

/// Whether p lies on the closed segment ab (p collinear with a and b).
inline bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (sign(cross(a, b, p)) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

/// Parameter t on ab of the proper crossing with cd (interiors cross in a
/// single point, no endpoint involved), if any.
inline std::optional<Rational> proper_crossing(const Point& a, const Point& b, const Point& c,
                                               const Point& d) {
  int s1 = sign(cross(a, b, c)), s2 = sign(cross(a, b, d));
  int s3 = sign(cross(c, d, a)), s4 = sign(cross(c, d, b));
  if (s1 * s2 >= 0 || s3 * s4 >= 0) return std::nullopt;
  Rational num = cross(c, d, a);
  Rational den = num - cross(c, d, b);
  return num / den;
}

struct DrawingCheck {
  bool ok = true;
  int max_crossings_per_edge = 0;
  int crossings = 0;
  std::string problem;
};

/// Checks that straight segments between `pos` form a drawing in which edges
/// meet only at shared endpoints or in proper crossings, no vertex lies on a
/// foreign edge, and each edge is crossed at most `k` times.
inline DrawingCheck check_straight_line_drawing(const Graph& g, const std::vector<Point>& pos, int k = 1) {
  DrawingCheck out;
  auto fail = [&](std::string why) {
    out.ok = false;
    if (out.problem.empty()) out.problem = std::move(why);
  };
  if (static_cast<int>(pos.size()) != g.n()) {
    fail("coordinate count differs from vertex count");
    return out;
  }
  for (VertexId u = 0; u < g.n(); ++u)
    for (VertexId v = u + 1; v < g.n(); ++v)
      if (pos[u] == pos[v]) fail("vertices " + std::to_string(u) + " and " + std::to_string(v) + " coincide");
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& x = g.edge(e);
    for (VertexId w = 0; w < g.n(); ++w)
      if (!x.has(w) && on_segment(pos[x.u], pos[x.v], pos[w]))
        fail("vertex " + std::to_string(w) + " lies on edge " + std::to_string(e));
  }
  std::vector<int> count(g.m(), 0);
  for (EdgeId e = 0; e < g.m(); ++e)
    for (EdgeId f = e + 1; f < g.m(); ++f) {
      const Edge& x = g.edge(e);
      const Edge& y = g.edge(f);
      const Point &a = pos[x.u], &b = pos[x.v], &c = pos[y.u], &d = pos[y.v];
      if (!x.independent_of(y)) {
        // adjacent segments may only share the common endpoint
        VertexId common = x.has(y.u) ? y.u : y.v;
        VertexId ox = x.other(common), oy = y.other(common);
        if (sign(cross(pos[common], pos[ox], pos[oy])) == 0 &&
            (on_segment(pos[common], pos[ox], pos[oy]) || on_segment(pos[common], pos[oy], pos[ox])))
          fail("edges " + std::to_string(e) + " and " + std::to_string(f) + " overlap");
        continue;
      }
      if (proper_crossing(a, b, c, d)) {
        ++count[e];
        ++count[f];
        ++out.crossings;
      } else if (sign(cross(a, b, c)) == 0 && sign(cross(a, b, d)) == 0 &&
                 (on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a))) {
        fail("edges " + std::to_string(e) + " and " + std::to_string(f) + " overlap");
      }
    }
  for (EdgeId e = 0; e < g.m(); ++e) {
    out.max_crossings_per_edge = std::max(out.max_crossings_per_edge, count[e]);
    if (count[e] > k) fail("edge " + std::to_string(e) + " is crossed " + std::to_string(count[e]) + " times");
  }
  return out;
}

}  // namespace onep
