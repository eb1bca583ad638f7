#pragma once

// Feedback-edge-number kernels, their worst-case size recurrences, and the
// convex-position drawing for graphs made of long degree-2 paths.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "onep/decompositions.hpp"
#include "onep/geometry.hpp"
#include "onep/graph.hpp"

namespace onep {

using BigInt = boost::multiprecision::cpp_int;

enum class KernelVariant { OnePlanar, GeoOnePlanar, KPlanar, GeoKPlanar };

inline const char* to_string(KernelVariant v) {
  switch (v) {
    case KernelVariant::OnePlanar: return "1p";
    case KernelVariant::GeoOnePlanar: return "g1p";
    case KernelVariant::KPlanar: return "kp";
    case KernelVariant::GeoKPlanar: return "gkp";
  }
  return "?";
}

inline KernelVariant parse_kernel_variant(const std::string& s) {
  if (s == "1p" || s == "1planar") return KernelVariant::OnePlanar;
  if (s == "g1p" || s == "geo1planar") return KernelVariant::GeoOnePlanar;
  if (s == "kp" || s == "kplanar") return KernelVariant::KPlanar;
  if (s == "gkp" || s == "geo-kplanar") return KernelVariant::GeoKPlanar;
  throw InvalidInput("unknown kernel variant '" + s + "'");
}

/// Length a path at position i (0-based, i >= 1) needs to count as long for
/// the variant, given the total length s of the shorter paths.
inline long long kernel_threshold(KernelVariant v, int p, long long s) {
  switch (v) {
    case KernelVariant::OnePlanar:
    case KernelVariant::KPlanar: return p - 1 + s;
    case KernelVariant::GeoOnePlanar: return 2 * (p - 1 + s);
    case KernelVariant::GeoKPlanar: return (s * s + 3 * s + 1) * (p + 1) + 1;
  }
  return 0;
}

struct KernelPlan {
  enum class Outcome { TrivialYes, Unchanged, Shortened };
  enum class PathClass { Kept, Shortened, BaseCase };

  KernelVariant variant = KernelVariant::OnePlanar;
  int k = 1;
  int p = 0;
  int ell = 0;
  int j = -1;  // first path meeting the threshold, 0-based; -1 if none
  Outcome outcome = Outcome::Unchanged;
  Degree2PathDecomposition decomposition;  // of the pruned (and subdivided) graph
  std::vector<long long> prefix;           // s(i): total length of paths before i
  std::vector<long long> threshold;        // per path; -1 for the first path
  std::vector<PathClass> classes;
  long long target = -1;  // length the long paths are cut to
};

/// Where a kernel edge comes from: path index and position along the path,
/// plus the original edge id (of the pruned graph) if the edge is unchanged.
struct KernelEdgeOrigin {
  int path = -1;
  int position = -1;
  EdgeId original = -1;
};

struct KernelResult {
  Graph kernel;
  KernelPlan plan;
  std::vector<KernelEdgeOrigin> provenance;
  Graph reduced;  // the graph the plan refers to (pruned, subdivided for kp)
};

namespace detail {

inline Graph k2() {
  Graph g(2);
  g.add_edge(0, 1);
  return g;
}

}  // namespace detail

/// Kernel of g for the variant. For kp, g is first subdivided k times.
inline KernelResult kernelize(const Graph& g, KernelVariant variant, int k = 1) {
  if (k < 1) throw InvalidInput("k must be positive");
  KernelResult res;
  res.plan.variant = variant;
  res.plan.k = k;
  Graph base = variant == KernelVariant::KPlanar ? subdivide_all_edges(g, k) : g;
  res.reduced = prune_degree_one(base).graph;
  const Graph& h = res.reduced;
  res.plan.ell = feedback_edge_set(h).ell;
  if (res.plan.ell == 0) {
    res.plan.outcome = KernelPlan::Outcome::TrivialYes;
    res.kernel = detail::k2();
    res.provenance.assign(1, {});
    return res;
  }
  res.plan.decomposition = decompose_degree2_paths(h);
  const auto& paths = res.plan.decomposition.paths;
  const int p = res.plan.decomposition.p();
  res.plan.p = p;
  long long s = 0;
  for (int i = 0; i < p; ++i) {
    res.plan.prefix.push_back(s);
    res.plan.threshold.push_back(i == 0 ? -1 : kernel_threshold(variant, p, s));
    s += paths[i].length();
  }
  res.plan.classes.assign(p, KernelPlan::PathClass::Kept);
  if (paths[0].length() >= p - 1) {
    res.plan.outcome = KernelPlan::Outcome::TrivialYes;
    res.plan.classes.assign(p, KernelPlan::PathClass::BaseCase);
    res.kernel = detail::k2();
    res.provenance.assign(1, {});
    return res;
  }
  for (int i = 1; i < p && res.plan.j < 0; ++i)
    if (paths[i].length() >= res.plan.threshold[i]) res.plan.j = i;

  auto keep_everything = [&]() {
    res.plan.outcome = KernelPlan::Outcome::Unchanged;
    res.kernel = h;
    res.provenance.assign(h.m(), {});
    for (int i = 0; i < p; ++i)
      for (int q = 0; q < paths[i].length(); ++q) res.provenance[paths[i].edges[q]] = {i, q, paths[i].edges[q]};
  };
  if (res.plan.j < 0) {
    keep_everything();
    return res;
  }
  const int j = res.plan.j;
  res.plan.target = res.plan.threshold[j];
  res.plan.outcome = KernelPlan::Outcome::Shortened;

  // Vertices: everything except the interiors of shortened paths.
  std::vector<bool> interior_dropped(h.n(), false);
  for (int i = j; i < p; ++i) {
    res.plan.classes[i] = KernelPlan::PathClass::Shortened;
    const auto& vs = paths[i].vertices;
    for (std::size_t q = 1; q + 1 < vs.size(); ++q) interior_dropped[vs[q]] = true;
  }
  Graph& out = res.kernel;
  std::vector<VertexId> to_new(h.n(), -1);
  for (VertexId v = 0; v < h.n(); ++v)
    if (!interior_dropped[v]) to_new[v] = out.add_vertex(h.vertex_label(v));
  for (int i = 0; i < j; ++i)
    for (int q = 0; q < paths[i].length(); ++q) {
      EdgeId e = paths[i].edges[q];
      out.add_edge(to_new[h.edge(e).u], to_new[h.edge(e).v], h.edge_label(e));
      res.provenance.push_back({i, q, e});
    }
  for (int i = j; i < p; ++i) {
    const auto& path = paths[i];
    long long len = res.plan.target;
    // A path closing on itself needs three edges to stay simple.
    if (path.front() == path.back()) len = std::max<long long>(len, 3);
    if (len >= path.length()) {
      for (int q = 0; q < path.length(); ++q) {
        VertexId a = path.vertices[q], b = path.vertices[q + 1];
        if (to_new[a] < 0) to_new[a] = out.add_vertex(h.vertex_label(a));
        if (to_new[b] < 0) to_new[b] = out.add_vertex(h.vertex_label(b));
        out.add_edge(to_new[a], to_new[b], h.edge_label(path.edges[q]));
        res.provenance.push_back({i, q, path.edges[q]});
      }
      continue;
    }
    VertexId start = to_new[path.front()];
    if (start < 0) start = to_new[path.front()] = out.add_vertex(h.vertex_label(path.front()));
    VertexId end = path.front() == path.back() ? start : to_new[path.back()];
    VertexId prev = start;
    for (long long q = 0; q < len; ++q) {
      VertexId next = q + 1 == len ? end
                                   : out.add_vertex("k" + std::to_string(i) + "." + std::to_string(q + 1));
      out.add_edge(prev, next);
      res.provenance.push_back({i, static_cast<int>(q), -1});
      prev = next;
    }
  }
  return res;
}

inline nlohmann::ordered_json kernel_report(const KernelResult& r) {
  nlohmann::ordered_json j;
  const auto& plan = r.plan;
  j["variant"] = to_string(plan.variant);
  if (plan.variant == KernelVariant::KPlanar) j["k"] = plan.k;
  j["ell"] = plan.ell;
  j["p"] = plan.p;
  const char* outcome = plan.outcome == KernelPlan::Outcome::TrivialYes ? "trivial-yes"
                        : plan.outcome == KernelPlan::Outcome::Unchanged ? "unchanged"
                                                                         : "shortened";
  j["outcome"] = outcome;
  j["j"] = plan.j >= 0 ? nlohmann::ordered_json(plan.j + 1) : nlohmann::ordered_json(nullptr);
  j["lengths"] = plan.decomposition.lengths();
  j["prefix"] = plan.prefix;
  j["thresholds"] = plan.threshold;
  if (plan.target >= 0) j["target"] = plan.target;
  j["input_edges"] = r.reduced.m();
  j["kernel_vertices"] = r.kernel.n();
  j["kernel_edges"] = r.kernel.m();
  auto prov = nlohmann::ordered_json::array();
  for (const auto& o : r.provenance)
    prov.push_back({{"path", o.path}, {"position", o.position}, {"original", o.original}});
  j["provenance"] = prov;
  return j;
}

/// Worst-case kernel size S_p for p = 3*ell - 3 via the size recurrences.
inline BigInt worst_case_size(int ell, KernelVariant v) {
  if (ell < 2) throw InvalidInput("worst-case size needs ell >= 2");
  const int p = 3 * ell - 3;
  BigInt S = p - 2;
  for (int i = 2; i <= p; ++i) {
    switch (v) {
      case KernelVariant::OnePlanar:
      case KernelVariant::KPlanar: S = 2 * S + (p - 2); break;
      case KernelVariant::GeoOnePlanar: S = 3 * S + (2 * p - 3); break;
      case KernelVariant::GeoKPlanar: S = S + (S * S + 3 * S + 1) * (p + 1); break;
    }
  }
  return S;
}

/// Bound on the triangles needed around m short-path edges.
inline BigInt triangulation_bound(const BigInt& m) { return m * m + 3 * m + 1; }

// ---------------------------------------------------------------------------
// Convex-position certificate

struct ConvexCertificate {
  std::vector<Point> position;
  DrawingCheck check;
  int f = 0;  // number of degree-2 paths
};

namespace detail {

// Rational point on the unit circle.
inline Point circle_point(const Rational& t) {
  Rational d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d};
}

}  // namespace detail

/// Straight-line drawing of a graph whose maximal degree-2 paths (f of them)
/// all have length at least f-1: path ends go on a circle, each path follows
/// its chord (paths with the same ends are bent slightly apart) and its
/// subdivision vertices are spread so that every edge is crossed at most once.
/// The result is checked with exact arithmetic.
inline ConvexCertificate convex_certificate(const Graph& g) {
  auto dec = decompose_degree2_paths(g, true);
  const int f = dec.p();
  for (const auto& path : dec.paths)
    if (path.length() < f - 1)
      throw InvalidInput("path of length " + std::to_string(path.length()) + " is shorter than f-1 = " +
                         std::to_string(f - 1));
  std::vector<VertexId> terminals;
  for (const auto& path : dec.paths)
    if (!path.closed) {
      terminals.push_back(path.front());
      terminals.push_back(path.back());
    }
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());

  struct Piece {
    Point a, b;
  };
  std::mt19937 rng(12345);
  Rational delta(1, 50 * (static_cast<int>(terminals.size()) + 2));
  for (int attempt = 0; attempt < 24; ++attempt, delta /= 4) {
    std::vector<Point> pos(g.n());
    std::vector<bool> placed(g.n(), false);
    // terminal parameters in (0,1), distinct and random
    std::vector<long> num;
    const long scale = 1000003;
    while (num.size() < terminals.size()) {
      long x = 1 + static_cast<long>(rng() % (scale - 1));
      if (std::find(num.begin(), num.end(), x) == num.end()) num.push_back(x);
    }
    std::sort(num.begin(), num.end());
    for (std::size_t i = 0; i < terminals.size(); ++i) {
      pos[terminals[i]] = detail::circle_point(Rational(num[i], scale));
      placed[terminals[i]] = true;
    }
    // Polylines. corners[i][q] is the vertex index (in path order) ending piece q.
    std::vector<std::vector<Piece>> pieces(f);
    std::map<std::pair<VertexId, VertexId>, int> group_seen;
    std::map<VertexId, int> loops_seen, loops_total;
    for (const auto& path : dec.paths)
      if (!path.closed && path.front() == path.back()) ++loops_total[path.front()];
    int far = 0;
    for (int i = 0; i < f; ++i) {
      const auto& path = dec.paths[i];
      if (path.closed) continue;
      Point u = pos[path.front()], v = pos[path.back()];
      if (path.front() == path.back()) {
        int r = loops_seen[path.front()]++;
        int total = loops_total[path.front()];
        Point tangent{-u.y, u.x};
        Rational a = Rational(-1) + Rational(2 * r, total), b = a + Rational(1, total);
        Point q1{u.x + delta * (u.x + a * tangent.x), u.y + delta * (u.y + a * tangent.y)};
        Point q2{u.x + delta * (u.x + b * tangent.x), u.y + delta * (u.y + b * tangent.y)};
        pieces[i] = {{u, q1}, {q1, q2}, {q2, u}};
        continue;
      }
      auto key = std::minmax(path.front(), path.back());
      int r = group_seen[key]++;
      if (r == 0) {
        pieces[i] = {{u, v}};
        continue;
      }
      int magnitude = (r + 1) / 2;
      Rational off = delta * magnitude * (r % 2 == 1 ? 1 : -1);
      Point mid{(u.x + v.x) / 2, (u.y + v.y) / 2};
      Point apex{mid.x - off * (v.y - u.y), mid.y + off * (v.x - u.x)};
      pieces[i] = {{u, apex}, {apex, v}};
    }
    // Crossing parameters per piece.
    bool fits = true;
    for (int i = 0; i < f && fits; ++i) {
      const auto& path = dec.paths[i];
      if (path.closed) {
        // its own small convex polygon far away
        const int L = path.length();
        Point centre{Rational(10 + 4 * far++), Rational(10)};
        for (int q = 0; q < L; ++q) {
          Point c = detail::circle_point(Rational(q + 1, L + 1));
          pos[path.vertices[q]] = {centre.x + c.x, centre.y + c.y};
          placed[path.vertices[q]] = true;
        }
        continue;
      }
      std::vector<std::vector<Rational>> ts(pieces[i].size());
      for (std::size_t q = 0; q < pieces[i].size(); ++q) {
        for (int o = 0; o < f; ++o) {
          if (o == i) continue;
          for (const Piece& other : pieces[o])
            if (auto t = proper_crossing(pieces[i][q].a, pieces[i][q].b, other.a, other.b)) ts[q].push_back(*t);
        }
        std::sort(ts[q].begin(), ts[q].end());
      }
      int needed = static_cast<int>(pieces[i].size()) - 1;
      for (const auto& t : ts) needed += std::max<int>(0, static_cast<int>(t.size()) - 1);
      int extra = path.length() - 1 - needed;
      if (extra < 0) {
        fits = false;
        break;
      }
      std::vector<Point> inner;
      for (std::size_t q = 0; q < pieces[i].size(); ++q) {
        const Piece& pc = pieces[i][q];
        if (q == 0) {
          Rational first = ts[0].empty() ? Rational(1) : ts[0][0];
          for (int x = 1; x <= extra; ++x) inner.push_back(lerp(pc.a, pc.b, first * x / (extra + 1)));
        }
        for (std::size_t c = 1; c < ts[q].size(); ++c) inner.push_back(lerp(pc.a, pc.b, (ts[q][c - 1] + ts[q][c]) / 2));
        if (q + 1 < pieces[i].size()) inner.push_back(pc.b);
      }
      for (std::size_t q = 0; q < inner.size(); ++q) {
        pos[path.vertices[q + 1]] = inner[q];
        placed[path.vertices[q + 1]] = true;
      }
    }
    if (!fits) continue;
    int lonely = 0;
    for (VertexId v = 0; v < g.n(); ++v)
      if (!placed[v]) pos[v] = {Rational(-10 - 2 * lonely++), Rational(-10)};
    ConvexCertificate cert;
    cert.f = f;
    cert.position = pos;
    cert.check = check_straight_line_drawing(g, pos, 1);
    if (cert.check.ok) return cert;
  }
  throw Error("no convex certificate found");
}

inline nlohmann::ordered_json certificate_json(const Graph& g, const ConvexCertificate& c) {
  nlohmann::ordered_json j;
  j["f"] = c.f;
  j["valid"] = c.check.ok;
  j["crossings"] = c.check.crossings;
  j["max_crossings_per_edge"] = c.check.max_crossings_per_edge;
  auto coords = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < g.n(); ++v)
    coords.push_back({{"vertex", g.vertex_label(v).empty() ? std::to_string(v) : g.vertex_label(v)},
                      {"x", c.position[v].x.str()},
                      {"y", c.position[v].y.str()}});
  j["coordinates"] = coords;
  return j;
}

}  // namespace onep
