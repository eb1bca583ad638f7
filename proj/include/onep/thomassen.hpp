#pragma once

// B- and W-configurations of 1-planar embeddings and the L/M/R word of a
// union of (a,b)-crossing pairs.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "onep/embedding.hpp"

namespace onep {

enum class Orientation { Left, Right };

struct BWConfiguration {
  enum class Kind { B, W };
  Kind kind = Kind::B;
  VertexId a = 0, b = 0;
  std::vector<int> crossings;  // one for B, two for W
  EdgeId ab = -1;              // the edge ab of a B
  std::vector<int> bounded_faces;

  const char* kind_name() const { return kind == Kind::B ? "B" : "W"; }
};

/// A configuration shape together with the faces that may be unbounded
/// without the configuration being present.
struct BWCandidate {
  BWConfiguration config;
  std::vector<char> safe_outer;  // per face

  bool present_with_outer(int f) const { return f >= 0 && !safe_outer[f]; }
};

/// Orientation of crossing c seen as an (a,b)-crossing; a and b must be
/// endpoints of the two different edges of c.
inline Orientation crossing_orientation(const PlaneEmbedding& e, int c, VertexId a, VertexId b) {
  auto [e1, e2] = e.crossing(c);
  EdgeId ea = e.graph().edge(e1).has(a) ? e1 : e2;
  EdgeId eb = ea == e1 ? e2 : e1;
  if (!e.graph().edge(ea).has(a) || !e.graph().edge(eb).has(b))
    throw InvalidInput("crossing is not an (a,b)-crossing");
  VertexId b2 = e.graph().edge(eb).other(b);
  DartId to_a = e.dart_from_dummy(c, ea, a);
  DartId next = e.cw_next(to_a);
  // Clockwise (b', a', b, a) is left: b' follows a.
  if (next == e.dart_from_dummy(c, eb, b2)) return Orientation::Left;
  return Orientation::Right;
}

namespace detail {

struct FaceSides {
  std::vector<int> uf;
  int find(int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }
  void unite(int a, int b) { uf[find(a)] = find(b); }
};

/// Union-find of faces across every segment not on the curve and across
/// regions (components nested in each other).
inline FaceSides split_by_curve(const PlaneEmbedding& e, const std::vector<int>& curve_segments) {
  FaceSides s;
  s.uf.resize(e.face_count());
  std::iota(s.uf.begin(), s.uf.end(), 0);
  std::vector<int> first_in_region(e.region_count(), -1);
  for (int f = 0; f < e.face_count(); ++f) {
    int r = e.region_of(f);
    if (first_in_region[r] < 0)
      first_in_region[r] = f;
    else
      s.unite(f, first_in_region[r]);
  }
  std::vector<char> on_curve(e.dart_count() / 2, 0);
  for (int seg : curve_segments) on_curve[seg] = 1;
  for (DartId d = 0; d < e.dart_count(); d += 2)
    if (!on_curve[d >> 1]) s.unite(e.face_of(d), e.face_of(d + 1));
  return s;
}

inline std::vector<int> edge_segments(const PlaneEmbedding& e, EdgeId x) {
  std::vector<int> out;
  for (int s = 0; s < e.segments_of(x); ++s) out.push_back(e.dart_id(x, 0, s) >> 1);
  return out;
}

}  // namespace detail

/// Every B and W shape of the embedding, independent of the outer face.
/// Requires at most one crossing per edge.
inline std::vector<BWCandidate> bw_candidates(const PlaneEmbedding& e) {
  if (e.max_crossings_per_edge() > 1)
    throw InvalidInput("B/W configurations are defined for 1-planar embeddings only");
  const Graph& g = e.graph();
  std::vector<BWCandidate> out;
  auto side_at = [&](detail::FaceSides& s, int c, EdgeId ea, VertexId a) {
    return s.find(e.face_of(e.dart_from_dummy(c, ea, g.edge(ea).other(a))));
  };
  auto fill = [&](BWCandidate& cand, detail::FaceSides& s, std::vector<int> good_roots) {
    cand.safe_outer.assign(e.face_count(), 0);
    for (int f = 0; f < e.face_count(); ++f) {
      int r = s.find(f);
      cand.safe_outer[f] = std::find(good_roots.begin(), good_roots.end(), r) != good_roots.end();
    }
  };
  // B: crossing c of ea (at a) and eb (at b) plus an edge ab.
  for (int c = 0; c < e.crossing_count(); ++c) {
    auto [e1, e2] = e.crossing(c);
    for (VertexId a : {g.edge(e1).u, g.edge(e1).v})
      for (VertexId b : {g.edge(e2).u, g.edge(e2).v}) {
        auto ab = g.find_edge(a, b);
        if (!ab) continue;
        std::vector<int> curve = detail::edge_segments(e, *ab);
        curve.push_back(e.dart_from_vertex(e1, a) >> 1);
        curve.push_back(e.dart_from_vertex(e2, b) >> 1);
        auto s = detail::split_by_curve(e, curve);
        BWCandidate cand;
        cand.config.kind = BWConfiguration::Kind::B;
        cand.config.a = a;
        cand.config.b = b;
        cand.config.crossings = {c};
        cand.config.ab = *ab;
        fill(cand, s, {side_at(s, c, e1, a)});
        out.push_back(std::move(cand));
      }
  }
  // W: crossings c1 < c2 that are both (a,b)-crossings.
  for (int c1 = 0; c1 < e.crossing_count(); ++c1) {
    auto [e1, e2] = e.crossing(c1);
    for (VertexId a : {g.edge(e1).u, g.edge(e1).v})
      for (VertexId b : {g.edge(e2).u, g.edge(e2).v})
        for (int c2 = c1 + 1; c2 < e.crossing_count(); ++c2) {
          auto [f1, f2] = e.crossing(c2);
          EdgeId fa = -1, fb = -1;
          if (g.edge(f1).has(a) && g.edge(f2).has(b)) {
            fa = f1;
            fb = f2;
          } else if (g.edge(f2).has(a) && g.edge(f1).has(b)) {
            fa = f2;
            fb = f1;
          } else {
            continue;
          }
          std::vector<int> curve{e.dart_from_vertex(e1, a) >> 1, e.dart_from_vertex(e2, b) >> 1,
                                 e.dart_from_vertex(fa, a) >> 1, e.dart_from_vertex(fb, b) >> 1};
          auto s = detail::split_by_curve(e, curve);
          BWCandidate cand;
          cand.config.kind = BWConfiguration::Kind::W;
          cand.config.a = a;
          cand.config.b = b;
          cand.config.crossings = {c1, c2};
          fill(cand, s, {side_at(s, c1, e1, a), side_at(s, c2, fa, a)});
          out.push_back(std::move(cand));
        }
  }
  return out;
}

/// Configurations present with the embedding's own outer face.
inline std::vector<BWConfiguration> find_bw_configurations(const PlaneEmbedding& e) {
  std::vector<BWConfiguration> out;
  int outer = e.outer_face();
  for (auto& cand : bw_candidates(e)) {
    if (!cand.present_with_outer(outer)) continue;
    // the bounded side is the side holding a' and b'
    for (int f = 0; f < e.face_count(); ++f)
      if (cand.safe_outer[f]) cand.config.bounded_faces.push_back(f);
    out.push_back(cand.config);
  }
  return out;
}

inline bool is_straightenable(const PlaneEmbedding& e) { return find_bw_configurations(e).empty(); }

/// Faces that can serve as the unbounded face without creating a B or W.
inline std::vector<char> straightenable_outer_faces(const PlaneEmbedding& e) {
  std::vector<char> ok(e.face_count(), 1);
  for (const auto& cand : bw_candidates(e))
    for (int f = 0; f < e.face_count(); ++f) ok[f] &= cand.safe_outer[f];
  return ok;
}

inline nlohmann::ordered_json to_json(const BWConfiguration& c) {
  nlohmann::ordered_json j;
  j["kind"] = c.kind_name();
  j["a"] = c.a;
  j["b"] = c.b;
  j["crossings"] = c.crossings;
  if (c.ab >= 0) j["ab"] = c.ab;
  return j;
}

// ---------------------------------------------------------------------------
// L/M/R words

struct LMRWord {
  std::string word;
  DartId start = -1;  // first dart after the outer region at a
};

/// Clockwise word at a. The embedding must consist of (a,b)-crossing pairs and
/// optionally the edge ab.
inline LMRWord lmr_word(const PlaneEmbedding& e, VertexId a, VertexId b) {
  const Graph& g = e.graph();
  if (e.max_crossings_per_edge() > 1) throw InvalidInput("edge crossed more than once");
  std::vector<int> crossing_of(g.m(), -1);
  for (int c = 0; c < e.crossing_count(); ++c) {
    crossing_of[e.crossing(c).first] = c;
    crossing_of[e.crossing(c).second] = c;
  }
  for (EdgeId x = 0; x < g.m(); ++x) {
    const Edge& ed = g.edge(x);
    if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) {
      if (crossing_of[x] >= 0) throw InvalidInput("edge ab must be uncrossed");
      continue;
    }
    if (crossing_of[x] < 0)
      throw InvalidInput("edge " + std::to_string(x) + " is not part of an (a,b)-crossing pair");
    auto [e1, e2] = e.crossing(crossing_of[x]);
    bool ok = (g.edge(e1).has(a) && g.edge(e2).has(b)) || (g.edge(e1).has(b) && g.edge(e2).has(a));
    if (!ok) throw InvalidInput("crossing " + std::to_string(crossing_of[x]) + " is not an (a,b)-crossing");
  }
  LMRWord w;
  const auto& rot = e.rotation(a);
  int outer = e.outer_face();
  int start = -1;
  for (int i = 0; i < static_cast<int>(rot.size()); ++i)
    if (e.face_of(rot[i]) == outer) {
      start = i;
      break;
    }
  if (rot.empty()) return w;
  if (start < 0) throw InvalidInput("a does not lie on the outer face");
  w.start = rot[start];
  for (std::size_t i = 0; i < rot.size(); ++i) {
    DartId y = rot[(start + i) % rot.size()];
    EdgeId x = e.edge_of(y);
    if (g.edge(x).has(b)) {
      w.word += 'M';
      continue;
    }
    int c = crossing_of[x];
    w.word += crossing_orientation(e, c, a, b) == Orientation::Left ? 'L' : 'R';
  }
  return w;
}

/// Whether the word has the form L*[M]R*.
inline bool matches_lmr_pattern(const std::string& w) {
  std::size_t i = 0;
  while (i < w.size() && w[i] == 'L') ++i;
  if (i < w.size() && w[i] == 'M') ++i;
  while (i < w.size() && w[i] == 'R') ++i;
  return i == w.size();
}

/// A non-contiguous subword RL, RM or ML, if any.
inline std::optional<std::string> lmr_violation(const std::string& w) {
  bool seen_r = false, seen_m = false;
  for (char ch : w) {
    if (ch == 'L' && seen_r) return "RL";
    if (ch == 'M' && seen_r) return "RM";
    if (ch == 'L' && seen_m) return "ML";
    seen_r |= ch == 'R';
    seen_m |= ch == 'M';
  }
  return std::nullopt;
}

}  // namespace onep
