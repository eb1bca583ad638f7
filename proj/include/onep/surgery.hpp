#pragma once

// Crossing elimination between flexible arcs (Reidemeister moves of type I
// and II) on a curve map of a 1-planar embedding, and re-subdivision of the
// simplified arcs to a prescribed length.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "onep/embedding.hpp"
#include "onep/thomassen.hpp"

namespace onep {

/// Host embedding with its edges split into static edges and flexible arcs
/// (degree-2 paths).
struct ArcSystem {
  PlaneEmbedding host;
  std::vector<EdgeId> static_edges;
  std::vector<Arc> arcs;

  int s() const { return static_cast<int>(static_edges.size()); }
  int f() const { return static_cast<int>(arcs.size()); }
};

/// Throws InvalidInput unless static edges and arcs partition E(host) and
/// arc interiors have degree two.
inline void validate_arc_system(const ArcSystem& sys) {
  const Graph& g = sys.host.graph();
  std::vector<int> used(g.m(), 0);
  for (EdgeId e : sys.static_edges) {
    if (e < 0 || e >= g.m()) throw InvalidInput("static edge " + std::to_string(e) + " does not exist");
    ++used[e];
  }
  for (const Arc& a : sys.arcs) {
    if (a.edges.empty()) throw InvalidInput("empty arc");
    for (EdgeId e : a.edges) {
      if (e < 0 || e >= g.m()) throw InvalidInput("arc edge " + std::to_string(e) + " does not exist");
      ++used[e];
    }
    auto vs = arc_vertices(g, a);
    for (std::size_t i = 1; i + 1 < vs.size(); ++i)
      if (g.degree(vs[i]) != 2) throw InvalidInput("arc passes vertex " + std::to_string(vs[i]) + " of degree != 2");
  }
  for (EdgeId e = 0; e < g.m(); ++e)
    if (used[e] != 1) throw InvalidInput("edge " + std::to_string(e) + " is not covered exactly once");
  if (!is_connected(g)) throw InvalidInput("arc systems need a connected host graph");
  if (sys.host.max_crossings_per_edge() > 1) throw InvalidInput("host must be 1-planar");
}

/// Arc system whose arcs are the maximal degree-2 paths of the non-static edges.
inline ArcSystem make_arc_system(const PlaneEmbedding& host, std::vector<EdgeId> static_edges) {
  const Graph& g = host.graph();
  std::vector<bool> is_static(g.m(), false);
  for (EdgeId e : static_edges) is_static.at(e) = true;
  std::sort(static_edges.begin(), static_edges.end());
  auto interior = [&](VertexId v) {
    if (g.degree(v) != 2) return false;
    for (const auto& inc : g.incident(v))
      if (is_static[inc.edge]) return false;
    return true;
  };
  std::vector<bool> used(g.m(), false);
  ArcSystem sys{host, static_edges, {}};
  auto walk = [&](VertexId start, EdgeId first) {
    Arc a;
    a.start = start;
    VertexId cur = start;
    EdgeId e = first;
    while (true) {
      used[e] = true;
      a.edges.push_back(e);
      cur = g.edge(e).other(cur);
      if (!interior(cur) || cur == start) break;
      const auto& inc = g.incident(cur);
      EdgeId next = inc[0].edge == e ? inc[1].edge : inc[0].edge;
      if (used[next]) break;
      e = next;
    }
    a.end = cur;
    sys.arcs.push_back(a);
  };
  for (VertexId v = 0; v < g.n(); ++v)
    if (!interior(v))
      for (const auto& inc : g.incident(v))
        if (!is_static[inc.edge] && !used[inc.edge]) walk(v, inc.edge);
  for (VertexId v = 0; v < g.n(); ++v)
    for (const auto& inc : g.incident(v))
      if (!is_static[inc.edge] && !used[inc.edge]) walk(v, inc.edge);
  return sys;
}

// ---------------------------------------------------------------------------
// Curve map

/// Planar map whose nodes are the arc ends and static endpoints (terminals)
/// plus the crossings. Each static edge and each flexible arc is a curve made
/// of segments between consecutive nodes. Half-edge 2s leaves segment s at its
/// first node, 2s+1 at its second.
class CurveMap {
 public:
  struct Item {
    int seg;
    bool forward;
  };
  struct Curve {
    bool flexible = false;
    int id = 0;  // static edge id, or arc index
    std::vector<Item> items;
  };

  std::vector<VertexId> node_vertex;  // host vertex, or -1 for a crossing
  std::vector<char> node_alive;
  std::vector<int> seg_from, seg_to;
  std::vector<std::vector<int>> rot;  // clockwise half-edges per node
  std::vector<Curve> curves;
  int outer_half = -1;

  int tail(int h) const { return h & 1 ? seg_to[h >> 1] : seg_from[h >> 1]; }
  static int start_half(const Item& it) { return it.forward ? 2 * it.seg : 2 * it.seg + 1; }
  static int end_half(const Item& it) { return it.forward ? 2 * it.seg + 1 : 2 * it.seg; }
  int start_node(const Item& it) const { return tail(start_half(it)); }
  int end_node(const Item& it) const { return tail(end_half(it)); }

  std::vector<int> nodes_of(const Curve& c) const {
    std::vector<int> out{start_node(c.items.front())};
    for (const Item& it : c.items) out.push_back(end_node(it));
    return out;
  }
  bool is_crossing(int x) const { return node_vertex[x] < 0; }
  int crossing_count() const {
    int n = 0;
    for (std::size_t x = 0; x < node_vertex.size(); ++x) n += node_alive[x] && is_crossing(static_cast<int>(x));
    return n;
  }

  /// Crossing nodes on curve c (each counted once).
  std::vector<int> crossings_on(int c) const {
    std::vector<int> out;
    for (int x : nodes_of(curves[c]))
      if (is_crossing(x)) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Euler characteristic per component and straight passes at crossings.
  void check() const {
    std::vector<int> pos(2 * seg_from.size(), -1);
    for (std::size_t x = 0; x < rot.size(); ++x)
      for (std::size_t i = 0; i < rot[x].size(); ++i) pos[rot[x][i]] = static_cast<int>(i);
    auto cw_next = [&](int h) {
      const auto& r = rot[tail(h)];
      return r[(pos[h] + 1) % r.size()];
    };
    std::vector<int> comp(rot.size(), -1);
    int comps = 0;
    for (std::size_t s = 0; s < rot.size(); ++s) {
      if (!node_alive[s] || comp[s] >= 0 || rot[s].empty()) continue;
      std::vector<int> stack{static_cast<int>(s)};
      comp[s] = comps;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int h : rot[x]) {
          int y = tail(h ^ 1);
          if (comp[y] < 0) {
            comp[y] = comps;
            stack.push_back(y);
          }
        }
      }
      ++comps;
    }
    std::vector<long> v(comps, 0), e(comps, 0), f(comps, 0);
    std::vector<char> seen(pos.size(), 0);
    for (std::size_t x = 0; x < rot.size(); ++x) {
      if (comp[x] < 0) continue;
      ++v[comp[x]];
      e[comp[x]] += static_cast<long>(rot[x].size());
      for (int h : rot[x]) {
        if (seen[h]) continue;
        ++f[comp[x]];
        int d = h;
        do {
          if (seen[d]) throw EmbeddingError(Violation::Format, "curve map face tracing broke");
          seen[d] = 1;
          d = cw_next(d ^ 1);
        } while (d != h);
      }
    }
    for (int c = 0; c < comps; ++c)
      if (v[c] - e[c] / 2 + f[c] != 2) throw EmbeddingError(Violation::Genus, "curve map is not plane");
    for (const Curve& c : curves)
      for (std::size_t i = 0; i + 1 < c.items.size(); ++i) {
        int in = end_half(c.items[i]), out = start_half(c.items[i + 1]);
        int x = tail(in);
        if (!is_crossing(x)) continue;
        if (rot[x].size() != 4 || (pos[in] + 2) % 4 != pos[out])
          throw EmbeddingError(Violation::NonAlternating, "curve does not pass straight through a crossing");
      }
  }

  int new_seg(int from, int to) {
    seg_from.push_back(from);
    seg_to.push_back(to);
    return static_cast<int>(seg_from.size()) - 1;
  }

  void replace_half(int node, int old_h, int new_h) {
    auto& r = rot[node];
    auto it = std::find(r.begin(), r.end(), old_h);
    if (it == r.end()) throw Error("curve map corrupted");
    *it = new_h;
    if (outer_half == old_h) outer_half = new_h;
  }

  /// Moves the outer half-edge off the nodes in `dead`.
  void protect_outer(const std::set<int>& dead) {
    if (outer_half < 0 || !dead.count(tail(outer_half))) return;
    std::vector<int> pos(2 * seg_from.size(), -1);
    for (std::size_t x = 0; x < rot.size(); ++x)
      for (std::size_t i = 0; i < rot[x].size(); ++i) pos[rot[x][i]] = static_cast<int>(i);
    auto face_next = [&](int h) {
      const auto& r = rot[tail(h ^ 1)];
      return r[(pos[h ^ 1] + 1) % r.size()];
    };
    int h = outer_half;
    do {
      if (!dead.count(tail(h))) {
        outer_half = h;
        return;
      }
      h = face_next(h);
    } while (h != outer_half);
    // the face only touches dead nodes: use a neighbouring face
    for (int x : dead)
      for (int y : rot[x]) {
        int t = y ^ 1;
        if (!dead.count(tail(t))) {
          outer_half = t;
          return;
        }
      }
  }

  /// Installs a new item list for curve c, dissolving the nodes in `dead`
  /// by merging the segments that meet there.
  void rebuild(int c, const std::vector<Item>& items, const std::set<int>& dead) {
    std::vector<Item> out;
    std::vector<Item> chain;
    auto flush = [&]() {
      if (chain.size() == 1) {
        out.push_back(chain[0]);
      } else {
        int a = start_node(chain.front()), b = end_node(chain.back());
        int s = new_seg(a, b);
        replace_half(a, start_half(chain.front()), 2 * s);
        replace_half(b, end_half(chain.back()), 2 * s + 1);
        out.push_back({s, true});
      }
      chain.clear();
    };
    for (const Item& it : items) {
      chain.push_back(it);
      if (!dead.count(end_node(it))) flush();
    }
    if (!chain.empty()) throw Error("curve ends at a dissolved node");
    curves[c].items = out;
  }

  void kill(const std::set<int>& dead) {
    for (int x : dead) {
      node_alive[x] = 0;
      rot[x].clear();
    }
  }
};

inline std::vector<CurveMap::Item> reversed(std::vector<CurveMap::Item> items) {
  std::reverse(items.begin(), items.end());
  for (auto& it : items) it.forward = !it.forward;
  return items;
}

/// Curve map of an arc system. Curves 0..s-1 are the static edges in the
/// order of `static_edges`, followed by the arcs.
inline CurveMap build_curve_map(const ArcSystem& sys) {
  validate_arc_system(sys);
  const PlaneEmbedding& e = sys.host;
  const Graph& g = e.graph();
  std::vector<bool> interior(g.n(), false);
  for (const Arc& a : sys.arcs) {
    auto vs = arc_vertices(g, a);
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) interior[vs[i]] = true;
  }
  CurveMap cm;
  std::vector<int> node_of(e.node_count(), -1);
  for (NodeId x = 0; x < e.node_count(); ++x) {
    if (x < g.n() && interior[x]) continue;
    node_of[x] = static_cast<int>(cm.node_vertex.size());
    cm.node_vertex.push_back(x < g.n() ? x : -1);
  }
  cm.node_alive.assign(cm.node_vertex.size(), 1);
  cm.rot.assign(cm.node_vertex.size(), {});
  std::vector<int> half_of_dart(e.dart_count(), -1);

  auto add_curve = [&](bool flexible, int id, VertexId start, const std::vector<EdgeId>& edges) {
    CurveMap::Curve c;
    c.flexible = flexible;
    c.id = id;
    VertexId cur = start;
    int seg = -1;
    for (EdgeId x : edges) {
      int segs = e.segments_of(x);
      bool from_u = g.edge(x).u == cur;
      for (int i = 0; i < segs; ++i) {
        int sidx = from_u ? i : segs - 1 - i;
        DartId d = e.dart_id(x, from_u ? 0 : 1, sidx);
        NodeId a = e.tail(d), b = e.head(d);
        if (node_of[a] >= 0) {
          seg = cm.new_seg(node_of[a], -1);
          half_of_dart[d] = 2 * seg;
        }
        if (node_of[b] >= 0) {
          cm.seg_to[seg] = node_of[b];
          half_of_dart[d ^ 1] = 2 * seg + 1;
          c.items.push_back({seg, true});
        }
      }
      cur = g.edge(x).other(cur);
    }
    cm.curves.push_back(std::move(c));
  };
  for (EdgeId x : sys.static_edges) add_curve(false, x, g.edge(x).u, {x});
  for (std::size_t i = 0; i < sys.arcs.size(); ++i)
    add_curve(true, static_cast<int>(i), sys.arcs[i].start, sys.arcs[i].edges);
  for (NodeId x = 0; x < e.node_count(); ++x)
    if (node_of[x] >= 0)
      for (DartId d : e.rotation(x)) cm.rot[node_of[x]].push_back(half_of_dart[d]);
  if (e.outer_dart()) {
    // the nearest half-edge at a curve-map node along the outer face
    DartId d = *e.outer_dart();
    while (half_of_dart[d] < 0) d = e.face_next(d);
    cm.outer_half = half_of_dart[d];
  }
  return cm;
}

// ---------------------------------------------------------------------------
// Rules

namespace detail {

/// Rule I on the first self-crossing of a flexible curve: the crossing is
/// smoothed so that the loop is kept but traversed backwards.
inline bool apply_rule_one(CurveMap& cm) {
  for (std::size_t c = 0; c < cm.curves.size(); ++c) {
    if (!cm.curves[c].flexible) continue;
    auto nodes = cm.nodes_of(cm.curves[c]);
    std::map<int, int> first;
    for (int j = 0; j < static_cast<int>(nodes.size()); ++j) {
      int x = nodes[j];
      if (!cm.is_crossing(x)) continue;
      auto it = first.find(x);
      if (it == first.end()) {
        first[x] = j;
        continue;
      }
      int i = it->second;
      const auto& items = cm.curves[c].items;
      std::vector<CurveMap::Item> next(items.begin(), items.begin() + i);
      auto loop = reversed(std::vector<CurveMap::Item>(items.begin() + i, items.begin() + j));
      next.insert(next.end(), loop.begin(), loop.end());
      next.insert(next.end(), items.begin() + j, items.end());
      std::set<int> dead{x};
      cm.protect_outer(dead);
      cm.rebuild(static_cast<int>(c), next, dead);
      cm.kill(dead);
      return true;
    }
  }
  return false;
}

/// Rule II on the first pair of flexible curves crossing twice: the subarcs
/// between the two crossings are exchanged.
inline bool apply_rule_two(CurveMap& cm) {
  for (std::size_t a = 0; a < cm.curves.size(); ++a) {
    if (!cm.curves[a].flexible) continue;
    auto na = cm.nodes_of(cm.curves[a]);
    for (std::size_t b = a + 1; b < cm.curves.size(); ++b) {
      if (!cm.curves[b].flexible) continue;
      auto nb = cm.nodes_of(cm.curves[b]);
      std::map<int, int> pos_b;
      for (int i = 0; i < static_cast<int>(nb.size()); ++i)
        if (cm.is_crossing(nb[i])) pos_b[nb[i]] = i;
      std::vector<int> common;  // positions along a
      for (int i = 0; i < static_cast<int>(na.size()) && common.size() < 2; ++i)
        if (cm.is_crossing(na[i]) && pos_b.count(na[i])) common.push_back(i);
      if (common.size() < 2) continue;
      int ax = common[0], ay = common[1];
      int x = na[ax], y = na[ay];
      int bx = pos_b[x], by = pos_b[y];
      const auto& A = cm.curves[a].items;
      const auto& B = cm.curves[b].items;
      using V = std::vector<CurveMap::Item>;
      V a_pre(A.begin(), A.begin() + ax), a_mid(A.begin() + ax, A.begin() + ay), a_post(A.begin() + ay, A.end());
      V new_a = a_pre, new_b;
      if (bx < by) {
        V b_pre(B.begin(), B.begin() + bx), b_mid(B.begin() + bx, B.begin() + by), b_post(B.begin() + by, B.end());
        new_a.insert(new_a.end(), b_mid.begin(), b_mid.end());
        new_b = b_pre;
        new_b.insert(new_b.end(), a_mid.begin(), a_mid.end());
        new_b.insert(new_b.end(), b_post.begin(), b_post.end());
      } else {
        V b_pre(B.begin(), B.begin() + by), b_mid(B.begin() + by, B.begin() + bx), b_post(B.begin() + bx, B.end());
        V rb = reversed(b_mid), ra = reversed(a_mid);
        new_a.insert(new_a.end(), rb.begin(), rb.end());
        new_b = b_pre;
        new_b.insert(new_b.end(), ra.begin(), ra.end());
        new_b.insert(new_b.end(), b_post.begin(), b_post.end());
      }
      new_a.insert(new_a.end(), a_post.begin(), a_post.end());
      std::set<int> dead{x, y};
      cm.protect_outer(dead);
      cm.rebuild(static_cast<int>(a), new_a, dead);
      cm.rebuild(static_cast<int>(b), new_b, dead);
      cm.kill(dead);
      return true;
    }
  }
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Back to graphs

struct Resubdivided {
  ArcSystem system;            // new host; static edges keep their relative order
  std::vector<int> placed;     // per arc: subdivision vertices tied to crossings
  std::vector<int> leftover;   // per arc: remaining subdivision vertices
  std::vector<int> crossings;  // per arc
  std::vector<VertexId> old_vertex;  // per new vertex: host vertex, or -1
};

/// Edges an arc with r crossings needs.
inline int crossing_demand(int r, bool geometric) {
  if (r == 0) return 1;
  return geometric ? 2 * r + 3 : r;
}

/// Whether the first (last) crossing of flexible curve c is with a curve
/// ending at c's first (last) terminal; the edge through that crossing then
/// needs a subdivision vertex between it and the terminal.
inline std::pair<bool, bool> terminal_buffers(const CurveMap& cm, int c) {
  auto nodes = cm.nodes_of(cm.curves[c]);
  if (nodes.size() < 3) return {false, false};
  auto partner_has = [&](int x, int terminal) {
    for (std::size_t d = 0; d < cm.curves.size(); ++d) {
      if (static_cast<int>(d) == c) continue;
      auto nd = cm.nodes_of(cm.curves[d]);
      if (std::find(nd.begin(), nd.end(), x) == nd.end()) continue;
      return nd.front() == terminal || nd.back() == terminal;
    }
    return false;
  };
  return {partner_has(nodes[1], nodes.front()), partner_has(nodes[nodes.size() - 2], nodes.back())};
}

/// Length arc curve c needs for its current crossings.
inline int arc_demand(const CurveMap& cm, int c, bool geometric) {
  auto nodes = cm.nodes_of(cm.curves[c]);
  int r = static_cast<int>(nodes.size()) - 2;
  int d = crossing_demand(r, geometric);
  if (!geometric && r > 0) {
    auto [b0, b1] = terminal_buffers(cm, c);
    d += b0 + b1;
  }
  return d;
}

/// Turns the curve map into an embedded graph with arc i of length
/// lengths[i]. Non-geometric: a vertex right after every crossing but the
/// last, plus a vertex between a terminal and a crossing with a curve
/// sharing that terminal. Geometric: the vertices next to each crossing are both subdivision
/// vertices, consecutive crossings are separated by an uncrossed edge, and
/// two uncrossed edges separate each terminal from the nearest crossing.
inline Resubdivided materialize(const CurveMap& cm, const Graph& old_host, const std::vector<int>& lengths,
                                bool geometric) {
  Graph g;
  std::vector<VertexId> vertex_of_node(cm.node_vertex.size(), -1);
  std::vector<std::pair<VertexId, int>> terminals;
  for (std::size_t x = 0; x < cm.node_vertex.size(); ++x)
    if (cm.node_alive[x] && !cm.is_crossing(static_cast<int>(x))) terminals.emplace_back(cm.node_vertex[x], static_cast<int>(x));
  std::sort(terminals.begin(), terminals.end());
  Resubdivided out;
  for (auto [v, x] : terminals) {
    vertex_of_node[x] = g.add_vertex(old_host.vertex_label(v));
    out.old_vertex.push_back(v);
  }

  // Token lists per curve: vertex ids (>= 0) and crossing nodes (encoded -2-x).
  struct Piece {
    EdgeId edge;
    VertexId from, to;  // in curve direction
  };
  std::vector<int> crossing_index(cm.node_vertex.size(), -1);
  std::vector<std::vector<EdgeId>> edges_at_crossing(cm.node_vertex.size());
  // first/last piece of each curve item
  struct SideDart {
    EdgeId edge = -1;
    VertexId toward = -1;
  };
  std::vector<std::array<SideDart, 2>> seg_side(cm.seg_from.size());
  std::vector<EdgeId> static_edges;
  std::vector<Arc> arcs;
  std::vector<std::vector<VertexId>> deg2;  // new subdivision vertices: their two edges are in order

  auto emit = [&](const CurveMap::Curve& c, std::vector<int> tokens, std::vector<EdgeId>& edge_list) {
    // tokens: vertex ids >= 0, crossing node x as -2-x
    std::vector<int> node_token;  // token index of each node of the curve
    for (int t = 0; t < static_cast<int>(tokens.size()); ++t)
      if (tokens[t] < 0 || t == 0 || t + 1 == static_cast<int>(tokens.size())) node_token.push_back(t);
    // pieces between consecutive vertex tokens
    std::vector<Piece> pieces;
    std::vector<int> piece_of_token(tokens.size(), -1);
    int last_vertex = 0;
    for (int t = 1; t < static_cast<int>(tokens.size()); ++t) {
      if (tokens[t] < 0) continue;
      if (g.find_edge(tokens[last_vertex], tokens[t]))
        throw InvalidInput("arc length would create a parallel edge");
      EdgeId e = g.add_edge(tokens[last_vertex], tokens[t]);
      edge_list.push_back(e);
      pieces.push_back({e, tokens[last_vertex], tokens[t]});
      for (int q = last_vertex; q < t; ++q) piece_of_token[q] = static_cast<int>(pieces.size()) - 1;
      for (int q = last_vertex + 1; q < t; ++q) edges_at_crossing[-2 - tokens[q]].push_back(e);
      last_vertex = t;
    }
    for (std::size_t i = 0; i < c.items.size(); ++i) {
      const Piece& first = pieces[piece_of_token[node_token[i]]];
      const Piece& last = pieces[piece_of_token[node_token[i + 1] - 1]];
      SideDart at_start{first.edge, first.to}, at_end{last.edge, last.from};
      if (c.items[i].forward)
        seg_side[c.items[i].seg] = {at_start, at_end};
      else
        seg_side[c.items[i].seg] = {at_end, at_start};
    }
  };

  // static curves first, in their curve order
  for (const auto& c : cm.curves) {
    if (c.flexible) continue;
    auto nodes = cm.nodes_of(c);
    std::vector<int> tokens;
    for (int x : nodes) tokens.push_back(cm.is_crossing(x) ? -2 - x : vertex_of_node[x]);
    emit(c, tokens, static_edges);
  }
  int arc_index = 0;
  for (std::size_t ci = 0; ci < cm.curves.size(); ++ci) {
    const auto& c = cm.curves[ci];
    if (!c.flexible) continue;
    auto nodes = cm.nodes_of(c);
    int r = static_cast<int>(nodes.size()) - 2;
    if (static_cast<int>(cm.crossings_on(static_cast<int>(ci)).size()) != r)
      throw InvalidInput("arc " + std::to_string(arc_index) + " crosses itself; simplify first");
    int len = lengths.at(arc_index);
    int demand = arc_demand(cm, static_cast<int>(ci), geometric);
    auto [buf0, buf1] = geometric ? std::pair{false, false} : terminal_buffers(cm, static_cast<int>(ci));
    if (len < demand)
      throw InvalidInput("arc " + std::to_string(arc_index) + " has " + std::to_string(r) +
                         " crossings and needs length " + std::to_string(demand) + ", got " + std::to_string(len));
    int extra = len - demand;
    auto fresh = [&]() {
      return g.add_vertex("a" + std::to_string(arc_index) + "." + std::to_string(g.n()));
    };
    std::vector<int> tokens{vertex_of_node[nodes.front()]};
    for (int q = 0; q < extra; ++q) tokens.push_back(fresh());
    if (r > 0 && (geometric || buf0)) tokens.push_back(fresh());
    if (r > 0 && geometric) tokens.push_back(fresh());
    for (int i = 1; i <= r; ++i) {
      tokens.push_back(-2 - nodes[i]);
      if (geometric) {
        tokens.push_back(fresh());
        tokens.push_back(fresh());
      } else if (i < r || buf1) {
        tokens.push_back(fresh());
      }
    }
    tokens.push_back(vertex_of_node[nodes.back()]);
    Arc a;
    a.start = tokens.front();
    a.end = tokens.back();
    emit(c, tokens, a.edges);
    arcs.push_back(a);
    out.crossings.push_back(r);
    out.placed.push_back(demand - 1);
    out.leftover.push_back(extra);
    ++arc_index;
  }
  // crossings
  std::vector<std::pair<EdgeId, EdgeId>> crossings;
  for (std::size_t x = 0; x < cm.node_vertex.size(); ++x) {
    if (!cm.node_alive[x] || !cm.is_crossing(static_cast<int>(x))) continue;
    const auto& es = edges_at_crossing[x];
    if (es.size() != 2 || es[0] == es[1]) throw Error("crossing does not join two edges");
    crossing_index[x] = static_cast<int>(crossings.size());
    crossings.emplace_back(std::min(es[0], es[1]), std::max(es[0], es[1]));
  }
  const int N = g.n() + static_cast<int>(crossings.size());
  std::vector<std::vector<int>> order(g.m());
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    order[crossings[c].first].push_back(static_cast<int>(c));
    order[crossings[c].second].push_back(static_cast<int>(c));
  }
  PlaneEmbedding skel = PlaneEmbedding::from_ids(g, crossings, order, std::vector<std::vector<DartId>>(N),
                                                 std::nullopt, 1, false);
  auto half_to_dart = [&](int h) -> DartId {
    const SideDart& sd = seg_side[h >> 1][h & 1];
    int node = cm.tail(h);
    if (cm.is_crossing(node)) return skel.dart_from_dummy(crossing_index[node], sd.edge, sd.toward);
    return skel.dart_from_vertex(sd.edge, vertex_of_node[node]);
  };
  std::vector<std::vector<DartId>> rotation(N);
  for (std::size_t x = 0; x < cm.node_vertex.size(); ++x) {
    if (!cm.node_alive[x]) continue;
    NodeId nx = cm.is_crossing(static_cast<int>(x)) ? g.n() + crossing_index[x] : vertex_of_node[x];
    for (int h : cm.rot[x]) rotation[nx].push_back(half_to_dart(h));
  }
  // subdivision vertices: both darts
  std::vector<bool> is_terminal(g.n(), false);
  for (auto [v, x] : terminals) is_terminal[vertex_of_node[x]] = true;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (is_terminal[v]) continue;
    for (const auto& inc : g.incident(v)) rotation[v].push_back(skel.dart_from_vertex(inc.edge, v));
  }
  std::optional<DartId> outer;
  if (cm.outer_half >= 0) outer = half_to_dart(cm.outer_half);
  PlaneEmbedding emb = PlaneEmbedding::from_ids(g, crossings, order, rotation, outer, 1, true);
  out.system = ArcSystem{std::move(emb), static_edges, arcs};
  out.old_vertex.resize(g.n(), -1);
  return out;
}

// ---------------------------------------------------------------------------
// Public operations

struct SimplifyResult {
  ArcSystem system;
  std::vector<VertexId> old_vertex;  // per vertex of `system`: host vertex, or -1
  CurveMap curves;
  int rule_one = 0;
  int rule_two = 0;
  int crossings_before = 0;
  int crossings_after = 0;
};

/// Applies Rule I exhaustively, then Rule II once, and repeats until neither
/// applies. Validity of the map is re-checked after every step. Arcs keep
/// their length when it suffices for their new crossings.
inline SimplifyResult simplify(const ArcSystem& sys, bool check_each_step = true) {
  SimplifyResult res;
  res.curves = build_curve_map(sys);
  CurveMap& cm = res.curves;
  if (check_each_step) cm.check();
  res.crossings_before = cm.crossing_count();
  while (true) {
    if (detail::apply_rule_one(cm)) {
      ++res.rule_one;
    } else if (detail::apply_rule_two(cm)) {
      ++res.rule_two;
    } else {
      break;
    }
    if (check_each_step) cm.check();
  }
  res.crossings_after = cm.crossing_count();
  std::vector<int> lengths;
  int arc = 0;
  for (std::size_t c = 0; c < cm.curves.size(); ++c) {
    if (!cm.curves[c].flexible) continue;
    lengths.push_back(std::max(static_cast<int>(sys.arcs[arc].edges.size()), arc_demand(cm, static_cast<int>(c), false)));
    ++arc;
  }
  auto m = materialize(cm, sys.host.graph(), lengths, false);
  res.system = std::move(m.system);
  res.old_vertex = std::move(m.old_vertex);
  return res;
}

/// Re-subdivides every flexible arc of a simplified system to `length` edges.
inline Resubdivided reshorten(const ArcSystem& sys, int length, bool geometric) {
  CurveMap cm = build_curve_map(sys);
  return materialize(cm, sys.host.graph(), std::vector<int>(sys.arcs.size(), length), geometric);
}

/// Per static edge: whether some flexible arc crosses it.
inline std::vector<bool> static_crossed_by_flexible(const ArcSystem& sys) {
  const PlaneEmbedding& e = sys.host;
  std::vector<bool> flexible(e.graph().m(), false);
  for (const Arc& a : sys.arcs)
    for (EdgeId x : a.edges) flexible[x] = true;
  std::vector<bool> out;
  for (EdgeId s : sys.static_edges) {
    bool hit = false;
    for (int c : e.crossings_on(s)) {
      auto [p, q] = e.crossing(c);
      hit |= flexible[p == s ? q : p];
    }
    out.push_back(hit);
  }
  return out;
}

/// Crossings along each arc, as (self, with other arcs, with static edges).
struct ArcCrossings {
  int self = 0;
  int total = 0;
  std::vector<int> with_arc;  // per other arc
};

inline std::vector<ArcCrossings> arc_crossings(const ArcSystem& sys) {
  const PlaneEmbedding& e = sys.host;
  std::vector<int> arc_of(e.graph().m(), -1);
  for (std::size_t i = 0; i < sys.arcs.size(); ++i)
    for (EdgeId x : sys.arcs[i].edges) arc_of[x] = static_cast<int>(i);
  std::vector<ArcCrossings> out(sys.arcs.size());
  for (auto& a : out) a.with_arc.assign(sys.arcs.size(), 0);
  for (int c = 0; c < e.crossing_count(); ++c) {
    auto [p, q] = e.crossing(c);
    int ap = arc_of[p], aq = arc_of[q];
    if (ap >= 0 && ap == aq) {
      ++out[ap].self;
      ++out[ap].total;
      continue;
    }
    if (ap >= 0) ++out[ap].total;
    if (aq >= 0) ++out[aq].total;
    if (ap >= 0 && aq >= 0) {
      ++out[ap].with_arc[aq];
      ++out[aq].with_arc[ap];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json to_json(const ArcSystem& sys) {
  auto j = to_json(sys.host);
  j["static"] = sys.static_edges;
  auto arcs = nlohmann::ordered_json::array();
  for (const Arc& a : sys.arcs) arcs.push_back({{"start", a.start}, {"edges", a.edges}});
  j["arcs"] = arcs;
  return j;
}

inline ArcSystem arc_system_from_json(const nlohmann::ordered_json& j) {
  PlaneEmbedding host = embedding_from_json(j);
  try {
    std::vector<EdgeId> st = j.value("static", std::vector<EdgeId>{});
    if (!j.contains("arcs")) return make_arc_system(host, st);
    ArcSystem sys{host, st, {}};
    for (const auto& x : j.at("arcs")) {
      Arc a;
      if (x.is_array()) {
        a.edges = x.get<std::vector<EdgeId>>();
        if (a.edges.empty()) throw InvalidInput("empty arc");
        const Graph& g = host.graph();
        const Edge& e0 = g.edge(a.edges.at(0));
        a.start = e0.u;
        if (a.edges.size() > 1 && g.edge(a.edges[1]).has(e0.u) && !g.edge(a.edges[1]).has(e0.v)) a.start = e0.v;
      } else {
        a.edges = x.at("edges").get<std::vector<EdgeId>>();
        a.start = x.at("start").get<VertexId>();
      }
      VertexId cur = a.start;
      for (EdgeId e : a.edges) cur = host.graph().edge(e).other(cur);
      a.end = cur;
      sys.arcs.push_back(a);
    }
    validate_arc_system(sys);
    return sys;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("arc system: ") + ex.what());
  }
}

}  // namespace onep
