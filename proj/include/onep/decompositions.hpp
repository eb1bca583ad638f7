#pragma once

// Structural decompositions: maximal degree-2 paths, block-cut trees,
// treedepth decompositions and linear orderings.

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "onep/graph.hpp"

namespace onep {

// ---------------------------------------------------------------------------
// Degree-2 paths

/// A maximal degree-2 path. `vertices` has `edges.size() + 1` entries; for a
/// closed path (a whole cycle component) the first and last entries coincide.
struct Degree2Path {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
  bool closed = false;

  int length() const { return static_cast<int>(edges.size()); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
};

struct Degree2PathDecomposition {
  std::vector<Degree2Path> paths;  // sorted by length, ties by first edge id

  int p() const { return static_cast<int>(paths.size()); }
  std::vector<int> lengths() const {
    std::vector<int> out;
    for (const auto& path : paths) out.push_back(path.length());
    return out;
  }
  int cycle_components() const {
    return static_cast<int>(std::count_if(paths.begin(), paths.end(),
                                          [](const Degree2Path& q) { return q.closed; }));
  }
};

/// Splits E(g) into maximal paths whose internal vertices have degree two.
/// Vertices of degree one are rejected unless `allow_leaves` is set, in which
/// case they simply act as path ends.
inline Degree2PathDecomposition decompose_degree2_paths(const Graph& g, bool allow_leaves = false) {
  if (!allow_leaves)
    for (VertexId v = 0; v < g.n(); ++v)
      if (g.degree(v) == 1)
        throw InvalidInput("degree-2 path decomposition needs minimum degree 2 (vertex " +
                           std::to_string(v) + ")");
  Degree2PathDecomposition out;
  std::vector<bool> used(g.m(), false);

  auto walk = [&](VertexId start, EdgeId first) {
    Degree2Path path;
    path.vertices.push_back(start);
    VertexId cur = start;
    EdgeId e = first;
    while (true) {
      used[e] = true;
      path.edges.push_back(e);
      cur = g.edge(e).other(cur);
      path.vertices.push_back(cur);
      if (g.degree(cur) != 2 || cur == start) break;
      const auto& inc = g.incident(cur);
      EdgeId next = inc[0].edge == e ? inc[1].edge : inc[0].edge;
      if (used[next]) break;
      e = next;
    }
    path.closed = path.vertices.front() == path.vertices.back() && g.degree(start) == 2;
    return path;
  };

  for (VertexId v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 2) continue;
    for (const auto& inc : g.incident(v))
      if (!used[inc.edge]) out.paths.push_back(walk(v, inc.edge));
  }
  for (VertexId v = 0; v < g.n(); ++v)
    for (const auto& inc : g.incident(v))
      if (!used[inc.edge]) out.paths.push_back(walk(v, inc.edge));

  std::stable_sort(out.paths.begin(), out.paths.end(),
                   [](const Degree2Path& a, const Degree2Path& b) {
                     if (a.length() != b.length()) return a.length() < b.length();
                     return a.edges.front() < b.edges.front();
                   });
  return out;
}

// ---------------------------------------------------------------------------
// Block-cut tree

struct BlockCutTree {
  std::vector<std::vector<VertexId>> blocks;       // sorted vertex lists
  std::vector<std::vector<EdgeId>> block_edges;    // edges per block
  std::vector<VertexId> cut_vertices;              // sorted
  std::vector<std::vector<int>> blocks_of_vertex;  // per vertex, blocks containing it

  bool is_cut(VertexId v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
  }
  int block_count() const { return static_cast<int>(blocks.size()); }
};

/// Biconnected components (Hopcroft-Tarjan, iterative). An isolated vertex
/// forms a single-vertex block. Requires a connected graph.
inline BlockCutTree block_cut_tree(const Graph& g) {
  if (!is_connected(g)) throw InvalidInput("block-cut tree needs a connected graph");
  BlockCutTree t;
  t.blocks_of_vertex.assign(g.n(), {});
  if (g.n() == 0) return t;
  if (g.n() == 1) {
    t.blocks.push_back({0});
    t.block_edges.emplace_back();
    t.blocks_of_vertex[0].push_back(0);
    return t;
  }
  std::vector<int> disc(g.n(), -1), low(g.n(), 0);
  std::vector<EdgeId> edge_stack;
  int timer = 0;
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  auto emit = [&](EdgeId until) {
    std::vector<EdgeId> es;
    std::set<VertexId> vs;
    while (true) {
      EdgeId e = edge_stack.back();
      edge_stack.pop_back();
      es.push_back(e);
      vs.insert(g.edge(e).u);
      vs.insert(g.edge(e).v);
      if (e == until) break;
    }
    std::sort(es.begin(), es.end());
    int id = static_cast<int>(t.blocks.size());
    t.blocks.emplace_back(vs.begin(), vs.end());
    t.block_edges.push_back(std::move(es));
    for (VertexId x : vs) t.blocks_of_vertex[x].push_back(id);
  };
  disc[0] = low[0] = timer++;
  stack.push_back({0, -1, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& inc = g.incident(f.v);
    if (f.next < inc.size()) {
      auto [w, e] = inc[f.next++];
      if (e == f.via) continue;
      if (disc[w] < 0) {
        edge_stack.push_back(e);
        disc[w] = low[w] = timer++;
        stack.push_back({w, e, 0});
      } else if (disc[w] < disc[f.v]) {
        edge_stack.push_back(e);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (stack.empty()) break;
    VertexId parent = stack.back().v;
    low[parent] = std::min(low[parent], low[done.v]);
    if (low[done.v] >= disc[parent]) emit(done.via);
  }
  for (VertexId v = 0; v < g.n(); ++v)
    if (t.blocks_of_vertex[v].size() >= 2) t.cut_vertices.push_back(v);
  return t;
}

// ---------------------------------------------------------------------------
// Treedepth

/// Rooted forest over V(G); `parent[v] == -1` marks a root.
struct TreedepthDecomposition {
  std::vector<VertexId> parent;

  int n() const { return static_cast<int>(parent.size()); }

  std::vector<std::vector<VertexId>> children() const {
    std::vector<std::vector<VertexId>> ch(parent.size());
    for (VertexId v = 0; v < n(); ++v)
      if (parent[v] >= 0) ch[parent[v]].push_back(v);
    return ch;
  }
  std::vector<VertexId> roots() const {
    std::vector<VertexId> r;
    for (VertexId v = 0; v < n(); ++v)
      if (parent[v] < 0) r.push_back(v);
    return r;
  }
  /// Number of vertices on the path from v up to its root.
  int level(VertexId v) const {
    int d = 0;
    for (VertexId x = v; x >= 0; x = parent[x]) {
      if (++d > n()) throw InvalidInput("treedepth decomposition has a cycle");
    }
    return d;
  }
  int depth() const {
    int d = 0;
    for (VertexId v = 0; v < n(); ++v) d = std::max(d, level(v));
    return d;
  }
  /// Ancestors of v including v, from v upwards.
  std::vector<VertexId> ancestors(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId x = v; x >= 0; x = parent[x]) out.push_back(x);
    return out;
  }
  bool is_ancestor(VertexId a, VertexId v) const {
    for (VertexId x = v; x >= 0; x = parent[x])
      if (x == a) return true;
    return false;
  }
  /// Subtree of v including v, in preorder.
  std::vector<VertexId> descendants(VertexId v) const {
    auto ch = children();
    std::vector<VertexId> out, stack{v};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      out.push_back(x);
      for (auto it = ch[x].rbegin(); it != ch[x].rend(); ++it) stack.push_back(*it);
    }
    return out;
  }
};

/// Checks the forest shape and that every edge joins an ancestor-descendant pair.
inline bool is_valid_treedepth_decomposition(const Graph& g, const TreedepthDecomposition& t) {
  if (t.n() != g.n()) return false;
  for (VertexId v = 0; v < t.n(); ++v) {
    if (t.parent[v] < -1 || t.parent[v] >= t.n()) return false;
    try {
      t.level(v);
    } catch (const InvalidInput&) {
      return false;
    }
  }
  for (const Edge& e : g.edges())
    if (!t.is_ancestor(e.u, e.v) && !t.is_ancestor(e.v, e.u)) return false;
  return true;
}

/// True if every subtree induces a connected subgraph whose vertex set has
/// a neighbor at the subtree root's parent (when that exists).
inline bool is_normalized(const Graph& g, const TreedepthDecomposition& t) {
  for (VertexId v = 0; v < t.n(); ++v) {
    auto desc = t.descendants(v);
    std::vector<bool> keep(g.n(), false);
    for (VertexId x : desc) keep[x] = true;
    if (!is_connected(induced_subgraph(g, keep).graph)) return false;
    if (t.parent[v] >= 0) {
      bool touches = false;
      for (VertexId x : desc)
        for (const auto& inc : g.incident(x)) touches |= inc.neighbor == t.parent[v];
      if (!touches) return false;
    }
  }
  return true;
}

namespace detail {

inline std::vector<std::vector<VertexId>> components_within(const Graph& g,
                                                             const std::vector<VertexId>& set) {
  std::vector<char> in(g.n(), 0), seen(g.n(), 0);
  for (VertexId v : set) in[v] = 1;
  std::vector<std::vector<VertexId>> out;
  for (VertexId s : set) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (const auto& inc : g.incident(comp[h]))
        if (in[inc.neighbor] && !seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          comp.push_back(inc.neighbor);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace detail

/// Rebuilds any valid decomposition into normalized form: each connected
/// part is hung below its topmost vertex, recursively. Depth never grows.
inline TreedepthDecomposition normalize(const Graph& g, const TreedepthDecomposition& t) {
  if (!is_valid_treedepth_decomposition(g, t)) throw InvalidInput("invalid treedepth decomposition");
  TreedepthDecomposition out;
  out.parent.assign(g.n(), -1);
  std::vector<int> level(g.n());
  for (VertexId v = 0; v < g.n(); ++v) level[v] = t.level(v);
  std::vector<VertexId> all(g.n());
  for (VertexId v = 0; v < g.n(); ++v) all[v] = v;
  std::function<void(const std::vector<VertexId>&, VertexId)> rec =
      [&](const std::vector<VertexId>& set, VertexId above) {
        for (const auto& comp : detail::components_within(g, set)) {
          VertexId top = *std::min_element(comp.begin(), comp.end(), [&](VertexId a, VertexId b) {
            return std::pair(level[a], a) < std::pair(level[b], b);
          });
          out.parent[top] = above;
          std::vector<VertexId> rest;
          for (VertexId x : comp)
            if (x != top) rest.push_back(x);
          rec(rest, top);
        }
      };
  rec(all, -1);
  return out;
}

/// Minimum-depth decomposition by memoized search over vertex subsets. Returns
/// nullopt if the treedepth exceeds `budget`. Throws CapExceeded above `cap`
/// vertices.
inline std::optional<TreedepthDecomposition> treedepth_decomposition(const Graph& g, int budget,
                                                                     int cap = 20) {
  if (g.n() > cap || g.n() > 30)
    throw CapExceeded("treedepth search capped at " + std::to_string(std::min(cap, 30)) +
                      " vertices, got " + std::to_string(g.n()));
  using Mask = std::uint32_t;
  std::vector<Mask> nbr(g.n(), 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u] |= Mask{1} << e.v;
    nbr[e.v] |= Mask{1} << e.u;
  }
  auto split = [&](Mask s) {
    std::vector<Mask> comps;
    while (s) {
      Mask comp = s & (~s + 1), frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= nbr[std::countr_zero(f)];
        next &= s & ~comp;
        comp |= next;
        frontier = next;
      }
      comps.push_back(comp);
      s &= ~comp;
    }
    return comps;
  };
  std::unordered_map<Mask, int> memo;
  // Treedepth of a connected set; the argmin vertex is recovered on rebuild.
  std::function<int(Mask)> td_conn = [&](Mask s) -> int {
    if (std::popcount(s) <= 1) return std::popcount(s);
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    int best = std::popcount(s);
    for (Mask r = s; r; r &= r - 1) {
      Mask rest = s & ~(r & (~r + 1));
      int worst = 0;
      for (Mask c : split(rest)) {
        worst = std::max(worst, td_conn(c));
        if (worst + 1 >= best) break;
      }
      best = std::min(best, worst + 1);
    }
    memo.emplace(s, best);
    return best;
  };
  Mask full = g.n() == 32 ? ~Mask{0} : ((Mask{1} << g.n()) - 1);
  int depth = 0;
  for (Mask c : split(full)) depth = std::max(depth, td_conn(c));
  if (depth > budget) return std::nullopt;

  TreedepthDecomposition t;
  t.parent.assign(g.n(), -1);
  std::function<void(Mask, VertexId)> build = [&](Mask s, VertexId above) {
    for (Mask c : split(s)) {
      int target = td_conn(c);
      for (Mask r = c; r; r &= r - 1) {
        VertexId v = std::countr_zero(r);
        Mask rest = c & ~(Mask{1} << v);
        int worst = 0;
        for (Mask d : split(rest)) worst = std::max(worst, td_conn(d));
        if (worst + 1 == target) {
          t.parent[v] = above;
          build(rest, v);
          break;
        }
      }
    }
  };
  build(full, -1);
  return t;
}

/// Treedepth value only.
inline int treedepth(const Graph& g, int cap = 20) {
  return treedepth_decomposition(g, g.n(), cap)->depth();
}

// ---------------------------------------------------------------------------
// Linear orderings

/// Bijection V(G) -> 0..n-1 (positions are zero-based).
struct LinearOrdering {
  std::vector<int> position;

  bool is_bijection() const {
    std::vector<bool> hit(position.size(), false);
    for (int p : position) {
      if (p < 0 || p >= static_cast<int>(position.size()) || hit[p]) return false;
      hit[p] = true;
    }
    return true;
  }
  int span(const Edge& e) const { return std::abs(position[e.u] - position[e.v]); }
  int bandwidth(const Graph& g) const {
    int b = 0;
    for (const Edge& e : g.edges()) b = std::max(b, span(e));
    return b;
  }
  /// Vertices in order of position.
  std::vector<VertexId> sequence() const {
    std::vector<VertexId> seq(position.size());
    for (VertexId v = 0; v < static_cast<int>(position.size()); ++v) seq[position[v]] = v;
    return seq;
  }
  static LinearOrdering from_sequence(const std::vector<VertexId>& seq) {
    LinearOrdering o;
    o.position.assign(seq.size(), -1);
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) o.position.at(seq[i]) = i;
    if (!o.is_bijection()) throw InvalidInput("ordering is not a bijection");
    return o;
  }
};

}  // namespace onep
