#pragma once

// Simple undirected graphs with dense, stable vertex and edge ids, plus the
// edge-list text format and a handful of elementary transformations.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "onep/error.hpp"

namespace onep {

using VertexId = int;
using EdgeId = int;

/// Undirected edge; endpoints are stored with `u < v`.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool has(VertexId x) const { return x == u || x == v; }
  bool independent_of(const Edge& o) const { return !has(o.u) && !has(o.v); }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Finite simple graph. Vertex ids are 0..n-1 and edge ids 0..m-1, both
/// assigned in insertion order and never renumbered; transformations return
/// new graphs and report how ids map.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) {
    for (int i = 0; i < n; ++i) add_vertex();
  }

  VertexId add_vertex(std::string label = {}) {
    vertex_labels_.push_back(std::move(label));
    adjacency_.emplace_back();
    return static_cast<VertexId>(adjacency_.size()) - 1;
  }

  /// Adds edge {a,b}. Loops and parallel edges are rejected.
  EdgeId add_edge(VertexId a, VertexId b, std::string label = {}) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw InvalidInput("loop at vertex " + std::to_string(a));
    Edge e{std::min(a, b), std::max(a, b)};
    if (lookup_.count(key(e.u, e.v)))
      throw InvalidInput("parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(e);
    edge_labels_.push_back(std::move(label));
    adjacency_[a].push_back({b, id});
    adjacency_[b].push_back({a, id});
    lookup_.emplace(key(e.u, e.v), id);
    return id;
  }

  int n() const { return static_cast<int>(adjacency_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Incidence>& incident(VertexId v) const { return adjacency_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(adjacency_.at(v).size()); }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const {
    if (a == b || !has_vertex(a) || !has_vertex(b)) return std::nullopt;
    auto it = lookup_.find(key(std::min(a, b), std::max(a, b)));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }
  bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }
  bool has_vertex(VertexId v) const { return v >= 0 && v < n(); }

  const std::string& vertex_label(VertexId v) const { return vertex_labels_.at(v); }
  const std::string& edge_label(EdgeId e) const { return edge_labels_.at(e); }
  void set_vertex_label(VertexId v, std::string s) { vertex_labels_.at(v) = std::move(s); }
  void set_edge_label(EdgeId e, std::string s) { edge_labels_.at(e) = std::move(s); }

  int min_degree() const {
    int d = n() == 0 ? 0 : degree(0);
    for (VertexId v = 1; v < n(); ++v) d = std::min(d, degree(v));
    return d;
  }
  int max_degree() const {
    int d = 0;
    for (VertexId v = 0; v < n(); ++v) d = std::max(d, degree(v));
    return d;
  }

 private:
  static std::uint64_t key(VertexId a, VertexId b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }
  void check_vertex(VertexId v) const {
    if (!has_vertex(v)) throw InvalidInput("unknown vertex " + std::to_string(v));
  }

  std::vector<std::string> vertex_labels_;
  std::vector<std::string> edge_labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::map<std::uint64_t, EdgeId> lookup_;
};

// ---------------------------------------------------------------------------
// Constructors for common graphs.

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// K_{p,q}; vertices 0..p-1 form the first side.
inline Graph complete_bipartite(int p, int q) {
  Graph g(p + q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
  return g;
}

/// Two vertices 0 and 1 joined by internally disjoint paths of the given lengths.
inline Graph theta_graph(const std::vector<int>& lengths) {
  Graph g(2);
  for (int len : lengths) {
    if (len < 1) throw InvalidInput("theta path length must be positive");
    VertexId prev = 0;
    for (int i = 1; i < len; ++i) {
      VertexId x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Subgraphs.

/// Result of a vertex-deleting transformation: the new graph plus the map
/// from new vertex ids to old ones.
struct SubgraphMap {
  Graph graph;
  std::vector<VertexId> to_old;      // new vertex -> old vertex
  std::vector<EdgeId> edge_to_old;   // new edge -> old edge
  std::vector<VertexId> to_new;      // old vertex -> new vertex or -1
};

/// Induced subgraph on the vertices with `keep[v]` set. Relative order of
/// vertices and edges is preserved, labels are copied.
inline SubgraphMap induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  SubgraphMap out;
  auto& to_new = out.to_new;
  to_new.assign(g.n(), -1);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!keep[v]) continue;
    to_new[v] = out.graph.add_vertex(g.vertex_label(v));
    out.to_old.push_back(v);
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    if (to_new[ed.u] < 0 || to_new[ed.v] < 0) continue;
    out.graph.add_edge(to_new[ed.u], to_new[ed.v], g.edge_label(e));
    out.edge_to_old.push_back(e);
  }
  return out;
}

/// Spanning subgraph keeping the edges with `keep[e]` set (all vertices kept).
inline Graph edge_subgraph(const Graph& g, const std::vector<bool>& keep) {
  Graph h;
  for (VertexId v = 0; v < g.n(); ++v) h.add_vertex(g.vertex_label(v));
  for (EdgeId e = 0; e < g.m(); ++e)
    if (keep[e]) h.add_edge(g.edge(e).u, g.edge(e).v, g.edge_label(e));
  return h;
}

// ---------------------------------------------------------------------------
// Connectivity.

/// Component index per vertex (0-based, numbered by smallest vertex) and count.
struct Components {
  std::vector<int> of;
  int count = 0;
};

inline Components connected_components(const Graph& g) {
  Components c;
  c.of.assign(g.n(), -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.n(); ++s) {
    if (c.of[s] >= 0) continue;
    c.of[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(x))
        if (c.of[inc.neighbor] < 0) {
          c.of[inc.neighbor] = c.count;
          stack.push_back(inc.neighbor);
        }
    }
    ++c.count;
  }
  return c;
}

inline bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

inline bool is_acyclic(const Graph& g) {
  return g.m() == g.n() - connected_components(g).count;
}

// ---------------------------------------------------------------------------
// Operations used by the kernelizers.

/// Repeatedly deletes vertices of degree at most one. The result has minimum
/// degree two or is empty.
inline SubgraphMap prune_degree_one(const Graph& g) {
  std::vector<int> deg(g.n());
  std::vector<bool> keep(g.n(), true);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < g.n(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    if (!keep[v]) continue;
    keep[v] = false;
    for (const auto& inc : g.incident(v)) {
      if (!keep[inc.neighbor]) continue;
      if (--deg[inc.neighbor] <= 1) queue.push_back(inc.neighbor);
    }
  }
  return induced_subgraph(g, keep);
}

struct FeedbackEdgeSet {
  std::vector<EdgeId> edges;  // sorted
  int ell = 0;
};

/// Complement of a BFS spanning forest; minimum size m - n + #components.
inline FeedbackEdgeSet feedback_edge_set(const Graph& g) {
  std::vector<bool> seen(g.n(), false), tree(g.m(), false);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& inc : g.incident(queue[h]))
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          tree[inc.edge] = true;
          queue.push_back(inc.neighbor);
        }
  }
  FeedbackEdgeSet f;
  for (EdgeId e = 0; e < g.m(); ++e)
    if (!tree[e]) f.edges.push_back(e);
  f.ell = static_cast<int>(f.edges.size());
  return f;
}

/// Replaces every edge by a path with k edges through k-1 fresh vertices.
/// Original vertices keep their ids; fresh vertices are appended edge by edge.
inline Graph subdivide_all_edges(const Graph& g, int k) {
  if (k < 1) throw InvalidInput("subdivision factor must be positive");
  Graph h;
  for (VertexId v = 0; v < g.n(); ++v) h.add_vertex(g.vertex_label(v));
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    VertexId prev = ed.u;
    for (int i = 1; i < k; ++i) {
      VertexId x = h.add_vertex("sub" + std::to_string(e) + "." + std::to_string(i));
      h.add_edge(prev, x);
      prev = x;
    }
    h.add_edge(prev, ed.v, g.edge_label(e));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Edge-list text format: one "u v" pair per line, '#' starts a comment,
// blank lines ignored. A line with a single id declares an isolated vertex.

/// Parses the edge-list format. Raw ids are mapped to dense ids in increasing
/// order; the raw id is kept as the vertex label.
inline Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<long long, long long>> pairs;
  std::vector<long long> singles;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> ids;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long x = -1;
      try {
        x = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || x < 0)
        throw InvalidInput("line " + std::to_string(lineno) + ": bad vertex id '" + tok + "'");
      ids.push_back(x);
    }
    if (ids.empty()) continue;
    if (ids.size() == 1) {
      singles.push_back(ids[0]);
    } else if (ids.size() == 2) {
      pairs.emplace_back(ids[0], ids[1]);
    } else {
      throw InvalidInput("line " + std::to_string(lineno) + ": expected 'u v'");
    }
  }
  std::vector<long long> raw = singles;
  for (auto [a, b] : pairs) {
    raw.push_back(a);
    raw.push_back(b);
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  Graph g;
  for (long long r : raw) g.add_vertex(std::to_string(r));
  auto dense = [&](long long r) {
    return static_cast<VertexId>(std::lower_bound(raw.begin(), raw.end(), r) - raw.begin());
  };
  for (auto [a, b] : pairs) g.add_edge(dense(a), dense(b));
  return g;
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

/// Canonical serialization: dense ids, edges sorted lexicographically,
/// isolated vertices listed as single ids after the edges.
inline std::string to_edge_list(const Graph& g) {
  std::vector<Edge> es = g.edges();
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  std::ostringstream out;
  for (const Edge& e : es) out << e.u << ' ' << e.v << '\n';
  for (VertexId v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) out << v << '\n';
  return out.str();
}

/// Edge ids of a graph in lexicographic endpoint order.
inline std::vector<EdgeId> sorted_edge_ids(const Graph& g) {
  std::vector<EdgeId> ids(g.m());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
    return std::pair(g.edge(a).u, g.edge(a).v) < std::pair(g.edge(b).u, g.edge(b).v);
  });
  return ids;
}

}  // namespace onep
