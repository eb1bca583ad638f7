#pragma once

// Planarizations of drawings with crossings: rotation systems over real and
// dummy vertices, face tracing, validation, nesting of components, region
// queries and the JSON exchange format.
//
// Conventions. Rotations list darts clockwise. A dart leaves its tail node;
// the face of a dart lies to its left and is traced by
//   next(d) = clockwise successor of twin(d) at head(d).
// Edge e = {u,v} with crossings c_1..c_r (ordered from u) is cut into segments
// 0..r; segment s runs from node_s to node_{s+1} with node_0 = u,
// node_{r+1} = v and node_i = dummy of c_i. Dart end 0 leaves node_s, end 1
// leaves node_{s+1}. Dummy of crossing c has node id n + c.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "onep/error.hpp"
#include "onep/graph.hpp"

namespace onep {

using DartId = int;
using NodeId = int;

/// External dart address: segment `seg` of `edge`, leaving from segment end `end`.
struct Dart {
  EdgeId edge = 0;
  int end = 0;
  int seg = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Placement of a non-root planarization component.
struct NestEntry {
  VertexId vertex = 0;             // any real vertex of the component
  std::optional<Dart> outer;       // dart on the component's own outer face
  std::optional<Dart> host;        // dart of the face it sits in; none = unbounded region
  friend bool operator==(const NestEntry&, const NestEntry&) = default;
};

enum class Violation {
  Format,
  DanglingDart,
  DummyDegree,
  NonAlternating,
  NotIndependent,
  CrossingMultiplicity,
  Genus,
  Nesting,
};

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::Format: return "format";
    case Violation::DanglingDart: return "dangling-dart";
    case Violation::DummyDegree: return "dummy-degree";
    case Violation::NonAlternating: return "non-alternating";
    case Violation::NotIndependent: return "not-independent";
    case Violation::CrossingMultiplicity: return "crossing-multiplicity";
    case Violation::Genus: return "genus";
    case Violation::Nesting: return "nesting";
  }
  return "unknown";
}

/// Validation failure with its category.
class EmbeddingError : public InvalidInput {
 public:
  EmbeddingError(Violation kind, const std::string& what)
      : InvalidInput(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  Violation kind() const { return kind_; }

 private:
  Violation kind_;
};

/// Ordered walk of host edges.
struct Arc {
  std::vector<EdgeId> edges;
  VertexId start = 0;
  VertexId end = 0;
};

/// Vertex sequence of an arc; throws if consecutive edges do not chain.
inline std::vector<VertexId> arc_vertices(const Graph& g, const Arc& arc) {
  std::vector<VertexId> vs{arc.start};
  for (EdgeId e : arc.edges) {
    if (!g.edge(e).has(vs.back())) throw InvalidInput("arc edges do not form a walk");
    vs.push_back(g.edge(e).other(vs.back()));
  }
  if (vs.back() != arc.end) throw InvalidInput("arc does not end at its declared endpoint");
  return vs;
}

class PlaneEmbedding {
 public:
  struct SharedRegion {
    int face_a = -1;  // a face at a inside the shared region
    int face_b = -1;  // a face at b inside the shared region
    bool outer = false;
  };

  PlaneEmbedding() { finish(false); }

  /// Builds and validates an embedding from external dart addresses. `order`
  /// may be empty when no edge is crossed more than once.
  PlaneEmbedding(Graph g, std::vector<std::pair<EdgeId, EdgeId>> crossings,
                 std::vector<std::vector<int>> order, const std::vector<std::vector<Dart>>& rotation,
                 std::optional<Dart> outer, std::vector<NestEntry> nest = {}, int k = 1)
      : g_(std::move(g)), k_(k), crossings_(std::move(crossings)), order_(std::move(order)) {
    setup_segments();
    if (static_cast<int>(rotation.size()) != node_count())
      throw EmbeddingError(Violation::Format, "rotation must list every real and dummy vertex");
    rotation_.resize(node_count());
    for (NodeId x = 0; x < node_count(); ++x)
      for (const Dart& d : rotation[x]) rotation_[x].push_back(id_checked(d));
    if (outer) outer_ = id_checked(*outer);
    for (const NestEntry& ne : nest) nest_.push_back(convert(ne));
    finish(true);
  }

  /// Same, with internal dart ids. With `validate` false only face tracing is
  /// done; callers must know the data is consistent.
  static PlaneEmbedding from_ids(Graph g, std::vector<std::pair<EdgeId, EdgeId>> crossings,
                                 std::vector<std::vector<int>> order,
                                 std::vector<std::vector<DartId>> rotation,
                                 std::optional<DartId> outer, int k = 1, bool validate = true) {
    PlaneEmbedding e;
    e.g_ = std::move(g);
    e.k_ = k;
    e.crossings_ = std::move(crossings);
    e.order_ = std::move(order);
    e.setup_segments();
    e.rotation_ = std::move(rotation);
    e.outer_ = outer;
    e.nest_.clear();
    e.finish(validate);
    return e;
  }

  // -- basic structure ------------------------------------------------------
  const Graph& graph() const { return g_; }
  int k() const { return k_; }
  int n() const { return g_.n(); }
  int node_count() const { return g_.n() + static_cast<int>(crossings_.size()); }
  int dart_count() const { return 2 * segment_count_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  bool is_dummy(NodeId x) const { return x >= g_.n(); }
  NodeId dummy_of(int crossing) const { return g_.n() + crossing; }
  const std::pair<EdgeId, EdgeId>& crossing(int c) const { return crossings_.at(c); }
  const std::vector<std::pair<EdgeId, EdgeId>>& crossings() const { return crossings_; }
  const std::vector<int>& crossings_on(EdgeId e) const { return order_.at(e); }
  int crossings_of_edge(EdgeId e) const { return static_cast<int>(order_.at(e).size()); }
  int max_crossings_per_edge() const {
    int m = 0;
    for (const auto& o : order_) m = std::max(m, static_cast<int>(o.size()));
    return m;
  }

  DartId twin(DartId d) const { return d ^ 1; }
  NodeId tail(DartId d) const { return tail_[d]; }
  NodeId head(DartId d) const { return tail_[d ^ 1]; }
  EdgeId edge_of(DartId d) const { return seg_edge_[d >> 1]; }
  int seg_of(DartId d) const { return seg_index_[d >> 1]; }
  DartId dart_id(EdgeId e, int end, int seg) const { return 2 * (seg_offset_[e] + seg) + end; }
  Dart dart(DartId d) const { return {edge_of(d), d & 1, seg_of(d)}; }
  int segments_of(EdgeId e) const { return seg_offset_[e + 1] - seg_offset_[e]; }

  /// Node at position i along edge e (0 = first endpoint).
  NodeId node_on_edge(EdgeId e, int i) const {
    int r = crossings_of_edge(e);
    if (i == 0) return g_.edge(e).u;
    if (i == r + 1) return g_.edge(e).v;
    return dummy_of(order_[e][i - 1]);
  }

  const std::vector<DartId>& rotation(NodeId x) const { return rotation_.at(x); }
  const std::vector<std::vector<DartId>>& rotations() const { return rotation_; }
  DartId cw_next(DartId d) const {
    const auto& r = rotation_[tail_[d]];
    return r[(pos_[d] + 1) % r.size()];
  }
  DartId cw_prev(DartId d) const {
    const auto& r = rotation_[tail_[d]];
    return r[(pos_[d] + r.size() - 1) % r.size()];
  }
  /// Successor of d along its face.
  DartId face_next(DartId d) const { return cw_next(d ^ 1); }

  // -- faces and regions ----------------------------------------------------
  /// Face cycles; faces with an empty dart list stand for isolated vertices.
  const std::vector<std::vector<DartId>>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int face_of(DartId d) const { return face_of_[d]; }
  /// Nodes on the boundary of a face (with repetition, in walk order).
  std::vector<NodeId> face_nodes(int f) const {
    if (faces_[f].empty()) return {isolated_node_of_face_[f]};
    std::vector<NodeId> out;
    for (DartId d : faces_[f]) out.push_back(tail_[d]);
    return out;
  }
  bool face_has_node(int f, NodeId x) const {
    for (NodeId y : face_nodes(f))
      if (y == x) return true;
    return false;
  }
  /// Faces incident to node x, sorted.
  std::vector<int> faces_at(NodeId x) const {
    std::set<int> fs;
    if (rotation_[x].empty()) fs.insert(isolated_face_[x]);
    for (DartId d : rotation_[x]) fs.insert(face_of_[d]);
    return {fs.begin(), fs.end()};
  }
  /// The unbounded face, or -1 if there are no darts.
  int outer_face() const { return outer_ ? face_of_[*outer_] : -1; }
  std::optional<DartId> outer_dart() const { return outer_; }
  int component_count() const { return component_count_; }
  int component_of(NodeId x) const { return component_of_[x]; }
  int component_of_face(int f) const { return face_component_[f]; }
  /// Face of the component that faces away from it (toward the unbounded side).
  int component_outer_face(int comp) const { return component_outer_face_[comp]; }
  int region_of(int f) const { return region_of_face_[f]; }
  int outer_region() const { return outer_region_; }
  int region_count() const { return region_count_; }
  const std::vector<NestEntry> nest() const {
    std::vector<NestEntry> out;
    for (const auto& ne : nest_) {
      NestEntry x;
      x.vertex = ne.vertex;
      if (ne.outer) x.outer = dart(*ne.outer);
      if (ne.host) x.host = dart(*ne.host);
      out.push_back(x);
    }
    return out;
  }

  /// A region whose boundary contains both a and b, preferring the unbounded one.
  std::optional<SharedRegion> shared_region(VertexId a, VertexId b) const {
    std::optional<SharedRegion> best;
    auto fa = faces_at(a), fb = faces_at(b);
    for (int x : fa)
      for (int y : fb)
        if (region_of_face_[x] == region_of_face_[y]) {
          SharedRegion s{x, y, region_of_face_[x] == outer_region_};
          if (!best || (s.outer && !best->outer)) best = s;
        }
    return best;
  }
  /// True if vertex x lies on the unbounded region.
  bool on_outer_region(VertexId x) const {
    for (int f : faces_at(x))
      if (region_of_face_[f] == outer_region_) return true;
    return false;
  }

  /// Dart at dummy c pointing along edge e toward its endpoint `toward`.
  DartId dart_from_dummy(int c, EdgeId e, VertexId toward) const {
    const auto& ord = order_[e];
    int i = static_cast<int>(std::find(ord.begin(), ord.end(), c) - ord.begin()) + 1;
    if (i > static_cast<int>(ord.size())) throw InvalidInput("edge does not pass the crossing");
    // node index i; segment i-1 ends here, segment i starts here.
    return toward == g_.edge(e).u ? dart_id(e, 1, i - 1) : dart_id(e, 0, i);
  }
  /// Dart at real endpoint x of edge e.
  DartId dart_from_vertex(EdgeId e, VertexId x) const {
    return x == g_.edge(e).u ? dart_id(e, 0, 0) : dart_id(e, 1, segments_of(e) - 1);
  }

  // -- internal access for rewriting modules -------------------------------
  const std::vector<std::vector<int>>& orders() const { return order_; }

 private:
  struct NestIds {
    VertexId vertex;
    std::optional<DartId> outer, host;
  };

  void setup_segments() {
    if (k_ < 1) throw EmbeddingError(Violation::Format, "k must be positive");
    const int m = g_.m();
    if (order_.empty()) {
      order_.assign(m, {});
      for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        auto [e1, e2] = crossings_[c];
        for (EdgeId e : {e1, e2}) {
          if (e < 0 || e >= m) throw EmbeddingError(Violation::Format, "crossing refers to unknown edge");
          order_[e].push_back(c);
        }
      }
      for (EdgeId e = 0; e < m; ++e)
        if (order_[e].size() > 1)
          throw EmbeddingError(Violation::CrossingMultiplicity,
                               "edge " + std::to_string(e) + " crossed twice but no order given");
    }
    if (static_cast<int>(order_.size()) != m)
      throw EmbeddingError(Violation::Format, "order must list every edge");
    seg_offset_.assign(m + 1, 0);
    for (EdgeId e = 0; e < m; ++e)
      seg_offset_[e + 1] = seg_offset_[e] + static_cast<int>(order_[e].size()) + 1;
    segment_count_ = seg_offset_[m];
    seg_edge_.resize(segment_count_);
    seg_index_.resize(segment_count_);
    for (EdgeId e = 0; e < m; ++e)
      for (int s = 0; s < segments_of(e); ++s) {
        seg_edge_[seg_offset_[e] + s] = e;
        seg_index_[seg_offset_[e] + s] = s;
      }
    for (EdgeId e = 0; e < m; ++e)
      for (int c : order_[e])
        if (c < 0 || c >= static_cast<int>(crossings_.size()))
          throw EmbeddingError(Violation::Format, "order refers to unknown crossing");
    tail_.resize(2 * segment_count_);
    for (int gs = 0; gs < segment_count_; ++gs) {
      EdgeId e = seg_edge_[gs];
      int s = seg_index_[gs];
      tail_[2 * gs] = node_on_edge(e, s);
      tail_[2 * gs + 1] = node_on_edge(e, s + 1);
    }
  }

  DartId id_checked(const Dart& d) const {
    if (d.edge < 0 || d.edge >= g_.m() || d.end < 0 || d.end > 1 || d.seg < 0 ||
        d.seg >= segments_of(d.edge))
      throw EmbeddingError(Violation::DanglingDart,
                           "dart [" + std::to_string(d.edge) + "," + std::to_string(d.end) + "," +
                               std::to_string(d.seg) + "] does not exist");
    return dart_id(d.edge, d.end, d.seg);
  }

  NestIds convert(const NestEntry& ne) const {
    NestIds x{ne.vertex, std::nullopt, std::nullopt};
    if (ne.outer) x.outer = id_checked(*ne.outer);
    if (ne.host) x.host = id_checked(*ne.host);
    return x;
  }

  void validate_crossings() const {
    std::set<std::pair<EdgeId, EdgeId>> seen;
    for (auto [e1, e2] : crossings_) {
      if (e1 < 0 || e2 < 0 || e1 >= g_.m() || e2 >= g_.m())
        throw EmbeddingError(Violation::Format, "crossing refers to unknown edge");
      if (e1 == e2 || !g_.edge(e1).independent_of(g_.edge(e2)))
        throw EmbeddingError(Violation::NotIndependent,
                             "edges " + std::to_string(e1) + " and " + std::to_string(e2) +
                                 " are not independent");
      if (!seen.insert({std::min(e1, e2), std::max(e1, e2)}).second)
        throw EmbeddingError(Violation::CrossingMultiplicity, "edge pair crosses twice");
    }
    for (EdgeId e = 0; e < g_.m(); ++e) {
      if (static_cast<int>(order_[e].size()) > k_)
        throw EmbeddingError(Violation::CrossingMultiplicity,
                             "edge " + std::to_string(e) + " crossed " +
                                 std::to_string(order_[e].size()) + " times, k = " + std::to_string(k_));
      std::vector<int> want;
      for (int c = 0; c < static_cast<int>(crossings_.size()); ++c)
        if (crossings_[c].first == e || crossings_[c].second == e) want.push_back(c);
      std::vector<int> have = order_[e];
      std::sort(have.begin(), have.end());
      if (have != want)
        throw EmbeddingError(Violation::Format,
                             "order of edge " + std::to_string(e) + " does not match its crossings");
    }
  }

  void validate_rotation() const {
    std::vector<int> count(dart_count(), 0);
    for (NodeId x = 0; x < node_count(); ++x)
      for (DartId d : rotation_[x]) {
        if (d < 0 || d >= dart_count())
          throw EmbeddingError(Violation::DanglingDart, "unknown dart id");
        if (tail_[d] != x)
          throw EmbeddingError(Violation::DanglingDart,
                               "dart listed at node " + std::to_string(x) + " leaves node " +
                                   std::to_string(tail_[d]));
        ++count[d];
      }
    for (DartId d = 0; d < dart_count(); ++d)
      if (count[d] != 1)
        throw EmbeddingError(Violation::DanglingDart,
                             "dart of edge " + std::to_string(edge_of(d)) + " listed " +
                                 std::to_string(count[d]) + " times");
    for (int c = 0; c < crossing_count(); ++c) {
      const auto& r = rotation_[dummy_of(c)];
      if (r.size() != 4) throw EmbeddingError(Violation::DummyDegree, "dummy without degree 4");
      for (int i = 0; i < 4; ++i)
        if (edge_of(r[i]) == edge_of(r[(i + 1) % 4]))
          throw EmbeddingError(Violation::NonAlternating,
                               "crossing " + std::to_string(c) + " does not alternate");
    }
  }

  void trace() {
    pos_.assign(dart_count(), -1);
    for (NodeId x = 0; x < node_count(); ++x)
      for (int i = 0; i < static_cast<int>(rotation_[x].size()); ++i) pos_[rotation_[x][i]] = i;
    face_of_.assign(dart_count(), -1);
    faces_.clear();
    isolated_node_of_face_.clear();
    for (DartId s = 0; s < dart_count(); ++s) {
      // unplaced darts only occur in unvalidated skeletons
      if (face_of_[s] >= 0 || pos_[s] < 0 || pos_[s ^ 1] < 0) continue;
      int f = static_cast<int>(faces_.size());
      faces_.emplace_back();
      isolated_node_of_face_.push_back(-1);
      DartId d = s;
      do {
        face_of_[d] = f;
        faces_[f].push_back(d);
        d = face_next(d);
      } while (d != s);
    }
    isolated_face_.assign(node_count(), -1);
    for (NodeId x = 0; x < node_count(); ++x)
      if (rotation_[x].empty()) {
        isolated_face_[x] = static_cast<int>(faces_.size());
        faces_.emplace_back();
        isolated_node_of_face_.push_back(x);
      }
    // Components of the planarization.
    component_of_.assign(node_count(), -1);
    component_count_ = 0;
    for (NodeId s = 0; s < node_count(); ++s) {
      if (component_of_[s] >= 0) continue;
      std::vector<NodeId> stack{s};
      component_of_[s] = component_count_;
      while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (DartId d : rotation_[x]) {
          NodeId y = head(d);
          if (component_of_[y] < 0) {
            component_of_[y] = component_count_;
            stack.push_back(y);
          }
        }
      }
      ++component_count_;
    }
    face_component_.resize(faces_.size());
    for (int f = 0; f < face_count(); ++f)
      face_component_[f] = faces_[f].empty() ? component_of_[isolated_node_of_face_[f]]
                                             : component_of_[tail_[faces_[f][0]]];
  }

  void check_euler() const {
    std::vector<long> v(component_count_, 0), e(component_count_, 0), f(component_count_, 0);
    for (NodeId x = 0; x < node_count(); ++x) {
      ++v[component_of_[x]];
      e[component_of_[x]] += static_cast<long>(rotation_[x].size());
    }
    for (int i = 0; i < face_count(); ++i) ++f[face_component_[i]];
    for (int c = 0; c < component_count_; ++c)
      if (v[c] - e[c] / 2 + f[c] != 2)
        throw EmbeddingError(Violation::Genus, "component has Euler characteristic " +
                                                   std::to_string(v[c] - e[c] / 2 + f[c]));
  }

  /// Unions faces into regions from the outer dart and nest entries, and
  /// checks that components and regions form a tree.
  void build_regions(bool validate) {
    const int F = face_count();
    std::vector<int> uf(F + 1);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
    const int infinity = F;
    int root = -1;
    if (outer_) {
      root = component_of_[tail_[*outer_]];
      unite(face_of_[*outer_], infinity);
    }
    component_outer_face_.assign(component_count_, -1);
    if (root >= 0) component_outer_face_[root] = face_of_[*outer_];
    std::vector<bool> placed(component_count_, false);
    if (root >= 0) placed[root] = true;
    for (const NestIds& ne : nest_) {
      if (ne.vertex < 0 || ne.vertex >= n())
        throw EmbeddingError(Violation::Nesting, "nest entry names unknown vertex");
      int comp = component_of_[ne.vertex];
      if (placed[comp])
        throw EmbeddingError(Violation::Nesting,
                             "component of vertex " + std::to_string(ne.vertex) + " placed twice");
      placed[comp] = true;
      int own;
      if (ne.outer) {
        if (component_of_[tail_[*ne.outer]] != comp)
          throw EmbeddingError(Violation::Nesting, "nest outer dart lies in another component");
        own = face_of_[*ne.outer];
      } else {
        if (!rotation_[ne.vertex].empty())
          throw EmbeddingError(Violation::Nesting, "nest entry needs an outer dart");
        own = isolated_face_[ne.vertex];
      }
      component_outer_face_[comp] = own;
      if (ne.host) {
        if (component_of_[tail_[*ne.host]] == comp)
          throw EmbeddingError(Violation::Nesting, "component hosted by itself");
        unite(own, face_of_[*ne.host]);
      } else {
        unite(own, infinity);
      }
    }
    for (int comp = 0; comp < component_count_; ++comp) {
      if (placed[comp]) continue;
      // Isolated vertices default to the unbounded region.
      NodeId rep = -1;
      for (NodeId x = 0; x < node_count() && rep < 0; ++x)
        if (component_of_[x] == comp) rep = x;
      if (!rotation_[rep].empty()) {
        if (validate)
          throw EmbeddingError(Violation::Nesting,
                               "component of vertex " + std::to_string(rep) + " is not placed");
        continue;
      }
      component_outer_face_[comp] = isolated_face_[rep];
      unite(isolated_face_[rep], infinity);
    }
    std::map<int, int> label;
    region_of_face_.assign(F, -1);
    for (int f = 0; f < F; ++f) {
      int r = find(f);
      auto it = label.emplace(r, static_cast<int>(label.size())).first;
      region_of_face_[f] = it->second;
    }
    auto it = label.emplace(find(infinity), static_cast<int>(label.size())).first;
    outer_region_ = it->second;
    region_count_ = static_cast<int>(label.size());
    if (!validate) return;
    // Tree check on the incidence graph regions <-> components (+ the plane).
    const int nodes = region_count_ + component_count_ + 1;
    if (F + 1 != nodes - 1)
      throw EmbeddingError(Violation::Nesting, "nesting does not form a tree");
    std::vector<int> tf(nodes);
    std::iota(tf.begin(), tf.end(), 0);
    auto tfind = [&](int x) {
      while (tf[x] != x) x = tf[x] = tf[tf[x]];
      return x;
    };
    int merges = 0;
    auto link = [&](int a, int b) {
      a = tfind(a);
      b = tfind(b);
      if (a != b) {
        tf[a] = b;
        ++merges;
      }
    };
    for (int f = 0; f < F; ++f) link(region_of_face_[f], region_count_ + face_component_[f]);
    link(outer_region_, nodes - 1);
    if (merges != nodes - 1) throw EmbeddingError(Violation::Nesting, "nesting is cyclic");
  }

  void finish(bool validate) {
    if (validate) {
      validate_crossings();
      validate_rotation();
      if (outer_ && (*outer_ < 0 || *outer_ >= dart_count()))
        throw EmbeddingError(Violation::DanglingDart, "outer dart does not exist");
    }
    trace();
    if (validate) check_euler();
    build_regions(validate);
  }

  friend PlaneEmbedding with_nesting(const PlaneEmbedding&, std::optional<DartId>,
                                     std::vector<NestEntry>);

  Graph g_;
  int k_ = 1;
  std::vector<std::pair<EdgeId, EdgeId>> crossings_;
  std::vector<std::vector<int>> order_;
  std::vector<int> seg_offset_{0};
  int segment_count_ = 0;
  std::vector<EdgeId> seg_edge_;
  std::vector<int> seg_index_;
  std::vector<NodeId> tail_;
  std::vector<std::vector<DartId>> rotation_;
  std::optional<DartId> outer_;
  std::vector<NestIds> nest_;

  std::vector<int> pos_;
  std::vector<int> face_of_;
  std::vector<std::vector<DartId>> faces_;
  std::vector<NodeId> isolated_node_of_face_;
  std::vector<int> isolated_face_;
  std::vector<int> component_of_;
  int component_count_ = 0;
  std::vector<int> face_component_;
  std::vector<int> component_outer_face_;
  std::vector<int> region_of_face_;
  int outer_region_ = 0;
  int region_count_ = 0;
};

/// Copy of `e` with new outer dart and nesting, validated.
inline PlaneEmbedding with_nesting(const PlaneEmbedding& e, std::optional<DartId> outer,
                                   std::vector<NestEntry> nest) {
  PlaneEmbedding out = e;
  out.outer_ = outer;
  out.nest_.clear();
  for (const NestEntry& ne : nest) out.nest_.push_back(out.convert(ne));
  out.finish(true);
  return out;
}

/// Given region labels for every face of `skeleton` (its own nesting data is
/// ignored) and the label of the unbounded region, derives the outer dart and
/// nest entries that reproduce them. The chosen darts are the smallest ids
/// available, so the result is deterministic.
inline PlaneEmbedding assign_regions(const PlaneEmbedding& skeleton, const std::vector<int>& label,
                                     int outer_label) {
  const int F = skeleton.face_count();
  const int C = skeleton.component_count();
  std::map<int, std::vector<int>> faces_in;  // label -> faces
  for (int f = 0; f < F; ++f) faces_in[label[f]].push_back(f);
  auto min_dart = [&](int f) {
    return *std::min_element(skeleton.faces()[f].begin(), skeleton.faces()[f].end());
  };
  auto min_vertex = [&](int comp) {
    for (VertexId v = 0; v < skeleton.n(); ++v)
      if (skeleton.component_of(v) == comp) return v;
    throw InvalidInput("component without real vertex");
  };
  std::vector<std::vector<int>> faces_of_comp(C);
  for (int f = 0; f < F; ++f) faces_of_comp[skeleton.component_of_face(f)].push_back(f);

  std::optional<DartId> outer;
  std::vector<NestEntry> nest;
  std::vector<bool> done(C, false);
  // Breadth-first over the region/component tree from the unbounded region.
  struct Item {
    int label;
    int parent_face;  // face of the enclosing component in this region, -1 at top
  };
  std::vector<Item> queue{{outer_label, -1}};
  std::set<int> seen_labels{outer_label};
  int root = -1;
  if (faces_in.count(outer_label)) {
    for (int f : faces_in[outer_label]) {
      int comp = skeleton.component_of_face(f);
      if (skeleton.faces()[f].empty()) continue;
      if (root < 0 || min_vertex(comp) < min_vertex(root)) root = comp;
    }
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Item it = queue[h];
    for (int f : faces_in[it.label]) {
      int comp = skeleton.component_of_face(f);
      if (done[comp]) continue;
      if (it.parent_face >= 0 && skeleton.component_of_face(it.parent_face) == comp) continue;
      done[comp] = true;
      if (comp == root) {
        outer = min_dart(f);
      } else {
        NestEntry ne;
        ne.vertex = min_vertex(comp);
        if (!skeleton.faces()[f].empty()) ne.outer = skeleton.dart(min_dart(f));
        if (it.parent_face >= 0) ne.host = skeleton.dart(min_dart(it.parent_face));
        nest.push_back(ne);
      }
      for (int g : faces_of_comp[comp]) {
        if (g == f || !seen_labels.insert(label[g]).second) continue;
        queue.push_back({label[g], g});
      }
    }
  }
  std::sort(nest.begin(), nest.end(),
            [](const NestEntry& a, const NestEntry& b) { return a.vertex < b.vertex; });
  std::optional<DartId> outer_id;
  if (outer) outer_id = *outer;
  return with_nesting(skeleton, outer_id, std::move(nest));
}

/// Restriction to a subset of host edges. Vertices survive if they keep an
/// edge or were isolated to begin with; crossings survive if both edges do.
struct RestrictedEmbedding {
  PlaneEmbedding embedding;
  std::vector<VertexId> to_old;
  std::vector<EdgeId> edge_to_old;
};

inline RestrictedEmbedding restrict_embedding(const PlaneEmbedding& e, const std::vector<bool>& keep) {
  const Graph& g = e.graph();
  if (static_cast<int>(keep.size()) != g.m()) throw InvalidInput("edge mask has wrong size");
  RestrictedEmbedding out;
  std::vector<VertexId> vmap(g.n(), -1);
  Graph h;
  for (VertexId v = 0; v < g.n(); ++v) {
    bool alive = g.degree(v) == 0;
    for (const auto& inc : g.incident(v)) alive |= keep[inc.edge];
    if (!alive) continue;
    vmap[v] = h.add_vertex(g.vertex_label(v));
    out.to_old.push_back(v);
  }
  std::vector<EdgeId> emap(g.m(), -1);
  for (EdgeId x = 0; x < g.m(); ++x) {
    if (!keep[x]) continue;
    emap[x] = h.add_edge(vmap[g.edge(x).u], vmap[g.edge(x).v], g.edge_label(x));
    out.edge_to_old.push_back(x);
  }
  std::vector<int> cmap(e.crossing_count(), -1);
  std::vector<std::pair<EdgeId, EdgeId>> crossings;
  for (int c = 0; c < e.crossing_count(); ++c) {
    auto [a, b] = e.crossing(c);
    if (!keep[a] || !keep[b]) continue;
    cmap[c] = static_cast<int>(crossings.size());
    crossings.emplace_back(emap[a], emap[b]);
  }
  std::vector<std::vector<int>> order(h.m());
  // new segment index for each old segment of a kept edge
  std::vector<std::vector<int>> newseg(g.m());
  for (EdgeId x = 0; x < g.m(); ++x) {
    if (!keep[x]) continue;
    int s = 0;
    newseg[x].push_back(0);
    for (int c : e.crossings_on(x)) {
      if (cmap[c] >= 0) {
        order[emap[x]].push_back(cmap[c]);
        ++s;
      }
      newseg[x].push_back(s);
    }
  }
  const int new_nodes = h.n() + static_cast<int>(crossings.size());
  auto node_map = [&](NodeId x) -> NodeId {
    if (x < g.n()) return vmap[x];
    int c = cmap[x - g.n()];
    return c < 0 ? -1 : h.n() + c;
  };
  // Build the skeleton with new dart ids.
  PlaneEmbedding probe = PlaneEmbedding::from_ids(h, crossings, order,
                                                  std::vector<std::vector<DartId>>(new_nodes),
                                                  std::nullopt, std::max(1, e.k()), false);
  auto new_dart = [&](DartId d) {
    EdgeId x = e.edge_of(d);
    return probe.dart_id(emap[x], d & 1, newseg[x][e.seg_of(d)]);
  };
  std::vector<std::vector<DartId>> rot(new_nodes);
  for (NodeId x = 0; x < e.node_count(); ++x) {
    NodeId y = node_map(x);
    if (y < 0) continue;
    for (DartId d : e.rotation(x))
      if (keep[e.edge_of(d)]) rot[y].push_back(new_dart(d));
  }
  PlaneEmbedding skeleton =
      PlaneEmbedding::from_ids(h, crossings, order, rot, std::nullopt, std::max(1, e.k()), false);
  // Regions: old regions merged through every old dart that maps into a new face
  // and through every deleted segment.
  const int R = e.region_count();
  const int F = skeleton.face_count();
  std::vector<int> uf(R + F);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
  for (DartId d = 0; d < e.dart_count(); ++d) {
    int old_region = e.region_of(e.face_of(d));
    if (keep[e.edge_of(d)])
      unite(old_region, R + skeleton.face_of(new_dart(d)));
    else
      unite(old_region, e.region_of(e.face_of(d ^ 1)));
  }
  for (VertexId v = 0; v < g.n(); ++v)
    if (vmap[v] >= 0 && g.degree(v) == 0)
      unite(e.region_of(e.faces_at(v)[0]), R + skeleton.faces_at(vmap[v])[0]);
  std::vector<int> label(F);
  for (int f = 0; f < F; ++f) label[f] = find(R + f);
  out.embedding = assign_regions(skeleton, label, find(e.outer_region()));
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json dart_to_json(const PlaneEmbedding& e, DartId d) {
  Dart x = e.dart(d);
  if (e.crossings_of_edge(x.edge) == 0) return nlohmann::ordered_json::array({x.edge, x.end});
  return nlohmann::ordered_json::array({x.edge, x.end, x.seg});
}

inline nlohmann::ordered_json to_json(const PlaneEmbedding& e) {
  using J = nlohmann::ordered_json;
  const Graph& g = e.graph();
  J out = J::object();
  J vs = J::array();
  for (VertexId v = 0; v < g.n(); ++v) vs.push_back(v);
  out["vertices"] = vs;
  J es = J::array();
  for (const Edge& x : g.edges()) es.push_back(J::array({x.u, x.v}));
  out["edges"] = es;
  J cs = J::array();
  for (auto [a, b] : e.crossings()) cs.push_back(J::array({a, b}));
  out["crossings"] = cs;
  if (e.max_crossings_per_edge() >= 2) {
    J ord = J::array();
    for (EdgeId x = 0; x < g.m(); ++x) ord.push_back(e.crossings_on(x));
    out["order"] = ord;
  }
  if (e.k() != 1) out["k"] = e.k();
  J rot = J::object();
  for (NodeId x = 0; x < e.node_count(); ++x) {
    J list = J::array();
    for (DartId d : e.rotation(x)) list.push_back(dart_to_json(e, d));
    rot[std::to_string(x)] = list;
  }
  out["rotation"] = rot;
  if (e.outer_dart()) out["outer"] = dart_to_json(e, *e.outer_dart());
  auto nest = e.nest();
  if (!nest.empty()) {
    J ns = J::array();
    for (const NestEntry& ne : nest) {
      J item = J::object();
      item["vertex"] = ne.vertex;
      if (ne.outer)
        item["outer"] = dart_to_json(e, e.dart_id(ne.outer->edge, ne.outer->end, ne.outer->seg));
      if (ne.host)
        item["host"] = dart_to_json(e, e.dart_id(ne.host->edge, ne.host->end, ne.host->seg));
      ns.push_back(item);
    }
    out["nest"] = ns;
  }
  return out;
}

inline std::string serialize_embedding(const PlaneEmbedding& e) { return to_json(e).dump(1) + "\n"; }

inline Dart dart_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array() || j.size() < 2 || j.size() > 3)
    throw EmbeddingError(Violation::Format, "dart must be [edge, end] or [edge, end, seg]");
  Dart d;
  d.edge = j[0].get<int>();
  d.end = j[1].get<int>();
  d.seg = j.size() == 3 ? j[2].get<int>() : 0;
  return d;
}

inline PlaneEmbedding embedding_from_json(const nlohmann::ordered_json& j) {
  try {
    Graph g;
    const auto& vs = j.at("vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].get<int>() != static_cast<int>(i))
        throw EmbeddingError(Violation::Format, "vertices must be 0..n-1 in order");
      g.add_vertex(std::to_string(i));
    }
    for (const auto& x : j.at("edges")) g.add_edge(x.at(0).get<int>(), x.at(1).get<int>());
    std::vector<std::pair<EdgeId, EdgeId>> crossings;
    if (j.contains("crossings"))
      for (const auto& x : j["crossings"]) crossings.emplace_back(x.at(0).get<int>(), x.at(1).get<int>());
    std::vector<std::vector<int>> order;
    if (j.contains("order"))
      for (const auto& x : j["order"]) order.push_back(x.get<std::vector<int>>());
    int k = j.value("k", 1);
    const int nodes = g.n() + static_cast<int>(crossings.size());
    std::vector<std::vector<Dart>> rotation(nodes);
    for (const auto& [key, list] : j.at("rotation").items()) {
      std::size_t used = 0;
      int x = std::stoi(key, &used);
      if (used != key.size() || x < 0 || x >= nodes)
        throw EmbeddingError(Violation::Format, "rotation key '" + key + "' is not a node");
      for (const auto& d : list) rotation[x].push_back(dart_from_json(d));
    }
    std::optional<Dart> outer;
    if (j.contains("outer") && !j["outer"].is_null()) outer = dart_from_json(j["outer"]);
    std::vector<NestEntry> nest;
    if (j.contains("nest"))
      for (const auto& x : j["nest"]) {
        NestEntry ne;
        ne.vertex = x.at("vertex").get<int>();
        if (x.contains("outer")) ne.outer = dart_from_json(x["outer"]);
        if (x.contains("host")) ne.host = dart_from_json(x["host"]);
        nest.push_back(ne);
      }
    return PlaneEmbedding(std::move(g), std::move(crossings), std::move(order), rotation, outer,
                          std::move(nest), k);
  } catch (const nlohmann::json::exception& ex) {
    throw EmbeddingError(Violation::Format, ex.what());
  } catch (const std::invalid_argument&) {
    throw EmbeddingError(Violation::Format, "bad rotation key");
  }
}

inline PlaneEmbedding parse_embedding(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw EmbeddingError(Violation::Format, ex.what());
  }
  return embedding_from_json(j);
}

}  // namespace onep
