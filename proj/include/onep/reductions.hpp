#pragma once

// Hardness constructions: the bin packing reduction with its feedback vertex
// and path decomposition witnesses, edge-gadget replacement and the column
// ordering that bounds the bandwidth after replacement.

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "onep/error.hpp"
#include "onep/decompositions.hpp"
#include "onep/graph.hpp"

namespace onep {

struct BinPackInstance {
  std::vector<long long> sizes;
  long long capacity = 0;  // B
  int bins = 0;            // K

  long long total() const { return std::accumulate(sizes.begin(), sizes.end(), 0LL); }
  bool normalized() const {
    if (bins < 2 || capacity < 1) return false;
    if (total() != bins * capacity) return false;
    return std::all_of(sizes.begin(), sizes.end(), [&](long long s) { return s >= bins + 1; });
  }
};

struct Normalization {
  enum class Status { Instance, Feasible, Infeasible };
  Status status = Status::Instance;
  BinPackInstance instance;
  int dummies = 0;
  long long factor = 1;
};

inline Normalization normalize_binpack(const BinPackInstance& in) {
  if (in.bins < 1 || in.capacity < 1) throw InvalidInput("bin packing needs K >= 1 and B >= 1");
  for (long long s : in.sizes)
    if (s < 1) throw InvalidInput("item sizes must be positive");
  Normalization out;
  long long sum = in.total();
  if (in.bins == 1) {
    out.status = sum <= in.capacity ? Normalization::Status::Feasible : Normalization::Status::Infeasible;
    return out;
  }
  long long cap = static_cast<long long>(in.bins) * in.capacity;
  if (sum > cap) {
    out.status = Normalization::Status::Infeasible;
    return out;
  }
  BinPackInstance r = in;
  out.dummies = static_cast<int>(cap - sum);
  r.sizes.insert(r.sizes.end(), out.dummies, 1);
  long long mn = r.sizes.empty() ? r.bins + 1 : *std::min_element(r.sizes.begin(), r.sizes.end());
  if (mn < r.bins + 1) {
    out.factor = r.bins + 1;
    for (long long& s : r.sizes) s *= out.factor;
    r.capacity *= out.factor;
  }
  out.instance = std::move(r);
  return out;
}

inline BinPackInstance parse_items(const std::string& csv, int bins, long long capacity) {
  BinPackInstance inst;
  inst.bins = bins;
  inst.capacity = capacity;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < tok.size() && (tok[used] == ' ' || tok[used] == '\t')) ++used;
    if (used != tok.size() || v < 1) throw InvalidInput("bad item size '" + tok + "'");
    inst.sizes.push_back(v);
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Frame: the hexagonal prism. Outer hexagon 0..5, inner hexagon 6..11, spokes
// i -- i+6. The six distinguished vertices sit on the outer hexagon in the
// cyclic order s, r1l, r1r, t, r2r, r2l, so the left red path cuts s off and
// the right red path cuts t off.
//
//          s=0
//     r2l=5     r1l=1
//     r2r=4     r1r=2
//          t=3

struct Frame {
  static constexpr int kVertices = 12;
  static constexpr VertexId s = 0, r1l = 1, r1r = 2, t = 3, r2r = 4, r2l = 5;

  static std::vector<std::pair<VertexId, VertexId>> edges() {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 0; i < 6; ++i) es.emplace_back(i, (i + 1) % 6);
    for (int i = 0; i < 6; ++i) es.emplace_back(6 + i, 6 + (i + 1) % 6);
    for (int i = 0; i < 6; ++i) es.emplace_back(i, i + 6);
    return es;
  }
  static Graph graph() {
    Graph g(kVertices);
    for (auto [a, b] : edges()) g.add_edge(a, b);
    return g;
  }
  static std::string role(VertexId v) {
    static const std::array<const char*, 6> names{"s", "r1l", "r1r", "t", "r2r", "r2l"};
    return v < 6 ? names[v] : "";
  }
};

/// True iff g has at least four vertices and no separating set of size <= 2.
inline bool is_triconnected(const Graph& g) {
  if (g.n() < 4 || !is_connected(g)) return false;
  for (VertexId a = 0; a < g.n(); ++a)
    for (VertexId b = a; b < g.n(); ++b) {
      std::vector<bool> keep(g.n(), true);
      keep[a] = keep[b] = false;
      if (!is_connected(induced_subgraph(g, keep).graph)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

struct LabeledInstance {
  Graph graph;
  BinPackInstance source;
  std::vector<VertexId> frame;  // ids 0..11
  VertexId s = 0, t = 0, r1l = 0, r2l = 0, r1r = 0, r2r = 0;
  // per frame edge: the 6 gadget vertices, terminals first
  std::vector<std::array<VertexId, 6>> k6;
  std::vector<VertexId> left_path, right_path;  // full vertex sequences
  std::vector<EdgeId> purple;
  struct Diamond {
    VertexId tip;                   // d_u
    std::vector<VertexId> side;     // the s(u) vertices
    EdgeId link;                    // s d_u
  };
  std::vector<Diamond> diamonds;

  int left_length() const { return static_cast<int>(left_path.size()) - 1; }
  int right_length() const { return static_cast<int>(right_path.size()) - 1; }
};

/// Closed-form vertex and edge counts of the generated instance.
inline std::pair<long long, long long> binpack_instance_size(const BinPackInstance& in) {
  long long u = static_cast<long long>(in.sizes.size()), sum = in.total(), k = in.bins, b = in.capacity;
  long long fe = static_cast<long long>(Frame::edges().size());
  long long n = Frame::kVertices + 4 * fe + (u + k - 2) + (k * b - 1) + u + sum;
  long long m = 15 * fe + (u + k - 1) + k * b + (k - 1) + u + 2 * sum;
  return {n, m};
}

inline LabeledInstance gen_binpack_instance(const BinPackInstance& in, bool raw = false) {
  if (in.bins < 2 || in.capacity < 1) throw InvalidInput("instance needs K >= 2 and B >= 1");
  for (long long s : in.sizes)
    if (s < 1) throw InvalidInput("item sizes must be positive");
  if (!raw && !in.normalized()) throw InvalidInput("instance is not normalized (use raw mode or normalize first)");
  auto [nv, mv] = binpack_instance_size(in);
  if (nv > 5'000'000 || mv > 5'000'000) throw InvalidInput("instance too large");

  LabeledInstance li;
  li.source = in;
  Graph& g = li.graph;
  for (VertexId v = 0; v < Frame::kVertices; ++v) {
    std::string r = Frame::role(v);
    li.frame.push_back(g.add_vertex(r.empty() ? "frame" : "frame:" + r));
  }
  li.s = Frame::s;
  li.t = Frame::t;
  li.r1l = Frame::r1l;
  li.r2l = Frame::r2l;
  li.r1r = Frame::r1r;
  li.r2r = Frame::r2r;

  int gi = 0;
  for (auto [a, b] : Frame::edges()) {
    std::string lab = "k6-gadget(" + std::to_string(gi++) + ")";
    std::array<VertexId, 6> vs{a, b, 0, 0, 0, 0};
    for (int i = 2; i < 6; ++i) vs[i] = g.add_vertex(lab);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) g.add_edge(vs[i], vs[j], lab);
    li.k6.push_back(vs);
  }

  auto path = [&](VertexId from, VertexId to, long long length, const std::string& lab) {
    std::vector<VertexId> seq{from};
    for (long long i = 1; i < length; ++i) seq.push_back(g.add_vertex(lab));
    seq.push_back(to);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) g.add_edge(seq[i], seq[i + 1], lab);
    return seq;
  };
  const long long u = static_cast<long long>(in.sizes.size());
  li.left_path = path(li.r1l, li.r2l, u + in.bins - 1, "red-left");
  li.right_path = path(li.r1r, li.r2r, static_cast<long long>(in.bins) * in.capacity, "red-right");
  for (int i = 1; i < in.bins; ++i)
    li.purple.push_back(g.add_edge(li.s, li.right_path[static_cast<std::size_t>(i * in.capacity)], "purple"));

  for (std::size_t i = 0; i < in.sizes.size(); ++i) {
    std::string lab = "diamond(" + std::to_string(i) + ")";
    LabeledInstance::Diamond d;
    d.tip = g.add_vertex("diamond-vertex(" + std::to_string(i) + ")");
    for (long long j = 0; j < in.sizes[i]; ++j) {
      VertexId x = g.add_vertex(lab);
      g.add_edge(d.tip, x, lab);
      g.add_edge(x, li.t, lab);
      d.side.push_back(x);
    }
    d.link = g.add_edge(li.s, d.tip, "item-link(" + std::to_string(i) + ")");
    li.diamonds.push_back(std::move(d));
  }
  return li;
}

// ---------------------------------------------------------------------------
// Witnesses.

inline std::vector<VertexId> fvs_witness(const LabeledInstance& li) {
  std::vector<VertexId> out = li.frame;
  for (const auto& k : li.k6) {
    out.push_back(k[2]);
    out.push_back(k[3]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_feedback_vertex_set(const Graph& g, const std::vector<VertexId>& set) {
  std::vector<bool> keep(g.n(), true);
  for (VertexId v : set) keep.at(v) = false;
  return is_acyclic(induced_subgraph(g, keep).graph);
}

struct ResidualShape {
  int k4 = 0, paths = 0, stars = 0;  // a single edge counts as a path
};

using PathDecomposition = std::vector<std::vector<VertexId>>;

namespace detail {

enum class Shape { K4, Path, Star };

// Classifies a connected component (vertex list of h) and returns the
// vertices in decomposition order: K4 as is, a path end to end, a star with
// the centre first.
inline std::pair<Shape, std::vector<VertexId>> classify_component(const Graph& h, const std::vector<VertexId>& vs) {
  long long edges = 0;
  int max_deg = 0;
  VertexId centre = vs.front();
  for (VertexId v : vs) {
    edges += h.degree(v);
    if (h.degree(v) > max_deg) {
      max_deg = h.degree(v);
      centre = v;
    }
  }
  edges /= 2;
  const long long k = static_cast<long long>(vs.size());
  if (k == 4 && edges == 6) return {Shape::K4, vs};
  if (edges != k - 1) throw Error("residual component is neither a tree nor K4");
  if (max_deg <= 2) {
    VertexId start = vs.front();
    for (VertexId v : vs)
      if (h.degree(v) <= 1) {
        start = v;
        break;
      }
    std::vector<VertexId> order{start};
    VertexId prev = -1, cur = start;
    while (static_cast<long long>(order.size()) < k) {
      for (const auto& inc : h.incident(cur))
        if (inc.neighbor != prev) {
          prev = cur;
          cur = inc.neighbor;
          break;
        }
      order.push_back(cur);
    }
    return {Shape::Path, order};
  }
  if (max_deg == k - 1) {
    std::vector<VertexId> order{centre};
    for (VertexId v : vs)
      if (v != centre) order.push_back(v);
    return {Shape::Star, order};
  }
  throw Error("residual tree is neither a path nor a star");
}

struct Residual {
  SubgraphMap sub;
  std::vector<std::vector<VertexId>> components;  // ids in sub.graph
};

inline Residual residual(const LabeledInstance& li) {
  std::vector<bool> keep(li.graph.n(), true);
  for (VertexId v : li.frame) keep[v] = false;
  Residual r{induced_subgraph(li.graph, keep), {}};
  auto comps = connected_components(r.sub.graph);
  r.components.resize(comps.count);
  for (VertexId v = 0; v < r.sub.graph.n(); ++v) r.components[comps.of[v]].push_back(v);
  return r;
}

}  // namespace detail

inline ResidualShape residual_shape(const LabeledInstance& li) {
  auto r = detail::residual(li);
  ResidualShape out;
  for (const auto& c : r.components) {
    auto shape = detail::classify_component(r.sub.graph, c).first;
    if (shape == detail::Shape::K4) ++out.k4;
    else if (shape == detail::Shape::Path) ++out.paths;
    else ++out.stars;
  }
  return out;
}

inline PathDecomposition pathwidth_witness(const LabeledInstance& li) {
  auto r = detail::residual(li);
  PathDecomposition bags;
  const auto& old = r.sub.to_old;
  for (const auto& c : r.components) {
    auto [shape, order] = detail::classify_component(r.sub.graph, c);
    if (shape == detail::Shape::K4 || order.size() == 1) {
      std::vector<VertexId> bag;
      for (VertexId v : order) bag.push_back(old[v]);
      bags.push_back(bag);
    } else if (shape == detail::Shape::Path) {
      for (std::size_t i = 0; i + 1 < order.size(); ++i) bags.push_back({old[order[i]], old[order[i + 1]]});
    } else {
      for (std::size_t i = 1; i < order.size(); ++i) bags.push_back({old[order[0]], old[order[i]]});
    }
  }
  if (bags.empty()) bags.emplace_back();
  for (auto& bag : bags) {
    bag.insert(bag.end(), li.frame.begin(), li.frame.end());
    std::sort(bag.begin(), bag.end());
  }
  return bags;
}

inline int width(const PathDecomposition& pd) {
  std::size_t w = 0;
  for (const auto& b : pd) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

/// Empty string when pd is a path decomposition of g, otherwise the reason.
inline std::string check_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  std::vector<int> first(g.n(), -1), last(g.n(), -1), count(g.n(), 0);
  for (int i = 0; i < static_cast<int>(pd.size()); ++i)
    for (VertexId v : pd[i]) {
      if (!g.has_vertex(v)) return "bag " + std::to_string(i) + " has unknown vertex " + std::to_string(v);
      if (first[v] < 0) first[v] = i;
      last[v] = i;
      ++count[v];
    }
  for (VertexId v = 0; v < g.n(); ++v) {
    if (first[v] < 0) return "vertex " + std::to_string(v) + " is in no bag";
    if (count[v] != last[v] - first[v] + 1) return "bags of vertex " + std::to_string(v) + " are not contiguous";
  }
  std::vector<std::vector<VertexId>> sorted = pd;
  for (auto& b : sorted) std::sort(b.begin(), b.end());
  for (const Edge& e : g.edges()) {
    // contiguity makes an overlapping interval sufficient to search
    int lo = std::max(first[e.u], first[e.v]), hi = std::min(last[e.u], last[e.v]);
    bool ok = false;
    for (int i = lo; i <= hi && !ok; ++i)
      ok = std::binary_search(sorted[i].begin(), sorted[i].end(), e.u) &&
           std::binary_search(sorted[i].begin(), sorted[i].end(), e.v);
    if (!ok) return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is in no bag";
  }
  return {};
}

inline nlohmann::ordered_json to_json(const LabeledInstance& li) {
  using J = nlohmann::ordered_json;
  const Graph& g = li.graph;
  J out;
  out["items"] = li.source.sizes;
  out["bins"] = li.source.bins;
  out["capacity"] = li.source.capacity;
  out["n"] = g.n();
  out["m"] = g.m();
  J vl = J::array();
  for (VertexId v = 0; v < g.n(); ++v) vl.push_back(g.vertex_label(v));
  out["vertex_labels"] = vl;
  J el = J::array();
  for (EdgeId e = 0; e < g.m(); ++e) el.push_back(J::array({g.edge(e).u, g.edge(e).v, g.edge_label(e)}));
  out["edges"] = el;
  out["left_path_length"] = li.left_length();
  out["right_path_length"] = li.right_length();
  out["purple_edges"] = li.purple.size();
  J ds = J::array();
  for (const auto& d : li.diamonds) ds.push_back(d.side.size());
  out["diamond_sizes"] = ds;
  return out;
}

// ---------------------------------------------------------------------------
// Two-terminal gadgets and bandwidth.

struct TwoTerminalGadget {
  Graph h;
  VertexId alpha = 0, beta = 1;
  int t() const { return h.n(); }
  void validate() const {
    if (!h.has_vertex(alpha) || !h.has_vertex(beta) || alpha == beta)
      throw InvalidInput("gadget terminals must be two distinct vertices of H");
  }
};

/// JSON: {"vertices": t, "edges": [[x,y],...], "alpha": a, "beta": b}.
inline TwoTerminalGadget gadget_from_json(const nlohmann::ordered_json& j) {
  try {
    TwoTerminalGadget g;
    g.h = Graph(j.at("vertices").get<int>());
    for (const auto& e : j.at("edges")) g.h.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    g.alpha = j.at("alpha").get<int>();
    g.beta = j.at("beta").get<int>();
    g.validate();
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed gadget: ") + e.what());
  } catch (const Error& e) {
    throw InvalidInput(std::string("malformed gadget: ") + e.what());
  }
}

inline nlohmann::ordered_json to_json(const TwoTerminalGadget& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.h.n();
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.h.edges()) j["edges"].push_back({e.u, e.v});
  j["alpha"] = g.alpha;
  j["beta"] = g.beta;
  return j;
}

struct GadgetReplacement {
  Graph graph;
  // copy[e][x]: the vertex playing H-vertex x in the copy replacing edge e
  std::vector<std::vector<VertexId>> copy;
};

inline GadgetReplacement replace_edges_with_gadget(const Graph& g, const TwoTerminalGadget& gad) {
  gad.validate();
  GadgetReplacement out;
  Graph& r = out.graph;
  for (VertexId v = 0; v < g.n(); ++v) r.add_vertex(g.vertex_label(v));
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    std::string lab = "gadget(" + std::to_string(e) + ")";
    std::vector<VertexId> map(gad.h.n(), -1);
    map[gad.alpha] = std::min(ed.u, ed.v);
    map[gad.beta] = std::max(ed.u, ed.v);
    for (VertexId x = 0; x < gad.h.n(); ++x)
      if (map[x] < 0) map[x] = r.add_vertex(lab);
    for (const Edge& he : gad.h.edges()) r.add_edge(map[he.u], map[he.v], lab);
    out.copy.push_back(std::move(map));
  }
  return out;
}

inline void check_ordering(const Graph& g, const LinearOrdering& o) {
  if (static_cast<int>(o.position.size()) != g.n() || !o.is_bijection())
    throw InvalidInput("ordering must list every vertex exactly once");
}

inline int ordering_bandwidth(const Graph& g, const LinearOrdering& o) {
  check_ordering(g, o);
  return o.bandwidth(g);
}

/// Whitespace-separated vertex ids, left to right.
inline std::vector<VertexId> parse_ordering(std::istream& in) {
  std::vector<VertexId> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0) throw InvalidInput("bad vertex id '" + tok + "' in ordering");
      out.push_back(static_cast<VertexId>(v));
    }
  }
  return out;
}

inline long long bandwidth_bound(long long b, long long t) { return (b + 1) * (1 + (t - 2) * b); }

struct BandwidthLift {
  GadgetReplacement replaced;
  LinearOrdering order;
  std::vector<VertexId> column;  // column[v] = original vertex owning v
  int b = 0;                     // bandwidth of the input ordering
  long long column_bound = 0;    // 1 + (t-2) b
  long long bound = 0;
  int measured = 0;
  int intra_column_max = 0;
};

/// Columns: each original vertex x followed by the internal vertices of the
/// gadgets on edges xy with sigma(x) < sigma(y).
inline BandwidthLift bandwidth_lift(const Graph& g, const LinearOrdering& sigma, const TwoTerminalGadget& gad) {
  check_ordering(g, sigma);
  const auto& pos = sigma.position;
  BandwidthLift out;
  out.replaced = replace_edges_with_gadget(g, gad);
  out.b = ordering_bandwidth(g, sigma);
  out.column_bound = 1 + static_cast<long long>(gad.t() - 2) * out.b;
  out.bound = bandwidth_bound(out.b, gad.t());
  const Graph& r = out.replaced.graph;
  out.column.assign(r.n(), -1);
  std::vector<std::vector<VertexId>> members(g.n());
  for (VertexId x = 0; x < g.n(); ++x) {
    members[x].push_back(x);
    out.column[x] = x;
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    VertexId low = pos[ed.u] < pos[ed.v] ? ed.u : ed.v;
    for (VertexId x = 0; x < gad.h.n(); ++x) {
      if (x == gad.alpha || x == gad.beta) continue;
      VertexId v = out.replaced.copy[e][x];
      members[low].push_back(v);
      out.column[v] = low;
    }
  }
  std::vector<VertexId> seq;
  for (VertexId x : sigma.sequence()) seq.insert(seq.end(), members[x].begin(), members[x].end());
  out.order = LinearOrdering::from_sequence(seq);
  for (const Edge& e : r.edges()) {
    int span = out.order.span(e);
    out.measured = std::max(out.measured, span);
    if (out.column[e.u] == out.column[e.v]) out.intra_column_max = std::max(out.intra_column_max, span);
  }
  return out;
}

}  // namespace onep
