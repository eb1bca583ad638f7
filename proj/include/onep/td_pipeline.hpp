#pragma once

// Treedepth reduction pipeline for geometric 1-planarity: Rules I and II on a
// treedepth decomposition, Rule III on the block-cut tree, then a final
// brute-force decision on what is left.

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "onep/canonical.hpp"
#include "onep/decider.hpp"
#include "onep/decompositions.hpp"

namespace onep {

/// Optional replacements for the default thresholds. The reject overrides
/// replace the formulas 2m+3 and m+2 by constants.
struct ThresholdOverrides {
  std::optional<long> rule1;
  std::optional<long> rule2_baseline;
  std::optional<long> rule2_reject;
  std::optional<long> rule3_reject;
};

inline ThresholdOverrides parse_threshold_overrides(const nlohmann::ordered_json& j) {
  ThresholdOverrides t;
  if (!j.is_object()) throw InvalidInput("threshold overrides must be a JSON object");
  auto get = [&](std::initializer_list<const char*> keys, std::optional<long>& out) {
    for (const char* k : keys)
      if (j.contains(k)) {
        if (!j.at(k).is_number_integer() || j.at(k).get<long>() < 0)
          throw InvalidInput(std::string("threshold ") + k + " must be a non-negative integer");
        out = j.at(k).get<long>();
      }
  };
  get({"rule1"}, t.rule1);
  get({"rule2_baseline", "rule2-baseline"}, t.rule2_baseline);
  get({"rule2_reject", "rule2-reject"}, t.rule2_reject);
  get({"rule3_reject", "rule3-reject"}, t.rule3_reject);
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const std::set<std::string> known{"rule1",          "rule2_baseline", "rule2-baseline",
                                             "rule2_reject",   "rule2-reject",   "rule3_reject",
                                             "rule3-reject"};
    if (!known.count(it.key())) throw InvalidInput("unknown threshold key " + it.key());
  }
  return t;
}

/// Decomposition file: one "vertex parent" pair per line, parent -1 for roots.
inline TreedepthDecomposition parse_decomposition(std::istream& in, int n) {
  TreedepthDecomposition t;
  t.parent.assign(n, -2);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    long v, p;
    if (!(ls >> v)) continue;
    if (!(ls >> p)) throw InvalidInput("decomposition line " + std::to_string(lineno) + ": expected 'vertex parent'");
    std::string rest;
    if (ls >> rest) throw InvalidInput("decomposition line " + std::to_string(lineno) + ": trailing text");
    if (v < 0 || v >= n || p < -1 || p >= n)
      throw InvalidInput("decomposition line " + std::to_string(lineno) + ": id out of range");
    if (t.parent[v] != -2) throw InvalidInput("vertex " + std::to_string(v) + " listed twice");
    t.parent[v] = static_cast<VertexId>(p);
  }
  for (VertexId v = 0; v < n; ++v)
    if (t.parent[v] == -2) throw InvalidInput("vertex " + std::to_string(v) + " missing from decomposition");
  return t;
}

/// A DFS forest is always a valid treedepth decomposition.
inline TreedepthDecomposition dfs_decomposition(const Graph& g) {
  TreedepthDecomposition t;
  t.parent.assign(g.n(), -1);
  std::vector<char> seen(g.n(), 0);
  for (VertexId r = 0; r < g.n(); ++r) {
    if (seen[r]) continue;
    std::vector<std::pair<VertexId, std::size_t>> stack{{r, 0}};
    seen[r] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i == g.incident(v).size()) {
        stack.pop_back();
        continue;
      }
      VertexId w = g.incident(v)[i++].neighbor;
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent[w] = v;
      stack.push_back({w, 0});
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Oracle

/// Memoized brute-force oracle for the region predicates used by the rules.
class RegionOracle {
 public:
  explicit RegionOracle(DeciderOptions opt = {}) : opt_(opt) {}

  /// (a,b)-outer or a-outer geometric 1-planarity (b < 0 for the latter).
  bool outer(const Graph& h, VertexId a, VertexId b) {
    std::vector<int> colours(h.n(), 0);
    colours[a] = 1;
    if (b >= 0) colours[b] = 2;
    std::string key = (b >= 0 ? "ab-outer:" : "a-outer:") + canonicalize(h, colours, 20000).form;
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++hits_;
      return it->second;
    }
    ++calls_;
    Predicate p = b >= 0 ? Predicate::ab_outer(a, b, true) : Predicate::a_outer(a, true);
    bool yes = decide(h, p, opt_).yes;
    memo_.emplace(key, yes);
    return yes;
  }

  bool plain(const Graph& h) {
    ++calls_;
    return decide(h, Predicate::plain(true), opt_).yes;
  }

  long calls() const { return calls_; }
  long hits() const { return hits_; }
  const DeciderOptions& options() const { return opt_; }

 private:
  DeciderOptions opt_;
  std::map<std::string, bool> memo_;
  long calls_ = 0, hits_ = 0;
};

// ---------------------------------------------------------------------------
// Context

struct Deletion {
  std::string rule;  // "II" or "III"
  std::vector<VertexId> vertices;
  std::string reason;
};

/// Mutable pipeline state. Vertices keep their ids; deleted ones are marked.
class TDContext {
 public:
  TDContext(Graph g, TreedepthDecomposition t, ThresholdOverrides over = {}, DeciderOptions opt = {})
      : g_(std::move(g)), oracle_(opt), over_(over) {
    if (t.n() != g_.n()) throw InvalidInput("decomposition covers " + std::to_string(t.n()) + " vertices, graph has " + std::to_string(g_.n()));
    if (!is_valid_treedepth_decomposition(g_, t)) throw InvalidInput("not a treedepth decomposition of the graph");
    t_ = normalize(g_, t);
    d_ = t_.depth();
    alive_.assign(g_.n(), 1);
    children_ = t_.children();
  }

  const Graph& graph() const { return g_; }
  const TreedepthDecomposition& decomposition() const { return t_; }
  int depth() const { return d_; }
  bool alive(VertexId v) const { return alive_[v] != 0; }
  RegionOracle& oracle() { return oracle_; }
  const std::vector<Deletion>& deletions() const { return deletions_; }
  nlohmann::ordered_json& log() { return log_; }
  const nlohmann::ordered_json& log() const { return log_; }

  long rule1_threshold() const { return over_.rule1.value_or(pow2(d_ + 1) + 3); }
  long rule2_baseline() const { return over_.rule2_baseline.value_or(pow2(d_) + 1); }
  long rule2_reject(long m) const { return over_.rule2_reject.value_or(2 * m + 3); }
  long rule3_reject(long m) const { return over_.rule3_reject.value_or(m + 2); }

  std::vector<VertexId> children(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId c : children_[v])
      if (alive_[c]) out.push_back(c);
    return out;
  }
  std::vector<VertexId> descendants(VertexId v) const {
    std::vector<VertexId> out, stack{v};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      if (!alive_[x]) continue;
      out.push_back(x);
      for (VertexId c : children_[x]) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  /// Vertices outside desc(c) adjacent to desc(c): the ancestors G_c attaches to.
  std::vector<VertexId> attachments(VertexId c) const {
    auto desc = descendants(c);
    std::set<VertexId> in(desc.begin(), desc.end()), out;
    for (VertexId x : desc)
      for (const auto& inc : g_.incident(x))
        if (alive_[inc.neighbor] && !in.count(inc.neighbor)) out.insert(inc.neighbor);
    return {out.begin(), out.end()};
  }
  /// Induced subgraph on `vs` (alive vertices only), minus the listed edges.
  SubgraphMap induced(const std::vector<VertexId>& vs) const {
    std::vector<bool> keep(g_.n(), false);
    for (VertexId v : vs)
      if (alive_[v]) keep[v] = true;
    return induced_subgraph(g_, keep);
  }
  SubgraphMap current() const {
    std::vector<bool> keep(g_.n());
    for (VertexId v = 0; v < g_.n(); ++v) keep[v] = alive_[v];
    return induced_subgraph(g_, keep);
  }
  /// Whether a and b lie in a common block of the current graph.
  bool share_block(VertexId a, VertexId b) const {
    auto cur = current();
    VertexId na = cur.to_new[a], nb = cur.to_new[b];
    auto comps = connected_components(cur.graph);
    if (comps.of[na] != comps.of[nb]) return false;
    std::vector<bool> keep(cur.graph.n(), false);
    for (VertexId v = 0; v < cur.graph.n(); ++v) keep[v] = comps.of[v] == comps.of[na];
    auto comp = induced_subgraph(cur.graph, keep);
    auto bct = block_cut_tree(comp.graph);
    VertexId ca = comp.to_new[na], cb = comp.to_new[nb];
    for (int bl : bct.blocks_of_vertex[ca]) {
      const auto& vs = bct.blocks[bl];
      if (std::binary_search(vs.begin(), vs.end(), cb)) return true;
    }
    return false;
  }

  void remove(const std::vector<VertexId>& vs, std::string rule, std::string reason) {
    for (VertexId v : vs) alive_[v] = 0;
    deletions_.push_back({std::move(rule), vs, std::move(reason)});
  }

  /// Rule II at (v,a,b) has run and left the children as they are.
  std::set<std::tuple<VertexId, VertexId, VertexId>> settled;

 private:
  static long pow2(int e) { return e >= 62 ? (1L << 62) : (1L << e); }

  Graph g_;
  TreedepthDecomposition t_;
  int d_ = 0;
  std::vector<char> alive_;
  std::vector<std::vector<VertexId>> children_;
  RegionOracle oracle_;
  ThresholdOverrides over_;
  std::vector<Deletion> deletions_;
  nlohmann::ordered_json log_ = nlohmann::ordered_json::array();
};

struct RuleReject {
  std::string rule;
  std::string reason;
};

// ---------------------------------------------------------------------------
// Rules

/// Children of v grouped by their attachment sets.
inline std::map<std::vector<VertexId>, std::vector<VertexId>> children_by_attachment(const TDContext& ctx, VertexId v) {
  std::map<std::vector<VertexId>, std::vector<VertexId>> out;
  for (VertexId c : ctx.children(v)) out[ctx.attachments(c)].push_back(c);
  return out;
}

/// Rule I: reject if some attachment set of size >= 3 is shared by too many children.
inline std::optional<RuleReject> apply_rule1(TDContext& ctx, VertexId v) {
  long threshold = ctx.rule1_threshold();
  for (const auto& [x, cs] : children_by_attachment(ctx, v)) {
    if (x.size() < 3 || static_cast<long>(cs.size()) < threshold) continue;
    nlohmann::ordered_json e{{"rule", "I"}, {"vertex", v}, {"attachments", x},
                             {"children", cs.size()}, {"threshold", threshold}, {"action", "reject"}};
    ctx.log().push_back(e);
    return RuleReject{"I", std::to_string(cs.size()) + " children of vertex " + std::to_string(v) +
                               " share an attachment set of size " + std::to_string(x.size()) +
                               " (threshold " + std::to_string(threshold) + ")"};
  }
  return std::nullopt;
}

/// Attached child graph for Rule II: G[desc(c) + {a,b}] without the edge ab.
/// Returns the graph and the new ids of a and b.
inline std::tuple<Graph, VertexId, VertexId> attached_child(const TDContext& ctx, VertexId c, VertexId a, VertexId b) {
  auto vs = ctx.descendants(c);
  vs.push_back(a);
  vs.push_back(b);
  auto sub = ctx.induced(vs);
  VertexId na = sub.to_new[a], nb = sub.to_new[b];
  std::vector<bool> keep(sub.graph.m(), true);
  if (auto e = sub.graph.find_edge(na, nb)) keep[*e] = false;
  return {edge_subgraph(sub.graph, keep), na, nb};
}

inline bool rule1_triggers(const TDContext& ctx, VertexId v) {
  for (const auto& [x, cs] : children_by_attachment(ctx, v))
    if (x.size() >= 3 && static_cast<long>(cs.size()) >= ctx.rule1_threshold()) return true;
  return false;
}

/// Whether Rule II would act at v for some pair not yet processed there.
inline bool rule2_pending(const TDContext& ctx, VertexId v) {
  for (const auto& [x, cs] : children_by_attachment(ctx, v))
    if (x.size() == 2 && static_cast<long>(cs.size()) > ctx.rule2_baseline() &&
        !ctx.settled.count({v, x[0], x[1]}) && ctx.share_block(x[0], x[1]))
      return true;
  return false;
}

/// Rule II at v for the pair {a,b}. Throws InvalidInput when Rule I or II
/// still applies to a proper descendant of v.
inline std::optional<RuleReject> apply_rule2(TDContext& ctx, VertexId v, VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  if (a == b) throw InvalidInput("Rule II needs two distinct vertices");
  auto anc = ctx.decomposition().ancestors(v);
  if (std::find(anc.begin(), anc.end(), a) == anc.end() || std::find(anc.begin(), anc.end(), b) == anc.end())
    throw InvalidInput("Rule II: a and b must be ancestors of v");
  for (VertexId u : ctx.descendants(v))
    if (u != v && (rule1_triggers(ctx, u) || rule2_pending(ctx, u)))
      throw InvalidInput("Rule II at vertex " + std::to_string(v) + " refused: a rule still applies at descendant " +
                         std::to_string(u));
  std::vector<VertexId> C;
  for (VertexId c : ctx.children(v))
    if (ctx.attachments(c) == std::vector<VertexId>{a, b}) C.push_back(c);
  long baseline = ctx.rule2_baseline();
  nlohmann::ordered_json e{{"rule", "II"}, {"vertex", v}, {"a", a}, {"b", b}, {"children", C.size()}, {"baseline", baseline}};
  if (static_cast<long>(C.size()) <= baseline || !ctx.share_block(a, b)) {
    e["action"] = static_cast<long>(C.size()) <= baseline ? "none" : "not in a common block";
    ctx.log().push_back(e);
    ctx.settled.insert({v, a, b});
    return std::nullopt;
  }
  // overflow: the children with the largest ids
  std::sort(C.begin(), C.end());
  std::vector<VertexId> O(C.begin() + baseline, C.end());
  std::vector<VertexId> deleted, kept;
  long m = 0;
  for (VertexId c : O) {
    auto [h, na, nb] = attached_child(ctx, c, a, b);
    bool yes;
    try {
      yes = ctx.oracle().outer(h, na, nb);
    } catch (const CapExceeded& ex) {
      e["action"] = "abandoned";
      e["note"] = ex.what();
      ctx.log().push_back(e);
      ctx.settled.insert({v, a, b});
      return std::nullopt;
    }
    if (yes) {
      deleted.push_back(c);
    } else {
      kept.push_back(c);
      m = std::max<long>(m, h.m());
    }
  }
  for (VertexId c : deleted)
    ctx.remove(ctx.descendants(c), "II",
               "child " + std::to_string(c) + " of " + std::to_string(v) + " is (" + std::to_string(a) + "," +
                   std::to_string(b) + ")-outer geometric 1-planar");
  e["deleted"] = deleted;
  e["remaining_overflow"] = kept;
  ctx.settled.insert({v, a, b});
  long reject = ctx.rule2_reject(m);
  e["reject_threshold"] = reject;
  if (!kept.empty() && static_cast<long>(kept.size()) >= reject) {
    e["action"] = "reject";
    ctx.log().push_back(e);
    return RuleReject{"II", std::to_string(kept.size()) + " non-outer overflow children at vertex " +
                                std::to_string(v) + " for pair (" + std::to_string(a) + "," + std::to_string(b) +
                                "), threshold " + std::to_string(reject)};
  }
  e["action"] = deleted.empty() ? "kept" : "deleted";
  ctx.log().push_back(e);
  return std::nullopt;
}

/// Rules I and II bottom-up over the decomposition.
inline std::optional<RuleReject> apply_rules_1_2(TDContext& ctx) {
  std::vector<VertexId> post;
  for (VertexId r : ctx.decomposition().roots()) {
    std::vector<std::pair<VertexId, bool>> stack{{r, false}};
    while (!stack.empty()) {
      auto [x, done] = stack.back();
      stack.pop_back();
      if (done) {
        post.push_back(x);
        continue;
      }
      stack.push_back({x, true});
      for (VertexId c : ctx.children(x)) stack.push_back({c, false});
    }
  }
  for (VertexId v : post) {
    if (!ctx.alive(v)) continue;
    if (auto r = apply_rule1(ctx, v)) return r;
    for (const auto& [x, cs] : children_by_attachment(ctx, v)) {
      if (x.size() != 2) continue;
      if (auto r = apply_rule2(ctx, v, x[0], x[1])) return r;
    }
  }
  return std::nullopt;
}

/// Rule III bottom-up over the block-cut tree of each component, rooted at
/// its smallest cut vertex.
inline std::optional<RuleReject> apply_rule3(TDContext& ctx) {
  auto cur = ctx.current();
  auto comps = connected_components(cur.graph);
  for (int ci = 0; ci < comps.count; ++ci) {
    std::vector<bool> keep(cur.graph.n());
    for (VertexId v = 0; v < cur.graph.n(); ++v) keep[v] = comps.of[v] == ci;
    auto comp = induced_subgraph(cur.graph, keep);
    auto bct = block_cut_tree(comp.graph);
    if (bct.cut_vertices.empty()) continue;
    auto orig = [&](VertexId x) { return cur.to_old[comp.to_old[x]]; };
    // tree nodes: blocks 0..B-1, cut vertex i as B+i
    const int B = bct.block_count();
    auto cut_index = [&](VertexId v) {
      return static_cast<int>(std::lower_bound(bct.cut_vertices.begin(), bct.cut_vertices.end(), v) -
                              bct.cut_vertices.begin());
    };
    std::vector<std::vector<int>> adj(B + bct.cut_vertices.size());
    for (int bl = 0; bl < B; ++bl)
      for (VertexId v : bct.blocks[bl])
        if (bct.is_cut(v)) {
          adj[bl].push_back(B + cut_index(v));
          adj[B + cut_index(v)].push_back(bl);
        }
    const int root = B;  // smallest cut vertex
    std::vector<int> parent(adj.size(), -2), order{root};
    parent[root] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int y : adj[order[i]])
        if (parent[y] == -2) {
          parent[y] = order[i];
          order.push_back(y);
        }
    std::vector<std::vector<int>> kids(adj.size());
    for (int x : order)
      if (parent[x] >= 0) kids[parent[x]].push_back(x);
    auto subtree_vertices = [&](int node) {
      std::set<VertexId> vs;
      std::vector<int> stack{node};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x < B)
          for (VertexId v : bct.blocks[x]) vs.insert(orig(v));
        for (int y : kids[x]) stack.push_back(y);
      }
      return std::vector<VertexId>(vs.begin(), vs.end());
    };
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int node = *it;
      if (node < B) continue;
      VertexId v = orig(bct.cut_vertices[node - B]);
      nlohmann::ordered_json e{{"rule", "III"}, {"vertex", v}};
      std::vector<VertexId> kept;
      std::vector<int> deleted_blocks;
      long m = 0;
      bool abandoned = false;
      for (int c : kids[node]) {
        auto vs = subtree_vertices(c);
        bool any_alive = false;
        for (VertexId x : vs) any_alive |= x != v && ctx.alive(x);
        if (!any_alive) continue;
        auto sub = ctx.induced(vs);
        bool yes;
        try {
          yes = ctx.oracle().outer(sub.graph, sub.to_new[v], -1);
        } catch (const CapExceeded& ex) {
          e["note"] = ex.what();
          abandoned = true;
          break;
        }
        if (yes) {
          std::vector<VertexId> del;
          for (VertexId x : vs)
            if (x != v) del.push_back(x);
          ctx.remove(del, "III", "branch at cut vertex " + std::to_string(v) + " is " + std::to_string(v) +
                                     "-outer geometric 1-planar");
          deleted_blocks.push_back(c);
        } else {
          kept.push_back(c);
          m = std::max<long>(m, sub.graph.m());
        }
      }
      e["children"] = kids[node].size();
      e["deleted"] = deleted_blocks.size();
      if (abandoned) {
        e["action"] = "abandoned";
        ctx.log().push_back(e);
        continue;
      }
      long reject = ctx.rule3_reject(m);
      e["reject_threshold"] = reject;
      if (!kept.empty() && static_cast<long>(kept.size()) >= reject) {
        e["action"] = "reject";
        ctx.log().push_back(e);
        return RuleReject{"III", std::to_string(kept.size()) + " non-outer branches at cut vertex " +
                                     std::to_string(v) + ", threshold " + std::to_string(reject)};
      }
      e["action"] = deleted_blocks.empty() ? "kept" : "deleted";
      ctx.log().push_back(e);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Pipeline

struct PipelineOutcome {
  enum class Result { Reject, Reduced, Decided };
  Result result = Result::Reduced;
  bool yes = false;  // for Decided
  std::string reject_rule;
  std::string reason;
  Graph reduced;
  std::vector<VertexId> reduced_to_old;
  std::vector<Deletion> deletions;
  long oracle_calls = 0;
  long oracle_hits = 0;
  int depth = 0;
  nlohmann::ordered_json log = nlohmann::ordered_json::array();

  /// Verdict on the input: Reject counts as no.
  std::optional<bool> answer() const {
    if (result == Result::Reject) return false;
    if (result == Result::Decided) return yes;
    return std::nullopt;
  }
};

inline const char* to_string(PipelineOutcome::Result r) {
  switch (r) {
    case PipelineOutcome::Result::Reject: return "reject";
    case PipelineOutcome::Result::Reduced: return "reduced";
    case PipelineOutcome::Result::Decided: return "decided";
  }
  return "?";
}

struct PipelineOptions {
  ThresholdOverrides thresholds;
  DeciderOptions oracle;
  int treedepth_cap = 20;  // exact decomposition up to this many vertices
};

/// Runs Rules I-III and the final decision. Without a decomposition one of
/// minimum depth is computed (or a DFS forest above the cap).
inline PipelineOutcome run_pipeline(const Graph& g, std::optional<TreedepthDecomposition> t = std::nullopt,
                                    const PipelineOptions& opt = {}) {
  PipelineOutcome out;
  if (!t) {
    if (g.n() <= opt.treedepth_cap) {
      t = treedepth_decomposition(g, g.n(), opt.treedepth_cap);
    } else {
      t = dfs_decomposition(g);
      out.log.push_back({{"note", "graph too large for exact treedepth; using a DFS forest"}});
    }
  }
  TDContext ctx(g, *t, opt.thresholds, opt.oracle);
  out.depth = ctx.depth();
  auto finish = [&]() {
    out.deletions = ctx.deletions();
    out.oracle_calls = ctx.oracle().calls();
    out.oracle_hits = ctx.oracle().hits();
    for (const auto& e : ctx.log()) out.log.push_back(e);
    auto cur = ctx.current();
    out.reduced = cur.graph;
    out.reduced_to_old = cur.to_old;
  };
  std::optional<RuleReject> rej = apply_rules_1_2(ctx);
  if (!rej) rej = apply_rule3(ctx);
  if (rej) {
    out.result = PipelineOutcome::Result::Reject;
    out.reject_rule = rej->rule;
    out.reason = rej->reason;
    finish();
    return out;
  }
  finish();
  try {
    out.yes = ctx.oracle().plain(out.reduced);
    out.oracle_calls = ctx.oracle().calls();
    out.result = PipelineOutcome::Result::Decided;
    out.reason = "decided on the reduced instance";
  } catch (const CapExceeded& ex) {
    out.result = PipelineOutcome::Result::Reduced;
    out.reason = ex.what();
  }
  return out;
}

inline nlohmann::ordered_json to_json(const PipelineOutcome& o) {
  nlohmann::ordered_json j;
  j["result"] = to_string(o.result);
  if (o.result == PipelineOutcome::Result::Decided) j["answer"] = o.yes ? "yes" : "no";
  if (!o.reject_rule.empty()) j["rule"] = o.reject_rule;
  j["reason"] = o.reason;
  j["depth"] = o.depth;
  j["reduced"] = {{"n", o.reduced.n()}, {"m", o.reduced.m()}, {"vertices", o.reduced_to_old}};
  auto dels = nlohmann::ordered_json::array();
  for (const auto& d : o.deletions) dels.push_back({{"rule", d.rule}, {"vertices", d.vertices}, {"reason", d.reason}});
  j["deletions"] = dels;
  j["oracle_calls"] = o.oracle_calls;
  j["oracle_cache_hits"] = o.oracle_hits;
  j["log"] = o.log;
  return j;
}

}  // namespace onep
