#pragma once

// Colour refinement with individualization: canonical forms and the full
// automorphism group of small vertex-coloured graphs.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "onep/graph.hpp"

namespace onep {

/// Permutation of vertices: image[v] is where v goes.
using Permutation = std::vector<VertexId>;

struct CanonicalResult {
  std::string form;                       // isomorphism-invariant key
  std::vector<Permutation> automorphisms; // complete group unless truncated
  bool complete = true;                   // false if the leaf limit was hit
};

namespace detail {

/// Refines `col` to the coarsest equitable colouring. New colours are
/// assigned by sorting signatures, so the result is labelling-invariant.
inline void refine_colours(const Graph& g, std::vector<int>& col) {
  int classes = static_cast<int>(std::set<int>(col.begin(), col.end()).size());
  while (true) {
    std::vector<std::vector<int>> sig(g.n());
    for (VertexId v = 0; v < g.n(); ++v) {
      sig[v].push_back(col[v]);
      std::vector<int> nb;
      for (const auto& inc : g.incident(v)) nb.push_back(col[inc.neighbor]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (VertexId v = 0; v < g.n(); ++v)
      col[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    int now = static_cast<int>(uniq.size());
    if (now == classes) return;
    classes = now;
  }
}

inline std::string leaf_key(const Graph& g, const std::vector<int>& initial,
                            const std::vector<int>& pos) {
  std::vector<int> vc(g.n());
  for (VertexId v = 0; v < g.n(); ++v) vc[pos[v]] = initial[v];
  std::vector<std::pair<int, int>> es;
  for (const Edge& e : g.edges())
    es.emplace_back(std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v]));
  std::sort(es.begin(), es.end());
  std::string key = std::to_string(g.n()) + ":";
  for (int c : vc) key += std::to_string(c) + ",";
  key += "|";
  for (auto [a, b] : es) key += std::to_string(a) + "-" + std::to_string(b) + ",";
  return key;
}

}  // namespace detail

/// Explores the individualization-refinement tree. `initial` colours must be
/// small non-negative integers (anchors get their own colours).
inline CanonicalResult canonicalize(const Graph& g, std::vector<int> initial = {},
                                    long leaf_limit = 200000) {
  if (initial.empty()) initial.assign(g.n(), 0);
  CanonicalResult out;
  std::optional<std::string> first_key, best_key;
  std::vector<int> first_pos;
  long leaves = 0;

  std::function<void(std::vector<int>)> search = [&](std::vector<int> col) {
    if (!out.complete) return;
    detail::refine_colours(g, col);
    std::map<int, std::vector<VertexId>> cells;
    for (VertexId v = 0; v < g.n(); ++v) cells[col[v]].push_back(v);
    const std::vector<VertexId>* target = nullptr;
    for (const auto& [c, members] : cells)
      if (members.size() > 1) {
        target = &members;
        break;
      }
    if (!target) {
      if (++leaves > leaf_limit) {
        out.complete = false;
        return;
      }
      std::string key = detail::leaf_key(g, initial, col);
      if (!first_key) {
        first_key = key;
        first_pos = col;
      }
      if (!best_key || key < *best_key) best_key = key;
      if (key == *first_key) {
        // first_pos^{-1} composed with col maps leaf 0 onto this leaf.
        std::vector<VertexId> at(g.n());
        for (VertexId v = 0; v < g.n(); ++v) at[col[v]] = v;
        Permutation p(g.n());
        for (VertexId v = 0; v < g.n(); ++v) p[v] = at[first_pos[v]];
        out.automorphisms.push_back(std::move(p));
      }
      return;
    }
    std::vector<VertexId> members = *target;
    for (VertexId v : members) {
      std::vector<int> next(g.n());
      for (VertexId x = 0; x < g.n(); ++x) next[x] = 2 * col[x] + (x == v ? 0 : 1);
      search(next);
      if (!out.complete) return;
    }
  };
  search(initial);
  if (out.complete) {
    out.form = *best_key;
  } else {
    // Fall back to the labelled graph itself: still a correct (if weaker) key.
    std::vector<int> identity(g.n());
    for (VertexId v = 0; v < g.n(); ++v) identity[v] = v;
    out.form = "L" + detail::leaf_key(g, initial, identity);
    Permutation id(g.n());
    for (VertexId v = 0; v < g.n(); ++v) id[v] = v;
    out.automorphisms = {id};
  }
  if (g.n() == 0) out.form = "0:|";
  return out;
}

/// Edge permutation induced by a vertex automorphism.
inline std::vector<EdgeId> edge_image(const Graph& g, const Permutation& p) {
  std::vector<EdgeId> img(g.m());
  for (EdgeId e = 0; e < g.m(); ++e)
    img[e] = *g.find_edge(p[g.edge(e).u], p[g.edge(e).v]);
  return img;
}

}  // namespace onep
