// Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "onep/decider.hpp"
#include "onep/geometry.hpp"
#include "onep/kernel.hpp"
#include "onep/reductions.hpp"
#include "onep/surgery.hpp"
#include "onep/td_pipeline.hpp"
#include "onep/thomassen.hpp"

using namespace onep;

namespace {

// Pinned sample sizes and time limits (seconds).
constexpr int kKernelGraphs = 500;
constexpr int kKernelMaxEll = 2;
constexpr int kKernelMaxEdges = 11;
constexpr int kDensityGraphs = 300;
constexpr int kSurgerySystems = 200;
constexpr int kSurgeryGeometricMin = 100;
constexpr int kPipelineGraphs = 300;
constexpr int kPipelineMaxEdges = 9;
constexpr int kLiftPairs = 200;
constexpr int kConvexSystems = 50;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string str(const BigInt& x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

// ---------------------------------------------------------------------------
// 1

Outcome worst_case_sizes() {
  // independent evaluation of (2^p - 1)(p - 2), p = 3l - 3
  std::string detail;
  bool ok = true;
  for (int ell = 2; ell <= 5; ++ell) {
    int p = 3 * ell - 3;
    BigInt closed = ((BigInt(1) << p) - 1) * (p - 2);
    BigInt got = worst_case_size(ell, KernelVariant::OnePlanar);
    ok &= got == closed;
    detail += "l=" + std::to_string(ell) + ":" + str(got) + " ";
  }
  return {ok, detail + "(closed form; the listed 7161 for l=4 disagrees with the formula, which gives 3577)"};
}

// ---------------------------------------------------------------------------
// 2

// Random tree with `extra` added edges, then every edge subdivided to a
// random length.
Graph random_sparse(std::mt19937& rng, int n, int extra, int max_len) {
  Graph skel(n);
  for (VertexId v = 1; v < n; ++v) skel.add_edge(v, static_cast<VertexId>(rng() % v));
  for (int tries = 0; tries < 20 && extra > 0; ++tries) {
    VertexId a = rng() % n, b = rng() % n;
    if (a != b && !skel.adjacent(a, b)) {
      skel.add_edge(a, b);
      --extra;
    }
  }
  Graph g(n);
  for (const Edge& e : skel.edges()) {
    int len = 1 + static_cast<int>(rng() % max_len);
    VertexId prev = e.u;
    for (int i = 1; i < len; ++i) {
      VertexId x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, e.v);
  }
  return g;
}

Outcome kernel_equivalence() {
  std::mt19937 rng(2024);
  DeciderOptions big;
  big.max_edges = 200;
  int checked = 0, mismatches = 0, attempts = 0;
  while (checked < kKernelGraphs && attempts < 50 * kKernelGraphs) {
    ++attempts;
    Graph g = random_sparse(rng, 2 + static_cast<int>(rng() % 6), static_cast<int>(rng() % (kKernelMaxEll + 1)),
                            1 + static_cast<int>(rng() % 9));
    if (feedback_edge_set(g).ell > kKernelMaxEll) continue;
    bool in_range = true;
    for (auto v : {KernelVariant::OnePlanar, KernelVariant::GeoOnePlanar})
      in_range &= kernelize(g, v).kernel.m() <= kKernelMaxEdges;
    if (!in_range) continue;
    for (auto v : {KernelVariant::OnePlanar, KernelVariant::GeoOnePlanar}) {
      bool geo = v == KernelVariant::GeoOnePlanar;
      Graph k = kernelize(g, v).kernel;
      if (decide(g, Predicate::plain(geo), big).yes != decide(k, Predicate::plain(geo)).yes) ++mismatches;
    }
    ++checked;
  }
  return {checked >= kKernelGraphs && mismatches == 0,
          std::to_string(checked) + " graphs, both variants, " + std::to_string(mismatches) + " mismatches"};
}

// ---------------------------------------------------------------------------
// 3 and 4: a = 0, b = 1 with (a,b)-crossing pairs a-x_i over b-y_i.

struct PairShape {
  Graph g;
  CrossingSet crossings;
};

PairShape pair_shape(int pairs, bool with_ab) {
  PairShape s{Graph(2 + 2 * pairs), {}};
  if (with_ab) s.g.add_edge(0, 1);
  for (int i = 0; i < pairs; ++i) {
    EdgeId ea = s.g.add_edge(0, 2 + 2 * i);
    EdgeId eb = s.g.add_edge(1, 3 + 2 * i);
    s.crossings.emplace_back(ea, eb);
  }
  return s;
}

Outcome thomassen_figure() {
  PairShape s = pair_shape(2, true);
  int lmr_seen = 0, rml_seen = 0, lmr_configs = -1, rml_b = -1, rml_w = -1;
  bool consistent = true;
  for_each_embedding(s.g, s.crossings, false, [&](const PlaneEmbedding& e) {
    if (!e.on_outer_region(0)) return true;
    std::string w = lmr_word(e, 0, 1).word;
    auto bw = find_bw_configurations(e);
    if (w == "LMR") {
      if (lmr_seen++ && lmr_configs != static_cast<int>(bw.size())) consistent = false;
      lmr_configs = static_cast<int>(bw.size());
    } else if (w == "RML") {
      int b = 0, x = 0;
      for (const auto& c : bw) (c.kind == BWConfiguration::Kind::B ? b : x)++;
      if (rml_seen++ && (b != rml_b || x != rml_w)) consistent = false;
      rml_b = b;
      rml_w = x;
    }
    return true;
  });
  bool ok = lmr_seen > 0 && rml_seen > 0 && consistent && lmr_configs == 0 && rml_b == 2 && rml_w == 1;
  return {ok, "LMR: " + std::to_string(lmr_configs) + " configurations; RML: " + std::to_string(rml_b) + " B, " +
                  std::to_string(rml_w) + " W (" + std::to_string(lmr_seen) + "/" + std::to_string(rml_seen) +
                  " embeddings)"};
}

// Independent regular-language check for L*[M]R*.
bool lmr_regex(const std::string& w) {
  std::size_t i = 0;
  while (i < w.size() && w[i] == 'L') ++i;
  if (i < w.size() && w[i] == 'M') ++i;
  while (i < w.size() && w[i] == 'R') ++i;
  return i == w.size();
}

Outcome lmr_equivalence() {
  long checked = 0, counter = 0;
  for (int pairs = 1; pairs <= 3; ++pairs)
    for (bool with_ab : {false, true}) {
      PairShape s = pair_shape(pairs, with_ab);
      for_each_embedding(s.g, s.crossings, false, [&](const PlaneEmbedding& e) {
        if (!e.on_outer_region(0)) return true;
        std::string w = lmr_word(e, 0, 1).word;
        if (find_bw_configurations(e).empty() != lmr_regex(w)) ++counter;
        ++checked;
        return true;
      });
    }
  return {checked > 0 && counter == 0,
          std::to_string(checked) + " embeddings, " + std::to_string(counter) + " counterexamples"};
}

// ---------------------------------------------------------------------------
// 5

Outcome density() {
  std::mt19937 rng(5);
  int plain_checked = 0, geo_checked = 0, wrong = 0;
  for (int it = 0; it < kDensityGraphs; ++it) {
    int n = 7 + static_cast<int>(rng() % 4);
    int max_m = n * (n - 1) / 2;
    bool geo = it % 2 == 1;
    int bound = geo ? 4 * n - 9 : 4 * n - 8;
    int m = bound + 1 + static_cast<int>(rng() % (max_m - bound));
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    std::shuffle(all.begin(), all.end(), rng);
    Graph g(n);
    for (int i = 0; i < m; ++i) g.add_edge(all[i].first, all[i].second);
    if (decide(g, Predicate::plain(geo)).yes) ++wrong;
    (geo ? geo_checked : plain_checked)++;
  }
  bool k5 = decide(complete_graph(5), Predicate::plain(true)).yes;
  bool k7 = decide(complete_graph(7), Predicate::plain(false)).yes;
  return {wrong == 0 && k5 && !k7 && plain_checked > 0 && geo_checked > 0,
          std::to_string(plain_checked) + " dense (k=1) and " + std::to_string(geo_checked) +
              " dense geometric graphs, " + std::to_string(wrong) + " yes answers; K5 geometric " +
              (k5 ? "yes" : "no") + ", K7 " + (k7 ? "yes" : "no")};
}

// ---------------------------------------------------------------------------
// 6

std::optional<PlaneEmbedding> first_embedding(const Graph& g, const CrossingSet& cs, int outer_pick) {
  std::optional<PlaneEmbedding> out;
  for_each_rotation_system(g, cs, false, [&](const PlaneEmbedding& e) {
    int f = outer_pick % std::max(1, e.face_count());
    out = with_nesting(e, *std::min_element(e.faces()[f].begin(), e.faces()[f].end()), {});
    return false;
  });
  return out;
}

std::optional<ArcSystem> random_system(std::mt19937& rng, int terminals, int arcs, int max_len, int crossings) {
  Graph g(terminals);
  std::vector<EdgeId> statics;
  for (int i = 0; i + 1 < terminals; ++i) statics.push_back(g.add_edge(i, i + 1));
  std::uniform_int_distribution<int> pick(0, terminals - 1), len(1, max_len);
  for (int a = 0; a < arcs; ++a) {
    int u = pick(rng), v = pick(rng), l = len(rng);
    if (u == v) l = std::max(l, 3);
    if (l == 1 && g.find_edge(u, v)) l = 2;
    VertexId prev = u;
    for (int i = 1; i < l; ++i) {
      VertexId x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, v);
  }
  CrossingSet cs;
  std::vector<bool> used(g.m(), false);
  std::uniform_int_distribution<int> pe(0, g.m() - 1);
  for (int tries = 0; tries < 50 && static_cast<int>(cs.size()) < crossings; ++tries) {
    int x = pe(rng), y = pe(rng);
    if (x == y || used[x] || used[y] || !g.edge(x).independent_of(g.edge(y))) continue;
    used[x] = used[y] = true;
    cs.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(cs.begin(), cs.end());
  auto e = first_embedding(g, cs, static_cast<int>(rng() % 7));
  if (!e) return std::nullopt;
  return make_arc_system(*e, statics);
}

// Per-arc crossing tallies are recounted from the host crossing list. The
// geometric reshorten is checked on every system whose input is
// straightenable; static parts of other inputs may carry configurations.
Outcome surgery_fixpoint() {
  std::mt19937 rng(17);
  int done = 0, geo_done = 0, violations = 0;
  for (int it = 0; it < 40 * kSurgerySystems && (done < kSurgerySystems || geo_done < kSurgeryGeometricMin); ++it) {
    auto sys = random_system(rng, 3 + it % 3, 2 + it % 3, 4, 2 + it % 4);
    if (!sys) continue;
    ++done;
    auto res = simplify(*sys, false);
    const ArcSystem& out = res.system;
    // independent per-arc tallies from the host crossing list
    std::vector<int> arc_of(out.host.graph().m(), -1);
    for (int a = 0; a < out.f(); ++a)
      for (EdgeId e : out.arcs[a].edges) arc_of[e] = a;
    std::vector<int> total(out.f(), 0);
    std::map<std::pair<int, int>, int> pair;
    for (const auto& [x, y] : out.host.crossings()) {
      int ax = arc_of[x], ay = arc_of[y];
      if (ax >= 0) ++total[ax];
      if (ay >= 0) ++total[ay];
      if (ax >= 0 && ay >= 0) ++pair[{std::min(ax, ay), std::max(ax, ay)}];
    }
    for (const auto& [k, c] : pair)
      if (k.first == k.second || c > 1) ++violations;
    for (int a = 0; a < out.f(); ++a)
      if (total[a] > out.s() + out.f() - 1) ++violations;
    if (static_crossed_by_flexible(out) != static_crossed_by_flexible(*sys)) ++violations;
    if (is_straightenable(sys->host)) {
      int longest = 0;
      for (int t : total) longest = std::max(longest, t);
      auto geo = reshorten(out, std::max(3, crossing_demand(longest, true)) + it % 3, true);
      if (!is_straightenable(geo.system.host)) ++violations;
      ++geo_done;
    }
  }
  return {done >= kSurgerySystems && geo_done >= kSurgeryGeometricMin && violations == 0,
          std::to_string(done) + " systems (" + std::to_string(geo_done) + " geometric reshortens), " +
              std::to_string(violations) + " violations"};
}

// ---------------------------------------------------------------------------
// 7

Outcome pipeline_safety() {
  std::mt19937 rng(7);
  PipelineOptions low;
  low.thresholds.rule2_baseline = 0;
  int checked = 0, mismatches = 0, undecided = 0;
  for (int it = 0; it < 100 * kPipelineGraphs && checked < kPipelineGraphs; ++it) {
    int n = 3 + static_cast<int>(rng() % 6);
    int target = 2 + static_cast<int>(rng() % (kPipelineMaxEdges - 1));
    Graph g(n);
    for (int tries = 0; tries < 40 && g.m() < target; ++tries) {
      VertexId u = rng() % n, v = rng() % n;
      if (u != v && !g.find_edge(u, v)) g.add_edge(u, v);
    }
    if (!is_connected(g)) continue;
    auto out = run_pipeline(g, std::nullopt, low);
    auto a = out.answer();
    if (!a) ++undecided;
    else if (*a != decide(g, Predicate::plain(true)).yes) ++mismatches;
    ++checked;
  }
  Graph k = complete_bipartite(3, 35);
  TreedepthDecomposition d;
  d.parent.assign(k.n(), 2);
  d.parent[0] = -1;
  d.parent[1] = 0;
  d.parent[2] = 1;
  auto big = run_pipeline(k, d);
  bool rejects = big.result == PipelineOutcome::Result::Reject && big.reject_rule == "I";
  return {checked >= kPipelineGraphs && mismatches == 0 && undecided == 0 && rejects,
          std::to_string(checked) + " graphs with lowered Rule II baseline, " + std::to_string(mismatches) +
              " mismatches, " + std::to_string(undecided) + " undecided; K_{3,35} " +
              (rejects ? "rejected by Rule I" : "not rejected by Rule I")};
}

// ---------------------------------------------------------------------------
// 8

Outcome reduction_structure() {
  auto li = gen_binpack_instance({{3, 1, 2, 2}, 4, 2}, true);
  std::vector<std::size_t> sizes;
  for (const auto& d : li.diamonds) sizes.push_back(d.side.size());
  auto fvs = fvs_witness(li);
  // independent acyclicity check: union-find over the remaining edges
  std::vector<bool> gone(li.graph.n(), false);
  for (VertexId v : fvs) gone[v] = true;
  std::vector<int> uf(li.graph.n());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  bool acyclic = true;
  for (const Edge& e : li.graph.edges()) {
    if (gone[e.u] || gone[e.v]) continue;
    int a = find(e.u), b = find(e.v);
    if (a == b) acyclic = false;
    uf[a] = b;
  }
  auto pd = pathwidth_witness(li);
  std::string why = check_path_decomposition(li.graph, pd);
  bool ok = li.left_length() == 5 && li.right_length() == 8 && li.purple.size() == 1 &&
            sizes == std::vector<std::size_t>{3, 1, 2, 2} && fvs.size() <= 48 && acyclic && why.empty() &&
            width(pd) <= 15;
  return {ok, "left " + std::to_string(li.left_length()) + ", right " + std::to_string(li.right_length()) +
                  ", purple " + std::to_string(li.purple.size()) + ", fvs " + std::to_string(fvs.size()) +
                  (acyclic ? " (acyclic)" : " (CYCLIC)") + ", width " + std::to_string(width(pd)) +
                  (why.empty() ? " (valid)" : " (" + why + ")")};
}

// ---------------------------------------------------------------------------
// 9

Outcome bandwidth_lift_bound() {
  std::mt19937 rng(9);
  int violations = 0;
  for (int it = 0; it < kLiftPairs; ++it) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g(n);
    for (int k = 0; k < 2 * n; ++k) {
      VertexId a = rng() % n, b = rng() % n;
      if (a != b && !g.find_edge(a, b)) g.add_edge(a, b);
    }
    int t = 2 + static_cast<int>(rng() % 6);
    TwoTerminalGadget h{Graph(t), 0, static_cast<VertexId>(1 + rng() % (t - 1))};
    for (int x = 0; x < t; ++x)
      for (int y = x + 1; y < t; ++y)
        if (rng() % 2) h.h.add_edge(x, y);
    std::vector<VertexId> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::shuffle(seq.begin(), seq.end(), rng);
    auto sigma = LinearOrdering::from_sequence(seq);
    auto lift = bandwidth_lift(g, sigma, h);
    // measure independently from the lifted sequence
    auto order = lift.order.sequence();
    std::vector<int> pos(order.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    long long b = 0, measured = 0;
    for (const Edge& e : g.edges()) b = std::max<long long>(b, std::abs(sigma.position[e.u] - sigma.position[e.v]));
    for (const Edge& e : lift.replaced.graph.edges()) measured = std::max<long long>(measured, std::abs(pos[e.u] - pos[e.v]));
    if (measured > (b + 1) * (1 + (t - 2) * b)) ++violations;
  }
  return {violations == 0, std::to_string(kLiftPairs) + " pairs, " + std::to_string(violations) + " violations"};
}

// ---------------------------------------------------------------------------
// 10

// f paths between random branch vertices, each at least f-1 edges long.
Graph random_convex_system(std::mt19937& rng, int branch, int f) {
  Graph g(branch);
  for (int i = 0; i < f; ++i) {
    VertexId a = rng() % branch, b = rng() % branch;
    int len = std::max(f - 1, 1) + static_cast<int>(rng() % 3);
    if (a == b) len = std::max(len, 3);
    if (len == 1 && g.adjacent(a, b)) len = 2;
    VertexId prev = a;
    for (int q = 1; q < len; ++q) {
      VertexId x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, b);
  }
  return g;
}

Outcome convex_certificates() {
  std::mt19937 rng(10);
  int done = 0, failed = 0;
  for (int it = 0; it < 20 * kConvexSystems && done < kConvexSystems; ++it) {
    Graph g = random_convex_system(rng, 2 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 5));
    auto dec = decompose_degree2_paths(g, true);
    bool pre = true;
    for (const auto& p : dec.paths) pre &= p.length() >= dec.p() - 1;
    if (!pre) continue;
    ++done;
    try {
      auto cert = convex_certificate(g);
      if (!check_straight_line_drawing(g, cert.position, 1).ok) ++failed;
    } catch (const Error&) {
      ++failed;
    }
  }
  return {done >= kConvexSystems && failed == 0,
          std::to_string(done) + " path systems, " + std::to_string(failed) + " failed validation"};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "kernel worst-case sizes", 1, worst_case_sizes},
      {2, "kernel equivalence", 1800, kernel_equivalence},
      {3, "B/W figure", 1, thomassen_figure},
      {4, "L*[M]R* characterization", 300, lmr_equivalence},
      {5, "density consistency", 600, density},
      {6, "surgery fixpoint", 900, surgery_fixpoint},
      {7, "treedepth pipeline safety", 1800, pipeline_safety},
      {8, "reduction structure", 1, reduction_structure},
      {9, "bandwidth lift", 300, bandwidth_lift_bound},
      {10, "convex certificate", 300, convex_certificates},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.limit_seconds;
    bool pass = o.pass && in_time;
    failures += !pass;
    std::ostringstream t;
    t.precision(3);
    t << secs;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail << "; "
              << t.str() << "s of " << c.limit_seconds << "s" << (in_time ? "" : " TIME LIMIT EXCEEDED") << "\n";
    std::cout.flush();
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
