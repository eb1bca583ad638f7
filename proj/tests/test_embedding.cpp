#include <gtest/gtest.h>

#include <random>

#include "onep/decider.hpp"
#include "onep/embedding.hpp"
#include "onep/thomassen.hpp"

using namespace onep;

namespace {

using R = std::vector<std::vector<Dart>>;

Dart d(int e, int end, int seg = 0) { return {e, end, seg}; }

Graph k4_graph() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  return g;
}

// Centre 0 inside the triangle 1,2,3.
R k4_rotation() {
  return {{d(0, 0), d(1, 0), d(2, 0)},
          {d(3, 0), d(0, 1), d(4, 0)},
          {d(5, 0), d(1, 1), d(3, 1)},
          {d(4, 1), d(2, 1), d(5, 1)}};
}

// K5 drawn as the planar K4 on 0,1,2,3 plus an apex 4 below whose edge to 3
// crosses 01.
PlaneEmbedding k5_apex() {
  Graph g(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
  R rot = {{d(1, 0), d(2, 0), d(0, 0, 0), d(3, 0)},
           {d(6, 0), d(0, 1, 1), d(5, 0), d(4, 0)},
           {d(8, 0), d(4, 1), d(7, 0), d(1, 1)},
           {d(5, 1), d(9, 0, 0), d(2, 1), d(7, 1)},
           {d(3, 1), d(9, 1, 1), d(6, 1), d(8, 1)},
           {d(9, 0, 1), d(0, 1, 0), d(9, 1, 0), d(0, 0, 1)}};
  return PlaneEmbedding(g, {{0, 9}}, {}, rot, d(3, 1));
}

// Edges ab, aa', bb' with aa' crossing bb'; a=0, b=1, a'=2, b'=3.
PlaneEmbedding minimal_b(bool inside) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  R rot = {{d(1, 0, 0), d(0, 0)},
           {d(0, 1), d(2, 0, 0)},
           {d(1, 1, 1)},
           {d(2, 1, 1)},
           {d(2, 1, 0), d(1, 1, 0), d(2, 0, 1), d(1, 0, 1)}};
  // a->b has the triangle a,c,b on its left
  return PlaneEmbedding(g, {{1, 2}}, {}, rot, inside ? d(0, 0) : d(0, 1));
}

// Two (a,b)-crossing pairs forming a diamond a,c0,b,c1.
PlaneEmbedding minimal_w(bool inside) {
  Graph g(6);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(1, 5);
  R rot = {{d(0, 0, 0), d(1, 0, 0)},
           {d(2, 0, 0), d(3, 0, 0)},
           {d(0, 1, 1)},
           {d(1, 1, 1)},
           {d(2, 1, 1)},
           {d(3, 1, 1)},
           {d(2, 1, 0), d(0, 1, 0), d(2, 0, 1), d(0, 0, 1)},
           {d(1, 0, 1), d(3, 0, 1), d(1, 1, 0), d(3, 1, 0)}};
  return PlaneEmbedding(g, {{0, 2}, {1, 3}}, {}, rot, inside ? d(1, 0, 0) : d(0, 0, 0));
}

// Independent count of planar rotation systems: try every combination of
// cyclic orders and trace faces.
long brute_force_planar_rotations(const Graph& g) {
  std::vector<std::vector<std::vector<Dart>>> options(g.n());
  for (VertexId v = 0; v < g.n(); ++v) {
    std::vector<Dart> ds;
    for (const auto& inc : g.incident(v)) ds.push_back(d(inc.edge, g.edge(inc.edge).u == v ? 0 : 1));
    std::sort(ds.begin() + 1, ds.end(), [](Dart x, Dart y) { return x.edge < y.edge; });
    do options[v].push_back(ds);
    while (std::next_permutation(ds.begin() + 1, ds.end(),
                                 [](Dart x, Dart y) { return x.edge < y.edge; }));
  }
  long count = 0;
  R rot(g.n());
  std::function<void(int)> rec = [&](int v) {
    if (v == g.n()) {
      try {
        PlaneEmbedding e(g, {}, {}, rot, d(0, 0));
        ++count;
      } catch (const EmbeddingError&) {
      }
      return;
    }
    for (const auto& o : options[v]) {
      rot[v] = o;
      rec(v + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace

TEST(Embedding, PlanarK4HasFourFaces) {
  PlaneEmbedding e(k4_graph(), {}, {}, k4_rotation(), d(0, 0));
  EXPECT_EQ(e.face_count(), 4);
  std::vector<int> seen(e.dart_count(), 0);
  for (const auto& f : e.faces())
    for (DartId x : f) ++seen[x];
  for (int s : seen) EXPECT_EQ(s, 1);
}

TEST(Embedding, ToroidalK4IsRejected) {
  R rot = k4_rotation();
  std::swap(rot[0][1], rot[0][2]);
  try {
    PlaneEmbedding e(k4_graph(), {}, {}, rot, d(0, 0));
    FAIL() << "accepted a non-planar rotation";
  } catch (const EmbeddingError& ex) {
    EXPECT_EQ(ex.kind(), Violation::Genus);
  }
}

TEST(Embedding, K5ApexIsOnePlanar) {
  PlaneEmbedding e = k5_apex();
  EXPECT_EQ(e.node_count(), 6);
  EXPECT_EQ(e.dart_count(), 24);
  EXPECT_EQ(e.face_count(), 8);
  EXPECT_EQ(e.max_crossings_per_edge(), 1);
}

TEST(Embedding, StructuredErrors) {
  Graph g = k4_graph();
  R rot = k4_rotation();
  rot[0].push_back(d(0, 0));
  EXPECT_THROW(PlaneEmbedding(g, {}, {}, rot, d(0, 0)), EmbeddingError);
  R dangling = k4_rotation();
  dangling[0][0] = d(9, 0);
  try {
    PlaneEmbedding(g, {}, {}, dangling, d(0, 0));
    FAIL();
  } catch (const EmbeddingError& ex) {
    EXPECT_EQ(ex.kind(), Violation::DanglingDart);
  }
  // crossing of adjacent edges
  try {
    PlaneEmbedding(g, {{0, 1}}, {}, R(5), std::nullopt);
    FAIL();
  } catch (const EmbeddingError& ex) {
    EXPECT_EQ(ex.kind(), Violation::NotIndependent);
  }
}

TEST(Embedding, NonAlternatingDummyIsRejected) {
  PlaneEmbedding ok = minimal_b(true);
  auto rot = ok.rotations();
  std::swap(rot[4][0], rot[4][1]);
  try {
    PlaneEmbedding::from_ids(ok.graph(), ok.crossings(), {}, rot, 0);
    FAIL();
  } catch (const EmbeddingError& ex) {
    EXPECT_EQ(ex.kind(), Violation::NonAlternating);
  }
}

TEST(Embedding, CycleFaces) {
  Graph c3(3);
  c3.add_edge(0, 1);
  c3.add_edge(1, 2);
  c3.add_edge(0, 2);
  PlaneEmbedding e(c3, {}, {}, {{d(0, 0), d(2, 0)}, {d(0, 1), d(1, 0)}, {d(1, 1), d(2, 1)}}, d(0, 0));
  EXPECT_EQ(e.face_count(), 2);
}

TEST(Embedding, SharedRegion) {
  Graph c4 = cycle_graph(4);
  auto res = decide(c4, Predicate::plain());
  ASSERT_TRUE(res.witness);
  const PlaneEmbedding& e = *res.witness;
  EXPECT_TRUE(e.shared_region(0, 1).has_value());
  EXPECT_TRUE(e.shared_region(0, 2).has_value());
  EXPECT_TRUE(e.shared_region(0, 2)->outer);

  // Wheel: hub 0, rim 1..4. With the rim face unbounded, the hub shares only
  // bounded triangles with a rim vertex.
  Graph w(5);
  for (int i = 1; i <= 4; ++i) w.add_edge(0, i);
  for (int i = 1; i <= 4; ++i) w.add_edge(i, i % 4 + 1);
  bool checked = false;
  for_each_embedding(w, {}, true, [&](const PlaneEmbedding& x) {
    int of = x.outer_face();
    if (x.face_has_node(of, 0)) return true;
    auto s = x.shared_region(0, 1);
    EXPECT_TRUE(s.has_value());
    EXPECT_FALSE(s->outer);
    EXPECT_FALSE(x.on_outer_region(0));
    EXPECT_TRUE(x.on_outer_region(1));
    checked = true;
    return false;
  });
  EXPECT_TRUE(checked);
}

TEST(Embedding, Restrict) {
  PlaneEmbedding e = k5_apex();
  auto all = restrict_embedding(e, std::vector<bool>(10, true));
  EXPECT_EQ(all.embedding.rotations(), e.rotations());
  EXPECT_EQ(all.embedding.crossings(), e.crossings());
  EXPECT_EQ(all.embedding.outer_face(), e.outer_face());
  auto none = restrict_embedding(e, std::vector<bool>(10, false));
  EXPECT_EQ(none.embedding.graph().m(), 0);
  std::vector<bool> pair(10, false);
  pair[0] = pair[9] = true;
  auto cp = restrict_embedding(e, pair);
  EXPECT_EQ(cp.embedding.graph().m(), 2);
  EXPECT_EQ(cp.embedding.graph().n(), 4);
  EXPECT_EQ(cp.embedding.crossing_count(), 1);
}

TEST(Embedding, RestrictPreservesValidity) {
  PlaneEmbedding e = k5_apex();
  std::mt19937 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<bool> keep(10);
    for (int i = 0; i < 10; ++i) keep[i] = rng() % 2;
    auto r = restrict_embedding(e, keep);
    EXPECT_NO_THROW(with_nesting(r.embedding, r.embedding.outer_dart(), r.embedding.nest()));
  }
}

TEST(Embedding, JsonRoundTrip) {
  for (const PlaneEmbedding& e : {k5_apex(), minimal_w(true), minimal_b(false)}) {
    std::string text = serialize_embedding(e);
    PlaneEmbedding back = parse_embedding(text);
    EXPECT_EQ(serialize_embedding(back), text);
  }
  EXPECT_THROW(parse_embedding("{not json"), EmbeddingError);
  EXPECT_THROW(parse_embedding(R"({"vertices":[0],"edges":[]})"), EmbeddingError);
}

TEST(Embedding, ScrambledRotationsMatchIndependentCheck) {
  // Accept iff the brute-force tracer finds genus 0; compare with the
  // number of planar systems generated by the enumerator.
  Graph k4 = k4_graph();
  EXPECT_EQ(brute_force_planar_rotations(k4), 2);
  EXPECT_EQ(for_each_rotation_system(k4, {}, false, [](const PlaneEmbedding&) { return true; }), 2);
  EXPECT_EQ(for_each_rotation_system(k4, {}, true, [](const PlaneEmbedding&) { return true; }), 1);
  Graph k23 = complete_bipartite(2, 3);
  EXPECT_EQ(brute_force_planar_rotations(k23),
            for_each_rotation_system(k23, {}, false, [](const PlaneEmbedding&) { return true; }));
  Graph prism(6);
  for (int i = 0; i < 3; ++i) {
    prism.add_edge(i, (i + 1) % 3);
    prism.add_edge(i + 3, (i + 1) % 3 + 3);
    prism.add_edge(i, i + 3);
  }
  EXPECT_EQ(brute_force_planar_rotations(prism),
            for_each_rotation_system(prism, {}, false, [](const PlaneEmbedding&) { return true; }));
}

TEST(Thomassen, MinimalB) {
  auto bw = find_bw_configurations(minimal_b(true));
  ASSERT_EQ(bw.size(), 1u);
  EXPECT_EQ(bw[0].kind, BWConfiguration::Kind::B);
  EXPECT_EQ(bw[0].a, 0);
  EXPECT_EQ(bw[0].b, 1);
  EXPECT_FALSE(is_straightenable(minimal_b(true)));
  // the other side as unbounded face removes it
  EXPECT_TRUE(find_bw_configurations(minimal_b(false)).empty());
}

TEST(Thomassen, MinimalW) {
  auto bw = find_bw_configurations(minimal_w(true));
  ASSERT_EQ(bw.size(), 1u);
  EXPECT_EQ(bw[0].kind, BWConfiguration::Kind::W);
  EXPECT_TRUE(find_bw_configurations(minimal_w(false)).empty());
}

TEST(Thomassen, CrossingFreeAndApex) {
  PlaneEmbedding e(k4_graph(), {}, {}, k4_rotation(), d(0, 0));
  EXPECT_TRUE(find_bw_configurations(e).empty());
  EXPECT_TRUE(is_straightenable(e));
  EXPECT_TRUE(is_straightenable(k5_apex()));
}

TEST(Thomassen, Orientation) {
  PlaneEmbedding e = minimal_b(true);
  EXPECT_EQ(crossing_orientation(e, 0, 0, 1), Orientation::Left);
  EXPECT_EQ(crossing_orientation(e, 0, 1, 0), Orientation::Right);
}

TEST(Thomassen, LmrSingleLetter) {
  auto w = lmr_word(minimal_b(false), 0, 1);
  EXPECT_EQ(w.word, "LM");
  Graph g(4);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  int lefts = 0, rights = 0;
  for_each_embedding(g, {{0, 1}}, false, [&](const PlaneEmbedding& x) {
    auto lw = lmr_word(x, 0, 1);
    EXPECT_EQ(lw.word.size(), 1u);
    EXPECT_TRUE(matches_lmr_pattern(lw.word));
    (lw.word == "L" ? lefts : rights)++;
    return true;
  });
  EXPECT_GT(lefts, 0);
  EXPECT_GT(rights, 0);
}

TEST(Thomassen, PatternHelpers) {
  EXPECT_TRUE(matches_lmr_pattern("LLMRR"));
  EXPECT_TRUE(matches_lmr_pattern(""));
  EXPECT_FALSE(matches_lmr_pattern("RML"));
  EXPECT_EQ(lmr_violation("RML"), std::optional<std::string>("RM"));
  EXPECT_EQ(lmr_violation("LRL"), std::optional<std::string>("RL"));
  EXPECT_EQ(lmr_violation("MLR"), std::optional<std::string>("ML"));
  EXPECT_FALSE(lmr_violation("LMR").has_value());
}

namespace {

// a=0, b=1 and `pairs` (a,b)-crossing pairs, optionally with the edge ab.
struct PairShape {
  Graph g;
  CrossingSet crossings;
};

PairShape pair_shape(int pairs, bool with_ab) {
  PairShape s;
  s.g = Graph(2 + 2 * pairs);
  if (with_ab) s.g.add_edge(0, 1);
  for (int i = 0; i < pairs; ++i) {
    EdgeId ea = s.g.add_edge(0, 2 + 2 * i);
    EdgeId eb = s.g.add_edge(1, 3 + 2 * i);
    s.crossings.emplace_back(ea, eb);
  }
  return s;
}

}  // namespace

TEST(Thomassen, PatternFigure) {
  // One left pair, one right pair and ab: the word read from the outer face
  // is either a valid LMR-type word or a word with configurations.
  PairShape s = pair_shape(2, true);
  bool saw_lmr = false, saw_rml = false;
  for_each_embedding(s.g, s.crossings, false, [&](const PlaneEmbedding& e) {
    if (!e.on_outer_region(0)) return true;
    std::string w = lmr_word(e, 0, 1).word;
    auto bw = find_bw_configurations(e);
    if (w == "LMR") {
      saw_lmr = true;
      EXPECT_TRUE(bw.empty());
    }
    if (w == "RML") {
      saw_rml = true;
      int bs = 0, ws = 0;
      for (const auto& c : bw) (c.kind == BWConfiguration::Kind::B ? bs : ws)++;
      EXPECT_EQ(bs, 2);
      EXPECT_EQ(ws, 1);
    }
    return true;
  });
  EXPECT_TRUE(saw_lmr);
  EXPECT_TRUE(saw_rml);
}

TEST(Thomassen, WordCharacterizationExhaustive) {
  long checked = 0;
  for (int pairs = 1; pairs <= 3; ++pairs)
    for (bool with_ab : {false, true}) {
      PairShape s = pair_shape(pairs, with_ab);
      for_each_embedding(s.g, s.crossings, false, [&](const PlaneEmbedding& e) {
        if (!e.on_outer_region(0)) return true;
        std::string w = lmr_word(e, 0, 1).word;
        bool free = find_bw_configurations(e).empty();
        EXPECT_EQ(free, matches_lmr_pattern(w)) << w;
        if (!matches_lmr_pattern(w)) EXPECT_TRUE(lmr_violation(w).has_value());
        ++checked;
        return true;
      });
    }
  EXPECT_GT(checked, 100);
}
