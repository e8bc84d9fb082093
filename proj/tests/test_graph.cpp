#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bsurf/fixtures.hpp"
#include "bsurf/graph.hpp"

using namespace bsurf;
namespace fx = bsurf::fixtures;

namespace {

/// Reference decision: try all 2^|V| labelings; loops and twisted loops can
/// never be properly colored.
bool brute_force_two_colorable(const BGraph& g) {
  for (const auto& e : g.edges)
    if (e.u == e.v) return false;
  const size_t n = g.vertices.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    auto color = [&](const std::string& v) {
      const size_t i = std::find(g.vertices.begin(), g.vertices.end(), v) - g.vertices.begin();
      return (mask >> i) & 1;
    };
    bool proper = true;
    for (const auto& e : g.edges)
      if (color(e.u) == color(e.v)) {
        proper = false;
        break;
      }
    if (proper) return true;
  }
  return false;
}

bool proper(const BGraph& g, const TwoColoring& tc) {
  for (const auto& e : g.edges)
    if (tc.color.at(e.u) == tc.color.at(e.v)) return false;
  return true;
}

BGraph random_multigraph(std::mt19937& rng) {
  BGraph g;
  const int n = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i));
  const int m = static_cast<int>(rng() % 7);
  for (int e = 0; e < m; ++e) {
    BEdge edge;
    edge.id = "e" + std::to_string(e);
    edge.u = g.vertices[rng() % n];
    edge.v = g.vertices[rng() % n];
    if (edge.u == edge.v)
      edge.kind = rng() % 2 ? EdgeKind::Loop : EdgeKind::TwistedLoop;
    else
      edge.kind = EdgeKind::Plain;
    g.edges.push_back(edge);
  }
  return g;
}

}  // namespace

TEST_CASE("build_graph edge kinds") {
  BGraph sphere = build_graph(fx::sphere_equator());
  CHECK(sphere.vertices.size() == 2);
  REQUIRE(sphere.edges.size() == 1);
  CHECK(sphere.edges[0].kind == EdgeKind::Plain);

  BGraph torus2 = build_graph(fx::torus_two_curves());
  CHECK(torus2.edges.size() == 2);
  CHECK(torus2.edges[0].u != torus2.edges[0].v);

  BGraph torus1 = build_graph(fx::torus_one_curve());
  REQUIRE(torus1.edges.size() == 1);
  CHECK(torus1.edges[0].kind == EdgeKind::Loop);

  BGraph rp2 = build_graph(fx::rp2_equator());
  REQUIRE(rp2.edges.size() == 1);
  CHECK(rp2.edges[0].kind == EdgeKind::TwistedLoop);
}

TEST_CASE("two_colorable on small graphs") {
  SUBCASE("path is colorable with a proper witness") {
    BGraph g = build_graph(fx::sphere_equator());
    TwoColorResult r = two_colorable(g);
    REQUIRE(r.coloring);
    CHECK(proper(g, *r.coloring));
  }
  SUBCASE("loop is rejected naming the edge") {
    TwoColorResult r = two_colorable(build_graph(fx::torus_one_curve()));
    CHECK_FALSE(r.coloring);
    CHECK(r.bad_edge == std::string("c"));
  }
  SUBCASE("triangle yields an odd cycle of three edges") {
    BGraph g;
    g.vertices = {"a", "b", "c"};
    g.edges = {{"ab", EdgeKind::Plain, "a", "b"},
               {"bc", EdgeKind::Plain, "b", "c"},
               {"ca", EdgeKind::Plain, "c", "a"}};
    TwoColorResult r = two_colorable(g);
    CHECK_FALSE(r.coloring);
    CHECK(r.odd_cycle.size() == 3);
    CHECK(r.odd_cycle.size() % 2 == 1);
  }
  SUBCASE("parallel edges do not obstruct colorability") {
    BGraph g = build_graph(fx::torus_two_curves());
    TwoColorResult r = two_colorable(g);
    REQUIRE(r.coloring);
    CHECK(proper(g, *r.coloring));
  }
}

TEST_CASE("two_colorable agrees with brute force on random multigraphs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    BGraph g = random_multigraph(rng);
    TwoColorResult r = two_colorable(g);
    CHECK(r.coloring.has_value() == brute_force_two_colorable(g));
    if (r.coloring) {
      CHECK(proper(g, *r.coloring));
    } else if (!r.bad_edge) {
      // Witness sanity: the returned odd cycle has odd length.
      CHECK(r.odd_cycle.size() % 2 == 1);
    }
  }
}

TEST_CASE("existence decision table") {
  CHECK(exists_bm(fx::sphere_equator(), 3).yes());
  for (int m = 1; m <= 6; ++m) CHECK(exists_bm(fx::torus_two_curves(), m).yes());
  CHECK(exists_bm(fx::torus_one_curve(), 2).yes());
  CHECK_FALSE(exists_bm(fx::torus_one_curve(), 3).yes());
  CHECK(exists_bm(fx::torus_one_curve(), 3).obstruction.find("loop") != std::string::npos);
  CHECK(exists_bm(fx::rp2_equator(), 3).yes());
  CHECK_FALSE(exists_bm(fx::rp2_equator(), 2).yes());
  CHECK(exists_bm(fx::klein_mobius(), 3).yes());
  CHECK_FALSE(exists_bm(fx::klein_mobius(), 2).yes());
  CHECK_FALSE(exists_bm(fx::klein_two_annuli(), 3).yes());
  CHECK(exists_bm(fx::sphere_equator(), 0).verdict == Verdict::Refused);

  SurfacePresentation broken = fx::sphere_equator();
  broken.declared_euler_char = 5;
  CHECK(exists_bm(broken, 1).verdict == Verdict::Refused);
}

TEST_CASE("even order on orientable surfaces never depends on the graph") {
  for (const auto& name : {"sphere_equator", "torus_two_curves", "torus_one_curve", "four_band"}) {
    CAPTURE(name);
    CHECK(exists_bm(*fx::find_presentation(name), 2).yes());
    CHECK(exists_bm(*fx::find_presentation(name), 4).yes());
  }
  for (const auto& name : {"rp2_equator", "klein_two_annuli", "klein_mobius"}) {
    CAPTURE(name);
    CHECK_FALSE(exists_bm(*fx::find_presentation(name), 2).yes());
    CHECK_FALSE(exists_bm(*fx::find_presentation(name), 4).yes());
  }
}

TEST_CASE("deck-inverting colorings") {
  SUBCASE("Klein (annulus + two one-sided circles): deck inverts") {
    DoubleCover dc = orientation_double_cover(fx::klein_mobius());
    auto col = deck_inverting_coloring(dc.cover, dc.deck);
    REQUIRE(col);
    for (const auto& [f, c] : col->color) CHECK(col->color.at(dc.deck.face_map.at(f)) == -c);
  }
  SUBCASE("Klein (two annuli): cover graph is an even cycle the deck preserves") {
    DoubleCover dc = orientation_double_cover(fx::klein_two_annuli());
    CHECK(two_colorable(build_graph(dc.cover)).coloring);
    CHECK_FALSE(deck_inverting_coloring(dc.cover, dc.deck));
  }
  SUBCASE("translated critical circle: colorable cover, deck fails to invert") {
    fx::CoverFixture cf = fx::rp2_translated_cover();
    CHECK(two_colorable(build_graph(cf.cover)).coloring);
    CHECK_FALSE(deck_inverting_coloring(cf.cover, cf.deck));
    Decision d = exists_bm_cover(cf.cover, cf.deck, 3);
    CHECK_FALSE(d.yes());
    CHECK(d.obstruction.find("invert") != std::string::npos);
  }
}

TEST_CASE("graph isomorphisms") {
  BGraph sphere = build_graph(fx::sphere_equator());
  BGraph torus2 = build_graph(fx::torus_two_curves());
  BGraph torus1 = build_graph(fx::torus_one_curve());

  SUBCASE("single edge: the two endpoint swaps") {
    CHECK(graph_isomorphisms(sphere, sphere).size() == 2);
  }
  SUBCASE("vertex labels can pin the matching") {
    GraphLabels l;
    l.vertex = {{"N", "north"}, {"S", "south"}};
    CHECK(graph_isomorphisms(sphere, sphere, l, l).size() == 1);
  }
  SUBCASE("two parallel edges: vertex swap times edge matching") {
    CHECK(graph_isomorphisms(torus2, torus2).size() == 4);
  }
  SUBCASE("loop vs plain edge: none") {
    CHECK(graph_isomorphisms(torus1, sphere).empty());
  }
  SUBCASE("isomorphisms preserve incidence") {
    for (const auto& iso : graph_isomorphisms(torus2, torus2)) {
      for (const auto& e : torus2.edges) {
        const auto& im = iso.edge_map.at(e.id);
        const BEdge* target = nullptr;
        for (const auto& f : torus2.edges)
          if (f.id == im) target = &f;
        REQUIRE(target);
        std::set<std::string> a{iso.vertex_map.at(e.u), iso.vertex_map.at(e.v)};
        std::set<std::string> b{target->u, target->v};
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("dot output marks one-sided curves") {
  std::string dot = to_dot(build_graph(fx::rp2_equator()));
  CHECK(dot.find("style=dashed") != std::string::npos);
  std::string plain = to_dot(build_graph(fx::sphere_equator()));
  CHECK(plain.find("style=dashed") == std::string::npos);
}
