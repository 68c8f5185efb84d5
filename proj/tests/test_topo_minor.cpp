#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "scramble/canonical.hpp"
#include "scramble/errors.hpp"
#include "scramble/families.hpp"
#include "scramble/topo_minor.hpp"

using namespace scramble;

TEST_CASE("smoothing") {
  Multigraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  Multigraph smoothed = smooth(path, 1);
  CHECK(smoothed.vertex_count() == 2);
  CHECK(smoothed.multiplicity(0, 1) == 1);

  // Simple cycles shrink to simple cycles.
  CHECK(isomorphic(smooth(make_cycle(5, 1), 2), make_cycle(4, 1)));

  // Degree != 2 and parallel-pair vertices are rejected.
  CHECK_THROWS_AS(smooth(make_k4(), 0), std::invalid_argument);
  CHECK_THROWS_AS(smooth(make_banana(2), 0), std::invalid_argument);

  // Smoothing merges onto an existing bundle.
  Multigraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  Multigraph two = smooth(tri, 1);
  CHECK(two.multiplicity(0, 1) == 2);
}

TEST_CASE("multi-smoothing") {
  // C(n;k) loses one vertex and stays a C(n-1;k).
  CHECK(isomorphic(multi_smooth(make_cycle(6, 2), 3), make_cycle(5, 2)));
  CHECK(isomorphic(multi_smooth(make_cycle(9, 2), 0), make_cycle(8, 2)));

  // min(1, 3) = 1 new edge.
  Multigraph g(3);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 3);
  Multigraph h = multi_smooth(g, 1);
  CHECK(h.vertex_count() == 2);
  CHECK(h.multiplicity(0, 1) == 1);

  // Ctilde(8;2) at vertex 0: between the heavy bundle (0,1) and the light
  // wrap bundle (7,0), so min(3,2) = 2 new edges join its neighbors.
  Multigraph ct = multi_smooth(make_ctilde(8, 2), 0);
  std::multiset<int> mults;
  for (const auto& e : ct.edges()) mults.insert(e.mult);
  CHECK(ct.vertex_count() == 7);
  CHECK(mults == std::multiset<int>{2, 2, 2, 2, 3, 3, 3});

  CHECK_THROWS_AS(multi_smooth(make_k4(), 0), std::invalid_argument);
  CHECK_THROWS_AS(multi_smooth(make_banana(3), 0), std::invalid_argument);
}

TEST_CASE("smooth and multi_smooth agree on single-edge neighbors") {
  for (const auto& g : enumerate_connected_multigraphs(4, 2))
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) == 2 && g.neighbors(v).size() == 2)
        CHECK(smooth(g, v) == multi_smooth(g, v));
}

TEST_CASE("topological minor: identity and basic embeddings") {
  for (const auto& g : {make_k4(), make_ll6(), make_ctilde(6, 2)}) {
    auto m = is_topological_minor(g, g);
    REQUIRE(m.has_value());
    std::string why;
    CHECK(verify_embedding(g, g, *m, &why));
  }

  // K4 embeds into the wheel W5.
  auto m = is_topological_minor(make_k4(), make_w5());
  REQUIRE(m.has_value());
  CHECK(verify_embedding(make_k4(), make_w5(), *m));

  // The four minimal obstructions do not contain each other.
  CHECK_FALSE(is_topological_minor(make_c3221(), make_ll6()).has_value());
  CHECK_FALSE(is_topological_minor(make_k4(), make_ll6()).has_value());
  CHECK_FALSE(is_topological_minor(make_p33(), make_ll6()).has_value());
  CHECK_FALSE(is_topological_minor(make_ll6(), make_k4()).has_value());
  CHECK_FALSE(is_topological_minor(make_p33(), make_k4()).has_value());

  // A doubled edge needs a cycle: trees have none.
  Multigraph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CHECK_FALSE(is_topological_minor(make_banana(2), star).has_value());
  CHECK(is_topological_minor(make_banana(2), make_cycle(5, 1)).has_value());
}

TEST_CASE("topological minor: subdivision witnesses verify") {
  // Subdivide every K4 edge once; K4 must embed with 6 internal vertices.
  Multigraph sub(10);
  int next = 4;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      sub.add_edge(u, next);
      sub.add_edge(next, v);
      ++next;
    }
  auto m = is_topological_minor(make_k4(), sub);
  REQUIRE(m.has_value());
  std::string why;
  CHECK(verify_embedding(make_k4(), sub, *m, &why));
  for (const auto& p : m->paths) CHECK(p.vertices.size() == 3);
}

TEST_CASE("topological minor is reflexive and transitive on a small universe") {
  auto universe = enumerate_connected_multigraphs(4, 2);
  std::vector<std::vector<bool>> rel(universe.size(),
                                     std::vector<bool>(universe.size(), false));
  for (size_t i = 0; i < universe.size(); ++i)
    for (size_t j = 0; j < universe.size(); ++j) {
      if (universe[i].vertex_count() > universe[j].vertex_count() ||
          universe[i].edge_count() > universe[j].edge_count())
        continue;
      auto m = is_topological_minor(universe[i], universe[j]);
      rel[i][j] = m.has_value();
      if (m) {
        std::string why;
        CHECK(verify_embedding(universe[i], universe[j], *m, &why));
      }
    }
  for (size_t i = 0; i < universe.size(); ++i) CHECK(rel[i][i]);
  for (size_t i = 0; i < universe.size(); ++i)
    for (size_t j = 0; j < universe.size(); ++j)
      for (size_t k = 0; k < universe.size(); ++k)
        if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
}

TEST_CASE("multi-topological minor") {
  CHECK(is_multi_topological_minor(make_cycle(8, 2), make_cycle(9, 2)));
  CHECK(is_multi_topological_minor(make_k4(), make_k4()));
  CHECK(is_multi_topological_minor(make_cycle(3, 2), make_cycle(4, 2)));
  CHECK_FALSE(is_multi_topological_minor(make_cycle(4, 3), make_cycle(4, 2)));

  // C(2k;k) is minimal for the multi relation: every multi-smoothing drops
  // the vertex count, and no proper closure state comes back to it.
  Multigraph c42 = make_cycle(4, 2);
  CHECK(isomorphic(multi_smooth(c42, 0), make_cycle(3, 2)));
  CHECK_FALSE(is_multi_topological_minor(c42, multi_smooth(c42, 0)));

  CHECK_THROWS_AS(is_multi_topological_minor(make_k4(), Multigraph(10)),
                  size_bound_error);
}
