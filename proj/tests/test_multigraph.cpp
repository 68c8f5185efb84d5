#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "scramble/canonical.hpp"
#include "scramble/errors.hpp"
#include "scramble/families.hpp"
#include "scramble/multigraph.hpp"

using namespace scramble;

TEST_CASE("family constructions have the documented shapes") {
  Multigraph c83 = make_cycle(8, 3);
  CHECK(c83.vertex_count() == 8);
  CHECK(c83.distinct_pair_count() == 8);
  for (const auto& e : c83.edges()) CHECK(e.mult == 3);

  Multigraph ll6 = make_ll6();
  CHECK(ll6.vertex_count() == 6);
  CHECK(ll6.edge_count() == 9);
  for (int v = 0; v < 6; ++v) CHECK(ll6.degree(v) == 3);

  Multigraph ct = make_ctilde(8, 2);
  std::multiset<int> mults;
  for (const auto& e : ct.edges()) mults.insert(e.mult);
  CHECK(mults == std::multiset<int>{2, 2, 2, 2, 3, 3, 3, 3});

  Multigraph w5 = make_w5();
  CHECK(w5.vertex_count() == 6);
  CHECK(w5.degree(5) == 5);
  for (int v = 0; v < 5; ++v) CHECK(w5.degree(v) == 3);

  Multigraph kc = make_k_minus_cycle(7);
  CHECK(kc.vertex_count() == 7);
  for (int v = 0; v < 7; ++v) CHECK(kc.degree(v) == 4);

  CHECK(make_banana(4).edge_count() == 4);
  CHECK_THROWS_AS(make_cycle(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_ctilde(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_ctilde(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(family("nope"), std::invalid_argument);
  CHECK_THROWS_AS(family("C", 8), std::invalid_argument);  // k missing
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(make_banana(1)) == 1);
  CHECK(edge_connectivity(Multigraph(1)) == kInfinity);
  Multigraph two(2);
  CHECK(edge_connectivity(two) == 0);

  CHECK(edge_connectivity(make_k4()) == 3);
  CHECK(edge_connectivity(make_k4()) == oracles::brute_edge_connectivity(make_k4()));
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {6, 3}, {8, 3}}) {
    Multigraph c = make_cycle(n, k);
    CHECK(edge_connectivity(c) == 2 * k);
    if (n <= 6) CHECK(edge_connectivity(c) == oracles::brute_edge_connectivity(c));
  }
}

TEST_CASE("lambda2") {
  CHECK(lambda2(make_w5()) == 4);
  CHECK(lambda2(make_cycle(4, 1)) == 2);
  CHECK(lambda2(make_p33()) == kInfinity);  // no split of 3 vertices into 2+2
  // Deletion-based oracle agrees on assorted small graphs.
  for (const auto& g : {make_w5(), make_k4(), make_cycle(5, 1), make_cycle(6, 2),
                        make_ll6(), make_k_minus_cycle(5)})
    CHECK(lambda2(g) == oracles::brute_lambda2_by_deletion(g));
}

TEST_CASE("independence number") {
  CHECK(independence_number(make_w5()) == 2);
  CHECK(independence_number(Multigraph(5)) == 5);
  CHECK(independence_number(make_k_minus_cycle(7)) == 2);
  for (const auto& g : {make_ll6(), make_cycle(6, 1), make_k4()})
    CHECK(independence_number(g) == oracles::brute_independence(g));
}

TEST_CASE("bridges") {
  Multigraph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  CHECK(bridges(path).size() == 3);

  CHECK(bridges(make_cycle(5, 2)).empty());

  // Two triangles joined by one edge: exactly the joining edge.
  Multigraph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(3, 5);
  g.add_edge(2, 3);
  auto bs = bridges(g);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0] == std::pair<int, int>{2, 3});

  // Parallel bundles never count.
  CHECK(bridges(make_banana(2)).empty());
}

TEST_CASE("bridges exist exactly when the connectivity is one") {
  for (const auto& g : enumerate_connected_multigraphs(4, 2)) {
    if (g.vertex_count() < 2) continue;
    CHECK(!bridges(g).empty() == (edge_connectivity(g) == 1));
  }
}

TEST_CASE("Menger consistency on the small universe") {
  for (const auto& g : enumerate_connected_multigraphs(4, 2)) {
    if (g.vertex_count() < 2) continue;
    int lam = edge_connectivity(g);
    int min_pair = kInfinity;
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v)
        min_pair = std::min(min_pair,
                            max_flow(g, VertexSet::single(u), VertexSet::single(v)));
    CHECK(min_pair == lam);
  }
}

TEST_CASE("connected subsets") {
  CHECK(connected_subsets(make_k4()).size() == 15);

  Multigraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  auto subs = connected_subsets(path);
  REQUIRE(subs.size() == 6);
  // Ordered by size then bit pattern; {0,2} is absent.
  CHECK(subs[0] == VertexSet::of({0}));
  CHECK(subs[3] == VertexSet::of({0, 1}));
  CHECK(subs[4] == VertexSet::of({1, 2}));
  CHECK(subs[5] == VertexSet::of({0, 1, 2}));

  // LL6's underlying cycle has the 31 arcs as connected subsets.
  CHECK(connected_subsets(make_ll6()).size() == 31);
}

TEST_CASE("canonical forms are isomorphism invariants") {
  Multigraph c = make_cycle(6, 2);
  // Vertex-transitive: any rotation relabels to the same canonical form.
  for (int shift = 1; shift < 6; ++shift) {
    std::vector<int> rot(6);
    for (int v = 0; v < 6; ++v) rot[v] = (v + shift) % 6;
    CHECK(canonical_form(c.permuted(rot)) == canonical_form(c));
  }
  CHECK(isomorphic(make_ctilde(8, 2), make_ctilde(8, 2)));
  CHECK_FALSE(isomorphic(make_p33(), make_c3221()));

  // Scrambled labelings of an asymmetric graph.
  Multigraph g(5);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(2, 4);
  g.add_edge(3, 4, 3);
  std::vector<int> perm{3, 0, 4, 2, 1};
  CHECK(canonical_form(g) == canonical_form(g.permuted(perm)));
  CHECK(isomorphic(g, g.permuted(perm)));

  // The canonical labeling lands every relabeling on the same graph.
  CHECK(canonical_graph(g.permuted(perm)) == canonical_graph(g));
  CHECK(canonical_graph(make_w5().permuted({4, 2, 0, 3, 1, 5})) ==
        canonical_graph(make_w5()));

  // Multiplicities above 127 must still order consistently.
  Multigraph fat(3);
  fat.add_edge(0, 1, 200);
  fat.add_edge(1, 2, 3);
  CHECK(canonical_form(fat) == canonical_form(fat.permuted({2, 1, 0})));
  CHECK(canonical_form(fat) == canonical_form(fat.permuted({1, 0, 2})));
  Multigraph over(2);
  over.add_edge(0, 1, 251);
  CHECK_THROWS_AS(canonical_form(over), size_bound_error);
}

TEST_CASE("enumeration matches the naive oracle") {
  auto count_exact = [](const std::vector<Multigraph>& gs, int n) {
    int c = 0;
    for (const auto& g : gs) c += g.vertex_count() == n;
    return c;
  };

  auto two = enumerate_connected_multigraphs(2, 2);
  CHECK(two.size() == 3);            // K1, K2, P2;2
  CHECK(count_exact(two, 2) == 2);   // K2 and P2;2

  auto simple3 = enumerate_connected_multigraphs(3, 1);
  CHECK(simple3.size() == 4);
  CHECK(count_exact(simple3, 3) == 2);  // P3 and C3

  auto naive = oracles::naive_enumerate_connected(4, 2);
  auto fast = enumerate_connected_multigraphs(4, 2);
  CHECK(fast.size() == naive.size());
  CHECK(fast.size() == 63);  // fixed by the naive oracle above

  // No two emitted graphs are isomorphic, and each naive class appears.
  std::set<CanonicalForm> forms;
  for (const auto& g : fast) CHECK(forms.insert(canonical_form(g)).second);
  for (const auto& g : naive) CHECK(forms.count(canonical_form(g)) == 1);
}
