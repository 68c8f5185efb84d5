#include <doctest.h>

#include "scramble/canonical.hpp"
#include "scramble/families.hpp"
#include "scramble/json_io.hpp"

using namespace scramble;
using nlohmann::json;

TEST_CASE("graph json round trip is canonical and stable") {
  for (const auto& g : {make_k4(), make_ll6(), make_ctilde(8, 2), make_w5()}) {
    json j = graph_to_json(g);
    Multigraph back = graph_from_json(j);
    CHECK(back == g);
    CHECK(canonical_dump(graph_to_json(back)) == canonical_dump(j));
  }
  // Round trip across the whole small universe.
  for (const auto& g : enumerate_connected_multigraphs(4, 2))
    CHECK(graph_from_json(graph_to_json(g)) == g);
}

TEST_CASE("graph json validation") {
  CHECK_THROWS_AS(graph_from_json(json{{"n", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[1, 0, 1]]})")),
                  std::invalid_argument);  // u >= v
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 1, 0]]})")),
                  std::invalid_argument);  // zero multiplicity
  CHECK_THROWS_AS(
      graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 1, 1], [0, 1, 2]]})")),
      std::invalid_argument);  // duplicate pair
  CHECK_THROWS_AS(
      graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 2, 1], [0, 1, 2]]})")),
      std::invalid_argument);  // unsorted
}

TEST_CASE("text edge lists") {
  Multigraph g = parse_graph_text("# triangle with one doubled edge\n0 1 2\n1 2\n0 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.multiplicity(1, 2) == 1);
  CHECK_THROWS_AS(parse_graph_text("0 0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text("zero one\n"), std::invalid_argument);
}

TEST_CASE("scramble json round trip") {
  Scramble s = make_scramble(make_ll6(), {VertexSet::of({1, 2}), VertexSet::of({3, 4}),
                                          VertexSet::of({5, 0})});
  Scramble back = scramble_from_json(scramble_to_json(s));
  CHECK(back.host == s.host);
  CHECK(back.eggs == s.eggs);
  CHECK_THROWS_AS(scramble_from_json(json::parse(R"({"eggs": []})")),
                  std::invalid_argument);
}

TEST_CASE("decomposition json round trip") {
  auto [h, d] = canonical_decomposition(CycleFamily::Ctilde, 8, 2, 1);
  TreeCutDecomposition back = decomposition_from_json(decomposition_to_json(d));
  CHECK(back.node_count == d.node_count);
  CHECK(width(h, back) == width(h, d));
  CHECK_THROWS_AS(
      decomposition_from_json(json::parse(R"({"bags": {"0": []}, "tree_links": [[0, 1]]})")),
      std::invalid_argument);
}

TEST_CASE("certificate json carries both witnesses") {
  SnCertificate cert = sn_exact(make_ll6());
  json j = certificate_to_json(cert);
  CHECK(j.at("sn") == 3);
  CHECK(j.at("lower_order").at("order") == 3);
  CHECK(j.contains("upper_witness"));
}
