#include <doctest.h>

#include <algorithm>
#include <array>

#include "grasscode/graph_io.hpp"

using namespace grasscode;

TEST_CASE("graph6 of small graphs") {
  // path 0-1-2
  EdgeList path{3, {{0, 1}, {1, 2}}};
  CHECK(to_graph6(path) == "Bg\n");
  CHECK(to_graph6(EdgeList{2, {{0, 1}}}) == "A_\n");
  CHECK(to_graph6(EdgeList{1, {}}) == "@\n");
  CHECK(to_graph6(EdgeList{0, {}}) == "?\n");
}

TEST_CASE("graph6 of Γ(4,2)_2 matches a reference encoder") {
  const Graph g = build_graph(GrassmannianParams::make(4, 2, 2), Variant::nondeg);
  // produced by networkx from an independently computed edge set
  CHECK(to_graph6(g) == "L}nPi]ntMydZ|f\n");
  CHECK(g.edge_count() == 51);
}

TEST_CASE("graph6 long header") {
  EdgeList e{100, {{0, 99}, {5, 7}, {42, 63}}};
  const std::string s = to_graph6(e);
  CHECK(s.substr(0, 8) == "~?@c????");
  CHECK(s.size() == 830);
  const EdgeList back = parse_graph6(s);
  CHECK(back.vertex_count == 100);
  CHECK(back.edges == e.edges);
}

TEST_CASE("graph6 and DIMACS round trips") {
  for (auto [q, n, k] : std::vector<std::array<int, 3>>{{2, 4, 2}, {2, 5, 2}, {3, 4, 2}, {2, 6, 3}}) {
    const Graph g = build_graph(GrassmannianParams::make(n, k, q), Variant::nondeg);
    const EdgeList expect = edge_list(g);
    const EdgeList a = parse_graph6(to_graph6(g));
    CHECK(a.vertex_count == expect.vertex_count);
    CHECK(a.edges == expect.edges);
    const EdgeList b = parse_graph6(">>graph6<<" + to_graph6(g));
    CHECK(b.edges == expect.edges);
    const EdgeList c = parse_dimacs(to_dimacs(g));
    CHECK(c.vertex_count == expect.vertex_count);
    CHECK(c.edges == expect.edges);
  }
}

TEST_CASE("DIMACS format") {
  const Graph g = build_graph(GrassmannianParams::make(4, 2, 2), Variant::nondeg);
  const std::string text = to_dimacs(g);
  CHECK(text.rfind("p edge 13 51\n", 0) == 0);
  CHECK(text.find("e 1 ") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 52);

  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 1 4\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p edge 3 2\ne 1 2\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p col 3 0\n"), Error);
  const EdgeList ok = parse_dimacs("c comment\np edge 3 1\ne 3 1\n");
  CHECK(ok.edges == std::vector<std::pair<VertexId, VertexId>>{{0, 2}});
}

TEST_CASE("graph6 parse errors") {
  CHECK_THROWS_AS(parse_graph6(""), Error);
  CHECK_THROWS_AS(parse_graph6("Bgg"), Error);
  CHECK_THROWS_AS(parse_graph6("B"), Error);
  CHECK_THROWS_AS(parse_graph6("B\x01"), Error);
}

TEST_CASE("vertex labels") {
  const Graph g = build_graph(GrassmannianParams::make(4, 2, 2), Variant::nondeg);
  const std::string labels = vertex_labels(g);
  CHECK(std::count(labels.begin(), labels.end(), '\n') == 13);
  CHECK(labels.rfind("1000,0111\n", 0) == 0);
  CHECK(labels.substr(labels.size() - 10) == "1110,0001\n");
}
