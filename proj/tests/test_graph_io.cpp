#include "doctest.h"

#include <random>

#include "booklab/error.hpp"
#include "booklab/graph_io.hpp"
#include "oracles.hpp"

using namespace booklab;

TEST_CASE("graph6 encodes K3 as Bw") {
  // n = 3 -> 'B'; bits 111 padded to 111000 = 56, + 63 = 'w'.
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(from_graph6("Bw") == complete_graph(3));
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(complete_graph(6)) == "E~~w");
}

TEST_CASE("graph6 round trip is bit exact, including long headers") {
  std::mt19937_64 rng(8);
  for (int n : {0, 1, 2, 7, 30, 62, 63, 64, 100, 300}) {
    const Graph g = oracle::random_graph(rng, n, 0.3);
    const auto text = to_graph6(g);
    CHECK(from_graph6(text) == g);
    CHECK(to_graph6(from_graph6(text)) == text);
    if (n >= 63) CHECK(text[0] == '~');
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), Error);
  CHECK_THROWS_AS(from_graph6("B"), Error);     // missing data byte
  CHECK_THROWS_AS(from_graph6("Bww"), Error);   // extra byte
  CHECK_THROWS_AS(from_graph6("B!"), Error);    // byte below 63
  CHECK_THROWS_AS(from_graph6("Bx"), Error);    // padding bit set
  CHECK(from_graph6(">>graph6<<Bw\n") == complete_graph(3));
}

TEST_CASE("edge list format") {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{2, 3}, {0, 1}});
  CHECK(to_edge_list(g) == "4\n0 1\n2 3\n");
  CHECK(from_edge_list("4\n0 1\n# comment\n\n2 3\n") == g);
  CHECK(from_edge_list("3") == Graph(3));
  CHECK_THROWS_AS(from_edge_list("3\n0 3\n"), Error);
  CHECK_THROWS_AS(from_edge_list("3\n0 0\n"), Error);
  CHECK_THROWS_AS(from_edge_list("3\n0\n"), Error);
  CHECK_THROWS_AS(from_edge_list("x"), Error);

  std::mt19937_64 rng(2);
  const Graph r = oracle::random_graph(rng, 20, 0.4);
  CHECK(from_edge_list(to_edge_list(r)) == r);
}

TEST_CASE("format auto-detection") {
  CHECK(parse_graph("Bw") == complete_graph(3));
  CHECK(parse_graph("3\n0 1\n0 2\n1 2\n") == complete_graph(3));
  CHECK(parse_graph("  Bw  ", GraphFormat::kGraph6) == complete_graph(3));
}
