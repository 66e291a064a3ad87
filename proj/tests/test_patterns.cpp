#include "doctest.h"

#include <random>

#include "booklab/cliques.hpp"
#include "booklab/constructions.hpp"
#include "booklab/error.hpp"
#include "booklab/patterns.hpp"
#include "booklab/search.hpp"
#include "oracles.hpp"

using namespace booklab;

namespace {

Graph bowtie() { return book_pattern_graph(BookSpec::make(3, 1)); }

void check_witness(const Graph& g, const BookSpec& spec, const CliqueWitness& w) {
  const auto a = w.first.members(), b = w.second.members();
  REQUIRE(static_cast<int>(a.size()) == spec.r);
  REQUIRE(static_cast<int>(b.size()) == spec.r);
  REQUIRE(oracle::is_clique(g, a));
  REQUIRE(oracle::is_clique(g, b));
  REQUIRE((w.first & w.second).size() == spec.s);
  REQUIRE(w.overlap == spec.s);
}

}  // namespace

TEST_CASE("book_pattern_graph") {
  const Graph b31 = bowtie();
  CHECK(b31.order() == 5);
  CHECK(b31.edge_count() == 6);
  const Graph b42 = book_pattern_graph(BookSpec::make(4, 2));
  CHECK(b42.order() == 6);
  CHECK(b42.edge_count() == 11);
  CHECK(isomorphic(book_pattern_graph(BookSpec::make(4, 0)),
                   disjoint_union(complete_graph(4), complete_graph(4))));
  CHECK(count_cliques(book_pattern_graph(BookSpec::make(5, 2)), 5) == 2);
  CHECK_THROWS_AS(BookSpec::make(3, 3), Error);
  CHECK_THROWS_AS(BookSpec::make(1, 0), Error);
  CHECK_THROWS_AS(BookSpec::make(3, -1), Error);
}

TEST_CASE("book_violation examples") {
  const auto spec = BookSpec::make(4, 1);
  const auto w = book_violation(complete_graph(7), spec);
  REQUIRE(w.has_value());
  check_witness(complete_graph(7), spec, *w);
  CHECK(w->first.members() == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(w->second.members() == std::vector<Vertex>{0, 4, 5, 6});
  CHECK_FALSE(book_violation(complete_graph(5), spec).has_value());
  CHECK_FALSE(book_violation(join(complete_graph(2), turan_graph(6, 2)), spec).has_value());
}

TEST_CASE("book_violation honours the clique cap") {
  try {
    book_violation(complete_graph(12), BookSpec::make(4, 0), 100);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kResourceLimit);
  }
}

TEST_CASE("is_free examples") {
  ForbiddenFamily bowtie_free;
  bowtie_free.add_book(3, 1);
  CHECK(is_free(cycle_graph(5), bowtie_free));
  CHECK_FALSE(is_free(bowtie(), bowtie_free));
  CHECK(is_free(disjoint_union(complete_graph(4), complete_graph(4)), bowtie_free));
  CHECK(is_free(complete_graph(9), ForbiddenFamily{}));

  ForbiddenFamily k5;
  k5.add_clique(5);
  CHECK(is_free(complete_graph(4), k5));
  CHECK_FALSE(is_free(complete_graph(5), k5));
}

TEST_CASE("H1 matches its drawing") {
  const Graph h1 = h1_graph();
  enum { h, i, j, k, l, m, n };
  CHECK(h1.order() == 7);
  CHECK(h1.edge_count() == 15);
  const std::vector<Edge> non_edges{{h, l}, {h, m}, {h, n}, {i, n}, {j, l}, {l, n}};
  std::vector<Edge> missing;
  for (Vertex u = 0; u < 7; ++u)
    for (Vertex v = u + 1; v < 7; ++v)
      if (!h1.adjacent(u, v)) missing.emplace_back(u, v);
  CHECK(missing == non_edges);
  CHECK(oracle::count_cliques(h1, 4) == 4);
  CHECK(count_cliques(h1, 4) == 4);
  const std::vector<std::vector<Vertex>> quads{{h, i, j, k}, {i, j, k, m}, {i, k, l, m}, {j, k, m, n}};
  CHECK(oracle::cliques(h1, 4) == quads);
  CHECK(is_free(h1, ForbiddenFamily{}.add_book(4, 1)));
  CHECK_FALSE(has_clique(h1, 5));
}

TEST_CASE("H2 matches its drawing") {
  const Graph h2 = h2_graph();
  CHECK(h2.order() == 6);
  CHECK(h2.edge_count() == 13);
  CHECK(oracle::count_cliques(h2, 5) == 1);
  CHECK(oracle::count_cliques(h2, 4) == 6);
  CHECK(count_cliques(h2, 4) == 6);
  CHECK(oracle::cliques(h2, 5) == std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}});
  for (Vertex v : {0, 1}) CHECK_FALSE(h2.adjacent(5, v));
  for (Vertex v : {2, 3, 4}) CHECK(h2.adjacent(5, v));
}

TEST_CASE("book_violation agrees with subgraph containment on all graphs up to 7 vertices") {
  std::vector<BookSpec> specs;
  for (int r = 2; r <= 7; ++r)
    for (int s = 0; s < r; ++s)
      if (2 * r - s <= 7) specs.push_back(BookSpec::make(r, s));
  std::vector<Graph> patterns;
  for (const auto& spec : specs) patterns.push_back(book_pattern_graph(spec));

  // Every labeled graph up to 6 vertices, and every class on 7.
  std::vector<Graph> graphs;
  for (int n = 0; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
      graphs.push_back(oracle::from_mask(n, mask));
  }
  const auto seven = exact_ex(7, 0, ForbiddenFamily{}, Engine::kCanonicalGeneration);
  REQUIRE(seven.witnesses.size() == 1044);
  for (const auto& form : seven.witnesses) graphs.push_back(to_graph(form));

  for (const auto& g : graphs)
    for (std::size_t k = 0; k < specs.size(); ++k) {
      const auto w = book_violation(g, specs[k]);
      REQUIRE(w.has_value() == contains_subgraph(g, patterns[k]));
      if (w) check_witness(g, specs[k], *w);
    }
  // Oracle spot check on a slice.
  for (std::size_t idx = 0; idx < graphs.size(); idx += 97)
    for (const auto& spec : specs)
      REQUIRE(book_violation(graphs[idx], spec).has_value() ==
              oracle::has_book(graphs[idx], spec.r, spec.s));
}

TEST_CASE("freeness is monotone under edge deletion") {
  std::mt19937_64 rng(31);
  const auto family = parse_family("B(3,1),B(4,2),K(5)");
  int free_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 8, 0.35);
    if (!is_free(g, family)) continue;
    ++free_seen;
    for (auto [u, v] : g.edges()) REQUIRE(is_free(g.without_edge(u, v), family));
  }
  CHECK(free_seen > 20);
}

TEST_CASE("family parser") {
  const auto f = parse_family(" B(4,1), H1 ,K(5)");
  CHECK(f.books == std::vector<BookSpec>{BookSpec::make(4, 1)});
  REQUIRE(f.patterns.size() == 2);
  CHECK(f.patterns[0].name == "H1");
  CHECK(f.patterns[0].graph == h1_graph());
  CHECK(f.patterns[1].graph == complete_graph(5));
  CHECK(to_string(f) == "B(4,1),H1,K(5)");
  CHECK(to_string(parse_family(to_string(f))) == to_string(f));
  CHECK(parse_family("").empty());
  CHECK(parse_family("none").empty());
  CHECK(parse_family("H2").patterns[0].graph == h2_graph());

  for (const char* bad : {"B(3,3)", "B(4,5)", "K(0)", "B(4)", "B(4,1", "X", "B(4,1),,H1", "H3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_family(bad), Error);
  }
  try {
    parse_family("B(3,3)");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("s < r") != std::string::npos);
  }
}
