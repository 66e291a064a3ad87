#include "doctest.h"

#include <random>

#include "booklab/canonical.hpp"
#include "booklab/cliques.hpp"
#include "booklab/constructions.hpp"
#include "booklab/error.hpp"
#include "booklab/patterns.hpp"
#include "booklab/search.hpp"
#include "oracles.hpp"

using namespace booklab;

namespace {

ForbiddenFamily k4_family() { return parse_family("B(4,1),H1,K(5)"); }

void check_witnesses(const SearchReport& rep) {
  REQUIRE_FALSE(rep.witnesses.empty());
  for (const auto& w : rep.witnesses) {
    const Graph g = to_graph(w);
    REQUIRE(g.order() == rep.n);
    REQUIRE(is_free(g, rep.family));
    REQUIRE(count_cliques(g, rep.r) == rep.maximum);
  }
}

std::uint64_t through(const Graph& g, Vertex v, int r) {
  std::uint64_t c = 0;
  for (const auto& q : oracle::cliques(g, r)) c += std::count(q.begin(), q.end(), v);
  return c;
}

}  // namespace

TEST_CASE("exact_ex examples") {
  const auto bowtie = parse_family("B(3,1)");
  for (auto engine : {Engine::kLabeledBruteForce, Engine::kCanonicalGeneration}) {
    CAPTURE(to_string(engine));
    const auto a = exact_ex(4, 3, bowtie, engine);
    CHECK(a.maximum == 4);
    CHECK(a.exhaustive);
    check_witnesses(a);
    const auto b = exact_ex(7, 3, bowtie, engine);
    CHECK(b.maximum == 5);
    check_witnesses(b);
    const auto c = exact_ex(6, 4, k4_family(), engine);
    CHECK(c.maximum == 4);
    REQUIRE(c.witnesses.size() == 1);
    CHECK(c.witnesses[0] == canonical_form(join(complete_graph(2), turan_graph(4, 2))));
    const auto d = exact_ex(5, 2, ForbiddenFamily{}, engine);
    CHECK(d.maximum == 10);
    CHECK(d.witnesses == std::vector<CanonicalForm>{canonical_form(complete_graph(5))});
    CHECK(d.engine == engine);
  }
}

TEST_CASE("labeled engine examples") {
  CHECK(brute_force_labeled(5, 3, parse_family("B(3,1)")).maximum == 4);
  CHECK(brute_force_labeled(4, 4, parse_family("B(4,1)")).maximum == 1);
  const auto k6 = brute_force_labeled(6, 4, parse_family("B(4,1)"));
  CHECK(k6.maximum == 15);
  CHECK(k6.witnesses == std::vector<CanonicalForm>{canonical_form(complete_graph(6))});
  CHECK(k6.examined == (std::uint64_t{1} << 15));
  CHECK(k6.engine == Engine::kLabeledBruteForce);
}

TEST_CASE("canonical engine examples") {
  const auto none = canonical_generation(6, 2, ForbiddenFamily{});
  CHECK(none.classes_per_order == std::vector<std::uint64_t>{1, 1, 2, 4, 11, 34, 156});
  CHECK(none.examined == 156);
  CHECK(none.strategy == "level-dedup");

  const auto a = canonical_generation(8, 3, parse_family("B(3,1)"));
  CHECK(a.maximum == 8);
  check_witnesses(a);
  const auto b = canonical_generation(8, 4, k4_family());
  CHECK(b.maximum == 9);
  CHECK(b.witnesses ==
        std::vector<CanonicalForm>{canonical_form(join(complete_graph(2), turan_graph(6, 2)))});
}

TEST_CASE("engines agree for n <= 6") {
  const std::vector<ForbiddenFamily> families{ForbiddenFamily{}, parse_family("B(3,1)"),
                                              parse_family("B(4,1)"), k4_family()};
  for (int n = 1; n <= 6; ++n)
    for (int r : {3, 4})
      for (const auto& f : families) {
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(to_string(f));
        const auto lab = brute_force_labeled(n, r, f);
        const auto can = canonical_generation(n, r, f);
        REQUIRE(lab.maximum == can.maximum);
        REQUIRE(lab.witnesses == can.witnesses);
        if (n >= r) check_witnesses(lab);
      }
}

TEST_CASE("empty family maximum is C(n, r)") {
  for (int n = 1; n <= 8; ++n)
    for (int r = 1; r <= n; ++r)
      REQUIRE(exact_ex(n, r, ForbiddenFamily{}, Engine::kCanonicalGeneration).maximum ==
              oracle::count_cliques(complete_graph(n), r));
}

TEST_CASE("Zykov: K(t+1)-free maximum is attained only by the Turan graph") {
  for (int t = 2; t <= 4; ++t)
    for (int s = 2; s <= t; ++s)
      for (int n = s; n <= 7; ++n) {
        const auto rep = exact_ex(n, s, ForbiddenFamily{}.add_clique(t + 1),
                                  Engine::kCanonicalGeneration);
        REQUIRE(rep.maximum == turan_clique_count(n, t, s));
        REQUIRE(rep.witnesses == std::vector<CanonicalForm>{canonical_form(turan_graph(n, t))});
      }
}

TEST_CASE("merged reports do not depend on the job count") {
  const auto f = parse_family("B(3,1)");
  const auto one = brute_force_labeled(7, 3, f, {.jobs = 1});
  const auto many = brute_force_labeled(7, 3, f, {.jobs = 5});
  CHECK(one.maximum == many.maximum);
  CHECK(one.witnesses == many.witnesses);
  CHECK(one.examined == many.examined);

  const auto c1 = canonical_generation(8, 4, k4_family(), {.jobs = 1});
  const auto c4 = canonical_generation(8, 4, k4_family(), {.jobs = 4});
  CHECK(c1.maximum == c4.maximum);
  CHECK(c1.witnesses == c4.witnesses);
  CHECK(c1.classes_per_order == c4.classes_per_order);
}

TEST_CASE("order caps and deadlines") {
  try {
    brute_force_labeled(8, 3, ForbiddenFamily{});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kResourceLimit);
  }
  CHECK_THROWS_AS(canonical_generation(11, 3, ForbiddenFamily{}), Error);
  CHECK_THROWS_AS(canonical_generation(12, 3, ForbiddenFamily{}, {.max_order = 12}), Error);
  CHECK_THROWS_AS(exact_ex(4, 3, ForbiddenFamily{}, Engine::kHillClimb), Error);

  const auto partial = canonical_generation(10, 3, ForbiddenFamily{}, {.max_seconds = 0.0});
  CHECK_FALSE(partial.exhaustive);
  const auto lab = brute_force_labeled(7, 3, ForbiddenFamily{}, {.max_seconds = 0.0});
  CHECK_FALSE(lab.exhaustive);
  CHECK(lab.examined < (std::uint64_t{1} << 21));
}

TEST_CASE("degenerate orders below r") {
  const auto rep = exact_ex(3, 4, k4_family(), Engine::kCanonicalGeneration);
  CHECK(rep.maximum == 0);
  CHECK(rep.witnesses == std::vector<CanonicalForm>{canonical_form(Graph(3))});
  CHECK(rep.strategy == "degenerate");
  // K(1)-free forbids every nonempty graph.
  CHECK(exact_ex(2, 3, ForbiddenFamily{}.add_clique(1), Engine::kLabeledBruteForce)
            .witnesses.empty());
}

TEST_CASE("cleanup_edges") {
  CHECK(cleanup_edges(cycle_graph(5), 4) == Graph(5));
  GraphBuilder b(5);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) b.add_edge(u, v);
  b.add_edge(3, 4);
  CHECK(cleanup_edges(b.build(), 4) == disjoint_union(complete_graph(4), Graph(1)));
  const Graph k2t2 = join(complete_graph(2), turan_graph(4, 2));
  CHECK(cleanup_edges(k2t2, 4) == k2t2);
  for (auto [u, v] : k2t2.edges()) {
    bool in_k4 = false;
    for (const auto& q : oracle::cliques(k2t2, 4))
      in_k4 = in_k4 || (std::count(q.begin(), q.end(), u) && std::count(q.begin(), q.end(), v));
    CHECK(in_k4);
  }

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 9, 0.6);
    const Graph c = cleanup_edges(g, 4);
    REQUIRE(count_cliques(c, 4) == count_cliques(g, 4));
    for (auto [u, v] : c.edges()) {
      REQUIRE(g.adjacent(u, v));
      REQUIRE(count_cliques(c.without_edge(u, v), 4) < count_cliques(c, 4));
    }
  }
}

TEST_CASE("cuv_move") {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
  CHECK(cuv_move(g, 2, 0) == Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}}));
  const Graph star = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(cuv_move(star, 0, 3) == Graph(4));
  try {
    cuv_move(g, 0, 1);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidMove);
  }
  CHECK_THROWS_AS(cuv_move(g, 2, 2), Error);
}

TEST_CASE("cuv_move clique accounting on 1000 random cases") {
  std::mt19937_64 rng(1000);
  int done = 0;
  while (done < 1000) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(rng, n, 0.65);
    const Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
    if (u == v || g.adjacent(u, v)) continue;
    const int r = 3 + static_cast<int>(rng() % 2);
    const Graph h = cuv_move(g, u, v);
    for (Vertex w = 0; w < n; ++w) {
      if (w != u) REQUIRE(h.adjacent(u, w) == g.adjacent(v, w));
      for (Vertex x = 0; x < n; ++x)
        if (w != u && x != u) REQUIRE(h.adjacent(w, x) == g.adjacent(w, x));
    }
    REQUIRE_FALSE(h.adjacent(u, v));
    REQUIRE(oracle::count_cliques(h, r) ==
            oracle::count_cliques(g, r) - through(g, u, r) + through(h, u, r));
    // u is a clone of v, so both lie in the same number of r-cliques.
    REQUIRE(through(h, u, r) == through(h, v, r));
    ++done;
  }
}

TEST_CASE("symmetrize examples") {
  const Graph k2t2 = join(complete_graph(2), turan_graph(8, 2));
  const auto a = symmetrize(k2t2, 4, k4_family());
  CHECK(a.maximum == 16);
  CHECK(a.trajectory == std::vector<Count>{16});
  CHECK(a.engine == Engine::kHillClimb);
  CHECK_FALSE(a.exhaustive);

  const auto b = symmetrize(cycle_graph(5), 4, parse_family("B(4,1)"));
  CHECK(b.maximum == 0);
  REQUIRE(b.final_graph.has_value());
  CHECK(*b.final_graph == Graph(5));

  const auto c = symmetrize(complete_graph(6), 4, parse_family("B(4,1)"));
  CHECK(c.maximum == 15);
  CHECK(*c.final_graph == complete_graph(6));

  try {
    symmetrize(complete_graph(7), 4, parse_family("B(4,1)"));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidInput);
  }
}

TEST_CASE("symmetrize output is free and strictly climbs") {
  std::mt19937_64 rng(77);
  const auto family = k4_family();
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 8 + trial % 4;
    Graph g = oracle::random_graph(rng, n, 0.5);
    while (!is_free(g, family)) {
      auto edges = g.edges();
      auto [u, v] = edges[rng() % edges.size()];
      g = g.without_edge(u, v);
    }
    const auto rep = symmetrize(g, 4, family, {.seed = 5, .restarts = 2, .jobs = 2});
    REQUIRE(rep.final_graph.has_value());
    REQUIRE(is_free(*rep.final_graph, family));
    REQUIRE(count_cliques(*rep.final_graph, 4) == rep.maximum);
    REQUIRE(rep.maximum >= count_cliques(g, 4));
    for (std::size_t k = 1; k < rep.trajectory.size(); ++k)
      REQUIRE(rep.trajectory[k] > rep.trajectory[k - 1]);
    REQUIRE(rep.trajectory.back() == rep.maximum);
    // Determinism across job counts.
    const auto again = symmetrize(g, 4, family, {.seed = 5, .restarts = 2, .jobs = 1});
    REQUIRE(*again.final_graph == *rep.final_graph);
  }
}
