#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "booklab/graph.hpp"

namespace booklab {

/// Two r-cliques sharing exactly s vertices.
struct BookSpec {
  int r = 2;
  int s = 0;

  /// Throws invalid-parameter unless r >= 2 and 0 <= s < r.
  static BookSpec make(int r, int s);

  friend bool operator==(const BookSpec&, const BookSpec&) = default;
};

struct NamedPattern {
  std::string name;
  Graph graph;
};

/// Conjunctive family: free means free of every member. Empty means no
/// restriction.
struct ForbiddenFamily {
  std::vector<BookSpec> books;
  std::vector<NamedPattern> patterns;

  bool empty() const { return books.empty() && patterns.empty(); }

  ForbiddenFamily& add_book(int r, int s);
  ForbiddenFamily& add_clique(int m);
  ForbiddenFamily& add_pattern(std::string name, Graph g);
};

/// "B(4,1),H1,K(5)" style rendering, round-trips through parse_family.
std::string to_string(const ForbiddenFamily& family);

/// Parses the comma-separated family language:
///
///   family := "" | "none" | term ("," term)*
///   term   := "B(" r "," s ")" | "K(" m ")" | "H1" | "H2"
///
/// Whitespace is ignored. Rejects s >= r and m < 1.
ForbiddenFamily parse_family(std::string_view text);

struct CliqueWitness {
  VertexSet first;
  VertexSet second;
  int overlap = 0;
};

/// Cap on stored cliques during book detection.
inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

Graph book_pattern_graph(const BookSpec& spec);

/// First pair of r-cliques (in lexicographic scan order) meeting in exactly
/// s vertices. Throws resource-limit if g has more than clique_cap r-cliques.
std::optional<CliqueWitness> book_violation(
    const Graph& g, const BookSpec& spec,
    std::size_t clique_cap = kDefaultCliqueCap);

bool is_free(const Graph& g, const ForbiddenFamily& family);

/// Seven vertices h..n = 0..6: the union of K4's on {h,i,j,k}, {i,j,k,m},
/// {i,k,l,m}, {j,k,m,n}.
Graph h1_graph();
/// Six vertices a..f = 0..5: K5 on {a,b,c,d,e} with f joined to c, d, e.
Graph h2_graph();

}  // namespace booklab
