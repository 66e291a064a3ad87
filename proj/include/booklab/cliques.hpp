#pragma once

#include <functional>
#include <vector>

#include "booklab/graph.hpp"

namespace booklab {

/// Number of r-vertex subsets inducing a complete graph. r = 0 gives 1.
Count count_cliques(const Graph& g, int r);

/// Number of r-cliques that contain v.
Count count_cliques_containing(const Graph& g, Vertex v, int r);

/// True iff g has at least one r-clique.
bool has_clique(const Graph& g, int r);

/// Visits each r-clique once, in lexicographic order of sorted vertex
/// lists. The visitor returns false to stop early.
void for_each_clique(const Graph& g, int r,
                     const std::function<bool(const VertexSet&)>& visit);

std::vector<VertexSet> enumerate_cliques(const Graph& g, int r);

/// Ordinary (not necessarily induced) subgraph containment of h in g.
bool contains_subgraph(const Graph& g, const Graph& h);

}  // namespace booklab
