#pragma once

#include "booklab/graph.hpp"
#include "booklab/partitions.hpp"

namespace booklab {

/// K_{s+1} joined with T_{r-s-1}(n-s-1). B(r,s)-free when r >= 2s+1:
/// every r-clique contains the whole K_{s+1}.
Graph book_extremal(int n, int r, int s);

/// floor(n/4) disjoint K4's plus one clique on the n mod 4 leftovers.
Graph k4_packing(int n);

/// Triangle count of k4_packing(n): n, n-1, n-2, n-2 for n mod 4 = 0..3.
Count k4_packing_value(int n);

/// Parts X_1..X_t as in turan_graph(n, t) (vertex v in part v mod t). Part
/// X_i holds floor(|X_i|/a_i) disjoint K_{a_i} blocks; its leftover vertices
/// have no edges inside the part. Every cross-part pair is an edge.
/// Throws invalid-parameter naming an offending subset when p is not
/// s-sum-free.
Graph gp_construction(int n, const Partition& p, int s);

/// prod_i floor(|X_i| / a_i) with the exact part sizes used above.
Count gp_predicted_count(int n, const Partition& p);

/// n = 6m + t, 0 <= t <= 5: m disjoint triangles on 3m vertices, all joined
/// to an independent set of 3m + t vertices. B(4,2)-free.
Graph b42_construction(int n);

/// m(3m + t) for n = 6m + t.
Count b42_predicted_count(int n);

/// N(K_s, T_t(n)): sum over s-sets of parts of the product of their sizes.
Count turan_clique_count(int n, int t, int s);

}  // namespace booklab
