#pragma once

// Width-specialized clique kernels shared by the graph, pattern and search
// sources. Not installed.

#include <vector>

#include "booklab/bits.hpp"
#include "booklab/graph.hpp"

namespace booklab::detail {

template <int W>
std::vector<Bits<W>> load_rows(const Graph& g) {
  std::vector<Bits<W>> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = Bits<W>::load(g.row(v));
  return rows;
}

/// cand holds the common neighbours of the current clique that exceed its
/// largest vertex.
template <int W>
Count count_extensions(const std::vector<Bits<W>>& rows, Bits<W> cand,
                       int remaining) {
  if (remaining == 0) return 1;
  if (remaining == 1) return static_cast<Count>(cand.count());
  Count total = 0;
  while (cand.count() >= remaining) {
    const int v = cand.pop_first();
    total += count_extensions(rows, cand & rows[v], remaining - 1);
  }
  return total;
}

template <int W, class F>
bool visit_extensions(const std::vector<Bits<W>>& rows, Bits<W>& clique,
                      Bits<W> cand, int remaining, F& visit) {
  if (remaining == 0) return visit(static_cast<const Bits<W>&>(clique));
  while (cand.count() >= remaining) {
    const int v = cand.pop_first();
    clique.set(v);
    const bool go = visit_extensions(rows, clique, cand & rows[v],
                                     remaining - 1, visit);
    clique.reset(v);
    if (!go) return false;
  }
  return true;
}

/// Calls visit(const Bits<W>&) on each r-clique (r >= 1) in lexicographic
/// order; visit returns false to stop. Returns false if stopped.
template <int W, class F>
bool visit_cliques(const std::vector<Bits<W>>& rows, int r, F&& visit) {
  const int n = static_cast<int>(rows.size());
  Bits<W> clique;
  return visit_extensions(rows, clique, Bits<W>::range_from(0, n), r, visit);
}

template <int W>
Count count_cliques_rows(const std::vector<Bits<W>>& rows, int r) {
  const int n = static_cast<int>(rows.size());
  if (r < 0 || r > n) return r == 0 ? 1 : 0;
  return count_extensions(rows, Bits<W>::range_from(0, n), r);
}

template <int W>
VertexSet to_vertex_set(const Bits<W>& b, int n) {
  VertexSet s(n);
  Bits<W> c = b;
  while (c.any()) s.insert(c.pop_first());
  return s;
}

}  // namespace booklab::detail
