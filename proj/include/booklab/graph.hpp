#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "booklab/bits.hpp"

namespace booklab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Count = std::uint64_t;

/// Largest supported vertex count.
inline constexpr int kMaxVertices = detail::kMaxRowWords * 64;

/// A subset of {0, ..., n-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::span<const Vertex> members);

  int universe() const noexcept { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  int size() const;
  bool empty() const { return size() == 0; }

  /// Members in increasing order.
  std::vector<Vertex> members() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected simple graph with bit-vector adjacency rows. Immutable; use
/// GraphBuilder or the free constructors to make new graphs.
class Graph {
 public:
  /// The graph with no vertices.
  Graph();
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  /// Takes n rows of row_words_for(n) words each; throws invalid-parameter
  /// unless they describe a simple undirected graph.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const;
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  VertexSet neighbors(Vertex v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Words per adjacency row; a power of two, 1 whenever order() <= 64.
  int row_words() const noexcept { return stride_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * stride_,
            static_cast<std::size_t>(stride_)};
  }

  /// Edge {u, v} becomes {perm[u], perm[v]}; perm must be a permutation.
  Graph relabeled(std::span<const Vertex> perm) const;
  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  /// Induced subgraph on the listed vertices, relabeled 0..k-1 in order.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int stride_ = 1;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const noexcept { return g_.n_; }
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  /// Drops every edge at v.
  GraphBuilder& isolate(Vertex v);

  const Graph& view() const noexcept { return g_; }
  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  void check_pair(Vertex u, Vertex v) const;
  void flip(Vertex u, Vertex v, bool on);
  Graph g_;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Complete t-partite graph; vertex i lies in part i mod t.
Graph turan_graph(int n, int t);
/// Disjoint union plus every edge between the two vertex sets; g1's
/// vertices come first.
Graph join(const Graph& g1, const Graph& g2);
/// Block-diagonal union; g1's vertices come first.
Graph disjoint_union(const Graph& g1, const Graph& g2);

}  // namespace booklab
