#include "booklab/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "booklab/error.hpp"

namespace booklab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kCapacityExceeded: return "capacity-exceeded";
    case ErrorKind::kUnsupportedRegime: return "unsupported-regime";
    case ErrorKind::kInvalidMove: return "invalid-move";
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kResourceLimit: return "resource-limit";
    case ErrorKind::kParse: return "parse-error";
  }
  return "error";
}

namespace {

int words_for_universe(int n) { return n <= 0 ? 0 : (n + 63) / 64; }

void check_order(int n) {
  if (n < 0)
    throw Error(ErrorKind::kInvalidParameter, "negative vertex count");
  if (n > kMaxVertices)
    throw Error(ErrorKind::kCapacityExceeded,
                "vertex count " + std::to_string(n) + " exceeds cap " +
                    std::to_string(kMaxVertices));
}

}  // namespace

// VertexSet

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(words_for_universe(universe), 0) {}

VertexSet::VertexSet(int universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[v >> 6] >> (v & 63)) & 1U;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_)
    throw Error(ErrorKind::kInvalidParameter,
                "vertex " + std::to_string(v) + " outside set universe");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= universe_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
  VertexSet out(std::min(a.universe_, b.universe_));
  for (std::size_t i = 0; i < out.words_.size(); ++i)
    out.words_[i] = a.words_[i] & b.words_[i];
  return out;
}

// Graph

Graph::Graph() : Graph(0) {}

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
  stride_ = detail::row_words_for(n);
  bits_.assign(static_cast<std::size_t>(n) * stride_, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
  Graph g(n);
  if (rows.size() != g.bits_.size())
    throw Error(ErrorKind::kInvalidParameter, "row buffer size mismatch");
  std::copy(rows.begin(), rows.end(), g.bits_.begin());
  for (Vertex u = 0; u < n; ++u) {
    if (g.adjacent(u, u))
      throw Error(ErrorKind::kInvalidParameter,
                  "self-loop at vertex " + std::to_string(u));
    const auto r = g.row(u);
    for (int w = 0; w < g.stride_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        const int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (v >= n || !g.adjacent(v, u))
          throw Error(ErrorKind::kInvalidParameter,
                      "rows are not a symmetric adjacency on " +
                          std::to_string(n) + " vertices");
      }
    }
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (row(u)[v >> 6] >> (v & 63)) & 1U;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet s(n_);
  for (Vertex u = 0; u < n_; ++u)
    if (adjacent(v, u)) s.insert(u);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw Error(ErrorKind::kInvalidParameter, "permutation size mismatch");
  std::vector<char> seen(n_, 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= n_ || seen[p])
      throw Error(ErrorKind::kInvalidParameter, "not a permutation");
    seen[p] = 1;
  }
  GraphBuilder b(n_);
  for (auto [u, v] : edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  GraphBuilder b(*this);
  b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  GraphBuilder b(*this);
  b.remove_edge(u, v);
  return std::move(b).build();
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  GraphBuilder b(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j]))
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

// GraphBuilder

GraphBuilder::GraphBuilder(int n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
    throw Error(ErrorKind::kInvalidParameter,
                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") out of range for order " + std::to_string(g_.n_));
  if (u == v)
    throw Error(ErrorKind::kInvalidParameter,
                "self-loop at vertex " + std::to_string(u));
}

void GraphBuilder::flip(Vertex u, Vertex v, bool on) {
  auto set = [&](Vertex a, Vertex b) {
    auto& word = g_.bits_[static_cast<std::size_t>(a) * g_.stride_ + (b >> 6)];
    const auto mask = std::uint64_t{1} << (b & 63);
    word = on ? (word | mask) : (word & ~mask);
  };
  set(u, v);
  set(v, u);
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  flip(u, v, true);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  flip(u, v, false);
  return *this;
}

GraphBuilder& GraphBuilder::isolate(Vertex v) {
  for (Vertex u = 0; u < g_.n_; ++u)
    if (u != v && g_.adjacent(u, v)) flip(u, v, false);
  return *this;
}

// Constructors

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::kInvalidParameter, "cycle needs n >= 3");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return std::move(b).build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return std::move(b).build();
}

Graph turan_graph(int n, int t) {
  if (t < 1)
    throw Error(ErrorKind::kInvalidParameter,
                "turan_graph needs at least one part, got t=" +
                    std::to_string(t));
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u % t != v % t) b.add_edge(u, v);
  return std::move(b).build();
}

namespace {

void check_sum(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > kMaxVertices)
    throw Error(ErrorKind::kCapacityExceeded,
                "combined order " + std::to_string(a.order() + b.order()) +
                    " exceeds vertex cap " + std::to_string(kMaxVertices));
}

GraphBuilder place_side_by_side(const Graph& g1, const Graph& g2) {
  check_sum(g1, g2);
  const int off = g1.order();
  GraphBuilder b(off + g2.order());
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(u + off, v + off);
  return b;
}

}  // namespace

Graph join(const Graph& g1, const Graph& g2) {
  GraphBuilder b = place_side_by_side(g1, g2);
  const int off = g1.order();
  for (Vertex u = 0; u < off; ++u)
    for (Vertex v = 0; v < g2.order(); ++v) b.add_edge(u, v + off);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  return place_side_by_side(g1, g2).build();
}

}  // namespace booklab
