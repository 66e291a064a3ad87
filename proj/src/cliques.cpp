#include "booklab/cliques.hpp"

#include <algorithm>
#include <numeric>

#include "kernels.hpp"

namespace booklab {

using detail::Bits;
using detail::dispatch_width;

Count count_cliques(const Graph& g, int r) {
  if (r == 0) return 1;
  if (r < 0 || r > g.order()) return 0;
  return dispatch_width(g.row_words(), [&](auto w) -> Count {
    constexpr int W = decltype(w)::value;
    return detail::count_cliques_rows(detail::load_rows<W>(g), r);
  });
}

Count count_cliques_containing(const Graph& g, Vertex v, int r) {
  if (r <= 0 || r > g.order() || v < 0 || v >= g.order()) return 0;
  return dispatch_width(g.row_words(), [&](auto w) -> Count {
    constexpr int W = decltype(w)::value;
    const auto rows = detail::load_rows<W>(g);
    return detail::count_extensions(rows, rows[v], r - 1);
  });
}

bool has_clique(const Graph& g, int r) {
  if (r <= 0) return true;
  if (r > g.order()) return false;
  return dispatch_width(g.row_words(), [&](auto w) {
    constexpr int W = decltype(w)::value;
    const auto rows = detail::load_rows<W>(g);
    return !detail::visit_cliques(rows, r, [](const Bits<W>&) { return false; });
  });
}

void for_each_clique(const Graph& g, int r,
                     const std::function<bool(const VertexSet&)>& visit) {
  if (r < 1 || r > g.order()) return;
  dispatch_width(g.row_words(), [&](auto w) {
    constexpr int W = decltype(w)::value;
    const auto rows = detail::load_rows<W>(g);
    detail::visit_cliques(rows, r, [&](const Bits<W>& c) {
      return visit(detail::to_vertex_set(c, g.order()));
    });
  });
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, int r) {
  std::vector<VertexSet> out;
  for_each_clique(g, r, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

namespace {

template <int W>
class SubgraphMatcher {
 public:
  SubgraphMatcher(const Graph& g, const Graph& h)
      : rows_(detail::load_rows<W>(g)), g_(g), h_(h) {
    const int k = h.order();
    // Most-constrained-first: each next pattern vertex has the most
    // already-placed neighbours, ties broken by degree then index.
    std::vector<char> placed(k, 0);
    for (int step = 0; step < k; ++step) {
      int best = -1, best_links = -1, best_deg = -1;
      for (Vertex x = 0; x < k; ++x) {
        if (placed[x]) continue;
        int links = 0;
        for (Vertex y : order_) links += h.adjacent(x, y) ? 1 : 0;
        const int deg = h.degree(x);
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = x;
          best_links = links;
          best_deg = deg;
        }
      }
      placed[best] = 1;
      std::vector<int> back;
      for (int i = 0; i < step; ++i)
        if (h.adjacent(best, order_[i])) back.push_back(i);
      order_.push_back(best);
      back_links_.push_back(std::move(back));
    }
    image_.assign(k, -1);
    degree_ok_.resize(k);
    for (int i = 0; i < k; ++i) {
      const int need = h.degree(order_[i]);
      for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) >= need) degree_ok_[i].set(v);
    }
  }

  bool run() { return place(0, Bits<W>{}); }

 private:
  bool place(int i, const Bits<W>& used) {
    if (i == h_.order()) return true;
    Bits<W> cand = degree_ok_[i].and_not(used);
    for (int j : back_links_[i]) cand &= rows_[image_[j]];
    while (cand.any()) {
      const int v = cand.pop_first();
      image_[i] = v;
      Bits<W> next = used;
      next.set(v);
      if (place(i + 1, next)) return true;
    }
    return false;
  }

  std::vector<Bits<W>> rows_;
  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> order_;
  std::vector<std::vector<int>> back_links_;
  std::vector<Bits<W>> degree_ok_;
  std::vector<int> image_;
};

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return false;
  if (h.edge_count() > g.edge_count()) return false;
  if (h.order() == 0) return true;
  return dispatch_width(g.row_words(), [&](auto w) {
    constexpr int W = decltype(w)::value;
    return SubgraphMatcher<W>(g, h).run();
  });
}

}  // namespace booklab
