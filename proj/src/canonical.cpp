#include "booklab/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <utility>

#include "booklab/error.hpp"
#include "booklab/graph_io.hpp"

namespace booklab {

namespace {

using Mask = std::uint64_t;
// Column-major upper triangle of a 64-vertex graph is 2016 bits.
using Encoding = std::array<std::uint64_t, 32>;

Mask bit(int v) { return Mask{1} << v; }

// Individualization-refinement over an ordered partition of the vertices.
// Cells are bit masks. Leaves are discrete partitions; each yields the
// column-major upper-triangle bit string of the induced labeling, and the
// smallest string wins.
class Canonizer {
 public:
  Canonizer(std::span<const Mask> rows, int n)
      : rows_(rows), n_(n), words_((n * (n - 1) / 2 + 63) / 64) {}

  std::vector<Vertex> run() {
    std::vector<Mask> cells;
    if (n_ > 0) cells.push_back(n_ == 64 ? ~Mask{0} : bit(n_) - 1);
    search(std::move(cells));
    return best_order_;
  }

  const Encoding& best() const { return best_; }

 private:
  // Splits every cell by neighbour counts into every other cell until the
  // partition is equitable. Sub-cells are ordered by increasing count, so
  // the result depends only on the incoming cell order.
  void refine(std::vector<Mask>& cells) const {
    std::array<std::pair<int, int>, 64> keyed{};
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size(); ++s) {
        const Mask splitter = cells[s];
        for (std::size_t c = 0; c < cells.size(); ++c) {
          const Mask cell = cells[c];
          if (std::popcount(cell) == 1) continue;
          int k = 0;
          for (Mask rest = cell; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            keyed[k++] = {std::popcount(rows_[v] & splitter), v};
          }
          std::sort(keyed.begin(), keyed.begin() + k);
          if (keyed[0].first == keyed[k - 1].first) continue;
          std::vector<Mask> pieces;
          Mask piece = 0;
          for (int i = 0; i < k; ++i) {
            if (i > 0 && keyed[i].first != keyed[i - 1].first) {
              pieces.push_back(piece);
              piece = 0;
            }
            piece |= bit(keyed[i].second);
          }
          pieces.push_back(piece);
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c),
                       pieces.begin(), pieces.end());
          c += pieces.size() - 1;
          changed = true;
        }
      }
    }
  }

  bool twins(int a, int b) const {
    return (rows_[a] & ~bit(b)) == (rows_[b] & ~bit(a));
  }

  void search(std::vector<Mask> cells) {
    refine(cells);
    const auto target = std::find_if(cells.begin(), cells.end(), [](Mask c) {
      return std::popcount(c) > 1;
    });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto index = target - cells.begin();
    const Mask cell = *target;
    Mask tried = 0;
    for (Mask rest = cell; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      // Swapping twins is an automorphism fixing every individualized
      // vertex, so their subtrees produce the same strings.
      bool redundant = false;
      for (Mask t = tried; t && !redundant; t &= t - 1)
        redundant = twins(v, std::countr_zero(t));
      if (redundant) continue;
      tried |= bit(v);
      std::vector<Mask> next = cells;
      next[index] = cell & ~bit(v);
      next.insert(next.begin() + index, bit(v));
      search(std::move(next));
    }
  }

  void leaf(const std::vector<Mask>& cells) {
    std::vector<Vertex> order(n_);
    for (int k = 0; k < n_; ++k) order[k] = std::countr_zero(cells[k]);
    Encoding enc{};
    int p = 0;
    for (int j = 1; j < n_; ++j) {
      const Mask row = rows_[order[j]];
      for (int i = 0; i < j; ++i, ++p)
        if (row & bit(order[i])) enc[p >> 6] |= Mask{1} << (63 - (p & 63));
    }
    if (best_order_.empty() || less(enc)) {
      best_ = enc;
      best_order_ = std::move(order);
    }
  }

  bool less(const Encoding& enc) const {
    for (int i = 0; i < words_; ++i)
      if (enc[i] != best_[i]) return enc[i] < best_[i];
    return false;
  }

  std::span<const Mask> rows_;
  int n_;
  int words_;
  Encoding best_{};
  std::vector<Vertex> best_order_;
};

std::vector<Mask> single_word_rows(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw Error(ErrorKind::kCapacityExceeded,
                "canonical forms support at most " +
                    std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                    std::to_string(g.order()));
  std::vector<Mask> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row(v)[0];
  return rows;
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
  const auto rows = single_word_rows(g);
  const auto order = Canonizer(rows, g.order()).run();
  // order[k] is the vertex placed at position k; invert it.
  std::vector<Vertex> perm(g.order());
  for (int k = 0; k < g.order(); ++k) perm[order[k]] = k;
  return perm;
}

CanonicalForm canonical_form(const Graph& g) {
  const auto perm = canonical_labeling(g);
  return {g.order(), to_graph6(g.relabeled(perm))};
}

Graph to_graph(const CanonicalForm& form) { return from_graph6(form.key); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace detail {

std::uint64_t canonical_packed(std::span<const std::uint64_t> rows, int n) {
  if (n > kPackedMaxOrder)
    throw Error(ErrorKind::kCapacityExceeded,
                "packed canonical strings support at most " +
                    std::to_string(kPackedMaxOrder) + " vertices");
  Canonizer c(rows.first(static_cast<std::size_t>(n)), n);
  c.run();
  return c.best()[0];
}

void unpack_rows(std::uint64_t packed, int n, std::span<std::uint64_t> rows) {
  for (int v = 0; v < n; ++v) rows[v] = 0;
  int p = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++p)
      if ((packed >> (63 - p)) & 1U) {
        rows[i] |= Mask{1} << j;
        rows[j] |= Mask{1} << i;
      }
}

}  // namespace detail

}  // namespace booklab
