#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "booklab/graph.hpp"

namespace booklab {

/// Isomorphism-invariant key. `key` is the graph6 text of the relabeling
/// whose column-major upper-triangle bit string is lexicographically
/// smallest among the labelings reached by refinement and backtracking.
struct CanonicalForm {
  int n = 0;
  std::string key;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Largest order accepted by canonical_form.
inline constexpr int kMaxCanonicalOrder = 64;

CanonicalForm canonical_form(const Graph& g);

/// perm with g.relabeled(perm) equal to the canonical representative.
std::vector<Vertex> canonical_labeling(const Graph& g);

/// The canonical representative itself.
Graph to_graph(const CanonicalForm& form);

bool isomorphic(const Graph& a, const Graph& b);

namespace detail {

/// Largest order for which the canonical bit string fits one word.
inline constexpr int kPackedMaxOrder = 11;

/// Canonical bit string for n <= kPackedMaxOrder, MSB-aligned: pair
/// (i, j), i < j, in column-major position p sits at bit 63 - p.
std::uint64_t canonical_packed(std::span<const std::uint64_t> rows, int n);

/// Rows of the graph whose packed string is `packed`.
void unpack_rows(std::uint64_t packed, int n, std::span<std::uint64_t> rows);

}  // namespace detail

}  // namespace booklab
