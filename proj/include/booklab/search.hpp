#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "booklab/canonical.hpp"
#include "booklab/graph.hpp"
#include "booklab/patterns.hpp"

namespace booklab {

enum class Engine { kLabeledBruteForce, kCanonicalGeneration, kHillClimb };

/// "labeled-brute-force", "canonical-generation", "hill-climb".
const char* to_string(Engine engine) noexcept;
/// Accepts the full names and the short forms "labeled" / "canonical".
Engine parse_engine(std::string_view name);

inline constexpr int kLabeledDefaultMaxOrder = 7;
inline constexpr int kCanonicalDefaultMaxOrder = 10;
/// Hard limit of the canonical engine (packed keys).
inline constexpr int kCanonicalHardMaxOrder = detail::kPackedMaxOrder;

struct SearchOptions {
  /// Worker threads for the exhaustive engines and climb restarts.
  int jobs = 1;
  /// Soft deadline; an expired search returns a partial report with
  /// exhaustive = false.
  std::optional<double> max_seconds;
  /// Overrides the engine's default order cap.
  std::optional<int> max_order;
};

struct SearchReport {
  int n = 0;
  int r = 0;
  ForbiddenFamily family;
  Count maximum = 0;
  /// Sorted and deduplicated.
  std::vector<CanonicalForm> witnesses;
  /// Labeled graphs (labeled engine), classes at the final order
  /// (canonical engine), or candidate moves evaluated (hill climb).
  std::uint64_t examined = 0;
  Engine engine = Engine::kCanonicalGeneration;
  bool exhaustive = false;
  /// How the engine ran, e.g. "level-dedup" for canonical generation.
  std::string strategy;
  double wall_ms = 0;
  /// Canonical engine: family-free classes per order 0..n.
  std::vector<std::uint64_t> classes_per_order;
  /// Hill climb: clique count of the input followed by the count after
  /// each accepted move.
  std::vector<Count> trajectory;
  /// Hill climb: the final graph in the input's labeling (witnesses hold
  /// its canonical form when the order allows one).
  std::optional<Graph> final_graph;
};

/// ex(n, K_r, family) by the chosen exhaustive engine. For n < r the
/// maximum is 0 and the edgeless graph (when family-free) is the witness.
SearchReport exact_ex(int n, int r, const ForbiddenFamily& family,
                      Engine engine, const SearchOptions& options = {});

/// Sweeps all 2^C(n,2) labeled graphs.
SearchReport brute_force_labeled(int n, int r, const ForbiddenFamily& family,
                                 const SearchOptions& options = {});

/// Grows family-free isomorphism classes one vertex at a time, keeping one
/// canonical representative per class at each order. Valid because every
/// supported family is closed under taking subgraphs.
SearchReport canonical_generation(int n, int r, const ForbiddenFamily& family,
                                  const SearchOptions& options = {});

/// Repeatedly deletes edges lying in no r-clique.
Graph cleanup_edges(const Graph& g, int r);

/// Zykov symmetrization C_{uv}: u takes v's neighbourhood. Requires u != v
/// and uv not an edge; throws invalid-move otherwise.
Graph cuv_move(const Graph& g, Vertex u, Vertex v);

struct ClimbOptions {
  std::uint64_t seed = 0;
  /// Run 0 climbs the input as given; runs 1.. climb seeded random
  /// relabelings of it. The best final count wins, earliest run on ties.
  int restarts = 1;
  int jobs = 1;
  /// Safety valve on accepted moves per run.
  int max_moves = 100000;
};

/// Hill climbing by edge cleanup and single / paired C_{uv} moves that keep
/// the graph family-free and strictly raise the r-clique count. Throws
/// invalid-input if g is not family-free.
SearchReport symmetrize(const Graph& g, int r, const ForbiddenFamily& family,
                        const ClimbOptions& options = {});

}  // namespace booklab
