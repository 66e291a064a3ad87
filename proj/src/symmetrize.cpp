#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

#include "booklab/cliques.hpp"
#include "booklab/error.hpp"
#include "booklab/search.hpp"
#include "kernels.hpp"

namespace booklab {

using detail::Bits;

Graph cleanup_edges(const Graph& g, int r) {
  Graph current = g;
  while (true) {
    std::vector<Edge> dead;
    detail::dispatch_width(current.row_words(), [&](auto w) {
      constexpr int W = decltype(w)::value;
      const auto rows = detail::load_rows<W>(current);
      for (auto [u, v] : current.edges()) {
        const bool used =
            r >= 2 && detail::count_extensions(rows, rows[u] & rows[v], r - 2) > 0;
        if (!used) dead.emplace_back(u, v);
      }
    });
    if (dead.empty()) return current;
    GraphBuilder b(current);
    for (auto [u, v] : dead) b.remove_edge(u, v);
    current = std::move(b).build();
  }
}

Graph cuv_move(const Graph& g, Vertex u, Vertex v) {
  const int n = g.order();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw Error(ErrorKind::kInvalidMove, "C_uv: vertex out of range");
  if (u == v) throw Error(ErrorKind::kInvalidMove, "C_uv needs u != v");
  if (g.adjacent(u, v))
    throw Error(ErrorKind::kInvalidMove,
                "C_uv needs a non-edge, but " + std::to_string(u) + "-" +
                    std::to_string(v) + " is an edge");
  GraphBuilder b(g);
  b.isolate(u);
  for (Vertex w = 0; w < n; ++w)
    if (g.adjacent(v, w)) b.add_edge(u, w);
  return std::move(b).build();
}

namespace {

template <int W>
class Climber {
 public:
  Climber(const Graph& g, int r, const ForbiddenFamily& family, int max_moves)
      : n_(g.order()),
        r_(r),
        family_(family),
        max_moves_(max_moves),
        rows_(detail::load_rows<W>(g)) {}

  void run() {
    Count current = detail::count_cliques_rows(rows_, r_);
    trajectory_.push_back(current);
    for (int moves = 0; moves < max_moves_; ++moves) {
      cleanup();
      auto next = best_single(current);
      if (!next) next = best_paired(current);
      if (!next) break;
      rows_ = std::move(next->rows);
      current = next->count;
      trajectory_.push_back(current);
    }
  }

  Graph graph() const { return to_graph(rows_); }
  const std::vector<Count>& trajectory() const { return trajectory_; }
  std::uint64_t examined() const { return examined_; }

 private:
  using Rows = std::vector<Bits<W>>;

  struct Candidate {
    Count count;
    std::size_t order;  // scan position; smaller wins ties
    Rows rows;
  };

  Graph to_graph(const Rows& rows) const {
    std::vector<std::uint64_t> flat;
    flat.reserve(rows.size() * W);
    for (const auto& row : rows) flat.insert(flat.end(), row.w.begin(), row.w.end());
    return Graph::from_rows(n_, flat);
  }

  Count containing(const Rows& rows, int v) const {
    if (r_ < 1) return 0;
    return detail::count_extensions(rows, rows[v], r_ - 1);
  }

  static void clone(Rows& rows, int u, int v) {
    for (auto& row : rows) row.reset(u);
    rows[u] = rows[v];
    for (Bits<W> rest = rows[v]; rest.any();) rows[rest.pop_first()].set(u);
  }

  void cleanup() {
    if (r_ < 2) {
      for (auto& row : rows_) row = Bits<W>{};
      return;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (int u = 0; u < n_; ++u) {
        Bits<W> higher = rows_[u] & Bits<W>::range_from(u + 1, n_);
        while (higher.any()) {
          const int v = higher.pop_first();
          if (detail::count_extensions(rows_, rows_[u] & rows_[v], r_ - 2) == 0) {
            rows_[u].reset(v);
            rows_[v].reset(u);
            changed = true;
          }
        }
      }
    }
  }

  // First family-free candidate in (count desc, scan order asc) order.
  std::optional<Candidate> pick(std::vector<Candidate>& improving) const {
    std::sort(improving.begin(), improving.end(),
              [](const Candidate& a, const Candidate& b) {
                return a.count != b.count ? a.count > b.count : a.order < b.order;
              });
    for (auto& c : improving)
      if (is_free(to_graph(c.rows), family_)) return std::move(c);
    return std::nullopt;
  }

  // C_uv changes the count by k(v) - k(u).
  std::optional<Candidate> best_single(Count current) {
    std::vector<Count> k(n_);
    for (int v = 0; v < n_; ++v) k[v] = containing(rows_, v);
    std::vector<Candidate> improving;
    std::size_t order = 0;
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v, ++order) {
        if (u == v || rows_[u].test(v)) continue;
        ++examined_;
        const Count after = current - k[u] + k[v];
        if (after <= current) continue;
        Rows moved = rows_;
        clone(moved, u, v);
        improving.push_back({after, order, std::move(moved)});
      }
    }
    return pick(improving);
  }

  // C_xy(C_zy(G)): x and z both become clones of y. Symmetric in x, z.
  std::optional<Candidate> best_paired(Count current) {
    std::vector<Candidate> improving;
    std::size_t order = 0;
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        if (y == x || rows_[x].test(y)) continue;
        for (int z = x + 1; z < n_; ++z, ++order) {
          if (z == y || rows_[z].test(y)) continue;
          ++examined_;
          Rows first = rows_;
          clone(first, z, y);
          const Count middle =
              current - containing(rows_, z) + containing(rows_, y);
          const Count after =
              middle - containing(first, x) + containing(first, y);
          if (after <= current) continue;
          clone(first, x, y);
          improving.push_back({after, order, std::move(first)});
        }
      }
    }
    return pick(improving);
  }

  int n_;
  int r_;
  const ForbiddenFamily& family_;
  int max_moves_;
  Rows rows_;
  std::vector<Count> trajectory_;
  std::uint64_t examined_ = 0;
};

struct RunResult {
  Graph graph;
  std::vector<Count> trajectory;
  std::uint64_t examined = 0;
};

RunResult climb_once(const Graph& g, int r, const ForbiddenFamily& family,
                     int max_moves) {
  return detail::dispatch_width(g.row_words(), [&](auto w) {
    constexpr int W = decltype(w)::value;
    Climber<W> climber(g, r, family, max_moves);
    climber.run();
    return RunResult{climber.graph(), climber.trajectory(), climber.examined()};
  });
}

}  // namespace

SearchReport symmetrize(const Graph& g, int r, const ForbiddenFamily& family,
                        const ClimbOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (r < 0) throw Error(ErrorKind::kInvalidParameter, "r must be non-negative");
  if (!is_free(g, family))
    throw Error(ErrorKind::kInvalidInput,
                "symmetrize needs a family-free starting graph (family " +
                    to_string(family) + ")");
  const int runs = std::max(1, options.restarts);

  // Run k > 0 climbs a relabeling drawn k-th from one seeded stream, so the
  // outcome does not depend on the number of workers.
  std::vector<std::vector<Vertex>> perms(runs);
  std::mt19937_64 rng(options.seed);
  for (int k = 0; k < runs; ++k) {
    perms[k].resize(g.order());
    std::iota(perms[k].begin(), perms[k].end(), 0);
    if (k > 0) std::shuffle(perms[k].begin(), perms[k].end(), rng);
  }

  std::vector<std::optional<RunResult>> results(runs);
  const int jobs = std::clamp(options.jobs, 1, runs);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](int w) {
    try {
      for (int k = w; k < runs; k += jobs) {
        const Graph start_graph = k == 0 ? g : g.relabeled(perms[k]);
        auto res = climb_once(start_graph, r, family, options.max_moves);
        if (k > 0) {
          std::vector<Vertex> inverse(g.order());
          for (int v = 0; v < g.order(); ++v) inverse[perms[k][v]] = v;
          res.graph = res.graph.relabeled(inverse);
        }
        results[k] = std::move(res);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SearchReport report;
  report.n = g.order();
  report.r = r;
  report.family = family;
  report.engine = Engine::kHillClimb;
  report.strategy = runs == 1 ? "single-run" : "restarts";
  report.exhaustive = false;
  int best = 0;
  for (int k = 0; k < runs; ++k) {
    report.examined += results[k]->examined;
    if (results[k]->trajectory.back() > results[best]->trajectory.back()) best = k;
  }
  report.maximum = results[best]->trajectory.back();
  report.trajectory = results[best]->trajectory;
  report.final_graph = results[best]->graph;
  if (g.order() <= kMaxCanonicalOrder)
    report.witnesses.push_back(canonical_form(*report.final_graph));
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace booklab
