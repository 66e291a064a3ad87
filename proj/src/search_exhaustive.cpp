#include "booklab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "booklab/cliques.hpp"
#include "booklab/error.hpp"
#include "kernels.hpp"

namespace booklab {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(const std::optional<double>& seconds) {
    if (seconds)
      at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(*seconds));
  }
  bool expired() const {
    if (hit_.load(std::memory_order_relaxed)) return true;
    if (at_ && Clock::now() >= *at_) {
      hit_.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
  bool hit() const { return hit_.load(); }

 private:
  std::optional<Clock::time_point> at_;
  mutable std::atomic<bool> hit_{false};
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_common(int n, int r, int cap, const char* engine) {
  if (n < 0 || r < 0)
    throw Error(ErrorKind::kInvalidParameter, "n and r must be non-negative");
  if (n > cap)
    throw Error(ErrorKind::kResourceLimit,
                std::string(engine) + " engine is capped at n=" +
                    std::to_string(cap) + " (requested n=" + std::to_string(n) +
                    "); pass a larger max order to override");
}

/// n < r: nothing to count.
bool fill_degenerate(SearchReport& report) {
  if (report.n >= report.r) return false;
  report.maximum = 0;
  const Graph edgeless(report.n);
  if (is_free(edgeless, report.family))
    report.witnesses.push_back(canonical_form(edgeless));
  report.exhaustive = true;
  report.strategy = "degenerate";
  return true;
}

template <class Fn>
void run_workers(int jobs, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (int k = 0; k < jobs; ++k)
    pool.emplace_back([&, k] {
      try {
        fn(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Max-with-witness-union: the larger maximum wins, equal maxima pool
/// their witnesses.
struct Best {
  Count maximum = 0;
  bool found = false;
  std::set<CanonicalForm> witnesses;

  void offer(Count c, const Graph& g) {
    if (!found || c > maximum) {
      found = true;
      maximum = c;
      witnesses.clear();
    }
    if (c == maximum) witnesses.insert(canonical_form(g));
  }
  void merge(Best&& other) {
    if (!other.found) return;
    if (!found || other.maximum > maximum) {
      *this = std::move(other);
    } else if (other.maximum == maximum) {
      witnesses.merge(other.witnesses);
    }
  }
};

void finish(SearchReport& report, Best&& best) {
  report.maximum = best.maximum;
  report.witnesses.assign(best.witnesses.begin(), best.witnesses.end());
}

}  // namespace

const char* to_string(Engine engine) noexcept {
  switch (engine) {
    case Engine::kLabeledBruteForce: return "labeled-brute-force";
    case Engine::kCanonicalGeneration: return "canonical-generation";
    case Engine::kHillClimb: return "hill-climb";
  }
  return "unknown";
}

Engine parse_engine(std::string_view name) {
  if (name == "labeled" || name == "labeled-brute-force")
    return Engine::kLabeledBruteForce;
  if (name == "canonical" || name == "canonical-generation")
    return Engine::kCanonicalGeneration;
  if (name == "hill-climb" || name == "climb") return Engine::kHillClimb;
  throw Error(ErrorKind::kInvalidParameter,
              "unknown engine '" + std::string(name) + "'");
}

SearchReport brute_force_labeled(int n, int r, const ForbiddenFamily& family,
                                 const SearchOptions& options) {
  const auto start = Clock::now();
  check_common(n, r, options.max_order.value_or(kLabeledDefaultMaxOrder),
               "labeled");
  // The edge mask must fit a 64-bit counter.
  if (n > 11)
    throw Error(ErrorKind::kResourceLimit,
                "labeled engine cannot sweep more than 2^55 graphs");
  SearchReport report;
  report.n = n;
  report.r = r;
  report.family = family;
  report.engine = Engine::kLabeledBruteForce;
  report.strategy = "edge-mask-sweep";
  if (fill_degenerate(report)) {
    report.wall_ms = elapsed_ms(start);
    return report;
  }

  std::vector<Edge> pairs;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const int m = static_cast<int>(pairs.size());
  // Shards are the values of the top prefix_bits of the edge mask, dealt
  // round-robin to workers.
  const int prefix_bits = std::min(m, 8);
  const std::uint64_t shards = std::uint64_t{1} << prefix_bits;
  const std::uint64_t shard_span = std::uint64_t{1} << (m - prefix_bits);
  const int jobs = std::max(1, options.jobs);

  const Deadline deadline(options.max_seconds);
  std::vector<Best> partial(jobs);
  std::vector<std::uint64_t> visited(jobs, 0);
  run_workers(jobs, [&](int k) {
    using B = detail::Bits<1>;
    std::vector<B> rows(n);
    std::vector<std::uint64_t> words(n);
    Best& best = partial[k];
    for (std::uint64_t shard = k; shard < shards; shard += jobs) {
      for (std::uint64_t mask = shard * shard_span;
           mask < (shard + 1) * shard_span; ++mask) {
        if ((mask & 0xFFF) == 0 && deadline.expired()) return;
        ++visited[k];
        std::fill(words.begin(), words.end(), 0);
        for (int e = 0; e < m; ++e) {
          if ((mask >> e) & 1U) {
            words[pairs[e].first] |= std::uint64_t{1} << pairs[e].second;
            words[pairs[e].second] |= std::uint64_t{1} << pairs[e].first;
          }
        }
        for (int v = 0; v < n; ++v) rows[v].w[0] = words[v];
        const Count c = detail::count_cliques_rows(rows, r);
        if (best.found && c < best.maximum) continue;
        const Graph g = Graph::from_rows(n, words);
        if (is_free(g, family)) best.offer(c, g);
      }
    }
  });
  Best merged;
  for (auto& b : partial) merged.merge(std::move(b));
  finish(report, std::move(merged));
  for (auto v : visited) report.examined += v;
  report.exhaustive = !deadline.hit();
  report.wall_ms = elapsed_ms(start);
  return report;
}

SearchReport canonical_generation(int n, int r, const ForbiddenFamily& family,
                                  const SearchOptions& options) {
  const auto start = Clock::now();
  check_common(n, r, options.max_order.value_or(kCanonicalDefaultMaxOrder),
               "canonical");
  if (n > kCanonicalHardMaxOrder)
    throw Error(ErrorKind::kResourceLimit,
                "canonical engine supports at most n=" +
                    std::to_string(kCanonicalHardMaxOrder));
  SearchReport report;
  report.n = n;
  report.r = r;
  report.family = family;
  report.engine = Engine::kCanonicalGeneration;
  report.strategy = "level-dedup";
  if (fill_degenerate(report)) {
    report.wall_ms = elapsed_ms(start);
    return report;
  }

  const int jobs = std::max(1, options.jobs);
  const Deadline deadline(options.max_seconds);

  // Keys are packed canonical strings; order 0 has the single empty graph.
  std::vector<std::uint64_t> level{0};
  report.classes_per_order.push_back(1);
  for (int k = 1; k <= n && !deadline.hit(); ++k) {
    const int parent_order = k - 1;
    const std::uint64_t subsets = std::uint64_t{1} << parent_order;
    std::vector<std::vector<std::uint64_t>> buckets(jobs);
    run_workers(jobs, [&](int w) {
      auto& out = buckets[w];
      std::array<std::uint64_t, 64> rows{};
      for (std::size_t p = w; p < level.size(); p += jobs) {
        if (deadline.expired()) return;
        detail::unpack_rows(level[p], parent_order, rows);
        for (std::uint64_t nbrs = 0; nbrs < subsets; ++nbrs) {
          std::array<std::uint64_t, 64> child = rows;
          child[parent_order] = nbrs;
          for (int v = 0; v < parent_order; ++v)
            if ((nbrs >> v) & 1U) child[v] |= std::uint64_t{1} << parent_order;
          out.push_back(detail::canonical_packed(child, k));
        }
        if (out.size() > (1U << 22)) {
          std::sort(out.begin(), out.end());
          out.erase(std::unique(out.begin(), out.end()), out.end());
        }
      }
    });
    std::vector<std::uint64_t> classes;
    for (auto& b : buckets) classes.insert(classes.end(), b.begin(), b.end());
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    std::vector<char> keep(classes.size(), 0);
    run_workers(jobs, [&](int w) {
      std::array<std::uint64_t, 64> rows{};
      for (std::size_t i = w; i < classes.size(); i += jobs) {
        detail::unpack_rows(classes[i], k, rows);
        const Graph g = Graph::from_rows(
            k, std::span<const std::uint64_t>(rows.data(), k));
        keep[i] = is_free(g, family) ? 1 : 0;
      }
    });
    level.clear();
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (keep[i]) level.push_back(classes[i]);
    report.classes_per_order.push_back(level.size());
  }

  Best best;
  if (static_cast<int>(report.classes_per_order.size()) == n + 1) {
    std::array<std::uint64_t, 64> rows{};
    for (auto key : level) {
      detail::unpack_rows(key, n, rows);
      const Graph g =
          Graph::from_rows(n, std::span<const std::uint64_t>(rows.data(), n));
      best.offer(count_cliques(g, r), g);
    }
    report.examined = level.size();
  }
  finish(report, std::move(best));
  report.exhaustive = !deadline.hit();
  report.wall_ms = elapsed_ms(start);
  return report;
}

SearchReport exact_ex(int n, int r, const ForbiddenFamily& family,
                      Engine engine, const SearchOptions& options) {
  switch (engine) {
    case Engine::kLabeledBruteForce:
      return brute_force_labeled(n, r, family, options);
    case Engine::kCanonicalGeneration:
      return canonical_generation(n, r, family, options);
    case Engine::kHillClimb:
      break;
  }
  throw Error(ErrorKind::kInvalidParameter,
              "exact_ex needs an exhaustive engine");
}

}  // namespace booklab
