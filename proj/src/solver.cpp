#include "p7c/solver.hpp"

#include <atomic>
#include <chrono>
#include <deque>

#include "p7c/cleaning.hpp"
#include "p7c/error.hpp"
#include "p7c/expand.hpp"
#include "p7c/reduce.hpp"
#include "p7c/tripod.hpp"

namespace p7c {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Exponential backtracking used only for triangle-free graphs, where no
// tripod exists. A polynomial algorithm for that case is out of scope here.
class TriangleFreeColorer {
 public:
  explicit TriangleFreeColorer(const Graph& g) : g_(g), c_(static_cast<std::size_t>(g.order()), 0) {
    VertexSet seen;
    for (int root = 0; root < g.order(); ++root) {
      if (seen.contains(root)) continue;
      seen.insert(root);
      std::deque<int> queue{root};
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order_.push_back(v);
        for (int u : g.neighbors(v) - seen) {
          seen.insert(u);
          queue.push_back(u);
        }
      }
    }
  }

  std::optional<Coloring> run() {
    if (assign(0)) return c_;
    return std::nullopt;
  }

 private:
  bool assign(std::size_t pos) {
    if (pos == order_.size()) return true;
    int v = order_[pos];
    ColorMask used = kNoColors;
    for (int u : g_.neighbors(v))
      if (c_[u] != 0) used |= color_bit(c_[u]);
    for (int color = 1; color <= 3; ++color) {
      if (used & color_bit(color)) continue;
      c_[v] = color;
      if (assign(pos + 1)) return true;
      // A vertex with no coloured neighbour is symmetric in its colour.
      if (used == kNoColors) break;
    }
    c_[v] = 0;
    return false;
  }

  const Graph& g_;
  Coloring c_;
  std::vector<int> order_;
};

std::optional<Coloring> split_oversized(const Graph& g, const Restriction& r,
                                        KernelCounters& counters) {
  VertexSet big = r.palette.with_list_size(3, r.vertices);
  if (big.empty()) return solve_list2_mono(g, r);
  ++counters.oversized_branches;
  int v = big.first();
  for (int color = 1; color <= 3; ++color) {
    Restriction branch = r;
    branch.palette.set(v, color_bit(color));
    if (auto c = split_oversized(g, branch, counters)) return c;
  }
  return std::nullopt;
}

struct ComponentResult {
  SolveResult::Outcome outcome = SolveResult::Outcome::kNotColorable;
  Coloring coloring;
};

class ComponentSolver {
 public:
  ComponentSolver(const SolveOptions& options, SolveStats& stats, Clock::time_point start)
      : options_(options), stats_(stats), start_(start) {}

  ComponentResult run(const Graph& h) {
    ComponentResult out;
    if (h.order() == 1) {
      out.outcome = SolveResult::Outcome::kColorable;
      out.coloring = {1};
      return out;
    }
    Graph cur = h;
    ReductionTrace trace;
    Tripod tripod;
    while (true) {
      ++stats_.normalize_rounds;
      auto t0 = Clock::now();
      NormalizeResult nr = normalize(cur);
      stats_.seconds.normalize += since(t0);
      trace.append(nr.trace);
      cur = std::move(nr.graph);
      if (nr.kind == NormalizeResult::Kind::kNotThreeColorable) return out;
      if (nr.kind == NormalizeResult::Kind::kTriangleFree) {
        ++stats_.triangle_free_fallbacks;
        auto c = TriangleFreeColorer(cur).run();
        if (!c) return out;
        return colorable(trace.lift(h, *c));
      }
      t0 = Clock::now();
      CleanResult cr = clean(cur, nr.tripod);
      stats_.seconds.clean += since(t0);
      trace.append(cr.trace);
      cur = std::move(cr.graph);
      if (cr.kind == CleanResult::Kind::kNotThreeColorable) return out;
      if (cr.kind == CleanResult::Kind::kClean) {
        tripod = std::move(cr.tripod);
        break;
      }
    }

    TripodPartition part = partition_AXYZ(cur, tripod);
    std::optional<Coloring> found;
    bool exhausted_budget = false;
    double inner = 0;
    auto t0 = Clock::now();
    for_each_reduced_palette(cur, part, [&](const ReducedPalette& rp) {
      if (over_budget()) {
        exhausted_budget = true;
        return false;
      }
      ++stats_.palettes;
      auto t1 = Clock::now();
      std::vector<Restriction> batch = expand_palette(cur, extract_context(cur, rp));
      double expand_time = since(t1);
      stats_.seconds.expand += expand_time;
      stats_.restrictions += static_cast<std::int64_t>(batch.size());
      t1 = Clock::now();
      KernelCounters counters;
      std::optional<BatchHit> hit =
          options_.jobs > 1
              ? first_colorable_parallel(cur, batch, options_.jobs, options_.deterministic,
                                         &counters)
              : first_colorable_serial(cur, batch, &counters);
      double solve_time = since(t1);
      stats_.seconds.solve += solve_time;
      stats_.oversized_branches += counters.oversized_branches;
      stats_.failed_lifts += counters.failed_lifts;
      inner += expand_time + solve_time;
      if (!hit) return true;
      found = std::move(hit->coloring);
      return false;
    });
    stats_.seconds.reduce += since(t0) - inner;

    if (found) return colorable(trace.lift(h, *found));
    if (exhausted_budget) out.outcome = SolveResult::Outcome::kBudgetExceeded;
    return out;
  }

 private:
  bool over_budget() const {
    if (options_.max_palettes > 0 && stats_.palettes >= options_.max_palettes) return true;
    return options_.max_seconds > 0 && since(start_) > options_.max_seconds;
  }

  static ComponentResult colorable(Coloring c) {
    return {SolveResult::Outcome::kColorable, std::move(c)};
  }

  const SolveOptions& options_;
  SolveStats& stats_;
  Clock::time_point start_;
};

}  // namespace

bool verify_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.order()) return false;
  for (int color : c)
    if (color < 1 || color > 3) return false;
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

std::optional<Coloring> solve_restriction(const Graph& g, const Restriction& r,
                                          KernelCounters* counters) {
  KernelCounters local;
  KernelCounters& k = counters ? *counters : local;
  auto c = split_oversized(g, r, k);
  if (!c) return std::nullopt;
  bool ok = lift_removed(g, r, *c);
  VertexSet done = r.vertices;
  for (int x : r.removed) done.insert(x);
  for (int v : done) {
    if (!ok) break;
    for (int u : g.neighbors(v) & done)
      if ((*c)[u] == (*c)[v]) ok = false;
  }
  if (!ok) {
    ++k.failed_lifts;
    return std::nullopt;
  }
  return c;
}

std::optional<BatchHit> first_colorable_serial(const Graph& g,
                                               const std::vector<Restriction>& batch,
                                               KernelCounters* counters) {
  for (std::size_t i = 0; i < batch.size(); ++i)
    if (auto c = solve_restriction(g, batch[i], counters)) return BatchHit{i, std::move(*c)};
  return std::nullopt;
}

std::optional<BatchHit> first_colorable_parallel(const Graph& g,
                                                 const std::vector<Restriction>& batch,
                                                 int jobs, bool deterministic,
                                                 KernelCounters* counters) {
  const auto n = static_cast<std::int64_t>(batch.size());
  // Indices at or above `bound` need no work: a success below them exists.
  std::atomic<std::int64_t> bound{n};
  std::atomic<std::int64_t> branches{0};
  std::atomic<std::int64_t> failed{0};
  std::optional<BatchHit> best;

#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::int64_t i = 0; i < n; ++i) {
    if (i >= bound.load(std::memory_order_relaxed)) continue;
    if (!deterministic && bound.load(std::memory_order_relaxed) < n) continue;
    KernelCounters local;
    auto c = solve_restriction(g, batch[static_cast<std::size_t>(i)], &local);
    branches += local.oversized_branches;
    failed += local.failed_lifts;
    if (!c) continue;
#pragma omp critical(p7c_first_colorable)
    {
      if (!best || static_cast<std::size_t>(i) < best->index) {
        best = BatchHit{static_cast<std::size_t>(i), std::move(*c)};
        bound.store(i, std::memory_order_relaxed);
      }
    }
  }
  if (counters) {
    counters->oversized_branches += branches.load();
    counters->failed_lifts += failed.load();
  }
  return best;
}

SolveResult solve_with(const Graph& g, const SolveOptions& options) {
  SolveResult result;
  const auto start = Clock::now();
  Coloring c(static_cast<std::size_t>(g.order()), 0);
  bool budget = false;
  for (const VertexSet& comp : components(g)) {
    ++result.stats.components;
    InducedSubgraph sub = induced_subgraph(g, comp);
    ComponentResult cr = ComponentSolver(options, result.stats, start).run(sub.graph);
    if (cr.outcome == SolveResult::Outcome::kNotColorable) {
      result.outcome = SolveResult::Outcome::kNotColorable;
      return result;
    }
    if (cr.outcome == SolveResult::Outcome::kBudgetExceeded) {
      budget = true;
      continue;
    }
    for (std::size_t v = 0; v < sub.parent.size(); ++v) c[sub.parent[v]] = cr.coloring[v];
  }
  if (budget) {
    result.outcome = SolveResult::Outcome::kBudgetExceeded;
    return result;
  }
  if (!verify_coloring(g, c)) throw ContractViolation("solver produced an improper colouring");
  result.outcome = SolveResult::Outcome::kColorable;
  result.coloring = std::move(c);
  return result;
}

std::optional<Coloring> solve(const Graph& g) {
  SolveResult r = solve_with(g);
  if (r.outcome != SolveResult::Outcome::kColorable) return std::nullopt;
  return std::move(r.coloring);
}

std::vector<SolveResult::Outcome> solve_batch_serial(const std::vector<Graph>& graphs,
                                                     const SolveOptions& options) {
  SolveOptions inner = options;
  inner.jobs = 1;
  std::vector<SolveResult::Outcome> out;
  out.reserve(graphs.size());
  for (const Graph& g : graphs) out.push_back(solve_with(g, inner).outcome);
  return out;
}

std::vector<SolveResult::Outcome> solve_batch_parallel(const std::vector<Graph>& graphs,
                                                       int jobs, const SolveOptions& options) {
  SolveOptions inner = options;
  inner.jobs = 1;
  std::vector<SolveResult::Outcome> out(graphs.size());
  const auto n = static_cast<std::int64_t>(graphs.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = solve_with(graphs[static_cast<std::size_t>(i)], inner).outcome;
  return out;
}

}  // namespace p7c
