#ifndef P7C_SOLVER_HPP
#define P7C_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "p7c/graph.hpp"
#include "p7c/listcolor.hpp"

namespace p7c {

struct SolveOptions {
  std::int64_t max_palettes = 0;  // 0 = unlimited
  double max_seconds = 0;         // 0 = unlimited
  int jobs = 1;                   // > 1 solves each restriction batch with OpenMP
  bool deterministic = true;      // parallel batches report the lowest-index success
};

struct StageTimes {
  double normalize = 0;
  double clean = 0;
  double reduce = 0;
  double expand = 0;
  double solve = 0;
};

struct SolveStats {
  int components = 0;
  int normalize_rounds = 0;        // normalize/clean passes over all components
  int triangle_free_fallbacks = 0;
  std::int64_t palettes = 0;
  std::int64_t restrictions = 0;
  // Restrictions that still held a three-colour list and were split by
  // branching. Zero whenever the expansion met its guarantees.
  std::int64_t oversized_branches = 0;
  std::int64_t failed_lifts = 0;
  StageTimes seconds;
};

struct SolveResult {
  enum class Outcome { kColorable, kNotColorable, kBudgetExceeded };
  Outcome outcome = Outcome::kNotColorable;
  Coloring coloring;  // total and proper when kColorable
  SolveStats stats;
};

/**
 * Decides 3-colourability of any simple graph, component by component:
 * tripod normalization and cleaning, reduced palettes, their restriction
 * families, then 2-SAT on each restriction until one is colourable.
 *
 * Components that end up triangle-free go to an exponential backtracking
 * colourer instead; this stands in for a polynomial triangle-free routine
 * and is reported in stats.triangle_free_fallbacks.
 */
SolveResult solve_with(const Graph& g, const SolveOptions& options = {});

/// solve_with without budgets: a proper colouring or nullopt.
std::optional<Coloring> solve(const Graph& g);

/// Total on V(g), values in {1, 2, 3}, proper.
bool verify_coloring(const Graph& g, const Coloring& c);

struct KernelCounters {
  std::int64_t oversized_branches = 0;
  std::int64_t failed_lifts = 0;
};

/**
 * Colouring of one restriction. Lists of size 3 left inside r are split by
 * branching; removed vertices are then lifted greedily and the result is
 * checked for properness (a failed lift counts as no colouring). The
 * colouring is total on r.vertices plus r.removed.
 */
std::optional<Coloring> solve_restriction(const Graph& g, const Restriction& r,
                                          KernelCounters* counters = nullptr);

struct BatchHit {
  std::size_t index = 0;
  Coloring coloring;
};

/// Reference kernel: restrictions in order, first success wins.
std::optional<BatchHit> first_colorable_serial(const Graph& g,
                                               const std::vector<Restriction>& batch,
                                               KernelCounters* counters = nullptr);

/**
 * OpenMP kernel with the same contract. Workers share nothing mutable except
 * a cancellation bound; with `deterministic` the lowest-index success is
 * returned, so the answer matches the serial kernel exactly.
 */
std::optional<BatchHit> first_colorable_parallel(const Graph& g,
                                                 const std::vector<Restriction>& batch,
                                                 int jobs, bool deterministic = true,
                                                 KernelCounters* counters = nullptr);

/// Decisions for many graphs; the reference loop and its OpenMP twin.
std::vector<SolveResult::Outcome> solve_batch_serial(const std::vector<Graph>& graphs,
                                                     const SolveOptions& options = {});
std::vector<SolveResult::Outcome> solve_batch_parallel(const std::vector<Graph>& graphs,
                                                       int jobs,
                                                       const SolveOptions& options = {});

}  // namespace p7c

#endif  // P7C_SOLVER_HPP
