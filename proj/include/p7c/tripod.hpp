#ifndef P7C_TRIPOD_HPP
#define P7C_TRIPOD_HPP

#include <array>
#include <optional>
#include <vector>

#include "p7c/graph.hpp"
#include "p7c/listcolor.hpp"

namespace p7c {

/**
 * Three disjoint vertex sets grown from a triangle. `order` lists the members
 * in growth order; its first three entries form the seed triangle, one per
 * part, and every later member has an earlier neighbour in each of the two
 * other parts. Part indices are 0-based throughout the library.
 */
struct Tripod {
  std::array<VertexSet, 3> parts;
  std::vector<int> order;

  VertexSet all() const { return parts[0] | parts[1] | parts[2]; }
  /// Index of the part holding v, or -1.
  int part_of(int v) const;
};

/**
 * One reversible simplification. Every kind deletes `parts[0]`; the two
 * contraction kinds also merge `parts[1]` and `parts[2]` into the adjacent
 * pair `merged[0]`, `merged[1]` of the new graph (the G_R construction).
 * Surviving vertices keep their relative order and are numbered first;
 * merged vertices come last.
 */
struct ReductionStep {
  enum class Kind {
    kTripodContraction,           // reducible tripod, parts[0] is the reducible part
    kConnectedVertexContraction,  // parts = {v}, A, B with (A, B) the bipartition of N(v)
    kVertexDeletion,              // parts[0] = {v}, v has exactly one neighbour
  };

  Kind kind = Kind::kTripodContraction;
  int before_order = 0;
  int after_order = 0;
  std::array<VertexSet, 3> parts;  // ids of the graph before the step
  std::array<int, 2> merged{-1, -1};
  std::vector<int> after_to_before;  // -1 for merged vertices
  std::vector<int> before_to_after;  // -1 for deleted or merged vertices

  /// Rebuilds the after-graph from the before-graph.
  Graph apply(const Graph& before) const;
  /// Colouring of the before-graph from a proper colouring of the after-graph.
  Coloring lift(const Graph& before, const Coloring& after) const;
};

/// Ordered log of steps; lifting folds over the steps in reverse.
struct ReductionTrace {
  std::vector<ReductionStep> steps;

  /// Graph obtained by replaying every step on `original`.
  Graph replay(const Graph& original) const;
  /// Lifts a colouring of the final graph back to `original`.
  Coloring lift(const Graph& original, const Coloring& final_coloring) const;
  /// Maps a vertex set of the first graph to ids of the final graph; every
  /// member must survive all steps.
  VertexSet forward(const VertexSet& s) const;

  void append(const ReductionTrace& other);
};

/**
 * Grows a maximal tripod from `triangle`, always taking the lowest-id vertex
 * with neighbours in two parts next. Returns nullopt when some candidate has
 * neighbours in all three parts (g is then not 3-colourable). Throws
 * InvalidInput when `triangle` is not a triangle of g.
 */
std::optional<Tripod> grow_tripod(const Graph& g, const std::array<int, 3>& triangle);

/// Some part index i with parts[i] anticomplete to V(g) \ (other two parts).
std::optional<int> is_reducible(const Graph& g, const Tripod& t);

bool is_maximal_tripod(const Graph& g, const Tripod& t);
bool is_stable_tripod(const Graph& g, const Tripod& t);
/// Stable, maximal and not reducible.
bool is_normal_tripod(const Graph& g, const Tripod& t);

struct Contraction {
  Graph graph;
  ReductionStep step;
};

/// Deletes parts[i] and contracts the other two parts to an edge.
/// Throws ContractViolation unless part i is reducible.
Contraction contract_reducible(const Graph& g, const Tripod& t, int i);

/// Builds the G_R-style contraction for arbitrary disjoint sets; used by the
/// tripod and cleaning steps. No preconditions are checked.
Contraction contract_sets(const Graph& g, const VertexSet& deleted, const VertexSet& first,
                          const VertexSet& second, ReductionStep::Kind kind);

struct NormalizeResult {
  enum class Kind { kNotThreeColorable, kTriangleFree, kNormal };
  Kind kind = Kind::kNotThreeColorable;
  Graph graph;
  Tripod tripod;  // only for kNormal
  ReductionTrace trace;
};

/**
 * Repeats: find a triangle (none: kTriangleFree), grow a tripod (failure:
 * kNotThreeColorable), contract while reducible. The final graph is
 * 3-colourable iff g is. Throws InvalidInput for disconnected g.
 */
NormalizeResult normalize(const Graph& g);

/// Definitional check of `order` (seed triangle, earlier-neighbour rule,
/// disjointness, coverage) plus stability of every part.
bool verify_tripod(const Graph& g, const Tripod& t);

}  // namespace p7c

#endif  // P7C_TRIPOD_HPP
