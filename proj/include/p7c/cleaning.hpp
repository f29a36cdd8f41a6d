#ifndef P7C_CLEANING_HPP
#define P7C_CLEANING_HPP

#include <optional>

#include "p7c/graph.hpp"
#include "p7c/tripod.hpp"

namespace p7c {

/// Some vertex whose neighbourhood is not bipartite (g is then not
/// 3-colourable), or nullopt.
std::optional<int> neighborhood_2colorability_scan(const Graph& g);

/**
 * Removes a connected vertex v. With a single neighbour v is just deleted;
 * otherwise v is deleted and the two classes of the bipartition of G[N(v)]
 * are merged into an edge. Throws ContractViolation if v is not a connected
 * vertex or G[N(v)] is not bipartite.
 */
Contraction contract_connected_vertex(const Graph& g, int v);

/// Every connected vertex outside the tripod has a neighbour in it, and the
/// tripod is normal.
bool is_clean(const Graph& g, const Tripod& t);

struct CleanResult {
  enum class Kind {
    kClean,
    kNotThreeColorable,
    // A contraction merged vertices that see two different parts, so the
    // tripod stopped being maximal. The graph is still equivalent and the
    // caller must normalize it again.
    kTripodInvalidated,
  };
  Kind kind = Kind::kClean;
  Graph graph;
  Tripod tripod;  // tripod mapped into `graph`
  ReductionTrace trace;
};

/**
 * Contracts connected vertices that have no neighbour in the tripod, lowest
 * id first, restarting after every contraction.
 */
CleanResult clean(const Graph& g, const Tripod& t);

}  // namespace p7c

#endif  // P7C_CLEANING_HPP
