#ifndef P7C_ORACLE_HPP
#define P7C_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "p7c/graph.hpp"
#include "p7c/listcolor.hpp"

// Exhaustive reference implementations. Nothing in here calls into the
// solver pipeline; only Graph, Palette and Restriction are shared.
namespace p7c::oracle {

inline constexpr int kDefaultBound = 18;

/// Any proper 3-colouring of g, found by backtracking with the first triangle
/// (or first edge) pinned to colours 1,2,3 (1,2).
std::optional<Coloring> brute_color(const Graph& g, int bound = kDefaultBound);

/// Any colouring of the restriction r of host g. Mono sets are merged into
/// classes first and one colour is chosen per class.
std::optional<Coloring> brute_list_color(const Graph& g, const Restriction& r,
                                         int bound = kDefaultBound);
std::optional<Coloring> brute_list_color(const Graph& g, const Palette& l,
                                         const std::vector<VertexSet>& mono,
                                         int bound = kDefaultBound);

/// Calls visit for every proper 3-colouring of g (no symmetry breaking).
/// Stops early when visit returns false.
void for_each_coloring(const Graph& g, const std::function<bool(const Coloring&)>& visit,
                       int bound = kDefaultBound);

/// True iff no 7-subset of V(g) induces a path. Checks every 7-subset
/// directly: six edges, degrees 1,1,2,2,2,2,2, connected.
bool brute_p7free(const Graph& g, int bound = kDefaultBound);

/// The vertex set of some induced P7, if any.
std::optional<VertexSet> brute_find_p7(const Graph& g, int bound = kDefaultBound);

struct GeneratedInstance {
  Graph graph;
  std::array<int, 3> planted_triangle{};
  int repairs = 0;
};

/**
 * Random P7-free graph containing a triangle: G(n, density) plus a planted
 * triangle, then one edge of some induced P7 is deleted until none remain.
 * Planted triangle edges are never deleted. Deterministic in (n, density,
 * seed).
 */
GeneratedInstance gen_instance(int n, double density, std::uint64_t seed,
                               int bound = kDefaultBound);

}  // namespace p7c::oracle

#endif  // P7C_ORACLE_HPP
