#ifndef P7C_EXPAND_HPP
#define P7C_EXPAND_HPP

#include <array>
#include <string>
#include <vector>

#include "p7c/graph.hpp"
#include "p7c/listcolor.hpp"
#include "p7c/reduce.hpp"

namespace p7c {

/**
 * The sets a reduced palette is expanded around. After updating to a
 * fixpoint, `p` holds the vertices of P_L that still have all three colours
 * and s[l-1] holds the neighbours of `p` whose list is {1,2,3} minus l.
 *
 * classes[i-1] is X_i: members x of `p` where N_j(x) is not complete to
 * N_k(x). witness[i-1][x] is the fixed nonadjacent pair (n_j, n_k) with
 * j < k, chosen lowest-first.
 */
struct ExpansionContext {
  Palette palette;
  bool infeasible = false;  // some list became empty while updating
  VertexSet p;
  VertexSet collapsed;      // members of P_L whose neighbourhood sat inside one S_l
  std::array<VertexSet, 3> s;
  std::array<VertexSet, 3> classes;
  std::array<std::vector<std::array<int, 2>>, 3> witness;

  /// N(x) intersected with S_color.
  VertexSet n_of(const Graph& g, int x, int color) const { return g.neighbors(x) & s[color - 1]; }
};

ExpansionContext extract_context(const Graph& g, const ReducedPalette& rp);

/// (g, l) has a type-I colouring with respect to `color` iff some palette
/// here is colourable; each one fixes x, n_j and n_k. Duplicates are removed.
std::vector<Palette> type1_palettes(const Graph& g, const Palette& l, int color,
                                    const ExpansionContext& ctx);

/// Lists of X_i and X_j members restricted to {i, j}.
Palette mij_subpalette(const Palette& l, int i, int j, const ExpansionContext& ctx);

/**
 * Drops Y_i, the members x of X_i with no neighbour in S_i, from r and adds
 * N_j(x) and N_k(x) as monochromatic sets (singletons are skipped). Dropped
 * vertices are appended to r.removed for lift_removed.
 */
void remove_Yi(const Graph& g, Restriction& r, int color, const ExpansionContext& ctx);

/// Gives each vertex of r.removed, in order, the lowest colour missing from
/// its coloured neighbours. Returns false if some vertex sees all three.
bool lift_removed(const Graph& g, const Restriction& r, Coloring& c);

/**
 * The restriction family for one reduced palette, over all six colour
 * permutations and deduplicated. Empty when the palette is infeasible; the
 * single whole-graph restriction when P is empty.
 */
std::vector<Restriction> expand_palette(const Graph& g, const ExpansionContext& ctx);
std::vector<Restriction> expand_palette(const Graph& g, const ReducedPalette& rp);

/// Violations of the structural assumptions the expansion relies on.
std::vector<std::string> audit_context(const Graph& g, const TripodPartition& part,
                                       const ReducedPalette& rp, const ExpansionContext& ctx);

/// Violations of: lists of size at most 2, mono sets inside the instance,
/// removed vertices drawn from P.
std::vector<std::string> audit_restriction(const Graph& g, const ExpansionContext& ctx,
                                           const Restriction& r);

}  // namespace p7c

#endif  // P7C_EXPAND_HPP
