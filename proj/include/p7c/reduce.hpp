#ifndef P7C_REDUCE_HPP
#define P7C_REDUCE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "p7c/graph.hpp"
#include "p7c/listcolor.hpp"
#include "p7c/tripod.hpp"

namespace p7c {

/**
 * V = A + X + Y + Z relative to a normal tripod. Colour i (1-based) belongs
 * to tripod part i-1: a_parts[i-1] = A_i and x_parts[i-1] = X_i, the
 * vertices outside A with a neighbour in A_i.
 */
struct TripodPartition {
  VertexSet a;
  VertexSet x;  // outside A with a neighbour in A
  VertexSet y;  // outside A and X with a neighbour in X
  VertexSet z;  // everything else
  std::array<VertexSet, 3> a_parts;
  std::array<VertexSet, 3> x_parts;

  const VertexSet& a_of(int color) const { return a_parts[color - 1]; }
  const VertexSet& x_of(int color) const { return x_parts[color - 1]; }
  VertexSet yz() const { return y | z; }
};

/// Throws ContractViolation when some X_i is empty or two X_i overlap,
/// which cannot happen for a normal tripod.
TripodPartition partition_AXYZ(const Graph& g, const Tripod& t);

/// y in Y is an i-cap when x - y - y' is an induced path for some x in X_i
/// and y' in (Y + Z) \ {y}.
bool is_icap(const Graph& g, const TripodPartition& part, int y, int color);
VertexSet icaps(const Graph& g, const TripodPartition& part, int color);

/**
 * (p, q1, q2, q3) with p in X_color; optional entries are -1 and only a
 * prefix may be present. q1 in Y adjacent to p; q2 in Y + Z adjacent to q1
 * but not p; q3 in Y adjacent to p and non-adjacent to q1 and q2.
 */
struct Quadruple {
  int color = 0;
  int p = -1;
  int q1 = -1;
  int q2 = -1;
  int q3 = -1;

  VertexSet members() const;
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

/// All quadruples for one colour, each p in increasing order and its
/// extensions depth-first.
std::vector<Quadruple> enumerate_quadruples(const Graph& g, const TripodPartition& part,
                                            int color);

/// A palette together with the sets that certify its structure.
struct ReducedPalette {
  Palette palette;
  VertexSet xprime;          // X': singleton lists forced through the quadruples
  VertexSet y0;              // Y_0: vertices of Y complete to {s_1, s_2, s_3}
  std::array<int, 3> s{};    // s_i = p of the colour-i quadruple
  VertexSet yprime;          // Y': rest of Y + Z with a neighbour in X' + Y_0
  VertexSet pl;              // P_L: vertices of Y + Z whose list is still full

  friend bool operator==(const ReducedPalette&, const ReducedPalette&) = default;
};

/// A_i -> {i}, X_i -> {1,2,3} \ {i}, everything else {1,2,3}.
Palette initial_palette(const Graph& g, const TripodPartition& part);

struct ReduceStats {
  std::array<std::int64_t, 3> quadruples{};
  std::array<std::int64_t, 3> surviving_quadruples{};  // after the per-quadruple discard
  std::int64_t triples = 0;                              // reached the colouring stage
  std::int64_t colorings = 0;
  std::int64_t empty_lists = 0;  // palettes dropped because updating emptied a list
  std::int64_t emitted = 0;
  std::int64_t duplicates = 0;
};

/**
 * Streams the reduced palettes of a clean graph. Every emitted palette is a
 * subpalette of initial_palette, and g is 3-colourable iff one of them is
 * colourable. Identical palettes (with identical metadata) are emitted once.
 * `visit` returns false to stop early; the function then returns false.
 */
bool for_each_reduced_palette(const Graph& g, const TripodPartition& part,
                              const std::function<bool(const ReducedPalette&)>& visit,
                              ReduceStats* stats = nullptr);

std::vector<ReducedPalette> build_palettes(const Graph& g, const TripodPartition& part,
                                           ReduceStats* stats = nullptr);

/// Human-readable list of violated postconditions; empty when all hold.
std::vector<std::string> audit_reduced_palette(const Graph& g, const TripodPartition& part,
                                               const ReducedPalette& rp);

}  // namespace p7c

#endif  // P7C_REDUCE_HPP
