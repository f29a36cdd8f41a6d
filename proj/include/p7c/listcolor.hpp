#ifndef P7C_LISTCOLOR_HPP
#define P7C_LISTCOLOR_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "p7c/graph.hpp"

namespace p7c {

/// A subset of {1, 2, 3}; colour c is bit c-1.
using ColorMask = std::uint8_t;

inline constexpr ColorMask kNoColors = 0;
inline constexpr ColorMask kAllColors = 0b111;

constexpr ColorMask color_bit(int c) { return static_cast<ColorMask>(1U << (c - 1)); }
constexpr int mask_size(ColorMask m) { return std::popcount(static_cast<unsigned>(m)); }
/// Smallest colour in m, or 0 when m is empty.
constexpr int lowest_color(ColorMask m) {
  return m == 0 ? 0 : std::countr_zero(static_cast<unsigned>(m)) + 1;
}
/// The colour k with {i, j, k} = {1, 2, 3}.
constexpr int third_color(int i, int j) { return 6 - i - j; }

std::string mask_to_string(ColorMask m);

/**
 * Per-vertex lists of allowed colours, all drawn from {1, 2, 3}.
 */
class Palette {
 public:
  Palette() = default;
  explicit Palette(int n, ColorMask initial = kAllColors)
      : lists_(static_cast<std::size_t>(n), initial) {}

  int size() const { return static_cast<int>(lists_.size()); }
  ColorMask operator[](int v) const { return lists_[v]; }
  void set(int v, ColorMask m) { lists_[v] = m; }
  /// lists_[v] &= m
  void restrict(int v, ColorMask m) { lists_[v] &= m; }
  int list_size(int v) const { return mask_size(lists_[v]); }

  /// Vertices of `within` whose list has exactly `count` colours.
  VertexSet with_list_size(int count, const VertexSet& within) const;
  bool has_empty_list(const VertexSet& within) const;

  /// True iff every list of *this is contained in the matching list of other.
  bool is_subpalette_of(const Palette& other) const;

  const std::vector<ColorMask>& lists() const { return lists_; }

  friend bool operator==(const Palette&, const Palette&) = default;
  friend auto operator<=>(const Palette&, const Palette&) = default;

 private:
  std::vector<ColorMask> lists_;
};

/// c[v] in {1, 2, 3}; 0 marks an uncoloured vertex.
using Coloring = std::vector<int>;

/**
 * (graph, subpalette, monochromatic sets) over a vertex subset of a fixed
 * host graph. Vertices outside `vertices` are not part of the instance; the
 * host graph is passed alongside, so no subgraph copy is ever made.
 */
struct Restriction {
  VertexSet vertices;
  Palette palette;
  std::vector<VertexSet> mono;
  /// Host vertices dropped from the instance that a lift must colour.
  std::vector<int> removed;

  friend bool operator==(const Restriction&, const Restriction&) = default;
};

/// Whole-graph restriction with no monochromatic sets.
Restriction full_restriction(const Graph& g, const Palette& l);

/**
 * Removes from L(v), for each v in y, every colour that forms the whole list
 * of some neighbour of v in x. Lists are read from the input palette, so the
 * update is simultaneous over y.
 */
Palette update(const Graph& g, const Palette& l, const VertexSet& x, const VertexSet& y);

struct FixpointResult {
  Palette palette;
  /// Rounds that changed at least one list.
  int changing_rounds = 0;
};

/// Repeats the whole-graph update (x = singleton-list vertices, y = V) until
/// a round changes nothing.
FixpointResult update_to_fixpoint_counted(const Graph& g, const Palette& l,
                                          const VertexSet& within);
Palette update_to_fixpoint(const Graph& g, const Palette& l);

/// Colouring of (g, l) when every list has at most two colours.
/// Throws ContractViolation on a list of size 3.
std::optional<Coloring> solve_list2(const Graph& g, const Palette& l);

/**
 * Colouring of the restriction r of host g: proper on r.vertices, within the
 * lists, and constant on each mono set (members outside r.vertices are
 * ignored). Entries of vertices outside r.vertices are left 0.
 *
 * Implemented as 2-SAT: a vertex with list {a, b} owns one variable meaning
 * "takes a"; singleton lists are constants. Solved by Tarjan SCC on the
 * implication graph.
 */
std::optional<Coloring> solve_list2_mono(const Graph& g, const Restriction& r);

/// Properness, list membership and mono uniformity over r.vertices.
bool verify_restriction_coloring(const Graph& g, const Restriction& r, const Coloring& c);

}  // namespace p7c

#endif  // P7C_LISTCOLOR_HPP
