#ifndef P7C_GRAPH_HPP
#define P7C_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace p7c {

/// Largest graph the library accepts. Every algorithm here is polynomial of
/// high degree, so inputs anywhere near this size are out of reach anyway.
inline constexpr int kMaxVertices = 256;

/**
 * Fixed-width bitset over vertex ids 0..kMaxVertices-1.
 *
 * Neighbourhood intersection, complement and subset tests dominate the
 * pipeline, so all of them are word-parallel.
 */
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  class Iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    Iterator() = default;
    Iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}
    int operator*() const { return pos_; }
    Iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    int pos_ = kMaxVertices;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  /// {0, ..., n-1}
  static VertexSet range(int n);
  static VertexSet from(const std::vector<int>& members);

  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (int i = 0; i < kWords; ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& other) const {
    for (int i = 0; i < kWords; ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  /// Smallest member >= from, or kMaxVertices when there is none.
  int next(int from) const {
    if (from >= kMaxVertices) return kMaxVertices;
    int word = from >> 6;
    std::uint64_t bits = words_[word] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (bits != 0) return (word << 6) + std::countr_zero(bits);
      if (++word == kWords) return kMaxVertices;
      bits = words_[word];
    }
  }
  /// Smallest member, or -1 when empty.
  int first() const {
    int v = next(0);
    return v == kMaxVertices ? -1 : v;
  }

  Iterator begin() const { return Iterator(this, next(0)); }
  Iterator end() const { return Iterator(this, kMaxVertices); }

  std::vector<int> to_vector() const;

  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

  std::size_t hash() const;
  const std::array<std::uint64_t, kWords>& words() const { return words_; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/**
 * Simple undirected graph on dense vertex ids 0..n-1.
 *
 * Adjacency is one VertexSet row per vertex. Optional labels carry external
 * vertex names through I/O and are ignored by every algorithm.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  /// Adds edge uv. Throws InvalidInput for out-of-range ids or u == v.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Union of the neighbourhoods of all members of s (may intersect s).
  VertexSet neighbors_of(const VertexSet& s) const;

  int edge_count() const;
  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

/// An induced subgraph together with the id map back into its parent.
struct InducedSubgraph {
  Graph graph;
  /// parent[v] is the id in the parent graph of subgraph vertex v.
  std::vector<int> parent;
};

/// Throws InvalidInput if s names a vertex outside g.
void require_valid(const Graph& g, const VertexSet& s);

/// G[s]; vertices are renumbered in increasing parent-id order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_complete_to(const Graph& g, const VertexSet& a, const VertexSet& b);
bool is_anticomplete_to(const Graph& g, const VertexSet& a, const VertexSet& b);
bool is_stable(const Graph& g, const VertexSet& s);

/// Lexicographically first triangle (a < b < c), if any.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

/**
 * True iff g has an induced path on k vertices.
 *
 * Depth-first growth of induced paths; each path is accepted only from its
 * smaller endpoint so both orientations are not explored to completion.
 */
bool has_induced_path(const Graph& g, int k);

/// An induced path on k vertices, in path order, if one exists.
std::optional<std::vector<int>> find_induced_path(const Graph& g, int k);

/// Vertices reachable from `from` inside `within`.
VertexSet reachable(const Graph& g, int from, const VertexSet& within);

bool is_connected(const Graph& g);
bool is_connected(const Graph& g, const VertexSet& within);
/// Connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);

/**
 * True iff G[N(v)] is connected and nonempty. An isolated vertex is
 * reported as not connected.
 */
bool is_connected_vertex(const Graph& g, int v);

/// Throws InvalidInput when x == V(g).
bool is_homogeneous_set(const Graph& g, const VertexSet& x);

/**
 * Proper 2-colouring classes of G[within] (whole graph when omitted).
 *
 * In each component the smallest vertex goes to the first class, which makes
 * the answer canonical even when the subgraph is disconnected.
 */
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g,
                                                           const VertexSet& within);

}  // namespace p7c

#endif  // P7C_GRAPH_HPP
