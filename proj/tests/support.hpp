#ifndef P7C_TESTS_SUPPORT_HPP
#define P7C_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "p7c/cleaning.hpp"
#include "p7c/graph.hpp"
#include "p7c/listcolor.hpp"
#include "p7c/tripod.hpp"

namespace p7c::testing {

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

// Hub 0 joined to the cycle 1..k.
inline Graph wheel(int k) {
  Graph g(k + 1);
  for (int i = 1; i <= k; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % k + 1);
  }
  return g;
}

// Triangles 0-1-2 and 3-4-5 joined by the matching 0-3, 1-4, 2-5.
inline Graph prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// h with vertex perm[v] for every vertex v of g.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Every labeled graph on n vertices, as the bits of an edge mask.
inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

inline Graph graph_from_mask(int n, const std::vector<std::pair<int, int>>& pairs,
                             std::uint64_t mask) {
  Graph g(n);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((mask >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
  return g;
}

inline bool proper_on(const Graph& g, const Coloring& c) {
  for (auto [u, v] : g.edges())
    if (c[u] == 0 || c[u] == c[v]) return false;
  for (int color : c)
    if (color < 1 || color > 3) return false;
  return true;
}

struct CleanInstance {
  Graph graph;
  Tripod tripod;
};

/// Normalizes and cleans a connected graph until the tripod survives
/// cleaning; nullopt when g turns out triangle-free or not 3-colourable.
inline std::optional<CleanInstance> clean_instance(const Graph& g) {
  Graph cur = g;
  while (true) {
    NormalizeResult nr = normalize(cur);
    if (nr.kind != NormalizeResult::Kind::kNormal) return std::nullopt;
    CleanResult cr = clean(nr.graph, nr.tripod);
    if (cr.kind == CleanResult::Kind::kNotThreeColorable) return std::nullopt;
    cur = std::move(cr.graph);
    if (cr.kind == CleanResult::Kind::kClean) return CleanInstance{std::move(cur), std::move(cr.tripod)};
  }
}

/// clean_instance of every component that gets that far.
inline std::vector<CleanInstance> clean_components(const Graph& g) {
  std::vector<CleanInstance> out;
  for (const VertexSet& comp : components(g))
    if (comp.size() >= 3)
      if (auto inst = clean_instance(induced_subgraph(g, comp).graph)) out.push_back(std::move(*inst));
  return out;
}

}  // namespace p7c::testing

#endif  // P7C_TESTS_SUPPORT_HPP
