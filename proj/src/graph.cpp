#include "p7c/graph.hpp"

#include <algorithm>
#include <functional>

#include "p7c/error.hpp"

namespace p7c {

VertexSet VertexSet::range(int n) {
  VertexSet s;
  for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
    s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return s;
}

VertexSet VertexSet::from(const std::vector<int>& members) {
  VertexSet s;
  for (int v : members) s.insert(v);
  return s;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

std::size_t VertexSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidInput("graph order " + std::to_string(n) + " outside [0, " +
                       std::to_string(kMaxVertices) + "]");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range for graph of order " + std::to_string(n_));
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u].erase(v);
  adj_[v].erase(u);
}

VertexSet Graph::neighbors_of(const VertexSet& s) const {
  VertexSet out;
  for (int v : s) out |= adj_[v];
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw InvalidInput("label count does not match graph order");
  labels_ = std::move(labels);
}

void require_valid(const Graph& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices()))
    throw InvalidInput("vertex set names a vertex outside the graph");
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_valid(g, s);
  InducedSubgraph out;
  out.parent = s.to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.parent.size(); ++i) local[out.parent[i]] = static_cast<int>(i);
  out.graph = Graph(static_cast<int>(out.parent.size()));
  for (std::size_t i = 0; i < out.parent.size(); ++i) {
    int u = out.parent[i];
    for (int w : g.neighbors(u) & s)
      if (u < w) out.graph.add_edge(static_cast<int>(i), local[w]);
  }
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (int u : out.parent) labels.push_back(g.labels()[u]);
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

bool is_complete_to(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (int v : a)
    if (!(b - g.neighbors(v) - VertexSet{v}).empty()) return false;
  return true;
}

bool is_anticomplete_to(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (int v : a)
    if (g.neighbors(v).intersects(b)) return false;
  return true;
}

bool is_stable(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (int a = 0; a < g.order(); ++a) {
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      VertexSet common = g.neighbors(a) & g.neighbors(b);
      int c = common.next(b + 1);
      if (c < kMaxVertices) return std::array<int, 3>{a, b, c};
    }
  }
  return std::nullopt;
}

namespace {

// Extends `path` (already induced) to k vertices. `blocked` holds the path
// plus the neighbourhoods of every path vertex except the last one.
bool extend_induced_path(const Graph& g, int k, std::vector<int>& path,
                         const VertexSet& blocked) {
  if (static_cast<int>(path.size()) == k) return path.front() < path.back() || k == 1;
  int last = path.back();
  VertexSet candidates = g.neighbors(last) - blocked;
  // Everything adjacent to `last` becomes forbidden for later vertices.
  VertexSet next_blocked = blocked | g.neighbors(last);
  next_blocked.insert(last);
  for (int v : candidates) {
    path.push_back(v);
    VertexSet b = next_blocked;
    b.insert(v);
    if (extend_induced_path(g, k, path, b)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced_path(const Graph& g, int k) {
  if (k < 1) throw InvalidInput("induced path length must be positive");
  if (k > g.order()) return std::nullopt;
  std::vector<int> path;
  path.reserve(static_cast<std::size_t>(k));
  for (int start = 0; start < g.order(); ++start) {
    path.assign(1, start);
    VertexSet blocked{start};
    if (extend_induced_path(g, k, path, blocked)) return path;
  }
  return std::nullopt;
}

bool has_induced_path(const Graph& g, int k) { return find_induced_path(g, k).has_value(); }

VertexSet reachable(const Graph& g, int from, const VertexSet& within) {
  VertexSet seen{from};
  VertexSet frontier{from};
  while (!frontier.empty()) {
    VertexSet next = (g.neighbors_of(frontier) & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g, const VertexSet& within) {
  int start = within.first();
  if (start < 0) return true;
  return reachable(g, start, within) == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = reachable(g, rest.first(), within);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected_vertex(const Graph& g, int v) {
  const VertexSet& nbrs = g.neighbors(v);
  if (nbrs.empty()) return false;
  return is_connected(g, nbrs);
}

bool is_homogeneous_set(const Graph& g, const VertexSet& x) {
  require_valid(g, x);
  if (x == g.vertices()) throw InvalidInput("a homogeneous set must be a proper subset");
  for (int v : g.vertices() - x) {
    VertexSet seen = g.neighbors(v) & x;
    if (!seen.empty() && seen != x) return false;
  }
  return true;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g,
                                                           const VertexSet& within) {
  VertexSet side[2];
  VertexSet rest = within;
  while (!rest.empty()) {
    int root = rest.first();
    VertexSet frontier{root};
    VertexSet layer_sides[2];
    int parity = 0;
    VertexSet seen{root};
    while (!frontier.empty()) {
      layer_sides[parity] |= frontier;
      VertexSet next = (g.neighbors_of(frontier) & within) - seen;
      seen |= next;
      frontier = next;
      parity ^= 1;
    }
    for (int p = 0; p < 2; ++p) {
      if (!is_stable(g, layer_sides[p])) return std::nullopt;
      side[p] |= layer_sides[p];
    }
    rest -= seen;
  }
  return std::make_pair(side[0], side[1]);
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  return bipartition(g, g.vertices());
}

}  // namespace p7c
