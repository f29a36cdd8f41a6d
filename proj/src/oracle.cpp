#include "p7c/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "p7c/error.hpp"

namespace p7c::oracle {
namespace {

void check_bound(int n, int bound, const char* who) {
  if (n > bound)
    throw OracleBoundExceeded(std::string(who) + ": " + std::to_string(n) +
                              " vertices exceeds oracle bound " + std::to_string(bound));
}

// Plain scan; deliberately not graph-core's find_triangle.
std::optional<std::array<int, 3>> first_triangle(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.adjacent(a, b))
        for (int c = b + 1; c < n; ++c)
          if (g.adjacent(a, c) && g.adjacent(b, c)) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

bool assign(const Graph& g, const std::vector<int>& order, std::size_t pos, Coloring& c) {
  if (pos == order.size()) return true;
  int v = order[pos];
  if (c[v] != 0) return assign(g, order, pos + 1, c);
  for (int color = 1; color <= 3; ++color) {
    bool clash = false;
    for (int u : g.neighbors(v))
      if (c[u] == color) {
        clash = true;
        break;
      }
    if (clash) continue;
    c[v] = color;
    if (assign(g, order, pos + 1, c)) return true;
    c[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<Coloring> brute_color(const Graph& g, int bound) {
  const int n = g.order();
  check_bound(n, bound, "brute_color");
  Coloring c(static_cast<std::size_t>(n), 0);
  std::vector<int> seeds;
  if (auto t = first_triangle(g)) {
    seeds.assign(t->begin(), t->end());
  } else {
    for (int u = 0; u < n && seeds.empty(); ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.adjacent(u, v)) {
          seeds = {u, v};
          break;
        }
  }
  for (std::size_t i = 0; i < seeds.size(); ++i) c[seeds[i]] = static_cast<int>(i) + 1;

  // Breadth-first order from the pinned vertices keeps constraints tight.
  std::vector<int> order = seeds;
  std::vector<char> queued(static_cast<std::size_t>(n), 0);
  for (int s : seeds) queued[s] = 1;
  std::size_t head = 0;
  int next_root = 0;
  while (true) {
    for (; head < order.size(); ++head)
      for (int u : g.neighbors(order[head]))
        if (!queued[u]) {
          queued[u] = 1;
          order.push_back(u);
        }
    while (next_root < n && queued[next_root]) ++next_root;
    if (next_root == n) break;
    queued[next_root] = 1;
    order.push_back(next_root);
  }
  if (!assign(g, order, 0, c)) return std::nullopt;
  return c;
}

void for_each_coloring(const Graph& g, const std::function<bool(const Coloring&)>& visit,
                       int bound) {
  const int n = g.order();
  check_bound(n, bound, "for_each_coloring");
  Coloring c(static_cast<std::size_t>(n), 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int v) {
    if (stop) return;
    if (v == n) {
      if (!visit(c)) stop = true;
      return;
    }
    for (int color = 1; color <= 3 && !stop; ++color) {
      bool clash = false;
      for (int u : g.neighbors(v))
        if (u < v && c[u] == color) clash = true;
      if (clash) continue;
      c[v] = color;
      rec(v + 1);
    }
    c[v] = 0;
  };
  rec(0);
}

std::optional<Coloring> brute_list_color(const Graph& g, const Restriction& r, int bound) {
  const int n = g.order();
  check_bound(r.vertices.size(), bound, "brute_list_color");
  // Union-find over mono sets.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const VertexSet& set : r.mono) {
    int first = -1;
    for (int v : set & r.vertices) {
      if (first < 0) {
        first = v;
        continue;
      }
      int a = find(first), b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> roots;
  std::vector<ColorMask> allowed(static_cast<std::size_t>(n), kAllColors);
  std::vector<VertexSet> members(static_cast<std::size_t>(n));
  for (int v : r.vertices) {
    int root = find(v);
    if (root == v) roots.push_back(v);
    allowed[root] &= r.palette[v];
    members[root].insert(v);
  }
  for (int root : roots) {
    if (allowed[root] == kNoColors) return std::nullopt;
    // A class containing an edge cannot be monochromatic.
    for (int v : members[root])
      if (g.neighbors(v).intersects(members[root])) return std::nullopt;
  }

  Coloring c(static_cast<std::size_t>(n), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == roots.size()) return true;
    int root = roots[pos];
    VertexSet around = g.neighbors_of(members[root]) & r.vertices;
    for (int color = 1; color <= 3; ++color) {
      if (!(allowed[root] & color_bit(color))) continue;
      bool clash = false;
      for (int u : around)
        if (c[u] == color) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (int v : members[root]) c[v] = color;
      if (rec(pos + 1)) return true;
      for (int v : members[root]) c[v] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return c;
}

std::optional<Coloring> brute_list_color(const Graph& g, const Palette& l,
                                         const std::vector<VertexSet>& mono, int bound) {
  return brute_list_color(g, Restriction{g.vertices(), l, mono, {}}, bound);
}

std::optional<VertexSet> brute_find_p7(const Graph& g, int bound) {
  const int n = g.order();
  check_bound(n, bound, "brute_p7free");
  if (n < 7) return std::nullopt;
  std::array<int, 7> idx{};
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    VertexSet s;
    for (int v : idx) s.insert(v);
    int edges = 0, ones = 0, twos = 0;
    for (int v : idx) {
      int d = (g.neighbors(v) & s).size();
      edges += d;
      ones += d == 1;
      twos += d == 2;
    }
    if (edges == 12 && ones == 2 && twos == 5) {
      // That degree sequence is a P7 or a shorter path plus a disjoint cycle.
      VertexSet seen{idx[0]}, frontier{idx[0]};
      while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v) & s;
        next -= seen;
        seen |= next;
        frontier = next;
      }
      if (seen == s) return s;
    }
    int i = 6;
    while (i >= 0 && idx[i] == n - 7 + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < 7; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

bool brute_p7free(const Graph& g, int bound) { return !brute_find_p7(g, bound).has_value(); }

GeneratedInstance gen_instance(int n, double density, std::uint64_t seed, int bound) {
  if (n < 3) throw InvalidInput("gen_instance needs at least 3 vertices");
  check_bound(n, bound, "gen_instance");
  std::mt19937_64 rng(seed);
  // Fixed conversion so output does not depend on the library's distributions.
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto below = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };

  GeneratedInstance out;
  out.graph = Graph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform() < density) out.graph.add_edge(u, v);

  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < 3; ++i) std::swap(pool[i], pool[i + below(n - i)]);
  std::array<int, 3> t{pool[0], pool[1], pool[2]};
  std::sort(t.begin(), t.end());
  out.planted_triangle = t;
  out.graph.add_edge(t[0], t[1]);
  out.graph.add_edge(t[0], t[2]);
  out.graph.add_edge(t[1], t[2]);
  auto planted = [&](int u, int v) {
    return std::count(t.begin(), t.end(), u) && std::count(t.begin(), t.end(), v);
  };

  while (auto p7 = brute_find_p7(out.graph, bound)) {
    std::vector<std::pair<int, int>> deletable;
    for (int u : *p7)
      for (int v : out.graph.neighbors(u) & *p7)
        if (u < v && !planted(u, v)) deletable.emplace_back(u, v);
    auto [u, v] = deletable[below(static_cast<int>(deletable.size()))];
    out.graph.remove_edge(u, v);
    ++out.repairs;
  }
  return out;
}

}  // namespace p7c::oracle
