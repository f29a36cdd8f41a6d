#include "p7c/tripod.hpp"

#include "p7c/error.hpp"

namespace p7c {

int Tripod::part_of(int v) const {
  for (int i = 0; i < 3; ++i)
    if (parts[i].contains(v)) return i;
  return -1;
}

Graph ReductionStep::apply(const Graph& before) const {
  if (kind == Kind::kVertexDeletion) {
    return contract_sets(before, parts[0], {}, {}, kind).graph;
  }
  return contract_sets(before, parts[0], parts[1], parts[2], kind).graph;
}

Coloring ReductionStep::lift(const Graph& before, const Coloring& after) const {
  Coloring out(static_cast<std::size_t>(before_order), 0);
  for (int a = 0; a < after_order; ++a)
    if (after_to_before[a] >= 0) out[after_to_before[a]] = after[a];
  if (kind == Kind::kVertexDeletion) {
    for (int v : parts[0]) {
      ColorMask used = kNoColors;
      for (int u : before.neighbors(v))
        if (out[u] != 0) used |= color_bit(out[u]);
      out[v] = lowest_color(static_cast<ColorMask>(kAllColors & ~used));
    }
    return out;
  }
  int first = after[merged[0]];
  int second = after[merged[1]];
  int third = third_color(first, second);
  for (int v : parts[0]) out[v] = third;
  for (int v : parts[1]) out[v] = first;
  for (int v : parts[2]) out[v] = second;
  return out;
}

Graph ReductionTrace::replay(const Graph& original) const {
  Graph g = original;
  for (const auto& step : steps) g = step.apply(g);
  return g;
}

Coloring ReductionTrace::lift(const Graph& original, const Coloring& final_coloring) const {
  // Lifting needs each intermediate graph, so rebuild them going forward.
  std::vector<Graph> graphs;
  graphs.reserve(steps.size());
  Graph g = original;
  for (const auto& step : steps) {
    graphs.push_back(g);
    g = step.apply(g);
  }
  Coloring c = final_coloring;
  for (std::size_t i = steps.size(); i-- > 0;) c = steps[i].lift(graphs[i], c);
  return c;
}

VertexSet ReductionTrace::forward(const VertexSet& s) const {
  VertexSet current = s;
  for (const auto& step : steps) {
    VertexSet next;
    for (int v : current) {
      int a = step.before_to_after[v];
      if (a < 0) throw ContractViolation("vertex does not survive the reduction trace");
      next.insert(a);
    }
    current = next;
  }
  return current;
}

void ReductionTrace::append(const ReductionTrace& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

std::optional<Tripod> grow_tripod(const Graph& g, const std::array<int, 3>& triangle) {
  for (int v : triangle)
    if (v < 0 || v >= g.order()) throw InvalidInput("triangle vertex out of range");
  if (!g.adjacent(triangle[0], triangle[1]) || !g.adjacent(triangle[1], triangle[2]) ||
      !g.adjacent(triangle[0], triangle[2]))
    throw InvalidInput("grow_tripod needs a triangle");

  Tripod t;
  std::array<VertexSet, 3> seen;  // N(A_i)
  for (int i = 0; i < 3; ++i) {
    t.parts[i].insert(triangle[i]);
    t.order.push_back(triangle[i]);
    seen[i] = g.neighbors(triangle[i]);
  }
  while (true) {
    VertexSet outside = g.vertices() - t.all();
    VertexSet candidates =
        ((seen[0] & seen[1]) | (seen[0] & seen[2]) | (seen[1] & seen[2])) & outside;
    int v = candidates.first();
    if (v < 0) return t;
    if ((seen[0] & seen[1] & seen[2]).contains(v)) return std::nullopt;
    int k = !seen[0].contains(v) ? 0 : !seen[1].contains(v) ? 1 : 2;
    t.parts[k].insert(v);
    t.order.push_back(v);
    seen[k] |= g.neighbors(v);
  }
}

std::optional<int> is_reducible(const Graph& g, const Tripod& t) {
  for (int i = 0; i < 3; ++i) {
    VertexSet outside = g.vertices() - t.parts[(i + 1) % 3] - t.parts[(i + 2) % 3];
    if (!g.neighbors_of(t.parts[i]).intersects(outside)) return i;
  }
  return std::nullopt;
}

bool is_maximal_tripod(const Graph& g, const Tripod& t) {
  VertexSet n0 = g.neighbors_of(t.parts[0]);
  VertexSet n1 = g.neighbors_of(t.parts[1]);
  VertexSet n2 = g.neighbors_of(t.parts[2]);
  VertexSet two = (n0 & n1) | (n0 & n2) | (n1 & n2);
  return (two - t.all()).empty();
}

bool is_stable_tripod(const Graph& g, const Tripod& t) {
  return is_stable(g, t.parts[0]) && is_stable(g, t.parts[1]) && is_stable(g, t.parts[2]);
}

bool is_normal_tripod(const Graph& g, const Tripod& t) {
  return is_stable_tripod(g, t) && is_maximal_tripod(g, t) && !is_reducible(g, t).has_value();
}

Contraction contract_sets(const Graph& g, const VertexSet& deleted, const VertexSet& first,
                          const VertexSet& second, ReductionStep::Kind kind) {
  const bool merges = kind != ReductionStep::Kind::kVertexDeletion;
  Contraction out;
  ReductionStep& step = out.step;
  step.kind = kind;
  step.before_order = g.order();
  step.parts = {deleted, first, second};
  step.before_to_after.assign(static_cast<std::size_t>(g.order()), -1);
  VertexSet gone = deleted | first | second;
  for (int v = 0; v < g.order(); ++v) {
    if (gone.contains(v)) continue;
    step.before_to_after[v] = static_cast<int>(step.after_to_before.size());
    step.after_to_before.push_back(v);
  }
  const int kept = static_cast<int>(step.after_to_before.size());
  step.after_order = kept + (merges ? 2 : 0);
  out.graph = Graph(step.after_order);
  for (int a = 0; a < kept; ++a) {
    int u = step.after_to_before[a];
    for (int w : g.neighbors(u) - gone)
      if (u < w) out.graph.add_edge(a, step.before_to_after[w]);
  }
  if (merges) {
    step.merged = {kept, kept + 1};
    step.after_to_before.push_back(-1);
    step.after_to_before.push_back(-1);
    out.graph.add_edge(kept, kept + 1);
    VertexSet near_first = g.neighbors_of(first);
    VertexSet near_second = g.neighbors_of(second);
    for (int a = 0; a < kept; ++a) {
      int u = step.after_to_before[a];
      if (near_first.contains(u)) out.graph.add_edge(a, kept);
      if (near_second.contains(u)) out.graph.add_edge(a, kept + 1);
    }
  }
  return out;
}

Contraction contract_reducible(const Graph& g, const Tripod& t, int i) {
  if (i < 0 || i > 2) throw ContractViolation("tripod part index out of range");
  VertexSet outside = g.vertices() - t.parts[(i + 1) % 3] - t.parts[(i + 2) % 3];
  if (g.neighbors_of(t.parts[i]).intersects(outside))
    throw ContractViolation("tripod part is not reducible");
  return contract_sets(g, t.parts[i], t.parts[(i + 1) % 3], t.parts[(i + 2) % 3],
                       ReductionStep::Kind::kTripodContraction);
}

NormalizeResult normalize(const Graph& g) {
  if (!is_connected(g)) throw InvalidInput("normalize needs a connected graph");
  NormalizeResult out;
  out.graph = g;
  while (true) {
    auto triangle = find_triangle(out.graph);
    if (!triangle) {
      out.kind = NormalizeResult::Kind::kTriangleFree;
      return out;
    }
    auto tripod = grow_tripod(out.graph, *triangle);
    if (!tripod) {
      out.kind = NormalizeResult::Kind::kNotThreeColorable;
      return out;
    }
    auto reducible = is_reducible(out.graph, *tripod);
    if (!reducible) {
      out.kind = NormalizeResult::Kind::kNormal;
      out.tripod = std::move(*tripod);
      return out;
    }
    Contraction c = contract_reducible(out.graph, *tripod, *reducible);
    out.trace.steps.push_back(std::move(c.step));
    out.graph = std::move(c.graph);
  }
}

bool verify_tripod(const Graph& g, const Tripod& t) {
  VertexSet all = t.all();
  if (!all.is_subset_of(g.vertices())) return false;
  if (t.parts[0].intersects(t.parts[1]) || t.parts[0].intersects(t.parts[2]) ||
      t.parts[1].intersects(t.parts[2]))
    return false;
  if (t.order.size() < 3 || static_cast<int>(t.order.size()) != all.size()) return false;
  if (VertexSet::from(t.order) != all) return false;
  for (int i = 0; i < 3; ++i)
    if (!t.parts[i].contains(t.order[i])) return false;
  if (!g.adjacent(t.order[0], t.order[1]) || !g.adjacent(t.order[1], t.order[2]) ||
      !g.adjacent(t.order[0], t.order[2]))
    return false;
  std::array<VertexSet, 3> earlier;
  for (std::size_t s = 0; s < t.order.size(); ++s) {
    int v = t.order[s];
    int i = t.part_of(v);
    if (s >= 3) {
      for (int j = 0; j < 3; ++j)
        if (j != i && !g.neighbors(v).intersects(earlier[j])) return false;
    }
    earlier[i].insert(v);
  }
  return is_stable_tripod(g, t);
}

}  // namespace p7c
