#include "p7c/cleaning.hpp"

#include "p7c/error.hpp"

namespace p7c {

std::optional<int> neighborhood_2colorability_scan(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (!bipartition(g, g.neighbors(v))) return v;
  return std::nullopt;
}

Contraction contract_connected_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw ContractViolation("vertex out of range");
  if (!is_connected_vertex(g, v)) throw ContractViolation("not a connected vertex");
  if (g.degree(v) == 1)
    return contract_sets(g, VertexSet{v}, {}, {}, ReductionStep::Kind::kVertexDeletion);
  auto sides = bipartition(g, g.neighbors(v));
  if (!sides) throw ContractViolation("neighbourhood is not bipartite");
  return contract_sets(g, VertexSet{v}, sides->first, sides->second,
                       ReductionStep::Kind::kConnectedVertexContraction);
}

bool is_clean(const Graph& g, const Tripod& t) {
  if (!is_normal_tripod(g, t)) return false;
  VertexSet a = t.all();
  VertexSet far = g.vertices() - a - g.neighbors_of(a);
  for (int v : far)
    if (is_connected_vertex(g, v)) return false;
  return true;
}

namespace {

Tripod map_tripod(const Tripod& t, const ReductionStep& step) {
  Tripod out;
  for (int i = 0; i < 3; ++i)
    for (int v : t.parts[i]) out.parts[i].insert(step.before_to_after[v]);
  for (int v : t.order) out.order.push_back(step.before_to_after[v]);
  return out;
}

}  // namespace

CleanResult clean(const Graph& g, const Tripod& t) {
  CleanResult out;
  if (neighborhood_2colorability_scan(g)) {
    out.kind = CleanResult::Kind::kNotThreeColorable;
    return out;
  }
  out.graph = g;
  out.tripod = t;
  while (true) {
    VertexSet a = out.tripod.all();
    VertexSet far = out.graph.vertices() - a - out.graph.neighbors_of(a);
    int target = -1;
    for (int v : far)
      if (is_connected_vertex(out.graph, v)) {
        target = v;
        break;
      }
    if (target < 0) {
      out.kind = CleanResult::Kind::kClean;
      return out;
    }
    // Earlier contractions can merge vertices into new odd neighbourhoods.
    if (out.graph.degree(target) > 1 && !bipartition(out.graph, out.graph.neighbors(target))) {
      out.kind = CleanResult::Kind::kNotThreeColorable;
      return out;
    }
    Contraction c = contract_connected_vertex(out.graph, target);
    out.tripod = map_tripod(out.tripod, c.step);
    out.graph = std::move(c.graph);
    out.trace.steps.push_back(std::move(c.step));
    if (!is_normal_tripod(out.graph, out.tripod)) {
      out.kind = CleanResult::Kind::kTripodInvalidated;
      return out;
    }
  }
}

}  // namespace p7c
