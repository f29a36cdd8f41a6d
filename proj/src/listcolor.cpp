#include "p7c/listcolor.hpp"

#include <algorithm>

#include "p7c/error.hpp"

namespace p7c {

std::string mask_to_string(ColorMask m) {
  std::string out = "{";
  for (int c = 1; c <= 3; ++c) {
    if (!(m & color_bit(c))) continue;
    if (out.size() > 1) out += ',';
    out += static_cast<char>('0' + c);
  }
  return out + "}";
}

VertexSet Palette::with_list_size(int count, const VertexSet& within) const {
  VertexSet out;
  for (int v : within)
    if (list_size(v) == count) out.insert(v);
  return out;
}

bool Palette::has_empty_list(const VertexSet& within) const {
  for (int v : within)
    if (lists_[v] == kNoColors) return true;
  return false;
}

bool Palette::is_subpalette_of(const Palette& other) const {
  if (size() != other.size()) return false;
  for (int v = 0; v < size(); ++v)
    if ((lists_[v] & ~other.lists_[v]) != 0) return false;
  return true;
}

Restriction full_restriction(const Graph& g, const Palette& l) {
  return Restriction{g.vertices(), l, {}, {}};
}

Palette update(const Graph& g, const Palette& l, const VertexSet& x, const VertexSet& y) {
  Palette out = l;
  VertexSet forcing = l.with_list_size(1, x);
  if (forcing.empty()) return out;
  for (int v : y) {
    ColorMask banned = kNoColors;
    for (int u : g.neighbors(v) & forcing) banned |= l[u];
    out.restrict(v, static_cast<ColorMask>(~banned));
  }
  return out;
}

FixpointResult update_to_fixpoint_counted(const Graph& g, const Palette& l,
                                          const VertexSet& within) {
  FixpointResult result{l, 0};
  while (true) {
    Palette next = update(g, result.palette, within, within);
    if (next == result.palette) return result;
    result.palette = std::move(next);
    ++result.changing_rounds;
  }
}

Palette update_to_fixpoint(const Graph& g, const Palette& l) {
  return update_to_fixpoint_counted(g, l, g.vertices()).palette;
}

namespace {

constexpr int kTrueLit = -1;
constexpr int kFalseLit = -2;

int negate(int lit) {
  if (lit == kTrueLit) return kFalseLit;
  if (lit == kFalseLit) return kTrueLit;
  return lit ^ 1;
}

class TwoSat {
 public:
  explicit TwoSat(int variables) : implications_(static_cast<std::size_t>(2 * variables)) {}

  void add_clause(int a, int b) {
    if (a == kTrueLit || b == kTrueLit) return;
    if (a == kFalseLit && b == kFalseLit) {
      contradiction_ = true;
      return;
    }
    if (a == kFalseLit) a = b;
    if (b == kFalseLit) b = a;
    implications_[negate(a)].push_back(b);
    implications_[negate(b)].push_back(a);
  }

  /// Value per variable, or nullopt when unsatisfiable.
  std::optional<std::vector<bool>> solve() {
    if (contradiction_) return std::nullopt;
    const int n = static_cast<int>(implications_.size());
    compute_components(n);
    std::vector<bool> value(static_cast<std::size_t>(n / 2));
    for (int v = 0; v < n / 2; ++v) {
      if (component_[2 * v] == component_[2 * v + 1]) return std::nullopt;
      // Tarjan numbers components in reverse topological order.
      value[v] = component_[2 * v] < component_[2 * v + 1];
    }
    return value;
  }

 private:
  // Iterative Tarjan: lowlink over an explicit call stack.
  void compute_components(int n) {
    component_.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> calls;
    int counter = 0;
    int components = 0;
    for (int root = 0; root < n; ++root) {
      if (index[root] != -1) continue;
      calls.emplace_back(root, 0);
      while (!calls.empty()) {
        auto& [v, edge] = calls.back();
        if (edge == 0 && index[v] == -1) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = 1;
        }
        if (edge < implications_[v].size()) {
          int w = implications_[v][edge++];
          if (index[w] == -1) {
            calls.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        if (low[v] == index[v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            component_[w] = components;
          } while (w != v);
          ++components;
        }
        int finished = v;
        calls.pop_back();
        if (!calls.empty()) {
          int parent = calls.back().first;
          low[parent] = std::min(low[parent], low[finished]);
        }
      }
    }
  }

  std::vector<std::vector<int>> implications_;
  std::vector<int> component_;
  bool contradiction_ = false;
};

}  // namespace

std::optional<Coloring> solve_list2_mono(const Graph& g, const Restriction& r) {
  const Palette& l = r.palette;
  std::vector<int> variable(static_cast<std::size_t>(g.order()), -1);
  int variables = 0;
  for (int v : r.vertices) {
    switch (l.list_size(v)) {
      case 0:
        return std::nullopt;
      case 1:
        break;
      case 2:
        variable[v] = variables++;
        break;
      default:
        throw ContractViolation("list of size 3 at vertex " + std::to_string(v) +
                                " passed to the 2-list solver");
    }
  }

  // Literal meaning "v takes colour c".
  auto takes = [&](int v, int c) {
    ColorMask m = l[v];
    if (!(m & color_bit(c))) return kFalseLit;
    if (variable[v] < 0) return kTrueLit;
    return c == lowest_color(m) ? 2 * variable[v] : 2 * variable[v] + 1;
  };

  TwoSat sat(variables);
  for (int u : r.vertices) {
    for (int v : g.neighbors(u) & r.vertices) {
      if (v < u) continue;
      ColorMask shared = l[u] & l[v];
      for (int c = 1; c <= 3; ++c)
        if (shared & color_bit(c)) sat.add_clause(negate(takes(u, c)), negate(takes(v, c)));
    }
  }
  for (const VertexSet& set : r.mono) {
    int prev = -1;
    for (int v : set & r.vertices) {
      if (prev >= 0) {
        for (int c = 1; c <= 3; ++c) {
          sat.add_clause(negate(takes(prev, c)), takes(v, c));
          sat.add_clause(negate(takes(v, c)), takes(prev, c));
        }
      }
      prev = v;
    }
  }

  auto values = sat.solve();
  if (!values) return std::nullopt;
  Coloring c(static_cast<std::size_t>(g.order()), 0);
  for (int v : r.vertices) {
    ColorMask m = l[v];
    if (variable[v] < 0) {
      c[v] = lowest_color(m);
    } else {
      int low = lowest_color(m);
      int high = lowest_color(static_cast<ColorMask>(m & ~color_bit(low)));
      c[v] = (*values)[variable[v]] ? low : high;
    }
  }
  return c;
}

std::optional<Coloring> solve_list2(const Graph& g, const Palette& l) {
  return solve_list2_mono(g, full_restriction(g, l));
}

bool verify_restriction_coloring(const Graph& g, const Restriction& r, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.order()) return false;
  for (int v : r.vertices) {
    if (c[v] < 1 || c[v] > 3) return false;
    if (!(r.palette[v] & color_bit(c[v]))) return false;
    for (int u : g.neighbors(v) & r.vertices)
      if (c[u] == c[v]) return false;
  }
  for (const VertexSet& set : r.mono) {
    int color = 0;
    for (int v : set & r.vertices) {
      if (color == 0) color = c[v];
      if (c[v] != color) return false;
    }
  }
  return true;
}

}  // namespace p7c
