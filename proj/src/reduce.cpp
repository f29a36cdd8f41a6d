#include "p7c/reduce.hpp"

#include <unordered_set>

#include "p7c/error.hpp"

namespace p7c {

TripodPartition partition_AXYZ(const Graph& g, const Tripod& t) {
  TripodPartition part;
  part.a_parts = t.parts;
  part.a = t.all();
  for (int i = 0; i < 3; ++i) part.x_parts[i] = g.neighbors_of(t.parts[i]) - part.a;
  part.x = part.x_parts[0] | part.x_parts[1] | part.x_parts[2];
  part.y = g.neighbors_of(part.x) - part.a - part.x;
  part.z = g.vertices() - part.a - part.x - part.y;
  for (int i = 0; i < 3; ++i) {
    if (part.x_parts[i].empty())
      throw ContractViolation("X_" + std::to_string(i + 1) + " is empty; tripod is not normal");
    for (int j = i + 1; j < 3; ++j)
      if (part.x_parts[i].intersects(part.x_parts[j]))
        throw ContractViolation("X sets overlap; tripod is not maximal");
  }
  return part;
}

bool is_icap(const Graph& g, const TripodPartition& part, int y, int color) {
  if (!part.y.contains(y)) return false;
  VertexSet beyond = (g.neighbors(y) & part.yz());
  for (int x : g.neighbors(y) & part.x_of(color))
    if (!(beyond - g.neighbors(x)).empty()) return true;
  return false;
}

VertexSet icaps(const Graph& g, const TripodPartition& part, int color) {
  VertexSet out;
  for (int y : part.y)
    if (is_icap(g, part, y, color)) out.insert(y);
  return out;
}

VertexSet Quadruple::members() const {
  VertexSet s;
  for (int v : {p, q1, q2, q3})
    if (v >= 0) s.insert(v);
  return s;
}

std::vector<Quadruple> enumerate_quadruples(const Graph& g, const TripodPartition& part,
                                            int color) {
  std::vector<Quadruple> out;
  const VertexSet yz = part.yz();
  for (int p : part.x_of(color)) {
    out.push_back({color, p});
    for (int q1 : g.neighbors(p) & part.y) {
      out.push_back({color, p, q1});
      for (int q2 : (g.neighbors(q1) & yz) - g.neighbors(p)) {
        out.push_back({color, p, q1, q2});
        VertexSet q3s = (g.neighbors(p) & part.y) - g.neighbors(q1) - g.neighbors(q2);
        q3s.erase(q1);
        q3s.erase(q2);
        for (int q3 : q3s) out.push_back({color, p, q1, q2, q3});
      }
    }
  }
  return out;
}

Palette initial_palette(const Graph& g, const TripodPartition& part) {
  Palette l(g.order());
  for (int c = 1; c <= 3; ++c) {
    for (int v : part.a_of(c)) l.set(v, color_bit(c));
    for (int v : part.x_of(c)) l.set(v, static_cast<ColorMask>(kAllColors & ~color_bit(c)));
  }
  return l;
}

namespace {

// A quadruple with the sets the palette construction derives from it.
struct PreparedQuadruple {
  Quadruple q;
  VertexSet own;    // E(S_i)
  VertexSet m;      // M(S_i)
  VertexSet h;      // H(S_i)
};

// M(S_i): vertices of Y adjacent to p and to neither q1 nor q2, defined only
// when q2 is present and q3 absent.
VertexSet m_set(const Graph& g, const TripodPartition& part, const Quadruple& q) {
  if (q.q2 < 0 || q.q3 >= 0) return {};
  VertexSet m = (g.neighbors(q.p) & part.y) - g.neighbors(q.q1) - g.neighbors(q.q2);
  m.erase(q.q1);
  m.erase(q.q2);
  return m;
}

// Second discard rule: some x in X_i, y1, y2 in Y + Z with x ~ y1, x !~ y2,
// y1 ~ y2, M + {q2} anticomplete to {y1, y2} and x complete to M + {q2}.
// Restricting y1, y2 to Y lets a stable-set failure through (y2 in Z).
bool discard_by_cap_path(const Graph& g, const TripodPartition& part, const Quadruple& q,
                         const VertexSet& m) {
  if (q.q3 >= 0 || q.q1 < 0 || q.q2 < 0) return false;
  VertexSet w = m;
  w.insert(q.q2);
  VertexSet free_y = part.yz() - w - g.neighbors_of(w);
  for (int x : part.x_of(q.color)) {
    if (!w.is_subset_of(g.neighbors(x))) continue;
    for (int y1 : g.neighbors(x) & free_y)
      if (!((g.neighbors(y1) & free_y) - g.neighbors(x)).empty()) return true;
  }
  return false;
}

std::string palette_key(const ReducedPalette& rp) {
  std::string key(rp.palette.lists().begin(), rp.palette.lists().end());
  auto put = [&key](const VertexSet& s) {
    for (auto w : s.words()) key.append(reinterpret_cast<const char*>(&w), sizeof w);
  };
  put(rp.xprime);
  put(rp.y0);
  put(rp.yprime);
  for (int v : rp.s) key.append(reinterpret_cast<const char*>(&v), sizeof v);
  return key;
}

class PaletteBuilder {
 public:
  PaletteBuilder(const Graph& g, const TripodPartition& part,
                 const std::function<bool(const ReducedPalette&)>& visit, ReduceStats& stats)
      : g_(g), part_(part), visit_(visit), stats_(stats), base_(initial_palette(g, part)) {
    for (int c = 1; c <= 3; ++c) caps_[c - 1] = icaps(g, part, c);
    for (int i = 0; i < 3; ++i) y_next_to_x_[i] = g.neighbors_of(part.x_parts[i]) & part.y;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) shared_y_[i][j] = y_next_to_x_[i].intersects(y_next_to_x_[j]);
    for (int c = 1; c <= 3; ++c) {
      for (const Quadruple& q : enumerate_quadruples(g, part, c)) {
        ++stats_.quadruples[c - 1];
        VertexSet m = m_set(g, part, q);
        if (discard_by_cap_path(g, part, q, m)) continue;
        PreparedQuadruple pq{q, q.members(), m, {}};
        if (q.q2 < 0 && q.q3 < 0) pq.h = caps_[c - 1];
        prepared_[c - 1].push_back(std::move(pq));
      }
      stats_.surviving_quadruples[c - 1] = static_cast<std::int64_t>(prepared_[c - 1].size());
    }
  }

  bool run() {
    for (const auto& s1 : prepared_[0]) {
      for (const auto& s2 : prepared_[1]) {
        if (clash_rule(s1, 0, s2, 1)) continue;
        for (const auto& s3 : prepared_[2]) {
          if (clash_rule(s1, 0, s3, 2) || clash_rule(s2, 1, s3, 2)) continue;
          if (!process({&s1, &s2, &s3})) return false;
        }
      }
    }
    return true;
  }

 private:
  // First discard rule: both q1 missing and some y in Y sees X_i and X_j.
  bool clash_rule(const PreparedQuadruple& a, int i, const PreparedQuadruple& b, int j) const {
    return a.q.q1 < 0 && b.q.q1 < 0 && shared_y_[i][j];
  }

  bool process(const std::array<const PreparedQuadruple*, 3>& s) {
    ++stats_.triples;
    VertexSet e;
    std::vector<ColorMask> allowed(static_cast<std::size_t>(g_.order()), kAllColors);
    for (int i = 0; i < 3; ++i) {
      const PreparedQuadruple& pq = *s[i];
      e |= pq.own | pq.m | pq.h;
      for (int v : pq.m | pq.h) allowed[v] &= color_bit(i + 1);
      // A q1 or q3 coloured with its quadruple's colour is discarded.
      if (pq.q.q1 >= 0) allowed[pq.q.q1] &= static_cast<ColorMask>(~color_bit(i + 1));
      if (pq.q.q3 >= 0) allowed[pq.q.q3] &= static_cast<ColorMask>(~color_bit(i + 1));
    }
    // With Q1 empty every Y-neighbour of X_i is forced to colour i; a
    // colouring of E(S) that disagrees yields a palette with no colouring.
    for (int i = 0; i < 3; ++i)
      if (s[i]->q.q1 < 0)
        for (int v : y_next_to_x_[i] & e) allowed[v] &= color_bit(i + 1);
    std::vector<int> order = e.to_vector();
    for (int v : order) {
      allowed[v] &= base_[v];
      if (allowed[v] == kNoColors) return true;
    }
    Coloring c(static_cast<std::size_t>(g_.order()), 0);
    return color_next(s, e, order, allowed, 0, c);
  }

  bool color_next(const std::array<const PreparedQuadruple*, 3>& s, const VertexSet& e,
                  const std::vector<int>& order, const std::vector<ColorMask>& allowed,
                  std::size_t pos, Coloring& c) {
    if (pos == order.size()) {
      ++stats_.colorings;
      return emit(s, e, c);
    }
    int v = order[pos];
    for (int color = 1; color <= 3; ++color) {
      if (!(allowed[v] & color_bit(color))) continue;
      bool clash = false;
      for (int u : g_.neighbors(v) & e)
        if (c[u] == color) {
          clash = true;
          break;
        }
      if (clash) continue;
      c[v] = color;
      if (!color_next(s, e, order, allowed, pos + 1, c)) return false;
    }
    c[v] = 0;
    return true;
  }

  bool emit(const std::array<const PreparedQuadruple*, 3>& s, const VertexSet& e,
            const Coloring& c) {
    Palette l = base_;
    for (int i = 0; i < 3; ++i)
      if (s[i]->q.q1 < 0)
        for (int v : y_next_to_x_[i]) l.set(v, color_bit(i + 1));
    for (int v : e) l.set(v, color_bit(c[v]));

    ReducedPalette rp;
    std::array<VertexSet, 3> xprime_by_color;
    for (int i = 0; i < 3; ++i) {
      VertexSet off_color;  // members of E(S_i) not coloured i
      for (int w : s[i]->own)
        if (c[w] != i + 1) off_color.insert(w);
      xprime_by_color[i] = part_.x_parts[i] & g_.neighbors_of(off_color);
      rp.xprime |= xprime_by_color[i];
      rp.s[i] = s[i]->q.p;
    }
    rp.xprime |= e & part_.x;
    rp.y0 = part_.y & g_.neighbors(rp.s[0]) & g_.neighbors(rp.s[1]) & g_.neighbors(rp.s[2]);
    rp.yprime = (part_.yz() - rp.y0 - e) & g_.neighbors_of(rp.y0 | rp.xprime);

    // Three rounds of updating.
    for (int i = 0; i < 3; ++i) l = update(g_, l, s[i]->own, xprime_by_color[i]);
    l = update(g_, l, rp.y0 | rp.xprime, rp.yprime);
    l = update(g_, l, rp.y0 | rp.xprime | e, part_.yz() - rp.yprime);

    // Updating can empty a list; such a palette has no colouring.
    if (l.has_empty_list(g_.vertices())) {
      ++stats_.empty_lists;
      return true;
    }
    rp.pl = l.with_list_size(3, part_.yz());
    rp.palette = std::move(l);

    if (!seen_.insert(palette_key(rp)).second) {
      ++stats_.duplicates;
      return true;
    }
    ++stats_.emitted;
    return visit_(rp);
  }

  const Graph& g_;
  const TripodPartition& part_;
  const std::function<bool(const ReducedPalette&)>& visit_;
  ReduceStats& stats_;
  Palette base_;
  std::array<VertexSet, 3> caps_;
  std::array<VertexSet, 3> y_next_to_x_;  // Y-vertices with a neighbour in X_i
  bool shared_y_[3][3] = {};
  std::array<std::vector<PreparedQuadruple>, 3> prepared_;
  std::unordered_set<std::string> seen_;
};

}  // namespace

bool for_each_reduced_palette(const Graph& g, const TripodPartition& part,
                              const std::function<bool(const ReducedPalette&)>& visit,
                              ReduceStats* stats) {
  ReduceStats local;
  PaletteBuilder builder(g, part, visit, stats ? *stats : local);
  return builder.run();
}

std::vector<ReducedPalette> build_palettes(const Graph& g, const TripodPartition& part,
                                           ReduceStats* stats) {
  std::vector<ReducedPalette> out;
  for_each_reduced_palette(
      g, part,
      [&out](const ReducedPalette& rp) {
        out.push_back(rp);
        return true;
      },
      stats);
  return out;
}

std::vector<std::string> audit_reduced_palette(const Graph& g, const TripodPartition& part,
                                               const ReducedPalette& rp) {
  std::vector<std::string> bad;
  const Palette& l = rp.palette;
  auto single = [&](int v, int color) { return l[v] == color_bit(color); };

  if (!l.is_subpalette_of(initial_palette(g, part))) bad.emplace_back("not a subpalette");
  for (int v : part.a | part.x)
    if (l.list_size(v) > 2) bad.push_back("vertex " + std::to_string(v) + " has 3 colours");

  VertexSet pl = l.with_list_size(3, part.yz());
  if (pl != rp.pl) bad.emplace_back("P_L does not match the palette");
  if (!is_stable(g, pl)) bad.emplace_back("P_L is not stable");

  if (!rp.xprime.is_subset_of(part.x)) bad.emplace_back("X' not inside X");
  if (!rp.y0.is_subset_of(part.y)) bad.emplace_back("Y_0 not inside Y");
  for (int i = 0; i < 3; ++i)
    if (!(part.x_parts[i] & rp.xprime).contains(rp.s[i]))
      bad.push_back("s_" + std::to_string(i + 1) + " not in X_" + std::to_string(i + 1) +
                    " and X'");
  for (int v : rp.xprime | rp.y0)
    if (l.list_size(v) != 1)
      bad.push_back("vertex " + std::to_string(v) + " of X' + Y_0 has " +
                    mask_to_string(l[v]));
  for (int v : rp.y0)
    for (int s : rp.s)
      if (!g.adjacent(v, s))
        bad.push_back("Y_0 vertex " + std::to_string(v) + " misses s " + std::to_string(s));
  VertexSet yprime_stated = part.yz() & g.neighbors_of(rp.xprime | rp.y0);
  if (g.neighbors_of(pl).intersects(part.yz() - yprime_stated))
    bad.emplace_back("P_L sees Y + Z outside Y'");

  for (int v : rp.yprime) {
    if (l.list_size(v) != 2) continue;
    int k = lowest_color(static_cast<ColorMask>(kAllColors & ~l[v]));
    bool found = false;
    for (int u : g.neighbors(v) & (rp.xprime | rp.y0))
      if (single(u, k)) found = true;
    if (!found) bad.push_back("Y' vertex " + std::to_string(v) + " lacks a forcing neighbour");
  }

  for (int j = 1; j <= 3; ++j) {
    for (int v : rp.xprime & part.x_of(j)) {
      if (l.list_size(v) != 1) continue;
      int i = lowest_color(l[v]);
      if (i == j) continue;
      int k = third_color(i, j);
      bool found = false;
      for (int u : g.neighbors(v))
        if (single(u, k)) found = true;
      if (!found) {
        found = true;
        for (int y : g.neighbors_of(part.x_of(j)) & part.y)
          if (!single(y, j)) found = false;
      }
      if (!found) bad.push_back("X' vertex " + std::to_string(v) + " unsupported");
    }
  }

  for (int v : rp.y0) {
    if (l.list_size(v) != 1) continue;
    int i = lowest_color(l[v]);
    ColorMask around = kNoColors;
    for (int s : rp.s)
      if (g.adjacent(v, s) && l.list_size(s) == 1) around |= l[s];
    ColorMask need = static_cast<ColorMask>(kAllColors & ~color_bit(i));
    if ((around & need) != need)
      bad.push_back("Y_0 vertex " + std::to_string(v) + " lacks both other colours on s");
  }
  return bad;
}

}  // namespace p7c
