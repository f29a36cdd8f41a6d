#include "p7c/expand.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace p7c {

namespace {

std::array<int, 2> other_colors(int i) {
  return i == 1 ? std::array<int, 2>{2, 3} : i == 2 ? std::array<int, 2>{1, 3}
                                                    : std::array<int, 2>{1, 2};
}

// n^i_color(y): the fixed witness of y's class i lying in S_color.
int witness(const ExpansionContext& ctx, int i, int y, int color) {
  return ctx.witness[i - 1][y][color == other_colors(i)[0] ? 0 : 1];
}

void rebuild_s(const Graph& g, ExpansionContext& ctx) {
  ctx.s = {};
  for (int v : g.neighbors_of(ctx.p) - ctx.p) {
    if (ctx.palette.list_size(v) != 2) continue;
    int k = lowest_color(static_cast<ColorMask>(kAllColors & ~ctx.palette[v]));
    ctx.s[k - 1].insert(v);
  }
}

Restriction whole(const Graph& g, const Palette& l) { return full_restriction(g, l); }

std::string restriction_key(const Restriction& r) {
  std::string key(r.palette.lists().begin(), r.palette.lists().end());
  auto put = [&key](const VertexSet& s) {
    for (auto w : s.words()) key.append(reinterpret_cast<const char*>(&w), sizeof w);
  };
  put(r.vertices);
  for (const VertexSet& m : r.mono) put(m);
  return key;
}

}  // namespace

ExpansionContext extract_context(const Graph& g, const ReducedPalette& rp) {
  ExpansionContext ctx;
  ctx.palette = update_to_fixpoint(g, rp.palette);
  ctx.witness.fill(std::vector<std::array<int, 2>>(static_cast<std::size_t>(g.order()),
                                                   std::array<int, 2>{-1, -1}));
  if (ctx.palette.has_empty_list(g.vertices())) {
    ctx.infeasible = true;
    return ctx;
  }
  ctx.p = ctx.palette.with_list_size(3, rp.pl);

  // A vertex whose neighbours all sit in one S_i can only take colour i.
  bool changed = true;
  while (changed) {
    changed = false;
    rebuild_s(g, ctx);
    for (int x : ctx.p) {
      const VertexSet& nx = g.neighbors(x);
      for (int i = 1; i <= 3 && !changed; ++i) {
        if (nx.empty() || !nx.is_subset_of(ctx.s[i - 1])) continue;
        ctx.palette.set(x, color_bit(i));
        ctx.p.erase(x);
        ctx.collapsed.insert(x);
        changed = true;
      }
      if (changed) break;
    }
  }

  for (int x : ctx.p) {
    for (int i = 1; i <= 3; ++i) {
      auto [j, k] = other_colors(i);
      for (int nj : ctx.n_of(g, x, j)) {
        VertexSet far = ctx.n_of(g, x, k) - g.neighbors(nj);
        if (far.empty()) continue;
        ctx.classes[i - 1].insert(x);
        ctx.witness[i - 1][x] = {nj, far.first()};
        break;
      }
    }
  }
  return ctx;
}

std::vector<Palette> type1_palettes(const Graph& g, const Palette& l, int i,
                                    const ExpansionContext& ctx) {
  std::vector<Palette> out;
  std::set<Palette> seen;
  auto [j, k] = other_colors(i);
  for (int x : ctx.classes[i - 1]) {
    for (int nj : ctx.n_of(g, x, j)) {
      for (int nk : ctx.n_of(g, x, k) - g.neighbors(nj)) {
        VertexSet pair{nj, nk};
        for (int a : {j, k}) {
          int b = a == j ? k : j;
          Palette q = l;
          q.restrict(x, color_bit(a));
          q.restrict(nj, color_bit(i));
          q.restrict(nk, color_bit(i));
          if (q[x] == kNoColors || q[nj] == kNoColors || q[nk] == kNoColors) continue;
          bool empty = false;
          for (int y : ctx.classes[i - 1]) {
            if (y == x) continue;
            int wa = witness(ctx, i, y, a);
            int wb = witness(ctx, i, y, b);
            ColorMask drop = kNoColors;
            if (g.neighbors(y).intersects(pair) || g.adjacent(wb, x)) drop |= color_bit(i);
            if (g.adjacent(y, x) || g.neighbors(wb).intersects(pair)) drop |= color_bit(a);
            if (g.neighbors(wa).intersects(pair)) drop |= color_bit(b);
            q.restrict(y, static_cast<ColorMask>(~drop));
            if (q[y] == kNoColors) empty = true;
          }
          if (empty) continue;
          if (seen.insert(q).second) out.push_back(std::move(q));
        }
      }
    }
  }
  return out;
}

Palette mij_subpalette(const Palette& l, int i, int j, const ExpansionContext& ctx) {
  Palette out = l;
  ColorMask keep = static_cast<ColorMask>(color_bit(i) | color_bit(j));
  for (int x : ctx.classes[i - 1] & ctx.classes[j - 1]) out.restrict(x, keep);
  return out;
}

void remove_Yi(const Graph& g, Restriction& r, int i, const ExpansionContext& ctx) {
  auto [j, k] = other_colors(i);
  for (int x : ctx.classes[i - 1] & r.vertices) {
    if (!ctx.n_of(g, x, i).empty()) continue;
    r.vertices.erase(x);
    r.removed.push_back(x);
    for (int c : {j, k}) {
      VertexSet m = ctx.n_of(g, x, c);
      if (m.size() > 1) r.mono.push_back(m);
    }
  }
}

bool lift_removed(const Graph& g, const Restriction& r, Coloring& c) {
  for (int x : r.removed) {
    ColorMask used = kNoColors;
    for (int u : g.neighbors(x))
      if (c[u] != 0) used |= color_bit(c[u]);
    int color = lowest_color(static_cast<ColorMask>(kAllColors & ~used));
    if (color == 0) return false;
    c[x] = color;
  }
  return true;
}

std::vector<Restriction> expand_palette(const Graph& g, const ExpansionContext& ctx) {
  if (ctx.infeasible) return {};
  if (ctx.p.empty()) return {whole(g, ctx.palette)};

  std::vector<Restriction> out;
  std::unordered_set<std::string> seen;
  auto emit = [&](Restriction r) {
    if (r.palette.has_empty_list(r.vertices)) return;
    if (seen.insert(restriction_key(r)).second) out.push_back(std::move(r));
  };
  auto chain = [&](const std::vector<Palette>& from, int color) {
    std::vector<Palette> next;
    std::set<Palette> dedup;
    for (const Palette& l : from)
      for (Palette& q : type1_palettes(g, l, color, ctx))
        if (dedup.insert(q).second) next.push_back(std::move(q));
    return next;
  };

  std::array<int, 3> perm{1, 2, 3};
  do {
    auto [c1, c2, c3] = perm;
    std::vector<Palette> l1 = type1_palettes(g, ctx.palette, c1, ctx);
    std::vector<Palette> l12 = chain(l1, c2);
    for (const Palette& l : chain(l12, c3)) emit(whole(g, l));
    for (const Palette& l : l12) {
      Restriction r = whole(g, l);
      remove_Yi(g, r, c3, ctx);
      emit(std::move(r));
    }
    for (const Palette& l : l1) {
      Restriction r = whole(g, mij_subpalette(l, c2, c3, ctx));
      remove_Yi(g, r, c2, ctx);
      remove_Yi(g, r, c3, ctx);
      emit(std::move(r));
    }
    Palette m4 = mij_subpalette(
        mij_subpalette(mij_subpalette(ctx.palette, c1, c2, ctx), c2, c3, ctx), c1, c3, ctx);
    Restriction r = whole(g, m4);
    for (int c : perm) remove_Yi(g, r, c, ctx);
    emit(std::move(r));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Restriction> expand_palette(const Graph& g, const ReducedPalette& rp) {
  return expand_palette(g, extract_context(g, rp));
}

namespace {

// Induced path from a to b whose interior has singleton lists and avoids,
// and is anticomplete to, `avoid`.
bool singleton_path(const Graph& g, const Palette& l, int a, int b, const VertexSet& avoid) {
  VertexSet inner = l.with_list_size(1, g.vertices()) - avoid - g.neighbors_of(avoid);
  inner.erase(a);
  inner.erase(b);
  VertexSet seen{a};
  std::deque<int> queue{a};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v != a && g.adjacent(v, b)) return true;
    for (int u : g.neighbors(v) & inner) {
      if (seen.contains(u)) continue;
      seen.insert(u);
      queue.push_back(u);
    }
  }
  return false;
}

}  // namespace

std::vector<std::string> audit_context(const Graph& g, const TripodPartition& part,
                                       const ReducedPalette& rp, const ExpansionContext& ctx) {
  std::vector<std::string> bad;
  if (ctx.infeasible) return bad;
  const Palette& l = ctx.palette;
  VertexSet s_all = ctx.s[0] | ctx.s[1] | ctx.s[2];
  if (!is_stable(g, ctx.p)) bad.emplace_back("P is not stable");
  if (!s_all.is_subset_of((part.x - rp.xprime) | rp.yprime))
    bad.emplace_back("S outside (X \\ X') + Y'");
  for (int x : ctx.p) {
    std::string name = "P vertex " + std::to_string(x);
    if (!g.neighbors(x).is_subset_of(s_all)) bad.push_back(name + " has neighbours outside S");
    if (is_connected_vertex(g, x)) bad.push_back(name + " is connected");
    if (!(ctx.classes[0] | ctx.classes[1] | ctx.classes[2]).contains(x))
      bad.push_back(name + " lies in no class");
    int nonempty = 0;
    for (int c = 1; c <= 3; ++c) nonempty += ctx.n_of(g, x, c).empty() ? 0 : 1;
    if (nonempty < 2) bad.push_back(name + " sees fewer than two S sets");
  }

  // Third assumption: u - v - w with singleton lists, anticomplete to S_j.
  for (int i = 1; i <= 3; ++i) {
    for (int u : ctx.s[i - 1]) {
      for (int j = 1; j <= 3; ++j) {
        if (j == i) continue;
        VertexSet ok = l.with_list_size(1, g.vertices()) - g.neighbors_of(ctx.s[j - 1]);
        bool found = false;
        for (int v : g.neighbors(u) & ok)
          if (!((g.neighbors(v) & ok) - g.neighbors(u)).empty()) found = true;
        if (!found)
          bad.push_back("S vertex " + std::to_string(u) + " has no singleton path away from S_" +
                        std::to_string(j));
      }
    }
  }

  // Second assumption, over stable quadruples.
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      for (int ui : ctx.s[i - 1]) {
        for (int vi : ctx.s[i - 1]) {
          if (vi <= ui || g.adjacent(ui, vi)) continue;
          for (int uj : ctx.s[j - 1] - g.neighbors(ui) - g.neighbors(vi)) {
            for (int vj : ctx.s[j - 1] - g.neighbors(ui) - g.neighbors(vi) - g.neighbors(uj)) {
              if (vj == uj) continue;
              const std::array<std::array<int, 2>, 4> ends{
                  {{ui, vi}, {uj, vj}, {ui, vj}, {vi, uj}}};
              bool found = false;
              for (auto [a, b] : ends) {
                VertexSet avoid = VertexSet{ui, vi, uj, vj};
                avoid.erase(a);
                avoid.erase(b);
                if (singleton_path(g, l, a, b, avoid)) {
                  found = true;
                  break;
                }
              }
              if (!found)
                bad.push_back("no connecting path for " + std::to_string(ui) + "," +
                              std::to_string(vi) + "," + std::to_string(uj) + "," +
                              std::to_string(vj));
            }
          }
        }
      }
    }
  }
  return bad;
}

std::vector<std::string> audit_restriction(const Graph& g, const ExpansionContext& ctx,
                                           const Restriction& r) {
  (void)g;
  std::vector<std::string> bad;
  for (int v : r.vertices)
    if (r.palette.list_size(v) > 2)
      bad.push_back("vertex " + std::to_string(v) + " keeps three colours");
  for (const VertexSet& m : r.mono)
    if (!m.is_subset_of(r.vertices)) bad.emplace_back("mono set leaves the instance");
  for (int x : r.removed) {
    if (!ctx.p.contains(x)) bad.push_back("removed vertex " + std::to_string(x) + " not in P");
    if (r.vertices.contains(x)) bad.push_back("removed vertex " + std::to_string(x) + " kept");
  }
  return bad;
}

}  // namespace p7c
