#include "skein/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "skein/convert.hpp"
#include "skein/skein_invariants.hpp"
#include "skein/virtual_invariants.hpp"

namespace skein {

namespace {

// ---------------------------------------------------------------------------
// small gauss helpers

int clen(const GaussDiagram& g, int c) { return static_cast<int>(g.circles[c].size()); }

bool circle_in_range(const GaussDiagram& g, int c) {
  return c >= 0 && c < g.circle_count();
}

int cyc(int p, int len) { return ((p % len) + len) % len; }

// gap g of circle c = insertion point before slot g; an empty circle has one gap
int gap_count(const GaussDiagram& g, int c) { return std::max(clen(g, c), 1); }

// adjacent-pair scans on a 2-slot circle would report (0,1) and (1,0) for the
// same unordered pair; cut the scan at 1 there
int pair_scan_limit(int len) { return len == 2 ? 1 : len; }

bool adjacent_ends(const GaussDiagram& g, const EndPos& x, const EndPos& y) {
  if (x.circle != y.circle) return false;
  int len = clen(g, x.circle);
  return cyc(x.slot + 1, len) == y.slot || cyc(y.slot + 1, len) == x.slot;
}

void switch_arrow(GaussDiagram& g, int a) {
  for (auto& circ : g.circles)
    for (auto& e : circ)
      if (e.arrow == a) e.head = !e.head;
  g.signs[a] = static_cast<std::int8_t>(-g.signs[a]);
}

[[noreturn]] void stale(const std::string& rule) {
  fail(Errc::stale_site, "site for '" + rule + "' no longer matches the diagram");
}

// ---------------------------------------------------------------------------
// r1+  anchor {circle, gap, variant}; variant bit0 = head end first,
//      bit1 = negative sign

bool r1p_ok(const GaussDiagram& g, const std::vector<int>& a) {
  return a.size() == 3 && circle_in_range(g, a[0]) && a[1] >= 0 &&
         a[1] < gap_count(g, a[0]) && a[2] >= 0 && a[2] < 4;
}

GaussDiagram r1p_apply(GaussDiagram g, const std::vector<int>& a) {
  int n = g.arrow_count();
  GaussEnd t{n, false}, h{n, true};
  auto& circ = g.circles[a[0]];
  if (a[2] & 1)
    circ.insert(circ.begin() + a[1], {h, t});
  else
    circ.insert(circ.begin() + a[1], {t, h});
  g.signs.push_back((a[2] & 2) ? -1 : 1);
  return g;
}

std::vector<MoveSite> r1p_sites(const GaussDiagram& g) {
  std::vector<MoveSite> res;
  for (int c = 0; c < g.circle_count(); ++c)
    for (int gap = 0; gap < gap_count(g, c); ++gap)
      for (int v = 0; v < 4; ++v) res.push_back({"r1+", {c, gap, v}});
  return res;
}

// ---------------------------------------------------------------------------
// r1-  anchor {arrow}: the arrow's two ends are cyclically adjacent

bool r1m_ok(const GaussDiagram& g, const std::vector<int>& a) {
  if (a.size() != 1 || a[0] < 0 || a[0] >= g.arrow_count()) return false;
  auto [t, h] = g.locate(a[0]);
  return adjacent_ends(g, t, h);
}

GaussDiagram r1m_apply(GaussDiagram g, const std::vector<int>& a) {
  g.erase_arrow(a[0]);
  return g;
}

std::vector<MoveSite> r1m_sites(const GaussDiagram& g) {
  std::vector<MoveSite> res;
  for (int x = 0; x < g.arrow_count(); ++x)
    if (r1m_ok(g, {x})) res.push_back({"r1-", {x}});
  return res;
}

// ---------------------------------------------------------------------------
// r2   remove anchor {0, i, j} (i < j): tails adjacent, heads adjacent,
//      signs opposite.
//      insert anchor {1, c1, g1, c2, g2, variant}: tails [Ti Tj] into gap
//      (c1,g1), heads into (c2,g2); variant bit0 = heads in swapped order,
//      bit1 = first arrow negative. Gaps are pre-insertion. Equal gaps make
//      a self-poke (one contiguous four-endpoint run); only there bit2
//      applies and puts the head block before the tail block.

bool r2_remove_ok(const GaussDiagram& g, int i, int j) {
  if (i < 0 || j < 0 || i >= g.arrow_count() || j >= g.arrow_count() || i == j)
    return false;
  if (g.signs[i] != -g.signs[j]) return false;
  auto [ti, hi] = g.locate(i);
  auto [tj, hj] = g.locate(j);
  return adjacent_ends(g, ti, tj) && adjacent_ends(g, hi, hj);
}

GaussDiagram r2_remove_apply(GaussDiagram g, int i, int j) {
  g.erase_arrow(std::max(i, j));
  g.erase_arrow(std::min(i, j));
  return g;
}

GaussDiagram r2_insert_apply(GaussDiagram g, const std::vector<int>& a) {
  int c1 = a[1], g1 = a[2], c2 = a[3], g2 = a[4], v = a[5];
  int n = g.arrow_count();
  std::array<GaussEnd, 2> tails = {GaussEnd{n, false}, GaussEnd{n + 1, false}};
  std::array<GaussEnd, 2> heads = {GaussEnd{n, true}, GaussEnd{n + 1, true}};
  if (v & 1) std::swap(heads[0], heads[1]);
  // insert at the larger index first so the smaller gap stays valid
  auto ins = [&](int c, int gap, const std::array<GaussEnd, 2>& pair) {
    auto& circ = g.circles[c];
    circ.insert(circ.begin() + gap, pair.begin(), pair.end());
  };
  if (c1 == c2 && g1 == g2) {
    // one contiguous run; inserting second lands first in the circle
    if (v & 4) {
      ins(c1, g1, tails);
      ins(c1, g1, heads);  // [H H T T]
    } else {
      ins(c1, g1, heads);
      ins(c1, g1, tails);  // [T T H H]
    }
  } else if (c1 == c2 && g1 < g2) {
    ins(c2, g2, heads);
    ins(c1, g1, tails);
  } else {
    ins(c1, g1, tails);
    ins(c2, g2, heads);
  }
  std::int8_t s = (v & 2) ? -1 : 1;
  g.signs.push_back(s);
  g.signs.push_back(static_cast<std::int8_t>(-s));
  return g;
}

bool r2_insert_coords_ok(const GaussDiagram& g, const std::vector<int>& a) {
  if (a.size() != 6) return false;
  int c1 = a[1], g1 = a[2], c2 = a[3], g2 = a[4], v = a[5];
  if (!circle_in_range(g, c1) || !circle_in_range(g, c2)) return false;
  if (g1 < 0 || g1 >= gap_count(g, c1) || g2 < 0 || g2 >= gap_count(g, c2))
    return false;
  int variants = (c1 == c2 && g1 == g2) ? 8 : 4;
  return v >= 0 && v < variants;
}

std::vector<MoveSite> r2_sites(const GaussDiagram& g, bool with_inserts) {
  std::vector<MoveSite> res;
  std::set<std::pair<int, int>> seen;
  for (int c = 0; c < g.circle_count(); ++c) {
    int len = clen(g, c);
    for (int p = 0; p < pair_scan_limit(len); ++p) {
      const GaussEnd& e1 = g.circles[c][p];
      const GaussEnd& e2 = g.circles[c][cyc(p + 1, len)];
      if (e1.head || e2.head) continue;
      int i = std::min(e1.arrow, e2.arrow), j = std::max(e1.arrow, e2.arrow);
      if (!seen.insert({i, j}).second) continue;
      if (r2_remove_ok(g, i, j)) res.push_back({"r2", {0, i, j}});
    }
  }
  if (!with_inserts) return res;
  bool realizable_in = is_realizable(g);
  for (int c1 = 0; c1 < g.circle_count(); ++c1)
    for (int g1 = 0; g1 < gap_count(g, c1); ++g1)
      for (int c2 = 0; c2 < g.circle_count(); ++c2)
        for (int g2 = 0; g2 < gap_count(g, c2); ++g2) {
          int variants = (c1 == c2 && g1 == g2) ? 8 : 4;
          for (int v = 0; v < variants; ++v) {
            std::vector<int> a = {1, c1, g1, c2, g2, v};
            // classical semantics: a poke into a realizable diagram must
            // keep it realizable
            if (realizable_in && !is_realizable(r2_insert_apply(g, a)))
              continue;
            res.push_back({"r2", std::move(a)});
          }
        }
  return res;
}

// ---------------------------------------------------------------------------
// r3   anchor {c1,p1, c2,p2, c3,p3}: three disjoint adjacent pairs covering
//      the three unordered pairs of a 3-arrow set — the triangle's sides.
//      Writing a for the top-middle arrow, b top-bottom, c middle-bottom
//      (top = the strand holding both tails), a planar triangle forces two
//      sign/order relations, derived by placing middle along x, bottom
//      along y and the top strand on any line missing the origin:
//        sgn(a)*[Tc first] == sgn(b)*[Hc first]
//        sgn(a)*[Ta first] == -sgn(c)*[Hc first]
//      with orders read as +1/-1. Both relations flip under the slide, so
//      the rule is self-inverse on its pattern class.

bool r3_ok(const GaussDiagram& g, const std::vector<int>& anch) {
  if (anch.size() != 6) return false;
  std::set<std::pair<int, int>> slots;
  std::array<std::array<GaussEnd, 2>, 3> e;
  for (int k = 0; k < 3; ++k) {
    int c = anch[2 * k], p = anch[2 * k + 1];
    if (!circle_in_range(g, c)) return false;
    int len = clen(g, c);
    if (len < 2 || p < 0 || p >= len) return false;
    slots.insert({c, p});
    slots.insert({c, cyc(p + 1, len)});
    e[k][0] = g.circles[c][p];
    e[k][1] = g.circles[c][cyc(p + 1, len)];
    if (e[k][0].arrow == e[k][1].arrow) return false;
  }
  if (slots.size() != 6) return false;
  std::set<int> arrows;
  std::set<std::pair<int, int>> keys;
  for (int k = 0; k < 3; ++k) {
    int u = e[k][0].arrow, v = e[k][1].arrow;
    arrows.insert(u);
    arrows.insert(v);
    keys.insert({std::min(u, v), std::max(u, v)});
  }
  if (arrows.size() != 3 || keys.size() != 3) return false;
  int tt = -1, hh = -1, th = -1;
  for (int k = 0; k < 3; ++k) {
    bool h0 = e[k][0].head, h1 = e[k][1].head;
    if (!h0 && !h1) {
      if (tt >= 0) return false;
      tt = k;
    } else if (h0 && h1) {
      if (hh >= 0) return false;
      hh = k;
    } else {
      th = k;
    }
  }
  if (tt < 0 || hh < 0 || th < 0) return false;
  int ttA = e[tt][0].arrow, ttB = e[tt][1].arrow;
  int hhA = e[hh][0].arrow, hhB = e[hh][1].arrow;
  int b = (ttA == hhA || ttA == hhB) ? ttA : ttB;
  if (b != hhA && b != hhB) return false;
  int a = (ttA == b) ? ttB : ttA;
  int c = (hhA == b) ? hhB : hhA;
  const GaussEnd& m0 = e[th][0];
  const GaussEnd& m1 = e[th][1];
  bool mixed_ok = (m0.arrow == c && !m0.head && m1.arrow == a && m1.head) ||
                  (m0.arrow == a && m0.head && m1.arrow == c && !m1.head);
  if (!mixed_ok) return false;
  int ot = (ttA == a) ? 1 : -1;
  int om = (m0.arrow == c) ? 1 : -1;
  int ob = (hhA == c) ? 1 : -1;
  int ea = g.signs[a], eb = g.signs[b], ec = g.signs[c];
  return ea * om == eb * ob && ea * ot == -ec * ob;
}

GaussDiagram r3_swap(GaussDiagram g, const std::vector<int>& anch) {
  for (int k = 0; k < 3; ++k) {
    int c = anch[2 * k], p = anch[2 * k + 1];
    int len = clen(g, c);
    std::swap(g.circles[c][p], g.circles[c][cyc(p + 1, len)]);
  }
  return g;
}

std::vector<MoveSite> r3_sites(const GaussDiagram& g) {
  std::vector<std::pair<int, int>> adj;
  for (int c = 0; c < g.circle_count(); ++c) {
    int len = clen(g, c);
    if (len < 2) continue;
    for (int p = 0; p < pair_scan_limit(len); ++p)
      if (g.circles[c][p].arrow != g.circles[c][cyc(p + 1, len)].arrow)
        adj.push_back({c, p});
  }
  std::vector<MoveSite> res;
  bool realizable_in = is_realizable(g);
  int m = static_cast<int>(adj.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        std::array<std::pair<int, int>, 3> ps = {adj[i], adj[j], adj[k]};
        std::sort(ps.begin(), ps.end());
        std::vector<int> anch = {ps[0].first, ps[0].second, ps[1].first,
                                 ps[1].second, ps[2].first, ps[2].second};
        if (!r3_ok(g, anch)) continue;
        if (realizable_in && !is_realizable(r3_swap(g, anch))) continue;
        res.push_back({"r3", std::move(anch)});
      }
  return res;
}

// ---------------------------------------------------------------------------
// cc   anchor {arrow}: swap head/tail, negate the sign

bool cc_ok(const GaussDiagram& g, const std::vector<int>& a) {
  return a.size() == 1 && a[0] >= 0 && a[0] < g.arrow_count();
}

std::vector<MoveSite> cc_sites(const GaussDiagram& g) {
  std::vector<MoveSite> res;
  for (int x = 0; x < g.arrow_count(); ++x) res.push_back({"cc", {x}});
  return res;
}

// ---------------------------------------------------------------------------
// vc   delete anchor {0, arrow}; insert anchor {1, cT, gT, cH, gH, signbit}
//      (distinct pre-insertion gaps; the adjacent-ends case is r1+'s job).
//      find_sites lists deletions; insertions are enumerated by the search
//      expansion so the generated equivalence stays symmetric.

bool vc_ok(const GaussDiagram& g, const std::vector<int>& a) {
  if (a.empty()) return false;
  if (a[0] == 0)
    return a.size() == 2 && a[1] >= 0 && a[1] < g.arrow_count();
  if (a[0] != 1 || a.size() != 6) return false;
  int cT = a[1], gT = a[2], cH = a[3], gH = a[4];
  if (!circle_in_range(g, cT) || !circle_in_range(g, cH)) return false;
  if (gT < 0 || gT >= gap_count(g, cT) || gH < 0 || gH >= gap_count(g, cH))
    return false;
  if (cT == cH && gT == gH) return false;
  return a[5] == 0 || a[5] == 1;
}

GaussDiagram vc_apply(GaussDiagram g, const std::vector<int>& a) {
  if (a[0] == 0) {
    g.erase_arrow(a[1]);
    return g;
  }
  int cT = a[1], gT = a[2], cH = a[3], gH = a[4];
  int n = g.arrow_count();
  g.circles[cT].insert(g.circles[cT].begin() + gT, GaussEnd{n, false});
  int shift = (cT == cH && gH > gT) ? 1 : 0;
  g.circles[cH].insert(g.circles[cH].begin() + gH + shift, GaussEnd{n, true});
  g.signs.push_back(a[5] ? -1 : 1);
  return g;
}

std::vector<MoveSite> vc_sites(const GaussDiagram& g) {
  std::vector<MoveSite> res;
  for (int x = 0; x < g.arrow_count(); ++x) res.push_back({"vc", {0, x}});
  return res;
}

std::vector<MoveSite> vc_insert_sites(const GaussDiagram& g) {
  std::vector<MoveSite> res;
  for (int cT = 0; cT < g.circle_count(); ++cT)
    for (int gT = 0; gT < gap_count(g, cT); ++gT)
      for (int cH = 0; cH < g.circle_count(); ++cH)
        for (int gH = 0; gH < gap_count(g, cH); ++gH) {
          if (cT == cH && gT == gH) continue;
          for (int s = 0; s < 2; ++s) res.push_back({"vc", {1, cT, gT, cH, gH, s}});
        }
  return res;
}

// ---------------------------------------------------------------------------
// fo / fu / fm   anchor {circle, pos}: exchange the adjacent endpoints at
// (pos, pos+1). fo wants two tails, fu two heads, fm a mixed pair of
// distinct arrows (a kink is not an fm site).

bool f_pair_ok(const GaussDiagram& g, const std::vector<int>& a, char kind) {
  if (a.size() != 2 || !circle_in_range(g, a[0])) return false;
  int len = clen(g, a[0]);
  if (len < 2 || a[1] < 0 || a[1] >= len) return false;
  const GaussEnd& e1 = g.circles[a[0]][a[1]];
  const GaussEnd& e2 = g.circles[a[0]][cyc(a[1] + 1, len)];
  switch (kind) {
    case 'o':
      return !e1.head && !e2.head;
    case 'u':
      return e1.head && e2.head;
    default:
      return e1.head != e2.head && e1.arrow != e2.arrow;
  }
}

GaussDiagram f_pair_apply(GaussDiagram g, const std::vector<int>& a) {
  int len = clen(g, a[0]);
  std::swap(g.circles[a[0]][a[1]], g.circles[a[0]][cyc(a[1] + 1, len)]);
  return g;
}

std::vector<MoveSite> f_pair_sites(const GaussDiagram& g, const std::string& name,
                                   char kind) {
  std::vector<MoveSite> res;
  for (int c = 0; c < g.circle_count(); ++c) {
    int len = clen(g, c);
    for (int p = 0; p < pair_scan_limit(len); ++p)
      if (f_pair_ok(g, {c, p}, kind)) res.push_back({name, {c, p}});
  }
  return res;
}

// ---------------------------------------------------------------------------
// xi   anchor {circle, pos}: a shell — both ends of one arrow at pos and
// pos+2 with a single foreign endpoint between them. Swapping the two ends
// reverses the shell arrow in place.

bool xi_ok(const GaussDiagram& g, const std::vector<int>& a) {
  if (a.size() != 2 || !circle_in_range(g, a[0])) return false;
  int len = clen(g, a[0]);
  if (len < 3 || a[1] < 0 || a[1] >= len) return false;
  const GaussEnd& e0 = g.circles[a[0]][a[1]];
  const GaussEnd& e1 = g.circles[a[0]][cyc(a[1] + 1, len)];
  const GaussEnd& e2 = g.circles[a[0]][cyc(a[1] + 2, len)];
  return e0.arrow == e2.arrow && e1.arrow != e0.arrow;
}

GaussDiagram xi_apply(GaussDiagram g, const std::vector<int>& a) {
  int len = clen(g, a[0]);
  std::swap(g.circles[a[0]][a[1]], g.circles[a[0]][cyc(a[1] + 2, len)]);
  return g;
}

std::vector<MoveSite> xi_sites(const GaussDiagram& g) {
  std::vector<MoveSite> res;
  for (int c = 0; c < g.circle_count(); ++c)
    for (int p = 0; p < clen(g, c); ++p)
      if (xi_ok(g, {c, p})) res.push_back({"xi", {c, p}});
  return res;
}

// ---------------------------------------------------------------------------
// s1   delete anchor {0, circle, pos}: five slots [a1 a2 x b2 b1] where the
// outer pair is one arrow, the inner pair another, signs opposite and both
// left ends of the same kind (a nested cancelling shell pair around x).
// insert anchor {1, circle, pos, variant}: grow the pair around the
// endpoint at pos; variant bit0 = head ends first, bit1 = outer negative.

bool s1_delete_ok(const GaussDiagram& g, const std::vector<int>& a) {
  if (a.size() != 3 || !circle_in_range(g, a[1])) return false;
  int len = clen(g, a[1]);
  if (len < 5 || a[2] < 0 || a[2] >= len) return false;
  const auto& circ = g.circles[a[1]];
  std::array<GaussEnd, 5> e;
  for (int k = 0; k < 5; ++k) e[k] = circ[cyc(a[2] + k, len)];
  int z1 = e[0].arrow, z2 = e[1].arrow;
  if (z1 == z2 || e[4].arrow != z1 || e[3].arrow != z2) return false;
  if (e[2].arrow == z1 || e[2].arrow == z2) return false;
  if (g.signs[z1] != -g.signs[z2]) return false;
  return e[0].head == e[1].head;
}

bool s1_insert_ok(const GaussDiagram& g, const std::vector<int>& a) {
  if (a.size() != 4 || !circle_in_range(g, a[1])) return false;
  int len = clen(g, a[1]);
  return len >= 1 && a[2] >= 0 && a[2] < len && a[3] >= 0 && a[3] < 4;
}

GaussDiagram s1_apply(GaussDiagram g, const std::vector<int>& a) {
  if (a[0] == 0) {
    int len = clen(g, a[1]);
    int z1 = g.circles[a[1]][a[2]].arrow;
    int z2 = g.circles[a[1]][cyc(a[2] + 1, len)].arrow;
    g.erase_arrow(std::max(z1, z2));
    g.erase_arrow(std::min(z1, z2));
    return g;
  }
  int c = a[1], p = a[2], v = a[3];
  int n = g.arrow_count();
  bool headA = (v & 1) != 0;
  auto& circ = g.circles[c];
  circ.insert(circ.begin() + p, {GaussEnd{n, headA}, GaussEnd{n + 1, headA}});
  circ.insert(circ.begin() + p + 3,
              {GaussEnd{n + 1, !headA}, GaussEnd{n, !headA}});
  std::int8_t s = (v & 2) ? -1 : 1;
  g.signs.push_back(s);
  g.signs.push_back(static_cast<std::int8_t>(-s));
  return g;
}

std::vector<MoveSite> s1_sites(const GaussDiagram& g, bool with_inserts) {
  std::vector<MoveSite> res;
  for (int c = 0; c < g.circle_count(); ++c)
    for (int p = 0; p < clen(g, c); ++p)
      if (s1_delete_ok(g, {0, c, p})) res.push_back({"s1", {0, c, p}});
  if (!with_inserts) return res;
  for (int c = 0; c < g.circle_count(); ++c)
    for (int p = 0; p < clen(g, c); ++p)
      for (int v = 0; v < 4; ++v) res.push_back({"s1", {1, c, p, v}});
  return res;
}

// ---------------------------------------------------------------------------
// s2   anchor {circle, pos}: a shell [z x z] at (pos..pos+2); carry the
// shell to the other end of x's arrow, reversing its direction. Every
// crossing keeps its sign and every index is unchanged, so this is the
// strongest of the shell moves.

bool s2_ok(const GaussDiagram& g, const std::vector<int>& a) { return xi_ok(g, a); }

GaussDiagram s2_apply(GaussDiagram g, const std::vector<int>& a) {
  int c = a[0], p = a[1];
  int len = clen(g, c);
  const GaussEnd shell_start = g.circles[c][p];
  const GaussEnd x = g.circles[c][cyc(p + 1, len)];
  int z = shell_start.arrow;
  bool headA = shell_start.head;
  // drop the shell's two slots (descending indices keep positions valid)
  int q1 = p, q2 = cyc(p + 2, len);
  auto& circ = g.circles[c];
  circ.erase(circ.begin() + std::max(q1, q2));
  circ.erase(circ.begin() + std::min(q1, q2));
  // the carried shell flanks the other end of x's arrow
  GaussEnd xbar{x.arrow, !x.head};
  for (int c2 = 0; c2 < g.circle_count(); ++c2)
    for (int s = 0; s < clen(g, c2); ++s)
      if (g.circles[c2][s] == xbar) {
        auto& dst = g.circles[c2];
        dst.insert(dst.begin() + s, GaussEnd{z, !headA});
        dst.insert(dst.begin() + s + 2, GaussEnd{z, headA});
        return g;
      }
  stale("s2");
}

std::vector<MoveSite> s2_sites(const GaussDiagram& g) {
  std::vector<MoveSite> res;
  for (int c = 0; c < g.circle_count(); ++c)
    for (int p = 0; p < clen(g, c); ++p)
      if (s2_ok(g, {c, p})) res.push_back({"s2", {c, p}});
  return res;
}

// ---------------------------------------------------------------------------
// wbp  anchor {c1,p1, c2,p2, c3,p3, c4,p4}: a clasp of two bands, each band
// an antiparallel strand pair of one component. With arrows A=c11, B=c12,
// C=c22, D=c21 the four sides read [Ta Tb] / [Tc Td] / [Ha Hd] / [Hc Hb]
// and the signs are s,-s,s,-s. Switching all four crossings passes one band
// through the other.

struct WbpRoles {
  int A, B, C, D;
};

bool wbp_roles(const GaussDiagram& g, const std::vector<int>& a, WbpRoles* out) {
  if (a.size() != 8) return false;
  std::array<std::array<GaussEnd, 2>, 4> e;
  std::set<std::pair<int, int>> slots;
  for (int k = 0; k < 4; ++k) {
    int c = a[2 * k], p = a[2 * k + 1];
    if (!circle_in_range(g, c)) return false;
    int len = clen(g, c);
    if (len < 2 || p < 0 || p >= len) return false;
    slots.insert({c, p});
    slots.insert({c, cyc(p + 1, len)});
    e[k][0] = g.circles[c][p];
    e[k][1] = g.circles[c][cyc(p + 1, len)];
  }
  if (slots.size() != 8) return false;
  // each band lives on one component
  if (a[0] != a[2] || a[4] != a[6]) return false;
  if (e[0][0].head || e[0][1].head || e[1][0].head || e[1][1].head) return false;
  if (!e[2][0].head || !e[2][1].head || !e[3][0].head || !e[3][1].head)
    return false;
  int A = e[0][0].arrow, B = e[0][1].arrow;
  int C = e[1][0].arrow, D = e[1][1].arrow;
  std::set<int> arrows = {A, B, C, D};
  if (arrows.size() != 4) return false;
  if (e[2][0].arrow != A || e[2][1].arrow != D) return false;
  if (e[3][0].arrow != C || e[3][1].arrow != B) return false;
  int s = g.signs[A];
  if (g.signs[C] != s || g.signs[B] != -s || g.signs[D] != -s) return false;
  if (out) *out = {A, B, C, D};
  return true;
}

GaussDiagram wbp_apply(GaussDiagram g, const std::vector<int>& a) {
  WbpRoles r{};
  wbp_roles(g, a, &r);
  switch_arrow(g, r.A);
  switch_arrow(g, r.B);
  switch_arrow(g, r.C);
  switch_arrow(g, r.D);
  return g;
}

std::vector<MoveSite> wbp_sites(const GaussDiagram& g) {
  struct Pair {
    int c, p, a1, a2;
  };
  std::vector<Pair> tt, hh;
  for (int c = 0; c < g.circle_count(); ++c) {
    int len = clen(g, c);
    for (int p = 0; p < pair_scan_limit(len); ++p) {
      const GaussEnd& e1 = g.circles[c][p];
      const GaussEnd& e2 = g.circles[c][cyc(p + 1, len)];
      if (e1.arrow == e2.arrow) continue;
      if (!e1.head && !e2.head) tt.push_back({c, p, e1.arrow, e2.arrow});
      if (e1.head && e2.head) hh.push_back({c, p, e1.arrow, e2.arrow});
    }
  }
  std::vector<MoveSite> res;
  for (size_t i = 0; i < tt.size(); ++i)
    for (size_t j = i + 1; j < tt.size(); ++j) {
      const Pair& p1 = tt[i];
      const Pair& p2 = tt[j];
      for (const Pair& p3 : hh)
        for (const Pair& p4 : hh) {
          if (p3.c == p4.c && p3.p == p4.p) continue;
          std::vector<int> anch = {p1.c, p1.p, p2.c, p2.p,
                                   p3.c, p3.p, p4.c, p4.p};
          if (wbp_roles(g, anch, nullptr)) res.push_back({"wbp", std::move(anch)});
        }
    }
  return res;
}

// ---------------------------------------------------------------------------
// planar rules: delta / pass / sharp, matched on face orbits. The face
// successor of a port p is (peer(p).crossing, peer(p).slot + 1 mod 4); a
// face is an orbit, anchored at its least port.

std::vector<Port> face_orbit(const PlanarDiagram& d, Port start) {
  std::vector<Port> orbit;
  Port p = start;
  do {
    orbit.push_back(p);
    Port q = d.peer(p);
    p = Port{q.crossing, (q.slot + 1) % 4};
  } while (!(p == start) && orbit.size() <= 4 * d.peers.size());
  return orbit;
}

bool anchored_at_min(const std::vector<Port>& orbit) {
  return std::min_element(orbit.begin(), orbit.end()) == orbit.begin();
}

bool corners_distinct(const std::vector<Port>& orbit) {
  std::set<int> cs;
  for (const Port& p : orbit) cs.insert(p.crossing);
  return cs.size() == orbit.size();
}

bool delta_ok(const PlanarDiagram& d, const std::vector<int>& a) {
  if (a.size() != 2 || a[0] < 0 || a[0] >= d.crossing_count()) return false;
  if (a[1] < 0 || a[1] >= 4) return false;
  auto orbit = face_orbit(d, Port{a[0], a[1]});
  return orbit.size() == 3 && anchored_at_min(orbit) && corners_distinct(orbit);
}

// slide the triangle: swap, for each border arc, the Gauss entries of the
// two visits flanking it. Arc k of a walk component enters visit k and
// leaves visit k-1, so the flanking pair starts at position k-1.
GaussDiagram delta_gauss_result(const PlanarDiagram& d, const std::vector<int>& a) {
  auto comps = walk_arcs(d);
  std::map<Port, std::pair<int, int>> arc_of;  // out port -> (circle, index)
  for (int i = 0; i < static_cast<int>(comps.size()); ++i)
    for (int k = 0; k < static_cast<int>(comps[i].size()); ++k)
      arc_of[comps[i][k].first] = {i, k};
  GaussDiagram g = pd_to_gauss(d);
  for (const Port& p : face_orbit(d, Port{a[0], a[1]})) {
    Port out = d.is_in_slot(p.crossing, p.slot) ? d.peer(p) : p;
    auto [ci, k] = arc_of.at(out);
    int len = clen(g, ci);
    int q = cyc(k - 1, len);
    std::swap(g.circles[ci][q], g.circles[ci][cyc(q + 1, len)]);
  }
  return g;
}

PlanarDiagram delta_apply(const PlanarDiagram& d, const std::vector<int>& a) {
  return realize(delta_gauss_result(d, a));
}

// quad face bounded by two bands; band sides sit opposite each other in the
// orbit. Over-band sides use the odd (over) slots at both ends, under-band
// sides the even slots; the sense of a side is whether its orbit port is an
// out-slot. Antiparallel bands (equal senses on opposite sides) make a pass
// site, parallel bands a sharp site.
bool quad_ok(const PlanarDiagram& d, const std::vector<int>& a, bool want_pass) {
  if (a.size() != 2 || a[0] < 0 || a[0] >= d.crossing_count()) return false;
  if (a[1] < 0 || a[1] >= 4) return false;
  auto orbit = face_orbit(d, Port{a[0], a[1]});
  if (orbit.size() != 4 || !anchored_at_min(orbit) || !corners_distinct(orbit))
    return false;
  std::array<bool, 4> over{}, sense{};
  for (int k = 0; k < 4; ++k) {
    const Port& p = orbit[k];
    Port q = d.peer(p);
    bool po = p.slot % 2 == 1, qo = q.slot % 2 == 1;
    if (po != qo) return false;  // a side changing level is not a band side
    over[k] = po;
    sense[k] = !d.is_in_slot(p.crossing, p.slot);
  }
  if (over[0] != over[2] || over[1] != over[3] || over[0] == over[1])
    return false;
  bool anti = sense[0] == sense[2] && sense[1] == sense[3];
  bool para = sense[0] != sense[2] && sense[1] != sense[3];
  return want_pass ? anti : para;
}

PlanarDiagram quad_apply(const PlanarDiagram& d, const std::vector<int>& a) {
  PlanarDiagram res = d;
  for (const Port& p : face_orbit(d, Port{a[0], a[1]}))
    res = switch_crossing(res, p.crossing);
  return res;
}

std::vector<MoveSite> planar_rule_sites(const PlanarDiagram& d,
                                        const std::string& name) {
  std::vector<MoveSite> res;
  std::set<Port> seen;
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) {
      Port p{c, s};
      if (seen.count(p)) continue;
      auto orbit = face_orbit(d, p);
      for (const Port& q : orbit) seen.insert(q);
      std::vector<int> anch = {p.crossing, p.slot};
      if (name == "delta" && delta_ok(d, anch))
        res.push_back({name, std::move(anch)});
      else if (name == "pass" && quad_ok(d, anch, true))
        res.push_back({name, std::move(anch)});
      else if (name == "sharp" && quad_ok(d, anch, false))
        res.push_back({name, std::move(anch)});
    }
  return res;
}

// ---------------------------------------------------------------------------
// registry

std::vector<MoveRule> make_registry() {
  const std::vector<std::string> all = invariant_names();
  const std::vector<std::string> count = {"component_count"};
  const std::vector<std::string> lk = {"component_count", "linking_matrix"};
  const std::vector<std::string> xi_keeps = {"component_count", "odd_writhe",
                                             "linking_matrix"};
  const std::vector<std::string> shell_keeps = {
      "component_count", "odd_writhe", "index_polynomial", "linking_matrix"};
  const std::vector<std::string> band_keeps = {"component_count", "arf",
                                               "linking_matrix"};
  const std::vector<std::string> pass_keeps = {"component_count", "arf"};
  std::vector<MoveRule> reg;
  auto add = [&](std::string name, MoveLevel lvl, std::string pat,
                 std::string rep, std::vector<std::string> keeps) {
    reg.push_back({std::move(name), lvl, std::move(pat), std::move(rep), true,
                   std::move(keeps)});
  };
  add("r1+", MoveLevel::gauss, "arc", "O1 U1 (either order, either sign)", all);
  add("r1-", MoveLevel::gauss, "O1 U1 adjacent (one arrow)", "arc", all);
  add("r2", MoveLevel::gauss,
      "O1 O2 .. U_ U_ (tails adjacent, heads adjacent, opposite signs)", "arcs",
      all);
  add("r3", MoveLevel::gauss, "Oa Ob | Oc Ua | Uc Ub (coherent triangle)",
      "Ob Oa | Ua Oc | Ub Uc", all);
  add("cc", MoveLevel::gauss, "O1 .. U1 (sign s)", "U1 .. O1 (sign -s)", count);
  add("vc", MoveLevel::gauss, "O1 .. U1", "arrow erased", count);
  add("fo", MoveLevel::gauss, "O1 O2 adjacent", "O2 O1", lk);
  add("fu", MoveLevel::gauss, "U1 U2 adjacent", "U2 U1", lk);
  add("fm", MoveLevel::gauss, "O1 U2 adjacent (distinct arrows)", "U2 O1", lk);
  add("xi", MoveLevel::gauss, "Z x Z (shell around one endpoint)",
      "shell arrow reversed in place", xi_keeps);
  add("s1", MoveLevel::gauss, "x", "O1 O2 x U2 U1 (cancelling shell pair)",
      shell_keeps);
  add("s2", MoveLevel::gauss, "O1 x U1 (shell at one end of x's arrow)",
      "shell carried to the other end, reversed", shell_keeps);
  add("wbp", MoveLevel::gauss,
      "Ta Tb | Tc Td | Ha Hd | Hc Hb (clasp of two one-component bands)",
      "all four crossings switched", band_keeps);
  add("delta", MoveLevel::planar, "trigon face, three distinct corners",
      "strand slid across the opposite crossing", lk);
  add("pass", MoveLevel::planar, "quad face between antiparallel bands",
      "band clasp switched", pass_keeps);
  add("sharp", MoveLevel::planar, "quad face between parallel bands",
      "band clasp switched", count);
  return reg;
}

const std::vector<MoveRule>& registry() {
  static const std::vector<MoveRule> reg = make_registry();
  return reg;
}

}  // namespace

// ---------------------------------------------------------------------------
// registry access

const std::vector<MoveRule>& builtin_moves() { return registry(); }

const MoveRule& move_rule(const std::string& name) {
  for (const MoveRule& r : registry())
    if (r.name == name) return r;
  fail(Errc::bad_input, "unknown move rule '" + name + "'");
}

bool is_move_name(const std::string& name) {
  for (const MoveRule& r : registry())
    if (r.name == name) return true;
  return false;
}

std::vector<MoveRule> move_set(const std::string& comma_list) {
  std::vector<MoveRule> res;
  std::string cur;
  auto flush = [&] {
    // trim surrounding spaces
    size_t b = cur.find_first_not_of(" \t");
    size_t e = cur.find_last_not_of(" \t");
    std::string name = b == std::string::npos ? "" : cur.substr(b, e - b + 1);
    cur.clear();
    if (name.empty()) return;
    res.push_back(move_rule(name));
  };
  for (char ch : comma_list) {
    if (ch == ',')
      flush();
    else
      cur.push_back(ch);
  }
  flush();
  return res;
}

// ---------------------------------------------------------------------------
// matching

std::vector<MoveSite> find_sites(const GaussDiagram& g, const MoveRule& rule) {
  if (rule.level != MoveLevel::gauss)
    fail(Errc::level_mismatch,
         "rule '" + rule.name + "' matches planar diagrams, not Gauss diagrams");
  g.check_valid();
  const std::string& n = rule.name;
  if (n == "r1+") return r1p_sites(g);
  if (n == "r1-") return r1m_sites(g);
  if (n == "r2") return r2_sites(g, true);
  if (n == "r3") return r3_sites(g);
  if (n == "cc") return cc_sites(g);
  if (n == "vc") return vc_sites(g);
  if (n == "fo") return f_pair_sites(g, "fo", 'o');
  if (n == "fu") return f_pair_sites(g, "fu", 'u');
  if (n == "fm") return f_pair_sites(g, "fm", 'm');
  if (n == "xi") return xi_sites(g);
  if (n == "s1") return s1_sites(g, true);
  if (n == "s2") return s2_sites(g);
  if (n == "wbp") return wbp_sites(g);
  fail(Errc::bad_input, "unregistered gauss rule '" + n + "'");
}

std::vector<MoveSite> find_sites(const PlanarDiagram& d, const MoveRule& rule) {
  if (rule.level != MoveLevel::planar)
    fail(Errc::level_mismatch,
         "rule '" + rule.name + "' matches Gauss diagrams, not planar diagrams");
  d.check_valid();
  return planar_rule_sites(d, rule.name);
}

std::vector<MoveSite> raw_sites(const GaussDiagram& g, const std::string& name) {
  const MoveRule& rule = move_rule(name);
  if (rule.level == MoveLevel::planar) {
    if (!is_realizable(g)) return {};
    return find_sites(realize(g), rule);
  }
  if (name == "r2") {
    // removes plus every coordinate-valid poke, the filtered ones included
    std::vector<MoveSite> res = r2_sites(g, false);
    for (int c1 = 0; c1 < g.circle_count(); ++c1)
      for (int g1 = 0; g1 < gap_count(g, c1); ++g1)
        for (int c2 = 0; c2 < g.circle_count(); ++c2)
          for (int g2 = 0; g2 < gap_count(g, c2); ++g2) {
            int variants = (c1 == c2 && g1 == g2) ? 8 : 4;
            for (int v = 0; v < variants; ++v)
              res.push_back({"r2", {1, c1, g1, c2, g2, v}});
          }
    return res;
  }
  if (name == "vc") {
    std::vector<MoveSite> res = vc_sites(g);
    for (MoveSite& site : vc_insert_sites(g)) res.push_back(std::move(site));
    return res;
  }
  return find_sites(g, rule);
}

// ---------------------------------------------------------------------------
// application

GaussDiagram apply_move(const GaussDiagram& g, const MoveSite& site) {
  const MoveRule& rule = move_rule(site.rule);
  if (rule.level == MoveLevel::planar) {
    // bridge: planar sites replay on realizable Gauss diagrams
    if (!is_realizable(g))
      fail(Errc::level_mismatch,
           "planar site '" + site.rule + "' on an unrealizable Gauss diagram");
    return pd_to_gauss(apply_move(realize(g), site));
  }
  const std::string& n = site.rule;
  const std::vector<int>& a = site.anchor;
  if (n == "r1+") {
    if (!r1p_ok(g, a)) stale(n);
    return r1p_apply(g, a);
  }
  if (n == "r1-") {
    if (!r1m_ok(g, a)) stale(n);
    return r1m_apply(g, a);
  }
  if (n == "r2") {
    if (a.size() >= 1 && a[0] == 0) {
      if (a.size() != 3 || !r2_remove_ok(g, a[1], a[2])) stale(n);
      return r2_remove_apply(g, a[1], a[2]);
    }
    if (a.size() >= 1 && a[0] == 1) {
      // no realizability re-check here: find_sites withholds virtual pokes
      // on classical diagrams, but a replayed path may legitimately carry
      // one (the inverse of a poke removal that produced this diagram)
      if (!r2_insert_coords_ok(g, a)) stale(n);
      return r2_insert_apply(g, a);
    }
    stale(n);
  }
  if (n == "r3") {
    if (!r3_ok(g, a)) stale(n);
    return r3_swap(g, a);
  }
  if (n == "cc") {
    if (!cc_ok(g, a)) stale(n);
    GaussDiagram res = g;
    switch_arrow(res, a[0]);
    return res;
  }
  if (n == "vc") {
    if (!vc_ok(g, a)) stale(n);
    return vc_apply(g, a);
  }
  if (n == "fo" || n == "fu" || n == "fm") {
    if (!f_pair_ok(g, a, n[1] == 'o' ? 'o' : (n[1] == 'u' ? 'u' : 'm')))
      stale(n);
    return f_pair_apply(g, a);
  }
  if (n == "xi") {
    if (!xi_ok(g, a)) stale(n);
    return xi_apply(g, a);
  }
  if (n == "s1") {
    if (a.empty()) stale(n);
    if (a[0] == 0 && !s1_delete_ok(g, a)) stale(n);
    if (a[0] == 1 && !s1_insert_ok(g, a)) stale(n);
    if (a[0] != 0 && a[0] != 1) stale(n);
    return s1_apply(g, a);
  }
  if (n == "s2") {
    if (!s2_ok(g, a)) stale(n);
    return s2_apply(g, a);
  }
  if (n == "wbp") {
    if (!wbp_roles(g, a, nullptr)) stale(n);
    return wbp_apply(g, a);
  }
  fail(Errc::bad_input, "unregistered gauss rule '" + n + "'");
}

PlanarDiagram apply_move(const PlanarDiagram& d, const MoveSite& site) {
  const MoveRule& rule = move_rule(site.rule);
  if (rule.level == MoveLevel::gauss) {
    // bridge: gauss sites run on the traversal transcription
    return realize(apply_move(pd_to_gauss(d), site));
  }
  const std::vector<int>& a = site.anchor;
  if (site.rule == "delta") {
    if (!delta_ok(d, a)) stale(site.rule);
    return delta_apply(d, a);
  }
  if (site.rule == "pass" || site.rule == "sharp") {
    if (!quad_ok(d, a, site.rule == "pass")) stale(site.rule);
    return quad_apply(d, a);
  }
  fail(Errc::bad_input, "unregistered planar rule '" + site.rule + "'");
}

// ---------------------------------------------------------------------------
// expansion

std::vector<std::pair<GaussDiagram, MoveSite>> move_expansions(
    const GaussDiagram& g, const std::vector<MoveRule>& rules, int crossing_cap) {
  // the Reidemeister set is always in force; explicit duplicates are dropped
  std::vector<MoveRule> active;
  for (const char* rname : {"r1+", "r1-", "r2", "r3"})
    active.push_back(move_rule(rname));
  for (const MoveRule& r : rules) {
    bool dup = false;
    for (const MoveRule& have : active) dup = dup || have.name == r.name;
    if (!dup) active.push_back(r);
  }
  auto within_cap = [&](const GaussDiagram& d) {
    return crossing_cap < 0 || d.arrow_count() <= crossing_cap;
  };
  int n = g.arrow_count();
  bool can_add1 = crossing_cap < 0 || n + 1 <= crossing_cap;
  bool can_add2 = crossing_cap < 0 || n + 2 <= crossing_cap;
  std::vector<std::pair<GaussDiagram, MoveSite>> out;
  for (const MoveRule& r : active) {
    if (r.level == MoveLevel::planar) {
      if (!is_realizable(g)) continue;  // no planar occurrences to speak of
      PlanarDiagram d = realize(g);
      for (MoveSite& site : find_sites(d, r)) {
        GaussDiagram res = pd_to_gauss(apply_move(d, site));
        if (within_cap(res)) out.emplace_back(std::move(res), std::move(site));
      }
      continue;
    }
    // don't enumerate growth the cap forbids: this is the BFS hot path
    std::vector<MoveSite> sites;
    if (r.name == "r1+" && !can_add1)
      continue;
    else if (r.name == "r2")
      sites = r2_sites(g, can_add2);
    else if (r.name == "s1")
      sites = s1_sites(g, can_add2);
    else
      sites = find_sites(g, r);
    for (MoveSite& site : sites) {
      GaussDiagram res = apply_move(g, site);
      if (within_cap(res)) out.emplace_back(std::move(res), std::move(site));
    }
    if (r.name == "vc" && can_add1) {
      for (MoveSite& site : vc_insert_sites(g)) {
        GaussDiagram res = apply_move(g, site);
        if (within_cap(res)) out.emplace_back(std::move(res), std::move(site));
      }
    }
  }
  return out;
}

std::vector<GaussDiagram> neighbors(const GaussDiagram& g,
                                    const std::vector<MoveRule>& rules,
                                    int crossing_cap) {
  std::vector<GaussDiagram> res;
  std::set<std::string> keys;
  for (auto& [d, site] : move_expansions(g, rules, crossing_cap))
    if (keys.insert(gauss_canonical_key(d)).second) res.push_back(std::move(d));
  return res;
}

std::vector<PlanarDiagram> neighbors(const PlanarDiagram& d,
                                     const std::vector<MoveRule>& rules,
                                     int crossing_cap) {
  // run at gauss level; results a planar diagram cannot carry are dropped
  std::vector<PlanarDiagram> res;
  std::set<std::string> keys;
  for (auto& [gg, site] : move_expansions(pd_to_gauss(d), rules, crossing_cap)) {
    if (!is_realizable(gg)) continue;
    if (keys.insert(gauss_canonical_key(gg)).second) res.push_back(realize(gg));
  }
  return res;
}

// ---------------------------------------------------------------------------
// invariant registry hooks

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names = {
      "component_count", "jones",       "conway",
      "homfly",          "arf",         "odd_writhe",
      "index_polynomial", "linking_matrix"};
  return names;
}

std::optional<std::string> evaluate_invariant(const std::string& name,
                                              const GaussDiagram& g) {
  if (name == "component_count") return std::to_string(g.circle_count());
  if (name == "linking_matrix") {
    // the search relation is blind to component order (canonical keys range
    // over circle permutations), so the rendered matrix has to be too: take
    // the least rendering over simultaneous row/column permutations
    LinkingMatrix m = linking_matrix(g);
    int n = static_cast<int>(m.lk.size());
    auto render = [&](const std::vector<int>& perm) {
      std::string s = "[";
      for (int i = 0; i < n; ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < n; ++j) {
          if (j) s += ",";
          s += std::to_string(m.lk[perm[i]][perm[j]]);
        }
        s += "]";
      }
      s += "]";
      return s;
    };
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best = render(perm);
    if (n <= 8) {
      while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, render(perm));
    }
    return best;
  }
  if (name == "odd_writhe") {
    if (!g.is_knot()) return std::nullopt;
    return std::to_string(odd_writhe(g));
  }
  if (name == "index_polynomial") {
    if (!g.is_knot()) return std::nullopt;
    return index_polynomial(g).render();
  }
  if (name == "jones" || name == "conway" || name == "homfly" || name == "arf") {
    if (name == "arf" && !g.is_knot()) return std::nullopt;
    if (!is_realizable(g)) return std::nullopt;
    PlanarDiagram d = realize(g);
    if (name == "jones") return jones(d).render();
    if (name == "conway") return conway(d).render();
    if (name == "homfly") return homfly(d).render();
    return std::to_string(arf(d));
  }
  fail(Errc::bad_input, "unknown invariant '" + name + "'");
}

}  // namespace skein
