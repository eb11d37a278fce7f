#include "skein/skein_invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "skein/gauss_diagram.hpp"

namespace skein {

namespace {

LaurentPoly one() { return LaurentPoly::constant(1); }

// bracket value of an extra circle: -a^2 - a^-2
LaurentPoly bracket_delta() {
  return -LaurentPoly::variable(Var::a, 2) - LaurentPoly::variable(Var::a, -2);
}

// HOMFLY value of an extra split circle: (l + l^-1) m^-1
LaurentPoly homfly_delta() {
  return (LaurentPoly::variable(Var::l) + LaurentPoly::variable(Var::l, -1)) *
         LaurentPoly::variable(Var::m, -1);
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

SkeinTriple skein_triple(const PlanarDiagram& d, int c) {
  PlanarDiagram other = switch_crossing(d, c);  // validates c
  SkeinTriple t;
  if (d.signs[c] > 0) {
    t.positive = d;
    t.negative = std::move(other);
  } else {
    t.positive = std::move(other);
    t.negative = d;
  }
  t.smoothed = smooth_oriented(d, c);
  return t;
}

BracketPair bracket_pair(const PlanarDiagram& d, int c) {
  return BracketPair{smooth_state(d, c, true), smooth_state(d, c, false)};
}

LaurentPoly kauffman_bracket(const PlanarDiagram& d) {
  // resolution chains pass through disoriented diagrams, so only the
  // unoriented structure is required here
  d.check_pairing();
  const int n = d.crossing_count();
  if (n == 0)
    return d.free_loops == 0 ? one() : bracket_delta().pow(d.free_loops - 1);
  if (n > 24) fail(Errc::bad_input, "bracket state sum capped at 24 crossings");

  const LaurentPoly delta = bracket_delta();
  LaurentPoly total;
  for (std::uint32_t state = 0; state < (std::uint32_t{1} << n); ++state) {
    // ports are c*4+s; each has one arc edge and one smoothing edge, so the
    // state circles are exactly the components of this graph
    Dsu dsu(4 * n);
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < 4; ++s) {
        Port p = d.peers[c][s];
        dsu.join(c * 4 + s, p.crossing * 4 + p.slot);
      }
    for (int c = 0; c < n; ++c) {
      if (state >> c & 1) {  // A-smoothing
        dsu.join(c * 4 + 0, c * 4 + 1);
        dsu.join(c * 4 + 2, c * 4 + 3);
      } else {
        dsu.join(c * 4 + 1, c * 4 + 2);
        dsu.join(c * 4 + 3, c * 4 + 0);
      }
    }
    int loops = d.free_loops;
    for (int p = 0; p < 4 * n; ++p)
      if (dsu.find(p) == p) ++loops;
    int a_count = std::popcount(state);
    Exponents e{};
    e[static_cast<int>(Var::a)] = 2 * a_count - n;
    total += LaurentPoly::monomial(1, e) * delta.pow(loops - 1);
  }
  return total;
}

LaurentPoly kauffman_bracket_recursive(const PlanarDiagram& d) {
  if (d.crossing_count() == 0)
    return d.free_loops == 0 ? one() : bracket_delta().pow(d.free_loops - 1);
  int c = d.crossing_count() - 1;
  return LaurentPoly::variable(Var::a) * kauffman_bracket_recursive(smooth_state(d, c, true)) +
         LaurentPoly::variable(Var::a, -1) *
             kauffman_bracket_recursive(smooth_state(d, c, false));
}

LaurentPoly jones(const PlanarDiagram& d) {
  int w = writhe(d);
  Exponents e{};
  e[static_cast<int>(Var::a)] = -3 * w;
  // (-a)^(-3w) = (-1)^w a^(-3w)
  return LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, e) * kauffman_bracket(d);
}

namespace {

// ---- descending-diagram evaluation of the two oriented skein invariants ----
//
// The tree is driven at the Gauss level so the traversal order is the literal
// endpoint sequence: circles in order, each from slot 0. Switching an arrow
// leaves every visit in place, so the first violation moves strictly later;
// smoothing drops an arrow. Both measures bound the recursion.

GaussDiagram switch_arrow(GaussDiagram g, int arrow) {
  auto [t, h] = g.locate(arrow);
  g.circles[t.circle][t.slot].head = true;
  g.circles[h.circle][h.slot].head = false;
  g.signs[arrow] = -g.signs[arrow];
  return g;
}

// oriented smoothing: the strand entering the tail leaves along the head's
// outgoing arc and vice versa; a self-crossing splits its circle, a mixed
// crossing merges two
GaussDiagram smooth_arrow(const GaussDiagram& g, int arrow) {
  auto [t, h] = g.locate(arrow);
  GaussDiagram out;
  out.signs = g.signs;
  out.signs.erase(out.signs.begin() + arrow);
  auto fix = [&](GaussEnd e) {
    if (e.arrow > arrow) --e.arrow;
    return e;
  };
  // entries strictly between two positions, walking cyclically
  auto arc = [&](const std::vector<GaussEnd>& c, int from, int to) {
    std::vector<GaussEnd> piece;
    int n = static_cast<int>(c.size());
    for (int i = (from + 1) % n; i != to; i = (i + 1) % n) piece.push_back(fix(c[i]));
    return piece;
  };
  for (int ci = 0; ci < g.circle_count(); ++ci) {
    const auto& circle = g.circles[ci];
    if (ci == t.circle && t.circle == h.circle) {
      out.circles.push_back(arc(circle, t.slot, h.slot));
      out.circles.push_back(arc(circle, h.slot, t.slot));
    } else if (ci == t.circle) {
      auto merged = arc(circle, t.slot, t.slot);
      auto rest = arc(g.circles[h.circle], h.slot, h.slot);
      merged.insert(merged.end(), rest.begin(), rest.end());
      out.circles.push_back(std::move(merged));
    } else if (ci == h.circle) {
      continue;  // folded into the tail's circle
    } else {
      auto copy = circle;
      for (auto& e : copy) e = fix(e);
      out.circles.push_back(std::move(copy));
    }
  }
  return out;
}

// first endpoint met on the under-strand of a crossing not seen before;
// -1 when every crossing is entered over first (the diagram is descending)
int first_violation(const GaussDiagram& g) {
  std::vector<char> seen(g.arrow_count(), 0);
  for (const auto& circle : g.circles)
    for (const auto& e : circle) {
      if (seen[e.arrow]) continue;
      seen[e.arrow] = 1;
      if (e.head) return e.arrow;
    }
  return -1;
}

enum class OrientedKind { conway, homfly };

LaurentPoly descending_eval(const GaussDiagram& g, OrientedKind kind,
                            std::unordered_map<std::string, LaurentPoly>& memo,
                            int memo_cap) {
  bool store = g.arrow_count() <= memo_cap;
  std::string key;
  if (store) {
    key = gauss_canonical_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }

  LaurentPoly val;
  int bad = first_violation(g);
  if (bad < 0) {
    // descending diagrams are unlinks
    int k = g.circle_count();
    if (kind == OrientedKind::conway)
      val = k == 1 ? one() : LaurentPoly::zero();
    else
      val = k <= 1 ? one() : homfly_delta().pow(k - 1);
  } else {
    LaurentPoly switched = descending_eval(switch_arrow(g, bad), kind, memo, memo_cap);
    LaurentPoly smoothed = descending_eval(smooth_arrow(g, bad), kind, memo, memo_cap);
    bool positive = g.signs[bad] > 0;
    if (kind == OrientedKind::conway) {
      // D+ - D- = z D0, solved for the side we are on
      LaurentPoly z = LaurentPoly::variable(Var::z);
      val = positive ? switched + z * smoothed : switched - z * smoothed;
    } else {
      // l P+ + l^-1 P- = m P0
      LaurentPoly m = LaurentPoly::variable(Var::m);
      val = positive ? LaurentPoly::variable(Var::l, -1) * m * smoothed -
                           LaurentPoly::variable(Var::l, -2) * switched
                     : LaurentPoly::variable(Var::l) * m * smoothed -
                           LaurentPoly::variable(Var::l, 2) * switched;
    }
  }
  if (store) memo.emplace(std::move(key), val);
  return val;
}

GaussDiagram traversal_view(const PlanarDiagram& d, const SkeinOptions& opt) {
  GaussDiagram g = pd_to_gauss(d);
  if (opt.reverse_traversal) {
    std::reverse(g.circles.begin(), g.circles.end());
    for (auto& c : g.circles)
      if (c.size() > 1) std::rotate(c.begin(), c.begin() + 1, c.end());
  }
  return g;
}

}  // namespace

LaurentPoly conway(const PlanarDiagram& d, const SkeinOptions& opt) {
  d.check_valid();
  std::unordered_map<std::string, LaurentPoly> memo;
  auto& store = opt.cache ? opt.cache->conway : memo;
  int cap = opt.cache ? opt.cache->max_arrows : INT32_MAX;
  return descending_eval(traversal_view(d, opt), OrientedKind::conway, store, cap);
}

LaurentPoly homfly(const PlanarDiagram& d, const SkeinOptions& opt) {
  d.check_valid();
  std::unordered_map<std::string, LaurentPoly> memo;
  auto& store = opt.cache ? opt.cache->homfly : memo;
  int cap = opt.cache ? opt.cache->max_arrows : INT32_MAX;
  LaurentPoly p = descending_eval(traversal_view(d, opt), OrientedKind::homfly, store, cap);
  // every split-circle factor contributes one m^-1; anything lower means the
  // delta powers failed to cancel
  int k = component_count(d);
  for (const auto& [e, c] : p.terms())
    if (e[static_cast<int>(Var::m)] < 1 - k)
      fail(Errc::non_laurent_result, "m-degree below 1-k survived cancellation");
  return p;
}

int arf(const PlanarDiagram& d, const SkeinOptions& opt) {
  if (component_count(d) != 1) fail(Errc::not_a_knot, "arf needs a one-component diagram");
  BigInt c2 = conway(d, opt).coeff1(Var::z, 2);
  return static_cast<int>((c2 % 2 + 2) % 2);
}

namespace {

// (-1)^(total/2) for even total
int half_parity_sign(std::int64_t total) { return (total / 2) % 2 == 0 ? 1 : -1; }

void require_lm_term(const Exponents& e) {
  if (e[static_cast<int>(Var::a)] != 0 || e[static_cast<int>(Var::z)] != 0 ||
      e[static_cast<int>(Var::t)] != 0)
    fail(Errc::bad_input, "expected a polynomial in l and m");
}

}  // namespace

LaurentPoly conway_specialization(const LaurentPoly& homfly_value) {
  // l -> i, m -> iz maps the HOMFLY relation onto the Conway relation;
  // i^(p+q) is (-1)^((p+q)/2) because total degree is even on every term
  LaurentPoly out;
  for (const auto& [e, c] : homfly_value.terms()) {
    require_lm_term(e);
    std::int64_t total = std::int64_t{e[static_cast<int>(Var::l)]} + e[static_cast<int>(Var::m)];
    if (total % 2 != 0) fail(Errc::bad_input, "odd total degree term has no specialization");
    Exponents ez{};
    ez[static_cast<int>(Var::z)] = e[static_cast<int>(Var::m)];
    out += LaurentPoly::monomial(half_parity_sign(total) * c, ez);
  }
  return out;
}

LaurentPoly jones_specialization(const LaurentPoly& homfly_value) {
  // l -> i a^4, m -> i (a^-2 - a^2); negative m-degrees would need negative
  // powers of a binomial, so this map is for one-component values only
  LaurentPoly out;
  const LaurentPoly binom =
      LaurentPoly::variable(Var::a, -2) - LaurentPoly::variable(Var::a, 2);
  for (const auto& [e, c] : homfly_value.terms()) {
    require_lm_term(e);
    std::int32_t p = e[static_cast<int>(Var::l)];
    std::int32_t q = e[static_cast<int>(Var::m)];
    if (q < 0) fail(Errc::bad_input, "negative m-degree only specializes for knots");
    std::int64_t total = std::int64_t{p} + q;
    if (total % 2 != 0) fail(Errc::bad_input, "odd total degree term has no specialization");
    std::int64_t ap = 4 * std::int64_t{p};
    if (ap < INT32_MIN || ap > INT32_MAX) fail(Errc::exponent_overflow, "a-exponent overflow");
    Exponents ea{};
    ea[static_cast<int>(Var::a)] = static_cast<std::int32_t>(ap);
    out += LaurentPoly::monomial(half_parity_sign(total) * c, ea) *
           binom.pow(static_cast<std::uint32_t>(q));
  }
  return out;
}

}  // namespace skein
