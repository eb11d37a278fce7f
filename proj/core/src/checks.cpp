#include "skein/checks.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "skein/convert.hpp"
#include "skein/errors.hpp"
#include "skein/gauss_diagram.hpp"
#include "skein/laurent.hpp"
#include "skein/moves.hpp"
#include "skein/samples.hpp"
#include "skein/search.hpp"
#include "skein/skein_invariants.hpp"
#include "skein/table.hpp"
#include "skein/virtual_invariants.hpp"

namespace skein {

namespace {

GaussDiagram two_unlink() {
  GaussDiagram g;
  g.circles.resize(2);
  return g;
}

// the band clasp: two antiparallel bands crossing, the smallest diagram
// with wbp sites (and, realized, with pass sites)
GaussDiagram band_clasp() {
  GaussDiagram g;
  g.circles = {{{0, false}, {1, false}, {2, false}, {3, false}},
               {{0, true}, {3, true}, {2, true}, {1, true}}};
  g.signs = {1, -1, 1, -1};
  return g;
}

int draw(std::mt19937& rng, int lo, int hi) {  // uniform-ish on [lo, hi]
  return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
}

// a random mix of classical, virtual-knot and link diagrams
GaussDiagram random_carrier(std::mt19937& rng) {
  switch (rng() % 3) {
    case 0: return random_braid_diagram(draw(rng, 2, 6), rng);
    case 1: return random_gauss_knot(draw(rng, 3, 6), rng);
    default: return random_gauss_link(2, draw(rng, 4, 7), rng);
  }
}

// single-circle diagrams from the classical table carrying sites of the
// named rule; the table order is fixed, so the pool is too
std::vector<GaussDiagram> table_carriers(const std::string& name, int want) {
  const MoveRule& rule = move_rule(name);
  std::vector<GaussDiagram> pool;
  for_each_classical_knot(6, [&](const GaussDiagram& g) {
    bool has = rule.level == MoveLevel::planar ? !find_sites(realize(g), rule).empty()
                                               : !find_sites(g, rule).empty();
    if (has) pool.push_back(g);
    return static_cast<int>(pool.size()) < want;
  });
  return pool;
}

std::vector<std::string> preserved_by_all(const std::vector<MoveRule>& rules) {
  std::vector<std::string> kept;
  for (const std::string& inv : invariant_names()) {
    bool ok = true;
    for (const MoveRule& r : rules)
      if (std::find(r.preserves.begin(), r.preserves.end(), inv) == r.preserves.end()) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(inv);
  }
  return kept;
}

}  // namespace

CheckResult check_skein_relations(int diagrams, int max_crossings, std::uint32_t seed) {
  CheckResult res{"skein_relations", 0, 0};
  std::mt19937 rng(seed);
  SkeinCache cache;
  SkeinOptions opt;
  opt.cache = &cache;
  const LaurentPoly a = LaurentPoly::variable(Var::a);
  const LaurentPoly ai = LaurentPoly::variable(Var::a, -1);
  const LaurentPoly z = LaurentPoly::variable(Var::z);
  const LaurentPoly l = LaurentPoly::variable(Var::l);
  const LaurentPoly li = LaurentPoly::variable(Var::l, -1);
  const LaurentPoly m = LaurentPoly::variable(Var::m);
  for (int i = 0; i < diagrams; ++i) {
    PlanarDiagram d = realize(random_braid_diagram(draw(rng, 2, max_crossings), rng));
    LaurentPoly bracket_d = kauffman_bracket(d);
    for (int c = 0; c < d.crossing_count(); ++c) {
      SkeinTriple t = skein_triple(d, c);
      res.cases += 3;
      if (!(conway(t.positive, opt) - conway(t.negative, opt) - z * conway(t.smoothed, opt))
               .is_zero())
        ++res.failures;
      if (!(l * homfly(t.positive, opt) + li * homfly(t.negative, opt) -
            m * homfly(t.smoothed, opt))
               .is_zero())
        ++res.failures;
      BracketPair p = bracket_pair(d, c);
      if (!(bracket_d - a * kauffman_bracket(p.a_smoothing) -
            ai * kauffman_bracket(p.b_smoothing))
               .is_zero())
        ++res.failures;
    }
  }
  return res;
}

CheckResult check_normalizations() {
  CheckResult res{"normalizations", 3, 0};
  if (jones(realize(sample_gauss("unknot"))) != LaurentPoly::constant(1)) ++res.failures;
  PlanarDiagram unlink = realize(two_unlink());
  if (!conway(unlink).is_zero()) ++res.failures;
  LaurentPoly expected = (LaurentPoly::variable(Var::l) + LaurentPoly::variable(Var::l, -1)) *
                         LaurentPoly::variable(Var::m, -1);
  if (homfly(unlink) != expected) ++res.failures;
  return res;
}

CheckResult check_specializations(int max_arrows) {
  CheckResult res{"homfly_specializations", 0, 0};
  SkeinCache cache;
  cache.max_arrows = max_arrows - 1;
  SkeinOptions opt;
  opt.cache = &cache;
  for_each_classical_knot(max_arrows, [&](const GaussDiagram& g) {
    PlanarDiagram d = realize(g);
    LaurentPoly h = homfly(d, opt);
    res.cases += 2;
    if (conway_specialization(h) != conway(d, opt)) ++res.failures;
    if (jones_specialization(h) != jones(d)) ++res.failures;
    return true;
  });
  return res;
}

CheckResult check_rmove_invariance(int applications, std::uint32_t seed) {
  CheckResult res{"rmove_invariance", 0, 0};
  std::mt19937 rng(seed);
  const std::array<const char*, 4> names = {"r1+", "r1-", "r2", "r3"};
  int done = 0;
  for (long long attempt = 0; done < applications && attempt < 200LL * applications; ++attempt) {
    GaussDiagram g = random_carrier(rng);
    const MoveRule& rule = move_rule(names[rng() % names.size()]);
    std::vector<MoveSite> sites = find_sites(g, rule);
    if (sites.empty()) continue;
    GaussDiagram h = apply_move(g, sites[rng() % sites.size()]);
    for (const std::string& inv : invariant_names()) {
      ++res.cases;
      // an r2 removal may land a virtually-classical diagram on a realizable
      // one, so the skein polynomials can gain definedness; values must
      // agree wherever both sides have one
      auto before = evaluate_invariant(inv, g);
      auto after = evaluate_invariant(inv, h);
      if (before && after && *before != *after) ++res.failures;
    }
    ++done;
  }
  return res;
}

CheckResult check_move_preservation(const std::string& name, int applications,
                                    std::uint32_t seed) {
  const MoveRule& rule = move_rule(name);
  CheckResult res{"preserves(" + name + ")", 0, 0};
  std::mt19937 rng(seed);

  // rules whose sites are rare on random diagrams draw carriers from the
  // classical table instead (plus the clasp, the smallest band carrier)
  std::vector<GaussDiagram> pool;
  if (name == "wbp" || rule.level == MoveLevel::planar) {
    pool = table_carriers(name, 64);
    if (name == "wbp" || name == "pass") {
      pool.push_back(band_clasp());
      pool.push_back(mirror(band_clasp()));
    }
  }

  auto compare = [&](const GaussDiagram& before, const GaussDiagram& after) {
    for (const std::string& inv : rule.preserves) {
      ++res.cases;
      auto l = evaluate_invariant(inv, before);
      auto r = evaluate_invariant(inv, after);
      if (l && r && *l != *r) ++res.failures;
    }
  };

  int done = 0;
  for (long long attempt = 0; done < applications && attempt < 200LL * applications; ++attempt) {
    if (rule.level == MoveLevel::planar) {
      PlanarDiagram d = realize(pool[rng() % pool.size()]);
      std::vector<MoveSite> sites = find_sites(d, rule);
      if (sites.empty()) continue;
      PlanarDiagram d2 = apply_move(d, sites[rng() % sites.size()]);
      compare(pd_to_gauss(d), pd_to_gauss(d2));
    } else {
      GaussDiagram g = pool.empty() ? random_carrier(rng) : pool[rng() % pool.size()];
      std::vector<MoveSite> sites = find_sites(g, rule);
      if (sites.empty()) continue;
      compare(g, apply_move(g, sites[rng() % sites.size()]));
    }
    ++done;
  }
  if (done < applications) res.property += " [starved]";
  return res;
}

CheckResult check_classicality(int max_arrows) {
  CheckResult res{"classicality", 0, 0};
  for_each_classical_knot(max_arrows, [&](const GaussDiagram& g) {
    ++res.cases;
    if (odd_writhe(g) != 0 || !index_polynomial(g).is_zero()) ++res.failures;
    return true;
  });
  ++res.cases;
  if (odd_writhe(sample_gauss("vtrefoil")) != 2) ++res.failures;
  return res;
}

CheckResult check_additivity() {
  CheckResult res{"additivity", 0, 0};
  GaussDiagram tre = sample_gauss("trefoil");
  GaussDiagram fig8 = sample_gauss("fig8");
  GaussDiagram cinq = braid_closure(2, {1, 1, 1, 1, 1});
  std::vector<GaussDiagram> classical = {sample_gauss("unknot"),
                                         tre,
                                         mirror(tre),
                                         fig8,
                                         cinq,
                                         mirror(cinq),
                                         braid_closure(2, {1, 1, 1, 1, 1, 1, 1}),
                                         braid_closure(3, {1, 2, 1, 2}),
                                         connected_sum(tre, tre),
                                         connected_sum(tre, fig8)};
  std::vector<int> arfs;
  for (const GaussDiagram& k : classical) arfs.push_back(arf(realize(k)));
  for (size_t i = 0; i < classical.size(); ++i)
    for (size_t j = 0; j < classical.size(); ++j) {
      ++res.cases;
      if (arf(realize(connected_sum(classical[i], classical[j]))) != (arfs[i] + arfs[j]) % 2)
        ++res.failures;
    }

  GaussDiagram vtre = sample_gauss("vtrefoil");
  std::mt19937 rng(20240803);
  std::vector<GaussDiagram> knots = {vtre,
                                     mirror(vtre),
                                     tre,
                                     fig8,
                                     connected_sum(vtre, vtre),
                                     connected_sum(vtre, tre),
                                     random_gauss_knot(3, rng),
                                     random_gauss_knot(4, rng),
                                     random_gauss_knot(5, rng),
                                     random_gauss_knot(4, rng)};
  std::vector<int> js;
  for (const GaussDiagram& k : knots) js.push_back(odd_writhe(k));
  for (size_t i = 0; i < knots.size(); ++i)
    for (size_t j = 0; j < knots.size(); ++j) {
      ++res.cases;
      if (odd_writhe(connected_sum(knots[i], knots[j])) != js[i] + js[j]) ++res.failures;
    }
  return res;
}

CheckResult check_quotient_consistency(int pairs, std::uint32_t seed) {
  CheckResult res{"quotient_consistency", 0, 0};
  std::mt19937 rng(seed);
  const std::array<std::pair<Quotient, const char*>, 3> table = {
      {{Quotient::xi, "xi"}, {Quotient::shell, "s1,s2"}, {Quotient::fused, "fo,fu,fm"}}};
  for (int i = 0; i < pairs; ++i) {
    auto [q, rule_list] = table[i % table.size()];
    GaussDiagram g1, g2;
    if (q == Quotient::fused) {
      g1 = random_gauss_link(2, draw(rng, 3, 5), rng);
      g2 = random_gauss_link(2, draw(rng, 3, 5), rng);
    } else {
      g1 = random_gauss_knot(draw(rng, 2, 4), rng);
      g2 = random_gauss_knot(draw(rng, 2, 4), rng);
    }
    QuotientOutcome verdict = decide_quotient(g1, g2, q);
    SearchBounds bounds;
    bounds.node_cap = 600;
    bounds.depth_cap = 2;
    SearchOutcome out = equivalent_mod(g1, g2, move_set(rule_list), bounds);
    ++res.cases;
    if (!verdict.equivalent && out.verdict == Verdict::equivalent) ++res.failures;
    if (verdict.equivalent && out.verdict == Verdict::distinguished) ++res.failures;
  }
  return res;
}

CheckResult check_search_soundness(int pairs, std::uint32_t seed) {
  CheckResult res{"search_soundness", 0, 0};
  std::mt19937 rng(seed);
  const std::array<const char*, 10> sets = {"",   "cc",    "vc", "fm",    "fo,fu",
                                            "xi", "s1,s2", "wbp", "cc,vc", "fo,fu,fm"};
  for (int i = 0; i < pairs; ++i) {
    std::vector<MoveRule> rules = move_set(sets[i % sets.size()]);
    auto fresh = [&] {
      return i % 2 ? random_gauss_knot(draw(rng, 2, 4), rng)
                   : random_gauss_link(2, draw(rng, 3, 5), rng);
    };
    GaussDiagram g1 = fresh();
    GaussDiagram g2;
    if (rng() % 2) {  // walk a few expansions so Equivalent actually fires
      g2 = g1;
      int steps = draw(rng, 1, 3);
      for (int s = 0; s < steps; ++s) {
        auto exp = move_expansions(g2, rules, g2.arrow_count() + 2);
        if (exp.empty()) break;
        g2 = exp[rng() % exp.size()].first;
      }
    } else {
      g2 = fresh();
    }
    SearchBounds bounds;
    bounds.node_cap = 400;
    bounds.depth_cap = 2;
    SearchOutcome out = equivalent_mod(g1, g2, rules, bounds);
    ++res.cases;
    if (out.verdict == Verdict::equivalent)
      for (const std::string& inv : preserved_by_all(rules)) {
        // both-defined only: moves may cross diagram realizability
        auto l = evaluate_invariant(inv, g1);
        auto r = evaluate_invariant(inv, g2);
        if (l && r && *l != *r) ++res.failures;
      }
  }
  return res;
}

std::vector<CheckResult> run_check_suite(const std::string& suite, std::uint32_t seed) {
  std::vector<CheckResult> out;
  bool all = suite == "all";
  bool hit = false;
  if (all || suite == "skein") {
    hit = true;
    out.push_back(check_skein_relations(200, 8, seed));
    out.push_back(check_normalizations());
    out.push_back(check_specializations(5));
  }
  if (all || suite == "rmoves") {
    hit = true;
    out.push_back(check_rmove_invariance(500, seed));
  }
  if (all || suite == "preservation") {
    hit = true;
    for (const MoveRule& rule : builtin_moves())
      out.push_back(check_move_preservation(rule.name, 60, seed));
  }
  if (all || suite == "quotients") {
    hit = true;
    out.push_back(check_quotient_consistency(150, seed));
    out.push_back(check_search_soundness(150, seed));
  }
  if (!hit)
    fail(Errc::bad_input,
         "unknown check suite '" + suite + "' (want skein, rmoves, preservation, quotients or all)");
  return out;
}

}  // namespace skein
