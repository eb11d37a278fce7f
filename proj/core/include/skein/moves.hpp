#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/gauss_diagram.hpp"
#include "skein/planar_diagram.hpp"

namespace skein {

enum class MoveLevel { gauss, planar };

// A named local rewrite. `preserves` lists the invariant names (see
// invariant_names) the move provably leaves alone; the registry tests feed
// on exactly this list, so a wrong entry is a failing test, not a comment.
struct MoveRule {
  std::string name;
  MoveLevel level = MoveLevel::gauss;
  // human-readable before/after fragments; the executable form lives in the
  // matcher and applier for the rule
  std::string pattern;
  std::string replacement;
  bool reversible = true;
  std::vector<std::string> preserves;
};

// r1+, r1-, r2, r3, cc, vc, fo, fu, fm, xi, s1, s2 (gauss level) and
// delta, pass, sharp (planar level) plus wbp (gauss level band pass).
const std::vector<MoveRule>& builtin_moves();
const MoveRule& move_rule(const std::string& name);  // bad_input on unknown
bool is_move_name(const std::string& name);
// resolves a comma list like "cc,fo" ("" -> empty set); bad_input on unknown
std::vector<MoveRule> move_set(const std::string& comma_list);

// One matched occurrence. The anchor layout is rule-specific (documented
// next to each matcher in moves.cpp); anchors serialize as plain int lists.
struct MoveSite {
  std::string rule;
  std::vector<int> anchor;
  bool operator==(const MoveSite&) const = default;
};

// All occurrences of the rule's pattern, in scan order. Gauss rules match
// Gauss diagrams and planar rules match planar diagrams; anything else is a
// LevelMismatch. r2/r3 sites on a realizable diagram are filtered so the
// move keeps it realizable (classical Reidemeister semantics).
std::vector<MoveSite> find_sites(const GaussDiagram& g, const MoveRule& rule);
std::vector<MoveSite> find_sites(const PlanarDiagram& d, const MoveRule& rule);

// Applies one site. The pattern is re-verified at the anchor first and a
// mismatch throws StaleSite. Cross-level sites are bridged through
// realize/pd_to_gauss so recorded search paths replay on either form;
// bridging an unrealizable diagram is a LevelMismatch.
GaussDiagram apply_move(const GaussDiagram& g, const MoveSite& site);
PlanarDiagram apply_move(const PlanarDiagram& d, const MoveSite& site);

// Every coordinate-valid site of one named rule, unfiltered: includes the
// virtual r2 pokes and vc insertions find_sites withholds. The search uses
// this to invert recorded steps (a poke removal can land on a realizable
// diagram whose re-poke find_sites would hide).
std::vector<MoveSite> raw_sites(const GaussDiagram& g, const std::string& name);

// Every single application as (result, producing site) - both directions,
// since the generated equivalence is symmetric - plus always the
// Reidemeister set; capped (crossing_cap < 0 means uncapped) but not
// deduplicated. BFS plumbing: each site replays on g via apply_move.
std::vector<std::pair<GaussDiagram, MoveSite>> move_expansions(
    const GaussDiagram& g, const std::vector<MoveRule>& rules, int crossing_cap);

// Results of single applications of `rules` - both directions, since the
// generated equivalence is symmetric - plus always the Reidemeister set,
// kept to <= crossing_cap crossings and deduplicated by canonical key.
std::vector<GaussDiagram> neighbors(const GaussDiagram& g,
                                    const std::vector<MoveRule>& rules,
                                    int crossing_cap);
std::vector<PlanarDiagram> neighbors(const PlanarDiagram& d,
                                     const std::vector<MoveRule>& rules,
                                     int crossing_cap);

// names understood by the preservation registry and search certificates:
// component_count, jones, conway, homfly, arf, odd_writhe,
// index_polynomial, linking_matrix
const std::vector<std::string>& invariant_names();

// Rendered value of the named invariant, or nullopt where it does not apply
// (skein polynomials need a realizable diagram, arf/odd_writhe/
// index_polynomial additionally a knot).
std::optional<std::string> evaluate_invariant(const std::string& name,
                                              const GaussDiagram& g);

}  // namespace skein
