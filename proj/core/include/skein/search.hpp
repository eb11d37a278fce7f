#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/gauss_diagram.hpp"
#include "skein/moves.hpp"
#include "skein/planar_diagram.hpp"

namespace skein {

struct SearchBounds {
  int crossing_cap = -1;        // -1: larger input size + 2
  long long node_cap = 100000;  // diagrams stored across both directions
  int depth_cap = 16;           // per direction, so paths reach 2*depth_cap
};

enum class Verdict { equivalent, distinguished, unknown };

// the separating invariant and both rendered values
struct Certificate {
  std::string invariant;
  std::string left, right;
};

struct SearchStats {
  long long nodes = 0;  // distinct diagrams stored (both directions)
  int max_frontier = 0;
  int depth = 0;  // deepest level stored on either side
};

struct SearchOutcome {
  Verdict verdict = Verdict::unknown;
  // when equivalent: replaying these sites on d1 (in order, via apply_move)
  // ends on d2's canonical key
  std::vector<MoveSite> path;
  // when distinguished: an invariant preserved by every rule in the search
  // set that takes different values on the inputs
  std::optional<Certificate> certificate;
  SearchStats stats;
};

// Decides d1 ~ d2 under `rules` plus the always-on Reidemeister set, by
// invariant separation and bidirectional breadth-first search over canonical
// keys. Never wrong: equivalent/distinguished come with a replayable path /
// a certificate, and anything the bounds cut off is reported unknown.
SearchOutcome equivalent_mod(const GaussDiagram& d1, const GaussDiagram& d2,
                             const std::vector<MoveRule>& rules,
                             const SearchBounds& bounds = {});
SearchOutcome equivalent_mod(const PlanarDiagram& d1, const PlanarDiagram& d2,
                             const std::vector<MoveRule>& rules,
                             const SearchBounds& bounds = {});

// equivalent_mod against the crossingless unknot; NotAKnot on links
SearchOutcome unknot_search(const GaussDiagram& g,
                            const std::vector<MoveRule>& rules,
                            const SearchBounds& bounds = {});

// Quotients with a complete invariant: no search, the answer is exact.
//   xi    - flanking-arrow flips;      decided by the odd writhe J
//   shell - shell moves s1/s2;         decided by the index polynomial W
//   fused - forbidden moves fo/fu;     decided by the linking matrix
enum class Quotient { xi, shell, fused };

Quotient quotient_from_name(const std::string& name);  // BadInput on others

struct QuotientOutcome {
  bool equivalent = false;
  std::string invariant;    // the deciding invariant's registry name
  std::string left, right;  // its rendered values on d1, d2
};

// xi and shell require knot diagrams on both sides (BadInput otherwise);
// fused takes any welded links, with component count compared first
QuotientOutcome decide_quotient(const GaussDiagram& d1, const GaussDiagram& d2,
                                Quotient q);

}  // namespace skein
