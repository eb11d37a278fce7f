#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

#include "skein/laurent.hpp"
#include "skein/planar_diagram.hpp"

namespace skein {

// the three local pictures of the Conway/HOMFLY relations at one crossing
struct SkeinTriple {
  PlanarDiagram positive;
  PlanarDiagram negative;
  PlanarDiagram smoothed;
};

// the two unoriented resolutions of the bracket relation
struct BracketPair {
  PlanarDiagram a_smoothing;
  PlanarDiagram b_smoothing;
};

SkeinTriple skein_triple(const PlanarDiagram& d, int c);
BracketPair bracket_pair(const PlanarDiagram& d, int c);

// state sum over all 2^n resolutions
LaurentPoly kauffman_bracket(const PlanarDiagram& d);
// same value by expanding the relation one crossing at a time
LaurentPoly kauffman_bracket_recursive(const PlanarDiagram& d);

// X(L) = (-a)^(-3w) <L>
LaurentPoly jones(const PlanarDiagram& d);

// Subdiagram values keyed by canonical Gauss key, reusable across calls.
// Signed Gauss codes determine classical link types, so a hit is always
// sound. Entries above max_arrows are recomputed instead of stored; the
// switch chain at full size is linear, so gating at (input size - 1) keeps
// memory flat while bulk scans still share every smoothed subdiagram.
struct SkeinCache {
  std::unordered_map<std::string, LaurentPoly> conway, homfly;
  int max_arrows = INT32_MAX;
};

// alternate deterministic traversal for the determinism cross-check: the
// skein-tree answer may not depend on basepoints or component order
struct SkeinOptions {
  bool reverse_traversal = false;
  SkeinCache* cache = nullptr;
};

LaurentPoly conway(const PlanarDiagram& d, const SkeinOptions& opt = {});
LaurentPoly homfly(const PlanarDiagram& d, const SkeinOptions& opt = {});

// z^2 coefficient of conway, mod 2
int arf(const PlanarDiagram& d, const SkeinOptions& opt = {});

// term-wise ring maps out of the l,m ring fixed by matching the three skein
// relations: l -> i, m -> iz (Conway) and l -> i a^4, m -> i(a^-2 - a^2)
// (Jones); i^(p+q) is a sign because every HOMFLY term has even total degree
LaurentPoly conway_specialization(const LaurentPoly& homfly_value);
LaurentPoly jones_specialization(const LaurentPoly& homfly_value);

}  // namespace skein
