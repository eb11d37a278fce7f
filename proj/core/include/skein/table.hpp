#pragma once

#include <functional>

#include "skein/gauss_diagram.hpp"

namespace skein {

// Streams the classical knot table: every realizable one-circle Gauss
// diagram with at most max_arrows arrows, exactly one representative per
// canonical key, in a fixed order (arrow count, then chord pairing, then
// decoration). Returns false from the visitor to stop early.
//
// Enumeration is realization-first. For a fixed pairing and fixed chord
// directions the crossing signs force the combinatorial map, so scanning
// sign vectors and keeping the planar ones touches 2^n maps per pairing
// instead of the 4^n decorated words; each planar (pairing, signs) shadow
// then fans out over direction choices (a direction flip plus a sign flip
// is a crossing switch, which keeps the shadow planar). max_arrows is
// capped at 8 - the pairing space is the (2n-1)!! bottleneck.
void for_each_classical_knot(int max_arrows,
                             const std::function<bool(const GaussDiagram&)>& visit);

}  // namespace skein
