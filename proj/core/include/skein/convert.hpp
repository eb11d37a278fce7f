#pragma once

#include "skein/gauss_diagram.hpp"
#include "skein/planar_diagram.hpp"

namespace skein {

// Build the planar diagram whose unicursal traversal reads off g. The local
// rotation at each crossing is pinned by the crossing sign, so the candidate
// map is unique; it is a diagram iff the map is planar.
PlanarDiagram realize(const GaussDiagram& g);

bool is_realizable(const GaussDiagram& g);

}  // namespace skein
