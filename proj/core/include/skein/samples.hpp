#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "skein/gauss_diagram.hpp"

namespace skein {

// built-in diagrams: unknot, trefoil, fig8, vtrefoil, hopf+
GaussDiagram sample_gauss(const std::string& name);
const std::vector<std::string>& sample_names();
bool is_sample_name(const std::string& name);

// closure of a braid word on `strands` strands; a letter +i (1-based) crosses
// the strand at position i over position i+1, -i crosses it under
GaussDiagram braid_closure(int strands, const std::vector<int>& word);

// uniformly random chord pairing with random directions and signs
GaussDiagram random_gauss_knot(int arrows, std::mt19937& rng);
// endpoints spread over `circles` circles (some may come out empty)
GaussDiagram random_gauss_link(int circles, int arrows, std::mt19937& rng);

// closure of a random word on 2..4 strands: always classical, with exactly
// `crossings` crossings (random pairings are almost never planar past n=5)
GaussDiagram random_braid_diagram(int crossings, std::mt19937& rng);

}  // namespace skein
