#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

// One arrow endpoint sitting in a circle slot. head = underpass (U token),
// tail = overpass (O token); the arrow points tail -> head.
struct GaussEnd {
  int arrow = -1;
  bool head = false;
  bool operator==(const GaussEnd&) const = default;
};

struct EndPos {
  int circle = -1;
  int slot = -1;
  bool operator==(const EndPos&) const = default;
};

// Gauss diagram for a virtual link: ordered circles (components), each a
// cyclic sequence of endpoints, plus one sign per arrow. Arrow ids are dense
// 0..n-1. Circles may be empty (crossingless unknot components).
struct GaussDiagram {
  std::vector<std::vector<GaussEnd>> circles;
  std::vector<std::int8_t> signs;

  int arrow_count() const { return static_cast<int>(signs.size()); }
  int circle_count() const { return static_cast<int>(circles.size()); }
  bool is_knot() const { return circle_count() == 1; }

  // (tail position, head position); throws unknown_crossing if out of range.
  std::pair<EndPos, EndPos> locate(int arrow) const;
  const GaussEnd& at(const EndPos& p) const { return circles[p.circle][p.slot]; }

  // Internal consistency: every arrow has exactly one tail and one head.
  void check_valid() const;

  // Removes one arrow and compacts ids above it.
  void erase_arrow(int arrow);

  bool operator==(const GaussDiagram&) const = default;
};

// Text grammar: tokens ("O"|"U")<label><sign>, whitespace-separated or
// concatenated; "/" separates circles; empty text is the crossingless unknot.
GaussDiagram parse_gauss(const std::string& text);
std::string render_gauss(const GaussDiagram& g);

// Minimal encoding over basepoint rotation of each circle, circle
// renumbering and arrow relabeling. Mirror images and reversed orientations
// are NOT identified.
std::string gauss_canonical_key(const GaussDiagram& g);

int writhe(const GaussDiagram& g);
// Swap every arrow's head/tail and negate every sign.
GaussDiagram mirror(const GaussDiagram& g);
// Splices k2's circle into the arc after slot 0 of k1 (both knots).
GaussDiagram connected_sum(const GaussDiagram& k1, const GaussDiagram& k2);

}  // namespace skein
