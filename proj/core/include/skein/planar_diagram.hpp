#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "skein/errors.hpp"
#include "skein/gauss_diagram.hpp"

namespace skein {

// One end of an arc: slot s of crossing c. Slots run counterclockwise with
// slot 0 at the incoming under-strand, so slot 2 is the outgoing under-strand
// and the over-strand occupies slots 1 and 3.
struct Port {
  int crossing = -1;
  int slot = -1;
  bool operator==(const Port&) const = default;
  bool operator<(const Port& o) const {
    return crossing != o.crossing ? crossing < o.crossing : slot < o.slot;
  }
};

// Oriented 4-valent map of a link diagram. peers[c][s] is the port at the far
// end of the arc attached to (c,s); the pairing is symmetric. A positive
// crossing has its over-strand entering at slot 3, a negative one at slot 1.
struct PlanarDiagram {
  std::vector<std::array<Port, 4>> peers;
  std::vector<std::int8_t> signs;
  int free_loops = 0;

  int crossing_count() const { return static_cast<int>(signs.size()); }
  int over_in_slot(int c) const { return signs[c] > 0 ? 3 : 1; }
  int over_out_slot(int c) const { return signs[c] > 0 ? 1 : 3; }
  bool is_in_slot(int c, int s) const { return s == 0 || s == over_in_slot(c); }
  Port peer(Port p) const { return peers[p.crossing][p.slot]; }
  void set_arc(Port x, Port y) {
    peers[x.crossing][x.slot] = y;
    peers[y.crossing][y.slot] = x;
  }
  // where the strand entering at in-slot s leaves the crossing
  int out_slot_for(int c, int s) const { return s == 0 ? 2 : over_out_slot(c); }
  // peer table is a symmetric involution with sane signs and loop count; this
  // is all an unoriented resolution chain can promise
  void check_pairing() const;
  // check_pairing plus every arc joining an out-slot to an in-slot
  void check_valid() const;
  bool operator==(const PlanarDiagram&) const = default;
};

PlanarDiagram parse_pd(const std::string& text);
std::string render_pd(const PlanarDiagram& d);
std::string pd_canonical_key(const PlanarDiagram& d);

int writhe(const PlanarDiagram& d);
int component_count(const PlanarDiagram& d);

// number of faces of the underlying map (free loops contribute none)
int face_count(const PlanarDiagram& d);
// V - E + F == 2 per connected map component
bool euler_ok(const PlanarDiagram& d);

PlanarDiagram mirror(const PlanarDiagram& d);

// flip over/under at one crossing (re-anchors the quadruple; sign negates)
PlanarDiagram switch_crossing(const PlanarDiagram& d, int c);

// delete crossing c, rejoining its four arc stubs as slot pairs
// {(0,1),(2,3)} (the A-state) or {(1,2),(3,0)} (the B-state); internal
// cycles become free loops
PlanarDiagram smooth_state(const PlanarDiagram& d, int c, bool a_state);

// orientation-respecting smoothing: under-in joins over-out
PlanarDiagram smooth_oriented(const PlanarDiagram& d, int c);

// unicursal traversal, one circle per link component plus empty circles for
// free loops; arrow ids equal crossing indices, signs copied
GaussDiagram pd_to_gauss(const PlanarDiagram& d);

// the traversal behind pd_to_gauss: per component the arcs (out port, in
// port) in strand order; arc k of component i enters the crossing recorded
// at circle i, position k of the Gauss transcription
std::vector<std::vector<std::pair<Port, Port>>> walk_arcs(const PlanarDiagram& d);

}  // namespace skein
