#include "skein/convert.hpp"

namespace skein {

PlanarDiagram realize(const GaussDiagram& g) {
  g.check_valid();
  PlanarDiagram d;
  d.signs = g.signs;
  d.peers.resize(g.arrow_count());
  auto in_port = [&](const GaussEnd& e) {
    return Port{e.arrow, e.head ? 0 : d.over_in_slot(e.arrow)};
  };
  auto out_port = [&](const GaussEnd& e) {
    return Port{e.arrow, e.head ? 2 : d.over_out_slot(e.arrow)};
  };
  for (const auto& circ : g.circles) {
    if (circ.empty()) {
      d.free_loops++;
      continue;
    }
    for (std::size_t k = 0; k < circ.size(); ++k)
      d.set_arc(out_port(circ[k]), in_port(circ[(k + 1) % circ.size()]));
  }
  if (!euler_ok(d))
    fail(Errc::not_realizable, "Gauss sequence admits no planar diagram");
  return d;
}

bool is_realizable(const GaussDiagram& g) {
  try {
    realize(g);
    return true;
  } catch (const Error& e) {
    if (e.kind() == Errc::not_realizable) return false;
    throw;
  }
}

}  // namespace skein
