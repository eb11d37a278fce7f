#include "skein/report.hpp"

#include <json.hpp>

#include "skein/convert.hpp"
#include "skein/skein_invariants.hpp"
#include "skein/virtual_invariants.hpp"

namespace skein {

InvariantReport build_report(const std::string& input, const GaussDiagram& g,
                             SkeinCache* cache) {
  g.check_valid();
  InvariantReport r;
  r.input = input;
  r.crossings = g.arrow_count();
  r.components = g.circle_count();
  r.writhe = writhe(g);
  r.realizable = is_realizable(g);
  r.linking = linking_matrix(g).lk;
  if (g.is_knot()) {
    r.odd_writhe = odd_writhe(g);
    r.index_polynomial = index_polynomial(g).render();
  }
  if (r.realizable) {
    SkeinOptions opt;
    opt.cache = cache;
    PlanarDiagram d = realize(g);
    r.bracket = kauffman_bracket(d).render();
    r.jones = jones(d).render();
    r.conway = conway(d, opt).render();
    r.homfly = homfly(d, opt).render();
    if (g.is_knot()) r.arf = arf(d, opt);
  }
  return r;
}

std::string report_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["input"] = r.input;
  j["crossings"] = r.crossings;
  j["components"] = r.components;
  j["writhe"] = r.writhe;
  j["realizable"] = r.realizable;
  if (r.jones) j["jones"] = *r.jones;
  if (r.conway) j["conway"] = *r.conway;
  if (r.homfly) j["homfly"] = *r.homfly;
  if (r.bracket) j["bracket"] = *r.bracket;
  if (r.arf) j["arf"] = *r.arf;
  if (r.odd_writhe) j["odd_writhe"] = *r.odd_writhe;
  if (r.index_polynomial) j["index_polynomial"] = *r.index_polynomial;
  j["linking"] = r.linking;
  return j.dump();
}

}  // namespace skein
