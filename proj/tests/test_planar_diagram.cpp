#include <doctest.h>

#include "skein/convert.hpp"
#include "skein/planar_diagram.hpp"

using namespace skein;

namespace {
const char* kTrefoilPd = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kTrefoilGauss = "O1+U2+O3+U1+O2+U3+";
}  // namespace

TEST_CASE("parse_pd on the tabulated trefoil") {
  PlanarDiagram d = parse_pd(kTrefoilPd);
  CHECK(d.crossing_count() == 3);
  CHECK(d.free_loops == 0);
  CHECK(component_count(d) == 1);
  // the tabulated 3-crossing code is the left-handed trefoil
  CHECK(writhe(d) == -3);
  CHECK(euler_ok(d));
  CHECK(face_count(d) == 5);  // V=3, E=6, F=5
}

TEST_CASE("parse_pd errors") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_pd(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return Errc::bad_input;
  };
  CHECK(kind_of("X[1,2,3]") == Errc::syntax);
  CHECK(kind_of("X[1,2,3,4") == Errc::syntax);
  CHECK(kind_of("Y[1,2,3,4]") == Errc::syntax);
  CHECK(kind_of("L0") == Errc::syntax);
  CHECK(kind_of("L1 X[1,1,2,2]") == Errc::syntax);  // loops come last
  CHECK(kind_of("X[1,1,2,3]") == Errc::semantics);  // label 3 has one end
  // labels of one component must be consecutive
  CHECK(kind_of("X[1,2,3,4] X[3,4,1,2]") == Errc::inconsistent_orientation);
  // under-strand must step by one
  CHECK(kind_of("X[1,2,4,5] X[3,6,2,1] X[5,4,6,3]") == Errc::inconsistent_orientation);
  // consistent labels whose map has genus: the virtual trefoil pattern
  CHECK(kind_of("X[1,4,2,3] X[2,1,3,4]") == Errc::non_planar);
}

TEST_CASE("free loops and the empty diagram") {
  PlanarDiagram unknot = parse_pd("L1");
  CHECK(unknot.crossing_count() == 0);
  CHECK(unknot.free_loops == 1);
  CHECK(component_count(unknot) == 1);
  CHECK(writhe(unknot) == 0);
  CHECK(render_pd(unknot) == "L1");

  PlanarDiagram empty = parse_pd("");
  CHECK(empty.crossing_count() == 0);
  CHECK(component_count(empty) == 0);
  CHECK(render_pd(empty) == "");

  GaussDiagram g = pd_to_gauss(unknot);
  CHECK(g.circle_count() == 1);
  CHECK(g.arrow_count() == 0);
}

TEST_CASE("kinks fix the sign convention") {
  PlanarDiagram pos = parse_pd("X[1,1,2,2]");
  CHECK(writhe(pos) == 1);
  CHECK(component_count(pos) == 1);
  PlanarDiagram neg = parse_pd("X[1,2,2,1]");
  CHECK(writhe(neg) == -1);

  // a-state of the positive kink splits off a circle, b-state does not
  CHECK(component_count(smooth_state(pos, 0, true)) == 2);
  CHECK(component_count(smooth_state(pos, 0, false)) == 1);
  CHECK(smooth_state(pos, 0, true).crossing_count() == 0);
  // oriented smoothing always splits a kink
  CHECK(component_count(smooth_oriented(pos, 0)) == 2);
  CHECK(component_count(smooth_oriented(neg, 0)) == 2);
}

TEST_CASE("render and parse round-trip") {
  for (const char* text : {kTrefoilPd, "X[1,1,2,2]", "X[1,2,2,1]", "L3",
                           "X[1,1,2,2] L2", ""}) {
    PlanarDiagram d = parse_pd(text);
    std::string canon = render_pd(d);
    CHECK(render_pd(parse_pd(canon)) == canon);
    CHECK(parse_pd(canon) == d);
  }
}

TEST_CASE("realize classical examples") {
  GaussDiagram tref = parse_gauss(kTrefoilGauss);
  PlanarDiagram d = realize(tref);
  CHECK(d.crossing_count() == 3);
  CHECK(writhe(d) == 3);
  CHECK(component_count(d) == 1);
  CHECK(is_realizable(tref));
  // round trip through the traversal
  CHECK(gauss_canonical_key(pd_to_gauss(d)) == gauss_canonical_key(tref));

  GaussDiagram hopf = parse_gauss("O1+U2+ / U1+O2+");
  PlanarDiagram h = realize(hopf);
  CHECK(h.crossing_count() == 2);
  CHECK(component_count(h) == 2);
  CHECK(writhe(h) == 2);
  CHECK(gauss_canonical_key(pd_to_gauss(h)) == gauss_canonical_key(hopf));

  PlanarDiagram nothing = realize(parse_gauss(""));
  CHECK(nothing.crossing_count() == 0);
  CHECK(nothing.free_loops == 1);
}

TEST_CASE("realize rejects nonclassical diagrams") {
  GaussDiagram vtref = parse_gauss("O1+U2+U1+O2+");
  CHECK_FALSE(is_realizable(vtref));
  try {
    realize(vtref);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::not_realizable);
  }
  // adding a classical kink does not make it realizable
  CHECK_FALSE(is_realizable(parse_gauss("O1+U2+U1+O2+O3+U3+")));
  CHECK(is_realizable(parse_gauss("O1+U1+")));
}

TEST_CASE("tabulated PD code matches the mirrored Gauss code") {
  PlanarDiagram pd = parse_pd(kTrefoilPd);
  GaussDiagram g = parse_gauss(kTrefoilGauss);
  CHECK(gauss_canonical_key(pd_to_gauss(pd)) == gauss_canonical_key(mirror(g)));
  CHECK(pd_canonical_key(pd) == pd_canonical_key(realize(mirror(g))));
  CHECK(pd_canonical_key(pd) != pd_canonical_key(realize(g)));
}

TEST_CASE("planar canonical key identities") {
  PlanarDiagram d = realize(parse_gauss(kTrefoilGauss));
  // stable under re-parsing the rendered code
  CHECK(pd_canonical_key(parse_pd(render_pd(d))) == pd_canonical_key(d));
  // mirror is an involution
  CHECK(pd_canonical_key(mirror(mirror(d))) == pd_canonical_key(d));
  CHECK(mirror(mirror(d)) == d);
  CHECK(writhe(mirror(d)) == -3);
  mirror(d).check_valid();
  // realize commutes with mirror
  CHECK(mirror(d) == realize(mirror(parse_gauss(kTrefoilGauss))));
}

TEST_CASE("switch_crossing") {
  PlanarDiagram d = realize(parse_gauss(kTrefoilGauss));
  PlanarDiagram s = switch_crossing(d, 1);
  s.check_valid();
  CHECK(writhe(s) == 1);
  CHECK(switch_crossing(s, 1) == d);
  CHECK_THROWS_AS(switch_crossing(d, 7), Error);
  // switching every crossing of a diagram is its mirror
  PlanarDiagram m = d;
  for (int c = 0; c < d.crossing_count(); ++c) m = switch_crossing(m, c);
  CHECK(m == mirror(d));
}

TEST_CASE("smoothing the trefoil") {
  PlanarDiagram d = realize(parse_gauss(kTrefoilGauss));
  // oriented smoothing of any trefoil crossing gives a 2-crossing 2-component
  // diagram (the positive Hopf link)
  PlanarDiagram s = smooth_oriented(d, 0);
  s.check_valid();
  CHECK(s.crossing_count() == 2);
  CHECK(component_count(s) == 2);
  CHECK(writhe(s) == 2);
  CHECK(pd_canonical_key(s) == pd_canonical_key(realize(parse_gauss("O1+U2+ / U1+O2+"))));
  CHECK(euler_ok(s));

  // a-state at every crossing of the trefoil leaves two circles
  PlanarDiagram a = d;
  while (a.crossing_count() > 0) a = smooth_state(a, 0, true);
  CHECK(component_count(a) == 2);
  // b-state leaves three
  PlanarDiagram b = d;
  while (b.crossing_count() > 0) b = smooth_state(b, 0, false);
  CHECK(component_count(b) == 3);
}

TEST_CASE("pd_to_gauss preserves counts and signs") {
  for (const char* text : {kTrefoilPd, "X[1,1,2,2]", "X[1,2,2,1] L1"}) {
    PlanarDiagram d = parse_pd(text);
    GaussDiagram g = pd_to_gauss(d);
    g.check_valid();
    CHECK(g.arrow_count() == d.crossing_count());
    CHECK(g.circle_count() == component_count(d));
    CHECK(writhe(g) == writhe(d));
    CHECK(is_realizable(g));
  }
}
