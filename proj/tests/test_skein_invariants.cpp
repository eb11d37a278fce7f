#include <doctest.h>

#include <random>
#include <vector>

#include "skein/convert.hpp"
#include "skein/samples.hpp"
#include "skein/skein_invariants.hpp"

using namespace skein;

namespace {

PlanarDiagram sample_pd(const std::string& name) { return realize(sample_gauss(name)); }

// random realizable diagram with the requested shape (retries until planar)
PlanarDiagram random_pd(int circles, int arrows, std::mt19937& rng) {
  for (;;) {
    GaussDiagram g = random_gauss_link(circles, arrows, rng);
    if (is_realizable(g)) return realize(g);
  }
}

LaurentPoly lv(Var v, int p = 1) { return LaurentPoly::variable(v, p); }

}  // namespace

TEST_CASE("unlink normalizations") {
  PlanarDiagram unknot;
  unknot.free_loops = 1;
  CHECK(kauffman_bracket(unknot).render() == "1");
  CHECK(jones(unknot).render() == "1");
  CHECK(conway(unknot).render() == "1");
  CHECK(homfly(unknot).render() == "1");

  PlanarDiagram unlink2;
  unlink2.free_loops = 2;
  CHECK(kauffman_bracket(unlink2).render() == "-a^2-a^-2");
  CHECK(conway(unlink2).is_zero());
  CHECK(homfly(unlink2).render() == "lm^-1+l^-1m^-1");

  PlanarDiagram unlink3;
  unlink3.free_loops = 3;
  CHECK(conway(unlink3).is_zero());
  CHECK(homfly(unlink3) == homfly(unlink2) * homfly(unlink2));
}

TEST_CASE("kinks evaluate like the unknot after normalization") {
  PlanarDiagram pos = parse_pd("X[1,1,2,2]");
  PlanarDiagram neg = parse_pd("X[1,2,2,1]");
  CHECK(kauffman_bracket(pos).render() == "-a^3");
  CHECK(kauffman_bracket(neg).render() == "-a^-3");
  CHECK(jones(pos).render() == "1");
  CHECK(jones(neg).render() == "1");
  CHECK(conway(pos).render() == "1");
  CHECK(homfly(neg).render() == "1");
}

TEST_CASE("golden values on the sample knots and links") {
  PlanarDiagram tref = sample_pd("trefoil");  // right-handed, writhe +3
  CHECK(kauffman_bracket(tref).render() == "-a^5-a^-3+a^-7");
  CHECK(jones(tref).render() == "a^-4+a^-12-a^-16");
  CHECK(conway(tref).render() == "z^2+1");
  CHECK(homfly(tref).render() == "l^-2m^2-2l^-2-l^-4");

  PlanarDiagram fig8 = sample_pd("fig8");
  CHECK(jones(fig8).render() == "a^8-a^4+1-a^-4+a^-8");
  CHECK(conway(fig8).render() == "-z^2+1");
  // amphichiral: the mirror has the same invariants
  CHECK(jones(mirror(fig8)) == jones(fig8));
  CHECK(homfly(mirror(fig8)) == homfly(fig8));

  PlanarDiagram hopf = sample_pd("hopf+");
  CHECK(kauffman_bracket(hopf).render() == "-a^4-a^-4");
  CHECK(jones(hopf).render() == "-a^-2-a^-10");
  CHECK(conway(hopf).render() == "z");
  CHECK(homfly(hopf).render() == "l^-1m-l^-1m^-1-l^-3m^-1");
}

TEST_CASE("state sum agrees with the crossing-by-crossing bracket expansion") {
  CHECK(kauffman_bracket_recursive(sample_pd("trefoil")) ==
        kauffman_bracket(sample_pd("trefoil")));
  std::mt19937 rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    PlanarDiagram d = random_pd(iter % 2 + 1, 2 + iter % 5, rng);
    CHECK(kauffman_bracket_recursive(d) == kauffman_bracket(d));
  }
}

TEST_CASE("skein_triple and bracket_pair dissect one crossing") {
  PlanarDiagram tref = sample_pd("trefoil");
  SkeinTriple t = skein_triple(tref, 0);
  CHECK(t.positive == tref);
  CHECK(writhe(t.negative) == 1);
  CHECK(pd_canonical_key(t.smoothed) == pd_canonical_key(sample_pd("hopf+")));
  // the smoothed picture is shared between the two sides of the relation
  CHECK(smooth_oriented(t.negative, 0) == t.smoothed);

  PlanarDiagram kink = parse_pd("X[1,1,2,2]");
  BracketPair b = bracket_pair(kink, 0);
  CHECK(component_count(b.a_smoothing) == 2);
  CHECK(component_count(b.b_smoothing) == 1);

  CHECK_THROWS_AS(skein_triple(tref, 3), Error);
  CHECK_THROWS_AS(bracket_pair(tref, -1), Error);
}

TEST_CASE("skein and bracket relations hold at every crossing of random diagrams") {
  const LaurentPoly a = lv(Var::a), z = lv(Var::z), l = lv(Var::l), m = lv(Var::m);
  std::mt19937 rng(23);
  int sites = 0;
  for (int iter = 0; iter < 25; ++iter) {
    PlanarDiagram d = random_pd(iter % 2 + 1, 3 + iter % 4, rng);
    for (int c = 0; c < d.crossing_count(); ++c) {
      ++sites;
      SkeinTriple t = skein_triple(d, c);
      CHECK(conway(t.positive) - conway(t.negative) == z * conway(t.smoothed));
      CHECK(l * homfly(t.positive) + lv(Var::l, -1) * homfly(t.negative) ==
            m * homfly(t.smoothed));
      // the bracket relation, and the jones relation it induces
      BracketPair b = bracket_pair(d, c);
      CHECK(kauffman_bracket(d) ==
            a * kauffman_bracket(b.a_smoothing) + lv(Var::a, -1) * kauffman_bracket(b.b_smoothing));
      CHECK(lv(Var::a, 4) * jones(t.positive) - lv(Var::a, -4) * jones(t.negative) ==
            (lv(Var::a, -2) - lv(Var::a, 2)) * jones(t.smoothed));
    }
  }
  CHECK(sites > 80);
}

TEST_CASE("skein-tree answers do not depend on the traversal choice") {
  std::mt19937 rng(5);
  SkeinOptions alt{true};
  for (int iter = 0; iter < 20; ++iter) {
    PlanarDiagram d = random_pd(iter % 3 == 0 ? 2 : 1, 3 + iter % 4, rng);
    CHECK(conway(d) == conway(d, alt));
    CHECK(homfly(d) == homfly(d, alt));
  }
}

TEST_CASE("mirror images transform the invariants exactly") {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 12; ++iter) {
    PlanarDiagram d = random_pd(1, 3 + iter % 4, rng);
    PlanarDiagram md = mirror(d);
    CHECK(jones(md) == jones(d).substitute({{Var::a, lv(Var::a, -1)}}));
    CHECK(homfly(md) == homfly(d).substitute({{Var::l, lv(Var::l, -1)}}));
    CHECK(conway(md) == conway(d));  // knots: even powers of z only
  }
}

TEST_CASE("invariants are multiplicative under connected sum") {
  GaussDiagram tref = sample_gauss("trefoil");
  GaussDiagram fig8 = sample_gauss("fig8");
  std::vector<GaussDiagram> knots = {tref, mirror(tref), fig8, connected_sum(tref, fig8)};
  for (const auto& k1 : knots)
    for (const auto& k2 : knots) {
      PlanarDiagram s = realize(connected_sum(k1, k2));
      PlanarDiagram d1 = realize(k1), d2 = realize(k2);
      CHECK(conway(s) == conway(d1) * conway(d2));
      CHECK(homfly(s) == homfly(d1) * homfly(d2));
      CHECK(jones(s) == jones(d1) * jones(d2));
      CHECK(arf(s) == (arf(d1) + arf(d2)) % 2);
    }
}

TEST_CASE("arf values and the knot precondition") {
  CHECK(arf(sample_pd("unknot")) == 0);
  CHECK(arf(sample_pd("trefoil")) == 1);
  CHECK(arf(sample_pd("fig8")) == 1);
  try {
    arf(sample_pd("hopf+"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::not_a_knot);
  }
}

TEST_CASE("homfly specializes to conway and jones term by term") {
  std::mt19937 rng(47);
  for (int iter = 0; iter < 15; ++iter) {
    PlanarDiagram d = random_pd(1, 3 + iter % 4, rng);
    LaurentPoly p = homfly(d);
    CHECK(conway_specialization(p) == conway(d));
    CHECK(jones_specialization(p) == jones(d));
  }
  // the conway map is a ring morphism, so split components cancel exactly
  for (int iter = 0; iter < 8; ++iter) {
    PlanarDiagram d = random_pd(2, 4, rng);
    CHECK(conway_specialization(homfly(d)) == conway(d));
  }
}

TEST_CASE("specialization input checks") {
  auto kind_of = [](const LaurentPoly& p, bool jones_map) {
    try {
      jones_map ? jones_specialization(p) : conway_specialization(p);
    } catch (const Error& e) {
      return e.kind();
    }
    return Errc::syntax;
  };
  CHECK(kind_of(lv(Var::a), false) == Errc::bad_input);
  CHECK(kind_of(lv(Var::l), false) == Errc::bad_input);  // odd total degree
  CHECK(kind_of(lv(Var::m, -1) * lv(Var::l), true) == Errc::bad_input);
  // link values carry negative m-powers, so the jones map rejects them
  CHECK(kind_of(homfly(sample_pd("hopf+")), true) == Errc::bad_input);
}
