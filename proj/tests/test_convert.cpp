#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "skein/convert.hpp"

using namespace skein;

namespace {

// random one-circle diagram with n arrows: a shuffled pairing of 2n slots
GaussDiagram random_knot(int n, std::mt19937& rng) {
  std::vector<int> pos(2 * n);
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  GaussDiagram g;
  g.circles.resize(1);
  g.circles[0].resize(2 * n);
  for (int i = 0; i < n; ++i) {
    bool flip = rng() & 1;
    g.circles[0][pos[2 * i]] = GaussEnd{i, flip};
    g.circles[0][pos[2 * i + 1]] = GaussEnd{i, !flip};
    g.signs.push_back(rng() & 1 ? 1 : -1);
  }
  return g;
}

}  // namespace

TEST_CASE("realize round-trips on random realizable diagrams") {
  std::mt19937 rng(42);
  int realizable = 0, total = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int iter = 0; iter < 120; ++iter) {
      GaussDiagram g = random_knot(n, rng);
      ++total;
      if (!is_realizable(g)) continue;
      ++realizable;
      PlanarDiagram d = realize(g);
      d.check_valid();
      CHECK(euler_ok(d));
      CHECK(d.crossing_count() == g.arrow_count());
      CHECK(writhe(d) == writhe(g));
      CHECK(gauss_canonical_key(pd_to_gauss(d)) == gauss_canonical_key(g));
      // realize commutes with mirror
      CHECK(realize(mirror(g)) == mirror(d));
    }
  }
  // the sample has to contain plenty of both kinds for the test to mean much
  CHECK(realizable > 50);
  CHECK(realizable < total - 50);
}

TEST_CASE("connected sums of classical knots stay classical") {
  GaussDiagram tref = parse_gauss("O1+U2+O3+U1+O2+U3+");
  GaussDiagram square = connected_sum(tref, mirror(tref));
  CHECK(is_realizable(square));
  PlanarDiagram d = realize(square);
  CHECK(d.crossing_count() == 6);
  CHECK(writhe(d) == 0);
  CHECK(gauss_canonical_key(pd_to_gauss(d)) == gauss_canonical_key(square));

  GaussDiagram granny = connected_sum(tref, tref);
  CHECK(is_realizable(granny));
  CHECK(writhe(realize(granny)) == 6);
}

TEST_CASE("parse_pd agrees with realize on rendered codes") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    GaussDiagram g = random_knot(4, rng);
    if (!is_realizable(g)) continue;
    ++checked;
    PlanarDiagram d = realize(g);
    PlanarDiagram back = parse_pd(render_pd(d));
    CHECK(back == d);
  }
  CHECK(checked > 30);
}
