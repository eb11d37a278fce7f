#include <doctest.h>

#include <random>

#include "skein/convert.hpp"
#include "skein/samples.hpp"
#include "skein/virtual_invariants.hpp"

using namespace skein;

TEST_CASE("virtual trefoil indices") {
  GaussDiagram g = sample_gauss("vtrefoil");
  CHECK(gaussian_index(g, 0) == 1);
  CHECK(gaussian_index(g, 1) == -1);
  CHECK(odd_writhe(g) == 2);
  CHECK(index_polynomial(g).render() == "t-2+t^-1");
  // mirroring flips J
  CHECK(odd_writhe(mirror(g)) == -2);
}

TEST_CASE("kinks and the unknot") {
  CHECK(odd_writhe(sample_gauss("unknot")) == 0);
  CHECK(index_polynomial(sample_gauss("unknot")).is_zero());
  GaussDiagram kink = parse_gauss("O1+U1+");
  CHECK(gaussian_index(kink, 0) == 0);
  CHECK(odd_writhe(kink) == 0);
  CHECK(index_polynomial(kink).is_zero());
}

TEST_CASE("classical diagrams have vanishing index invariants") {
  std::mt19937 rng(11);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    GaussDiagram g = random_gauss_knot(1 + static_cast<int>(rng() % 5), rng);
    if (!is_realizable(g)) continue;
    ++checked;
    for (int c = 0; c < g.arrow_count(); ++c) CHECK(gaussian_index(g, c) == 0);
    CHECK(odd_writhe(g) == 0);
    CHECK(index_polynomial(g).is_zero());
  }
  CHECK(checked > 80);
}

TEST_CASE("both index computations agree") {
  std::mt19937 rng(12);
  for (int iter = 0; iter < 300; ++iter) {
    GaussDiagram g = random_gauss_knot(1 + static_cast<int>(rng() % 6), rng);
    for (int c = 0; c < g.arrow_count(); ++c)
      CHECK(gaussian_index(g, c) == gaussian_index_by_smoothing(g, c));
  }
}

TEST_CASE("index polynomial structure") {
  std::mt19937 rng(13);
  const LaurentPoly one = LaurentPoly::constant(1);
  for (int iter = 0; iter < 200; ++iter) {
    GaussDiagram g = random_gauss_knot(1 + static_cast<int>(rng() % 6), rng);
    LaurentPoly w = index_polynomial(g);
    // W(1) = 0
    CHECK(w.substitute({{Var::t, one}}).is_zero());
    // J is the odd-power coefficient sum of W
    BigInt odd_sum = 0;
    for (const auto& [e, c] : w.terms())
      if (e[static_cast<int>(Var::t)] % 2 != 0) odd_sum += c;
    CHECK(odd_sum == odd_writhe(g));
  }
}

TEST_CASE("odd writhe is additive under connected sum") {
  GaussDiagram vt = sample_gauss("vtrefoil");
  CHECK(odd_writhe(connected_sum(vt, vt)) == 4);
  CHECK(odd_writhe(connected_sum(vt, mirror(vt))) == 0);
  std::mt19937 rng(14);
  for (int iter = 0; iter < 100; ++iter) {
    GaussDiagram a = random_gauss_knot(1 + static_cast<int>(rng() % 4), rng);
    GaussDiagram b = random_gauss_knot(1 + static_cast<int>(rng() % 4), rng);
    CHECK(odd_writhe(connected_sum(a, b)) == odd_writhe(a) + odd_writhe(b));
    CHECK(index_polynomial(connected_sum(a, b)) ==
          index_polynomial(a) + index_polynomial(b));
  }
}

TEST_CASE("linking matrix") {
  GaussDiagram hopf = sample_gauss("hopf+");
  LinkingMatrix m = linking_matrix(hopf);
  CHECK(m.lk[0][1] == 1);
  CHECK(m.lk[1][0] == 1);
  CHECK(m.lk[0][0] == 0);
  CHECK(wriggle_number(hopf, 0, 1) == 0);

  LinkingMatrix knot = linking_matrix(sample_gauss("trefoil"));
  CHECK(knot.lk == std::vector<std::vector<int>>{{0}});

  // classical links have symmetric linking
  std::mt19937 rng(15);
  int classical = 0;
  for (int iter = 0; iter < 400; ++iter) {
    GaussDiagram g = random_gauss_link(2, 1 + static_cast<int>(rng() % 4), rng);
    LinkingMatrix lm = linking_matrix(g);
    CHECK(wriggle_number(g, 0, 1) == -wriggle_number(g, 1, 0));
    if (!is_realizable(g)) continue;
    ++classical;
    CHECK(lm.lk[0][1] == lm.lk[1][0]);
  }
  CHECK(classical > 60);
}

TEST_CASE("error kinds") {
  GaussDiagram hopf = sample_gauss("hopf+");
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return Errc::bad_input;
  };
  CHECK(kind_of([&] { odd_writhe(hopf); }) == Errc::not_a_knot);
  CHECK(kind_of([&] { index_polynomial(hopf); }) == Errc::not_a_knot);
  CHECK(kind_of([&] { gaussian_index(hopf, 0); }) == Errc::not_a_knot);
  GaussDiagram tref = sample_gauss("trefoil");
  CHECK(kind_of([&] { gaussian_index(tref, 9); }) == Errc::unknown_crossing);
  CHECK(kind_of([&] { wriggle_number(hopf, 0, 0); }) == Errc::bad_component);
  CHECK(kind_of([&] { wriggle_number(hopf, 0, 5); }) == Errc::bad_component);
}

TEST_CASE("sample library") {
  CHECK(render_gauss(sample_gauss("trefoil")) == "O1+U2+O3+U1+O2+U3+");
  CHECK(sample_gauss("unknot").arrow_count() == 0);
  CHECK(is_sample_name("fig8"));
  CHECK_FALSE(is_sample_name("borromean"));
  CHECK_THROWS_AS(sample_gauss("borromean"), Error);

  // the braid closure of sigma_1^3 is the standard trefoil code
  CHECK(render_gauss(braid_closure(2, {1, 1, 1})) == "O1+U2+O3+U1+O2+U3+");
  CHECK_THROWS_AS(braid_closure(2, {2}), Error);
  CHECK_THROWS_AS(braid_closure(2, {0}), Error);

  GaussDiagram fig8 = sample_gauss("fig8");
  CHECK(fig8.is_knot());
  CHECK(fig8.arrow_count() == 4);
  CHECK(writhe(fig8) == 0);
  CHECK(is_realizable(fig8));
  CHECK(odd_writhe(fig8) == 0);
  // closing one strand of the identity braid gives the unknot
  CHECK(braid_closure(1, {}).circle_count() == 1);
  CHECK(braid_closure(3, {}).circle_count() == 3);
}
