#include <doctest.h>

#include <random>
#include <set>

#include "skein/gauss_diagram.hpp"

using namespace skein;

TEST_CASE("parse and render round-trip") {
  for (const char* text : {
           "",
           "O1+U1+",
           "O1+U2+U1+O2+",
           "O1+U2+O3+U1+O2+U3+",
           "O1+U2+ / U1+O2+",
           "O1-U2- / U1-O2-",
           " /  / ",  // three empty circles
       }) {
    GaussDiagram g = parse_gauss(text);
    g.check_valid();
    std::string r = render_gauss(g);
    GaussDiagram g2 = parse_gauss(r);
    CHECK(g == g2);
    CHECK(render_gauss(g2) == r);
  }
  // rendering relabels by first appearance
  CHECK(render_gauss(parse_gauss("O7+U3+O3+U7+")) == "O1+U2+O2+U1+");
  // whitespace between tokens is fine
  CHECK(parse_gauss("O1+ U2+ U1+ O2+") == parse_gauss("O1+U2+U1+O2+"));
}

TEST_CASE("parse errors") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_gauss(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return Errc::bad_input;
  };
  CHECK(kind_of("O1+U1+O1+") == Errc::semantics);   // label used three times
  CHECK(kind_of("O1+U2+") == Errc::semantics);      // 2 never closed
  CHECK(kind_of("O1+O1+") == Errc::semantics);      // two tails, no head
  CHECK(kind_of("O1+U1-") == Errc::semantics);      // sign mismatch
  CHECK(kind_of("O1+U1") == Errc::syntax);          // missing sign
  CHECK(kind_of("X1+") == Errc::syntax);            // bad kind letter
  CHECK(kind_of("O+U+") == Errc::syntax);           // missing label
}

TEST_CASE("unknot and empty circles") {
  GaussDiagram unknot = parse_gauss("");
  CHECK(unknot.circle_count() == 1);
  CHECK(unknot.arrow_count() == 0);
  CHECK(unknot.is_knot());
  CHECK(writhe(unknot) == 0);
  CHECK(gauss_canonical_key(unknot) == "");

  GaussDiagram two = parse_gauss("/");
  CHECK(two.circle_count() == 2);
  CHECK_FALSE(two.is_knot());
}

TEST_CASE("writhe") {
  CHECK(writhe(parse_gauss("O1+U2+O3+U1+O2+U3+")) == 3);
  CHECK(writhe(parse_gauss("O1-U2-O3-U1-O2-U3-")) == -3);
  CHECK(writhe(parse_gauss("O1+U2+U1+O2+")) == 2);
  CHECK(writhe(parse_gauss("O1+U2-U1+O2-")) == 0);
}

TEST_CASE("canonical key is rotation and relabel invariant") {
  GaussDiagram base = parse_gauss("O1+U2+U1+O2+");
  // rotations of the same circular word
  for (const char* rotated : {"U2+U1+O2+O1+", "U1+O2+O1+U2+", "O2+O1+U2+U1+"}) {
    CHECK(gauss_canonical_key(parse_gauss(rotated)) == gauss_canonical_key(base));
  }
  // arbitrary relabeling
  CHECK(gauss_canonical_key(parse_gauss("O9+U4+U9+O4+")) == gauss_canonical_key(base));
  // circle order for links
  CHECK(gauss_canonical_key(parse_gauss("O1+U2+ / U1+O2+")) ==
        gauss_canonical_key(parse_gauss("U2+O1+ / O2+U1+")));
  // the key is itself parseable and a fixed point
  std::string key = gauss_canonical_key(base);
  CHECK(gauss_canonical_key(parse_gauss(key)) == key);
}

TEST_CASE("canonical key separates genuinely different diagrams") {
  GaussDiagram trefoil = parse_gauss("O1+U2+O3+U1+O2+U3+");
  GaussDiagram tref_mirror = mirror(trefoil);
  CHECK(render_gauss(tref_mirror) == "U1-O2-U3-O1-U2-O3-");
  CHECK(gauss_canonical_key(trefoil) != gauss_canonical_key(tref_mirror));
  // mirror is an involution
  CHECK(mirror(tref_mirror) == trefoil);
  CHECK(writhe(tref_mirror) == -3);

  GaussDiagram vtrefoil = parse_gauss("O1+U2+U1+O2+");
  CHECK(gauss_canonical_key(vtrefoil) != gauss_canonical_key(trefoil));
}

TEST_CASE("canonical key under random rotation/relabel") {
  std::mt19937 rng(20260815);
  GaussDiagram g = parse_gauss("O1+U2+O3-U1+U4+O2+U3-O4+");
  std::string key = gauss_canonical_key(g);
  for (int iter = 0; iter < 50; ++iter) {
    GaussDiagram h = g;
    auto& circ = h.circles[0];
    int r = static_cast<int>(rng() % circ.size());
    std::rotate(circ.begin(), circ.begin() + r, circ.end());
    // relabel arrows by a random permutation
    std::vector<int> perm(h.arrow_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::int8_t> signs(h.arrow_count());
    for (int i = 0; i < h.arrow_count(); ++i) signs[perm[i]] = h.signs[i];
    for (GaussEnd& e : circ) e.arrow = perm[e.arrow];
    h.signs = signs;
    h.check_valid();
    CHECK(gauss_canonical_key(h) == key);
  }
}

TEST_CASE("locate and erase_arrow") {
  GaussDiagram g = parse_gauss("O1+U2+ / U1+O2+");
  auto [tail0, head0] = g.locate(0);
  CHECK(tail0 == EndPos{0, 0});
  CHECK(head0 == EndPos{1, 0});
  CHECK(g.at(tail0).arrow == 0);
  CHECK_FALSE(g.at(tail0).head);
  CHECK_THROWS_AS(g.locate(5), Error);

  g.erase_arrow(0);
  CHECK(g.arrow_count() == 1);
  g.check_valid();
  CHECK(render_gauss(g) == "U1+ / O1+");
}

TEST_CASE("connected sum") {
  GaussDiagram unknot = parse_gauss("");
  GaussDiagram trefoil = parse_gauss("O1+U2+O3+U1+O2+U3+");

  // identity on either side, up to canonical key
  CHECK(gauss_canonical_key(connected_sum(trefoil, unknot)) ==
        gauss_canonical_key(trefoil));
  CHECK(gauss_canonical_key(connected_sum(unknot, trefoil)) ==
        gauss_canonical_key(trefoil));

  GaussDiagram square = connected_sum(trefoil, mirror(trefoil));
  square.check_valid();
  CHECK(square.arrow_count() == 6);
  CHECK(square.circle_count() == 1);
  CHECK(writhe(square) == 0);

  GaussDiagram hopf = parse_gauss("O1+U2+ / U1+O2+");
  CHECK_THROWS_AS(connected_sum(trefoil, hopf), Error);
}
