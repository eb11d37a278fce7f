#include <doctest.h>

#include <random>

#include "skein/laurent.hpp"

using skein::BigInt;
using skein::Errc;
using skein::Error;
using skein::Exponents;
using skein::LaurentPoly;
using skein::Var;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> expo(-4, 4);
  std::uniform_int_distribution<int> nvars(0, 2);
  std::uniform_int_distribution<int> which(0, skein::kVarCount - 1);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Exponents e{};
    int vs = nvars(rng);
    for (int j = 0; j < vs; ++j) e[which(rng)] = expo(rng);
    p += LaurentPoly::monomial(coeff(rng), e);
  }
  return p;
}

const LaurentPoly A = LaurentPoly::variable(Var::a);
const LaurentPoly Z = LaurentPoly::variable(Var::z);
const LaurentPoly M = LaurentPoly::variable(Var::m);

}  // namespace

TEST_CASE("constants and zero") {
  CHECK(LaurentPoly::zero().is_zero());
  CHECK(LaurentPoly::zero().render() == "0");
  CHECK(LaurentPoly::constant(0).is_zero());
  CHECK(LaurentPoly::constant(-3).render() == "-3");
  CHECK((Z - Z).is_zero());
}

TEST_CASE("worked arithmetic examples") {
  // (z^2+1) + (z-1) = z^2+z
  LaurentPoly p = Z * Z + 1;
  LaurentPoly q = Z - 1;
  CHECK((p + q).render() == "z^2+z");
  // (a+a^-1)^2 = a^2+2+a^-2
  LaurentPoly s = A + LaurentPoly::variable(Var::a, -1);
  CHECK(s.pow(2).render() == "a^2+2+a^-2");
  // m |-> -z in m^2 gives z^2
  LaurentPoly m2 = M * M;
  CHECK(m2.substitute({{Var::m, -Z}}).render() == "z^2");
}

TEST_CASE("render golden values") {
  CHECK((Z * Z + 1).render() == "z^2+1");
  CHECK((-(A * A) - LaurentPoly::variable(Var::a, -2)).render() == "-a^2-a^-2");
  CHECK((2 * Z).render() == "2z");
  CHECK((-(Z)).render() == "-z");
  CHECK((LaurentPoly::variable(Var::a, -4) * LaurentPoly::constant(-1) +
         LaurentPoly::variable(Var::a, -12))
            .render() == "-a^-4+a^-12");
  // mixed variables render in the fixed order a,z,l,m,t
  LaurentPoly mix = LaurentPoly::monomial(3, Exponents{2, 1, 0, 0, -1});
  CHECK(mix.render() == "3a^2zt^-1");
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 1200; ++i) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + LaurentPoly::zero() == p);
    CHECK(p * LaurentPoly::constant(1) == p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(777);
  std::map<Var, LaurentPoly> sub = {
      {Var::a, -LaurentPoly::variable(Var::a, -1)},
      {Var::z, LaurentPoly::monomial(1, Exponents{0, 0, 1, -2, 0})},
  };
  for (int i = 0; i < 400; ++i) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng);
    CHECK((p + q).substitute(sub) == p.substitute(sub) + q.substitute(sub));
    CHECK((p * q).substitute(sub) == p.substitute(sub) * q.substitute(sub));
  }
}

TEST_CASE("substitute with negative exponents stays exact") {
  // a |-> -a^-1 sends a^-3 to -a^3
  LaurentPoly p = LaurentPoly::variable(Var::a, -3);
  CHECK(p.substitute({{Var::a, -LaurentPoly::variable(Var::a, -1)}}).render() == "-a^3");
  // identity-style renaming: z |-> t
  LaurentPoly q = Z * Z + 1;
  CHECK(q.substitute({{Var::z, LaurentPoly::variable(Var::t)}}).render() == "t^2+1");
}

TEST_CASE("non-monomial bindings are rejected") {
  LaurentPoly p = M * M;
  CHECK_THROWS_AS(p.substitute({{Var::m, Z + 1}}), Error);
  CHECK_THROWS_AS(p.substitute({{Var::m, 2 * Z}}), Error);
  try {
    p.substitute({{Var::m, Z + 1}});
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::non_monomial_binding);
  }
}

TEST_CASE("exponent overflow aborts with a diagnostic") {
  LaurentPoly big = LaurentPoly::variable(Var::a, 2000000000);
  CHECK_THROWS_AS(big * big, Error);
  try {
    LaurentPoly x = big * big;
    (void)x;
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::exponent_overflow);
  }
}

TEST_CASE("render parse render is idempotent") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 1000; ++i) {
    LaurentPoly p = random_poly(rng);
    std::string text = p.render();
    LaurentPoly back = LaurentPoly::parse(text);
    CHECK(back == p);
    CHECK(back.render() == text);
  }
  CHECK(LaurentPoly::parse("0").is_zero());
  CHECK(LaurentPoly::parse(" z^2 + 1 ").render() == "z^2+1");
  CHECK(LaurentPoly::parse("z+z").render() == "2z");
  CHECK_THROWS_AS(LaurentPoly::parse("z^"), Error);
  CHECK_THROWS_AS(LaurentPoly::parse("q+1"), Error);
  CHECK_THROWS_AS(LaurentPoly::parse(""), Error);
  CHECK_THROWS_AS(LaurentPoly::parse("1+"), Error);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::from_json(p.to_json()) == p);
  }
  LaurentPoly p = Z * Z + 1;
  CHECK(p.to_json() == "[{\"exponents\":{\"z\":2},\"coeff\":\"1\"},{\"exponents\":{},\"coeff\":\"1\"}]");
}

TEST_CASE("big coefficients stay exact") {
  // (a+1)^100 has central coefficient C(100,50), far beyond 64 bits
  LaurentPoly p = (A + 1).pow(100);
  CHECK(p.coeff1(Var::a, 50) == BigInt("100891344545564193334812497256"));
  CHECK((A + 1).pow(64).coeff1(Var::a, 32) == BigInt("1832624140942590534"));
  LaurentPoly q = LaurentPoly::constant(BigInt("123456789012345678901234567890"));
  CHECK((q * q).render() == "15241578753238836750495351562536198787501905199875019052100");
}
