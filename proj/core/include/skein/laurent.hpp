#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "skein/errors.hpp"

namespace skein {

using BigInt = boost::multiprecision::cpp_int;

// Fixed variable universe for every polynomial in the library. The order is
// canonical: it drives rendering and the lexicographic order on exponent
// vectors.
enum class Var : int { a = 0, z = 1, l = 2, m = 3, t = 4 };
inline constexpr int kVarCount = 5;
inline constexpr std::array<char, kVarCount> kVarNames = {'a', 'z', 'l', 'm', 't'};

using Exponents = std::array<std::int32_t, kVarCount>;

Var var_from_char(char c);

struct ExpGreater {
  bool operator()(const Exponents& x, const Exponents& y) const { return y < x; }
};

// Sparse exact Laurent polynomial over {a,z,l,m,t} with arbitrary precision
// integer coefficients. Terms are stored in descending lexicographic order of
// exponent vectors, so iteration order is canonical render order. Exponents
// are machine-width and checked: overflow raises exponent_overflow.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, BigInt, ExpGreater>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const BigInt& coeff, const Exponents& e);
  static LaurentPoly variable(Var v, std::int32_t power = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // True for exactly one term with coefficient +1 or -1; these are the valid
  // substitution targets (they stay exact under negative exponents).
  bool is_signed_monomial() const;

  BigInt coeff(const Exponents& e) const;
  // Coefficient of v^p with all other exponents zero.
  BigInt coeff1(Var v, std::int32_t p) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly pow(std::uint32_t k) const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Replaces each bound variable by a signed Laurent monomial. Raises
  // non_monomial_binding for any other binding target.
  LaurentPoly substitute(const std::map<Var, LaurentPoly>& bindings) const;

  // Canonical text form, e.g. "z^2+1", "-a^2-a^-2", "0".
  std::string render() const;
  // Accepts the canonical text form (plus optional whitespace).
  static LaurentPoly parse(const std::string& text);

  // JSON form: list of {"exponents": {var: int}, "coeff": "<decimal>"} in
  // canonical term order.
  std::string to_json() const;
  static LaurentPoly from_json(const std::string& text);

 private:
  void insert_term(const Exponents& e, const BigInt& c);
  TermMap terms_;
};

inline LaurentPoly operator+(const LaurentPoly& x, int y) {
  return x + LaurentPoly::constant(y);
}
inline LaurentPoly operator-(const LaurentPoly& x, int y) {
  return x - LaurentPoly::constant(y);
}
inline LaurentPoly operator*(int x, const LaurentPoly& y) {
  return LaurentPoly::constant(x) * y;
}

}  // namespace skein
