#include "skein/laurent.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace skein {

const char* errc_name(Errc kind) {
  switch (kind) {
    case Errc::syntax: return "SyntaxError";
    case Errc::semantics: return "SemanticsError";
    case Errc::not_realizable: return "NotRealizable";
    case Errc::non_planar: return "NonPlanar";
    case Errc::inconsistent_orientation: return "InconsistentOrientation";
    case Errc::not_a_knot: return "NotAKnot";
    case Errc::unknown_crossing: return "UnknownCrossing";
    case Errc::bad_component: return "BadComponent";
    case Errc::level_mismatch: return "LevelMismatch";
    case Errc::stale_site: return "StaleSite";
    case Errc::non_monomial_binding: return "NonMonomialBinding";
    case Errc::non_laurent_result: return "NonLaurentResult";
    case Errc::exponent_overflow: return "ExponentOverflow";
    case Errc::bad_input: return "BadInput";
  }
  return "Error";
}

Var var_from_char(char c) {
  for (int i = 0; i < kVarCount; ++i)
    if (kVarNames[i] == c) return static_cast<Var>(i);
  fail(Errc::syntax, std::string("unknown variable '") + c + "'");
}

namespace {

std::int32_t checked_add(std::int32_t x, std::int32_t y) {
  std::int64_t s = static_cast<std::int64_t>(x) + y;
  if (s < std::numeric_limits<std::int32_t>::min() || s > std::numeric_limits<std::int32_t>::max())
    fail(Errc::exponent_overflow, "exponent sum " + std::to_string(s) + " exceeds machine width");
  return static_cast<std::int32_t>(s);
}

std::int64_t checked_mul_exp(std::int32_t x, std::int32_t y) {
  std::int64_t p = static_cast<std::int64_t>(x) * y;
  if (p < std::numeric_limits<std::int32_t>::min() || p > std::numeric_limits<std::int32_t>::max())
    fail(Errc::exponent_overflow, "exponent product " + std::to_string(p) + " exceeds machine width");
  return p;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const BigInt& c) {
  LaurentPoly p;
  if (c != 0) p.terms_[Exponents{}] = c;
  return p;
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, const Exponents& e) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[e] = coeff;
  return p;
}

LaurentPoly LaurentPoly::variable(Var v, std::int32_t power) {
  Exponents e{};
  e[static_cast<int>(v)] = power;
  return monomial(1, e);
}

bool LaurentPoly::is_signed_monomial() const {
  if (terms_.size() != 1) return false;
  const BigInt& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

BigInt LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::coeff1(Var v, std::int32_t p) const {
  Exponents e{};
  e[static_cast<int>(v)] = p;
  return coeff(e);
}

void LaurentPoly::insert_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly r;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      Exponents e;
      for (int i = 0; i < kVarCount; ++i) e[i] = checked_add(ex[i], ey[i]);
      r.insert_term(e, cx * cy);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::pow(std::uint32_t k) const {
  LaurentPoly r = constant(1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) r *= base;
    base = (k >>= 1) ? base * base : base;
  }
  return r;
}

LaurentPoly LaurentPoly::substitute(const std::map<Var, LaurentPoly>& bindings) const {
  for (const auto& [v, target] : bindings) {
    (void)v;
    if (!target.is_signed_monomial())
      fail(Errc::non_monomial_binding,
           "binding target " + target.render() + " is not a signed Laurent monomial");
  }
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents out{};
    BigInt coeff = c;
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      auto it = bindings.find(static_cast<Var>(i));
      if (it == bindings.end()) {
        out[i] = checked_add(out[i], e[i]);
        continue;
      }
      const auto& [me, mc] = *it->second.terms().begin();
      if (mc == -1 && (e[i] & 1)) coeff = -coeff;
      for (int j = 0; j < kVarCount; ++j)
        out[j] = checked_add(out[j], static_cast<std::int32_t>(checked_mul_exp(me[j], e[i])));
    }
    r.insert_term(out, coeff);
  }
  return r;
}

std::string LaurentPoly::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    bool has_var = false;
    for (int i = 0; i < kVarCount; ++i)
      if (e[i] != 0) has_var = true;
    if (!has_var || mag != 1) os << mag.str();
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      os << kVarNames[i];
      if (e[i] != 1) os << '^' << e[i];
    }
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) fail(Errc::syntax, "empty polynomial text");
  if (s == "0") return zero();

  LaurentPoly r;
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    int sign = 1;
    while (i < n && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= n) fail(Errc::syntax, "dangling sign at end of polynomial");
    BigInt mag = 1;
    bool saw_digits = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      mag = BigInt(s.substr(start, i - start));
      saw_digits = true;
    }
    Exponents e{};
    bool saw_var = false;
    std::array<bool, kVarCount> used{};
    while (i < n && s[i] != '+' && s[i] != '-') {
      Var v = var_from_char(s[i]);
      int vi = static_cast<int>(v);
      if (used[vi]) fail(Errc::syntax, std::string("repeated variable '") + s[i] + "' in term");
      used[vi] = true;
      saw_var = true;
      ++i;
      std::int64_t p = 1;
      if (i < n && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < n && s[i] == '-') {
          esign = -1;
          ++i;
        }
        if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i])))
          fail(Errc::syntax, "missing exponent digits after '^'");
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        std::string digits = s.substr(start, i - start);
        if (digits.size() > 9) fail(Errc::exponent_overflow, "exponent literal too large: " + digits);
        p = esign * std::stoll(digits);
      }
      e[vi] = static_cast<std::int32_t>(p);
    }
    if (!saw_digits && !saw_var) fail(Errc::syntax, "empty term in polynomial");
    r.insert_term(e, sign < 0 ? BigInt(-mag) : mag);
  }
  return r;
}

std::string LaurentPoly::to_json() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ',';
    first = false;
    os << "{\"exponents\":{";
    bool fe = true;
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (!fe) os << ',';
      fe = false;
      os << '"' << kVarNames[i] << "\":" << e[i];
    }
    os << "},\"coeff\":\"" << c.str() << "\"}";
  }
  os << ']';
  return os.str();
}

LaurentPoly LaurentPoly::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::syntax, std::string("bad polynomial JSON: ") + e.what());
  }
  if (!j.is_array()) fail(Errc::syntax, "polynomial JSON must be a list of terms");
  LaurentPoly r;
  for (const auto& term : j) {
    if (!term.contains("exponents") || !term.contains("coeff"))
      fail(Errc::syntax, "polynomial JSON term needs exponents and coeff");
    Exponents e{};
    for (const auto& [k, v] : term["exponents"].items()) {
      if (k.size() != 1) fail(Errc::syntax, "bad variable name '" + k + "'");
      e[static_cast<int>(var_from_char(k[0]))] = v.get<std::int32_t>();
    }
    r.insert_term(e, BigInt(term["coeff"].get<std::string>()));
  }
  return r;
}

}  // namespace skein
