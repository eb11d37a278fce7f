#pragma once

#include <stdexcept>
#include <string>

namespace skein {

enum class Errc {
  syntax,
  semantics,
  not_realizable,
  non_planar,
  inconsistent_orientation,
  not_a_knot,
  unknown_crossing,
  bad_component,
  level_mismatch,
  stale_site,
  non_monomial_binding,
  non_laurent_result,
  exponent_overflow,
  bad_input,
};

// Stable names used in CLI diagnostics and tests.
const char* errc_name(Errc kind);

class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& msg)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + msg), kind_(kind) {}
  Errc kind() const { return kind_; }

 private:
  Errc kind_;
};

[[noreturn]] inline void fail(Errc kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace skein
