#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/gauss_diagram.hpp"
#include "skein/skein_invariants.hpp"

namespace skein {

// Everything the CLI prints about one diagram. Skein polynomials appear when
// the diagram is classical (realizable), arf when it is a classical knot,
// the virtual invariants whenever they are defined; every present field is
// reproducible by the corresponding module call.
struct InvariantReport {
  std::string input;
  int crossings = 0;
  int components = 0;
  int writhe = 0;
  bool realizable = false;
  std::optional<std::string> jones, conway, homfly, bracket;
  std::optional<int> arf;
  std::optional<int> odd_writhe;
  std::optional<std::string> index_polynomial;
  std::vector<std::vector<int>> linking;
};

// an optional cache makes bulk runs (the table stream) share subdiagram work
InvariantReport build_report(const std::string& input, const GaussDiagram& g,
                             SkeinCache* cache = nullptr);

// one JSON object, fields in declaration order, no trailing newline
std::string report_json(const InvariantReport& r);

}  // namespace skein
