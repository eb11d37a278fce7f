#pragma once

#include <vector>

#include "skein/gauss_diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

struct LinkingMatrix {
  // lk[i][j] sums the signs of crossings where circle i passes over circle j
  std::vector<std::vector<int>> lk;
  bool operator==(const LinkingMatrix&) const = default;
};

// index of a crossing of a knot: signed count of arrows interleaved with
// `arrow`, weighted by which endpoint falls between its tail and head
int gaussian_index(const GaussDiagram& g, int arrow);

// definitional route: smooth at the crossing and take the signed wriggle
// number of the two halves; must agree with gaussian_index everywhere
int gaussian_index_by_smoothing(const GaussDiagram& g, int arrow);

// J(D) = sum of sgn(c) over crossings with odd index
int odd_writhe(const GaussDiagram& g);

// W_D(t) = sum of sgn(c) (t^ind(c) - 1)
LaurentPoly index_polynomial(const GaussDiagram& g);

LinkingMatrix linking_matrix(const GaussDiagram& g);

// lk[i][j] - lk[j][i]
int wriggle_number(const GaussDiagram& g, int i, int j);

}  // namespace skein
