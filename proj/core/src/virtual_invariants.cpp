#include "skein/virtual_invariants.hpp"

namespace skein {

namespace {

void require_knot(const GaussDiagram& g) {
  if (g.circle_count() != 1)
    fail(Errc::not_a_knot, "need a one-circle diagram, got " +
                               std::to_string(g.circle_count()) + " circles");
}

}  // namespace

int gaussian_index(const GaussDiagram& g, int arrow) {
  require_knot(g);
  auto [tail, head] = g.locate(arrow);
  const auto& circ = g.circles[0];
  const int len = static_cast<int>(circ.size());
  const int span = (head.slot - tail.slot + len) % len;
  auto between = [&](int pos) {
    int off = (pos - tail.slot + len) % len;
    return 0 < off && off < span;
  };
  // tail and head positions of every other arrow
  std::vector<int> tail_pos(g.arrow_count(), -1), head_pos(g.arrow_count(), -1);
  for (int pos = 0; pos < len; ++pos) {
    const GaussEnd& e = circ[pos];
    (e.head ? head_pos : tail_pos)[e.arrow] = pos;
  }
  int ind = 0;
  for (int z = 0; z < g.arrow_count(); ++z) {
    if (z == arrow) continue;
    bool t_in = between(tail_pos[z]), h_in = between(head_pos[z]);
    if (t_in != h_in) ind += g.signs[z] * (h_in ? 1 : -1);
  }
  return ind;
}

int gaussian_index_by_smoothing(const GaussDiagram& g, int arrow) {
  require_knot(g);
  auto [tail, head] = g.locate(arrow);
  const auto& circ = g.circles[0];
  const int len = static_cast<int>(circ.size());
  // the oriented smoothing cuts the circle into the tail->head stretch and
  // the head->tail stretch
  GaussDiagram sm;
  sm.circles.resize(2);
  std::vector<int> relabel(g.arrow_count(), -1);
  for (int z = 0, next = 0; z < g.arrow_count(); ++z)
    if (z != arrow) {
      relabel[z] = next++;
      sm.signs.push_back(g.signs[z]);
    }
  for (int off = 1; off < len; ++off) {
    int pos = (tail.slot + off) % len;
    if (pos == head.slot) continue;
    const GaussEnd& e = circ[pos];
    int which = (head.slot - tail.slot + len) % len > off ? 0 : 1;
    sm.circles[which].push_back(GaussEnd{relabel[e.arrow], e.head});
  }
  sm.check_valid();
  LinkingMatrix m = linking_matrix(sm);
  // circle 0 is the tail->head half; which of the two halves counts as the
  // right one flips with the sign of the smoothed crossing
  int r = g.signs[arrow] > 0 ? 1 : 0, l = 1 - r;
  return g.signs[arrow] * (m.lk[r][l] - m.lk[l][r]);
}

int odd_writhe(const GaussDiagram& g) {
  require_knot(g);
  int j = 0;
  for (int c = 0; c < g.arrow_count(); ++c)
    if (gaussian_index(g, c) % 2 != 0) j += g.signs[c];
  return j;
}

LaurentPoly index_polynomial(const GaussDiagram& g) {
  require_knot(g);
  LaurentPoly w;
  for (int c = 0; c < g.arrow_count(); ++c) {
    int s = g.signs[c];
    w += s * LaurentPoly::variable(Var::t, gaussian_index(g, c)) - s;
  }
  return w;
}

LinkingMatrix linking_matrix(const GaussDiagram& g) {
  const int n = g.circle_count();
  LinkingMatrix m;
  m.lk.assign(n, std::vector<int>(n, 0));
  for (int c = 0; c < g.arrow_count(); ++c) {
    auto [tail, head] = g.locate(c);
    if (tail.circle != head.circle) m.lk[tail.circle][head.circle] += g.signs[c];
  }
  return m;
}

int wriggle_number(const GaussDiagram& g, int i, int j) {
  const int n = g.circle_count();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    fail(Errc::bad_component, "bad component pair (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
  LinkingMatrix m = linking_matrix(g);
  return m.lk[i][j] - m.lk[j][i];
}

}  // namespace skein
