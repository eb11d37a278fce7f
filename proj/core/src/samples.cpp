#include "skein/samples.hpp"

#include <algorithm>
#include <numeric>

namespace skein {

const std::vector<std::string>& sample_names() {
  static const std::vector<std::string> names{"unknot", "trefoil", "fig8",
                                              "vtrefoil", "hopf+"};
  return names;
}

bool is_sample_name(const std::string& name) {
  const auto& names = sample_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

GaussDiagram sample_gauss(const std::string& name) {
  if (name == "unknot") return parse_gauss("");
  if (name == "trefoil") return parse_gauss("O1+U2+O3+U1+O2+U3+");
  if (name == "fig8") return braid_closure(3, {1, -2, 1, -2});
  if (name == "vtrefoil") return parse_gauss("O1+U2+U1+O2+");
  if (name == "hopf+") return parse_gauss("O1+U2+ / U1+O2+");
  fail(Errc::bad_input, "unknown sample diagram '" + name + "'");
}

GaussDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) fail(Errc::bad_input, "braid needs at least one strand");
  std::vector<int> cur(strands);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<std::vector<GaussEnd>> path(strands);
  GaussDiagram g;
  for (std::size_t j = 0; j < word.size(); ++j) {
    int letter = word[j];
    int i = std::abs(letter) - 1;
    if (letter == 0 || i + 1 >= strands)
      fail(Errc::bad_input, "braid letter " + std::to_string(letter) +
                                " out of range for " + std::to_string(strands) +
                                " strands");
    int over = letter > 0 ? cur[i] : cur[i + 1];
    int under = letter > 0 ? cur[i + 1] : cur[i];
    path[over].push_back(GaussEnd{static_cast<int>(j), false});
    path[under].push_back(GaussEnd{static_cast<int>(j), true});
    g.signs.push_back(letter > 0 ? 1 : -1);
    std::swap(cur[i], cur[i + 1]);
  }
  // closure joins each strand's top position back to the same bottom position
  std::vector<int> next(strands);
  for (int pos = 0; pos < strands; ++pos) next[cur[pos]] = pos;
  std::vector<bool> seen(strands, false);
  for (int p = 0; p < strands; ++p) {
    if (seen[p]) continue;
    std::vector<GaussEnd> circ;
    for (int q = p; !seen[q]; q = next[q]) {
      seen[q] = true;
      circ.insert(circ.end(), path[q].begin(), path[q].end());
    }
    g.circles.push_back(std::move(circ));
  }
  g.check_valid();
  return g;
}

GaussDiagram random_gauss_knot(int arrows, std::mt19937& rng) {
  return random_gauss_link(1, arrows, rng);
}

GaussDiagram random_gauss_link(int circles, int arrows, std::mt19937& rng) {
  if (circles < 1 || arrows < 0) fail(Errc::bad_input, "bad generator arguments");
  std::vector<int> pos(2 * arrows);
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  // cut the shuffled slot cycle into circles at random boundaries
  std::vector<int> owner(2 * arrows);
  for (int& o : owner) o = static_cast<int>(rng() % circles);
  GaussDiagram g;
  g.circles.resize(circles);
  std::vector<std::vector<int>> slots(circles);
  for (int k = 0; k < 2 * arrows; ++k) slots[owner[k]].push_back(k);
  std::vector<std::pair<int, int>> place(2 * arrows);  // slot -> (circle, idx)
  for (int c = 0; c < circles; ++c) {
    g.circles[c].resize(slots[c].size());
    for (std::size_t k = 0; k < slots[c].size(); ++k)
      place[slots[c][k]] = {c, static_cast<int>(k)};
  }
  for (int i = 0; i < arrows; ++i) {
    bool flip = rng() & 1;
    auto [c1, k1] = place[pos[2 * i]];
    auto [c2, k2] = place[pos[2 * i + 1]];
    g.circles[c1][k1] = GaussEnd{i, flip};
    g.circles[c2][k2] = GaussEnd{i, !flip};
    g.signs.push_back(rng() & 1 ? 1 : -1);
  }
  g.check_valid();
  return g;
}

GaussDiagram random_braid_diagram(int crossings, std::mt19937& rng) {
  if (crossings < 0) fail(Errc::bad_input, "bad generator arguments");
  int strands = 2 + static_cast<int>(rng() % 3);
  std::vector<int> word;
  word.reserve(crossings);
  for (int i = 0; i < crossings; ++i) {
    int gen = 1 + static_cast<int>(rng() % (strands - 1));
    word.push_back(rng() & 1 ? gen : -gen);
  }
  return braid_closure(strands, word);
}

}  // namespace skein
