#include "skein/gauss_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace skein {

std::pair<EndPos, EndPos> GaussDiagram::locate(int arrow) const {
  if (arrow < 0 || arrow >= arrow_count())
    fail(Errc::unknown_crossing, "arrow id " + std::to_string(arrow) + " out of range");
  EndPos tail, head;
  for (int c = 0; c < circle_count(); ++c)
    for (int s = 0; s < static_cast<int>(circles[c].size()); ++s) {
      const GaussEnd& e = circles[c][s];
      if (e.arrow != arrow) continue;
      (e.head ? head : tail) = EndPos{c, s};
    }
  if (tail.circle < 0 || head.circle < 0)
    fail(Errc::bad_input, "arrow " + std::to_string(arrow) + " missing an endpoint");
  return {tail, head};
}

void GaussDiagram::check_valid() const {
  std::vector<int> tails(arrow_count(), 0), heads(arrow_count(), 0);
  for (const auto& circ : circles)
    for (const GaussEnd& e : circ) {
      if (e.arrow < 0 || e.arrow >= arrow_count())
        fail(Errc::bad_input, "endpoint references unknown arrow " + std::to_string(e.arrow));
      (e.head ? heads : tails)[e.arrow]++;
    }
  for (int i = 0; i < arrow_count(); ++i) {
    if (tails[i] != 1 || heads[i] != 1)
      fail(Errc::bad_input, "arrow " + std::to_string(i) + " does not have one tail and one head");
    if (signs[i] != 1 && signs[i] != -1)
      fail(Errc::bad_input, "arrow " + std::to_string(i) + " has sign " + std::to_string(signs[i]));
  }
}

void GaussDiagram::erase_arrow(int arrow) {
  if (arrow < 0 || arrow >= arrow_count())
    fail(Errc::unknown_crossing, "arrow id " + std::to_string(arrow) + " out of range");
  for (auto& circ : circles) {
    circ.erase(std::remove_if(circ.begin(), circ.end(),
                              [&](const GaussEnd& e) { return e.arrow == arrow; }),
               circ.end());
    for (GaussEnd& e : circ)
      if (e.arrow > arrow) --e.arrow;
  }
  signs.erase(signs.begin() + arrow);
}

GaussDiagram parse_gauss(const std::string& text) {
  // split into circle chunks at '/'
  std::vector<std::string> chunks;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '/') {
        chunks.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    chunks.push_back(cur);
  }

  GaussDiagram g;
  std::map<std::string, int> ids;       // label text -> arrow id
  std::vector<int> tail_seen, head_seen;
  for (const std::string& chunk : chunks) {
    std::vector<GaussEnd> circ;
    std::size_t i = 0;
    const std::size_t n = chunk.size();
    while (i < n) {
      if (std::isspace(static_cast<unsigned char>(chunk[i]))) {
        ++i;
        continue;
      }
      char kind = chunk[i];
      if (kind != 'O' && kind != 'U')
        fail(Errc::syntax, std::string("expected O or U at '") + chunk.substr(i, 8) + "'");
      ++i;
      std::size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(chunk[i]))) ++i;
      if (start == i) fail(Errc::syntax, "missing label after " + std::string(1, kind));
      std::string label = chunk.substr(start, i - start);
      if (i >= n || (chunk[i] != '+' && chunk[i] != '-'))
        fail(Errc::syntax, "missing sign after " + std::string(1, kind) + label);
      int sign = chunk[i] == '+' ? 1 : -1;
      ++i;

      auto [it, fresh] = ids.emplace(label, static_cast<int>(g.signs.size()));
      if (fresh) {
        g.signs.push_back(static_cast<std::int8_t>(sign));
        tail_seen.push_back(0);
        head_seen.push_back(0);
      } else if (g.signs[it->second] != sign) {
        fail(Errc::semantics, "label " + label + " occurs with both signs");
      }
      int id = it->second;
      bool head = kind == 'U';
      (head ? head_seen : tail_seen)[id]++;
      circ.push_back(GaussEnd{id, head});
    }
    g.circles.push_back(std::move(circ));
  }
  for (const auto& [label, id] : ids) {
    if (tail_seen[id] != 1 || head_seen[id] != 1)
      fail(Errc::semantics, "label " + label + " must occur exactly once as O and once as U");
  }
  return g;
}

namespace {

// Deterministic encoding of g under a circle order and per-circle rotations;
// arrows are relabeled by first appearance.
std::string encode(const GaussDiagram& g, const std::vector<int>& order,
                   const std::vector<int>& rot) {
  std::string out;
  std::vector<int> relabel(g.arrow_count(), -1);
  int next = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) out += " / ";
    const auto& circ = g.circles[order[k]];
    const int len = static_cast<int>(circ.size());
    for (int s = 0; s < len; ++s) {
      const GaussEnd& e = circ[(s + rot[k]) % len];
      if (relabel[e.arrow] < 0) relabel[e.arrow] = next++;
      out += e.head ? 'U' : 'O';
      out += std::to_string(relabel[e.arrow]);
      out += g.signs[e.arrow] > 0 ? '+' : '-';
    }
  }
  return out;
}

void best_key(const GaussDiagram& g, std::vector<int>& order, std::vector<int>& rot, int k,
              std::string& best) {
  if (k == static_cast<int>(order.size())) {
    std::string s = encode(g, order, rot);
    if (best.empty() || s < best) best = std::move(s);
    return;
  }
  int len = static_cast<int>(g.circles[order[k]].size());
  for (int r = 0; r < std::max(1, len); ++r) {
    rot[k] = r;
    best_key(g, order, rot, k + 1, best);
  }
}

}  // namespace

std::string gauss_canonical_key(const GaussDiagram& g) {
  std::vector<int> order(g.circle_count());
  std::iota(order.begin(), order.end(), 0);
  std::string best;
  std::vector<int> rot(g.circle_count(), 0);
  do {
    best_key(g, order, rot, 0, best);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::string render_gauss(const GaussDiagram& g) {
  std::vector<int> order(g.circle_count());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> rot(g.circle_count(), 0);
  return encode(g, order, rot);
}

int writhe(const GaussDiagram& g) {
  int w = 0;
  for (std::int8_t s : g.signs) w += s;
  return w;
}

GaussDiagram mirror(const GaussDiagram& g) {
  GaussDiagram m = g;
  for (auto& circ : m.circles)
    for (GaussEnd& e : circ) e.head = !e.head;
  for (auto& s : m.signs) s = static_cast<std::int8_t>(-s);
  return m;
}

GaussDiagram connected_sum(const GaussDiagram& k1, const GaussDiagram& k2) {
  if (!k1.is_knot() || !k2.is_knot())
    fail(Errc::not_a_knot, "connected sum needs one-circle diagrams");
  GaussDiagram out = k1;
  int offset = k1.arrow_count();
  for (std::int8_t s : k2.signs) out.signs.push_back(s);
  const auto& c1 = k1.circles[0];
  const auto& c2 = k2.circles[0];
  std::vector<GaussEnd> merged;
  merged.reserve(c1.size() + c2.size());
  if (!c1.empty()) merged.push_back(c1[0]);
  for (const GaussEnd& e : c2) merged.push_back(GaussEnd{e.arrow + offset, e.head});
  for (std::size_t s = 1; s < c1.size(); ++s) merged.push_back(c1[s]);
  out.circles[0] = std::move(merged);
  return out;
}

}  // namespace skein
