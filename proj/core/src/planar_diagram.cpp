#include "skein/planar_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace skein {

void PlanarDiagram::check_pairing() const {
  const int n = crossing_count();
  if (static_cast<int>(peers.size()) != n)
    fail(Errc::bad_input, "peer table and sign table disagree");
  if (free_loops < 0) fail(Errc::bad_input, "negative free loop count");
  for (int c = 0; c < n; ++c) {
    if (signs[c] != 1 && signs[c] != -1)
      fail(Errc::bad_input, "crossing " + std::to_string(c) + " has a bad sign");
    for (int s = 0; s < 4; ++s) {
      Port q = peers[c][s];
      if (q.crossing < 0 || q.crossing >= n || q.slot < 0 || q.slot > 3)
        fail(Errc::bad_input, "dangling arc at crossing " + std::to_string(c));
      if (peer(q) != Port{c, s})
        fail(Errc::bad_input, "asymmetric arc at crossing " + std::to_string(c));
    }
  }
}

void PlanarDiagram::check_valid() const {
  check_pairing();
  const int n = crossing_count();
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      Port q = peers[c][s];
      // every arc runs from an out-slot to an in-slot
      if (is_in_slot(c, s) == is_in_slot(q.crossing, q.slot))
        fail(Errc::bad_input, "arc with two " +
                                  std::string(is_in_slot(c, s) ? "in" : "out") +
                                  "-ends at crossing " + std::to_string(c));
    }
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct PdEntry {
  std::array<int, 4> labels;
};

void parse_tokens(const std::string& text, std::vector<PdEntry>& entries, int& loops) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool loop_token_seen = false;
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (loop_token_seen) fail(Errc::syntax, "tokens after the free-loop count");
    if (text[i] == 'X') {
      ++i;
      if (i >= n || text[i] != '[') fail(Errc::syntax, "expected '[' after X");
      ++i;
      PdEntry e{};
      for (int k = 0; k < 4; ++k) {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail(Errc::syntax, "expected arc label in X[...]");
        e.labels[k] = std::stoi(text.substr(start, i - start));
        if (e.labels[k] <= 0) fail(Errc::syntax, "arc labels are positive");
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        char want = k < 3 ? ',' : ']';
        if (i >= n || text[i] != want)
          fail(Errc::syntax, std::string("X[...] takes four labels"));
        ++i;
      }
      entries.push_back(e);
    } else if (text[i] == 'L') {
      ++i;
      std::size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail(Errc::syntax, "expected count after L");
      loops = std::stoi(text.substr(start, i - start));
      if (loops <= 0) fail(Errc::syntax, "free-loop count must be positive");
      loop_token_seen = true;
    } else {
      fail(Errc::syntax, std::string("unexpected character '") + text[i] + "'");
    }
  }
}

enum class PortDir : std::int8_t { unknown, in, out };

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PlanarDiagram parse_pd(const std::string& text) {
  std::vector<PdEntry> entries;
  int loops = 0;
  parse_tokens(text, entries, loops);
  const int n = static_cast<int>(entries.size());

  // every arc label names exactly one arc with two ends
  std::map<int, std::vector<Port>> occ;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) occ[entries[c].labels[s]].push_back(Port{c, s});
  for (const auto& [label, ports] : occ)
    if (ports.size() != 2)
      fail(Errc::semantics,
           "arc label " + std::to_string(label) + " appears " +
               std::to_string(ports.size()) + " times (need exactly 2)");

  // link components are the label classes joined by strand passage; each
  // class must be a consecutive run so that x -> x+1 (wrapping) orients it
  std::vector<int> labels;
  for (const auto& [label, ports] : occ) labels.push_back(label);
  std::map<int, int> idx;
  for (std::size_t k = 0; k < labels.size(); ++k) idx[labels[k]] = static_cast<int>(k);
  UnionFind uf(static_cast<int>(labels.size()));
  for (const PdEntry& e : entries) {
    uf.unite(idx[e.labels[0]], idx[e.labels[2]]);
    uf.unite(idx[e.labels[1]], idx[e.labels[3]]);
  }
  std::map<int, std::pair<int, int>> range;  // root -> (lo, hi)
  std::map<int, int> comp_size;
  for (int label : labels) {
    int r = uf.find(idx[label]);
    auto it = range.find(r);
    if (it == range.end()) {
      range[r] = {label, label};
      comp_size[r] = 1;
    } else {
      it->second.first = std::min(it->second.first, label);
      it->second.second = std::max(it->second.second, label);
      comp_size[r]++;
    }
  }
  for (const auto& [r, lohi] : range)
    if (lohi.second - lohi.first + 1 != comp_size[r])
      fail(Errc::inconsistent_orientation,
           "arc labels of a component are not consecutive");
  auto succ = [&](int x) {
    auto [lo, hi] = range[uf.find(idx[x])];
    return x < hi ? x + 1 : lo;
  };

  for (const PdEntry& e : entries)
    if (succ(e.labels[0]) != e.labels[2])
      fail(Errc::inconsistent_orientation,
           "under-strand labels do not step by one");

  // classify each port as in or out; under-slots are fixed, over-slots are
  // propagated from the rule that an arc has one head and one tail
  std::vector<std::array<PortDir, 4>> dir(n, {PortDir::unknown, PortDir::unknown,
                                              PortDir::unknown, PortDir::unknown});
  auto partner_of = [&](Port p) {
    const auto& ports = occ[entries[p.crossing].labels[p.slot]];
    return ports[0] == p ? ports[1] : ports[0];
  };
  auto set_dir = [&](Port p, PortDir want, auto&& self) -> void {
    PortDir& cur = dir[p.crossing][p.slot];
    if (cur == want) return;
    if (cur != PortDir::unknown)
      fail(Errc::inconsistent_orientation,
           "arc label " + std::to_string(entries[p.crossing].labels[p.slot]) +
               " cannot be oriented");
    cur = want;
    self(partner_of(p), want == PortDir::in ? PortDir::out : PortDir::in, self);
  };
  for (int c = 0; c < n; ++c) {
    set_dir(Port{c, 0}, PortDir::in, set_dir);
    set_dir(Port{c, 2}, PortDir::out, set_dir);
  }

  auto resolve = [&]() {
    // returns false once every crossing is committed
    bool progress = true, open = false;
    while (progress) {
      progress = false;
      open = false;
      for (int c = 0; c < n; ++c) {
        int b = entries[c].labels[1], d = entries[c].labels[3];
        PortDir db = dir[c][1], dd = dir[c][3];
        bool b_in = succ(b) == d && db != PortDir::out && dd != PortDir::in;
        bool d_in = succ(d) == b && dd != PortDir::out && db != PortDir::in;
        if (!b_in && !d_in)
          fail(Errc::inconsistent_orientation,
               "over-strand at crossing " + std::to_string(c + 1) +
                   " fits no orientation");
        if (b_in && d_in) {
          open = true;
          continue;
        }
        if (db == PortDir::unknown || dd == PortDir::unknown) {
          set_dir(Port{c, b_in ? 1 : 3}, PortDir::in, set_dir);
          set_dir(Port{c, b_in ? 3 : 1}, PortDir::out, set_dir);
          progress = true;
        }
      }
    }
    return open;
  };
  while (resolve()) {
    // a component that never passes under is not pinned down by the labels;
    // take the positive crossing at the first open site
    for (int c = 0; c < n; ++c)
      if (dir[c][3] == PortDir::unknown) {
        set_dir(Port{c, 3}, PortDir::in, set_dir);
        set_dir(Port{c, 1}, PortDir::out, set_dir);
        break;
      }
  }

  PlanarDiagram d;
  d.free_loops = loops;
  d.signs.resize(n);
  d.peers.resize(n);
  for (int c = 0; c < n; ++c)
    d.signs[c] = dir[c][3] == PortDir::in ? 1 : -1;
  for (const auto& [label, ports] : occ) {
    Port p = ports[0], q = ports[1];
    if (dir[p.crossing][p.slot] == PortDir::in) std::swap(p, q);
    d.set_arc(p, q);
  }
  d.check_valid();
  if (!euler_ok(d)) fail(Errc::non_planar, "PD code does not describe a planar map");
  return d;
}

// ---------------------------------------------------------------------------
// traversal

namespace {

// arcs of one link component in strand order, starting with the arc that
// leaves out-port `start`; each element is (out port, in port)
std::vector<std::pair<Port, Port>> walk_component(const PlanarDiagram& d, Port start) {
  std::vector<std::pair<Port, Port>> arcs;
  Port p = start;
  do {
    Port q = d.peer(p);
    arcs.emplace_back(p, q);
    p = Port{q.crossing, d.out_slot_for(q.crossing, q.slot)};
  } while (!(p == start));
  return arcs;
}

std::vector<Port> out_ports(const PlanarDiagram& d) {
  std::vector<Port> res;
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s)
      if (!d.is_in_slot(c, s)) res.push_back(Port{c, s});
  return res;
}

// deterministic walk of the whole diagram: components start at their least
// unvisited out-port
std::vector<std::vector<std::pair<Port, Port>>> walk_all(const PlanarDiagram& d) {
  std::vector<std::vector<std::pair<Port, Port>>> comps;
  std::set<Port> seen;
  for (Port p : out_ports(d)) {
    if (seen.count(p)) continue;
    auto arcs = walk_component(d, p);
    for (const auto& [out, in] : arcs) seen.insert(out);
    comps.push_back(std::move(arcs));
  }
  return comps;
}

std::string encode_walks(const PlanarDiagram& d,
                         const std::vector<std::vector<std::pair<Port, Port>>>& comps,
                         bool relabel_crossings) {
  // arc labels count up along each component in walk order
  std::map<Port, int> label;
  int next = 1;
  for (const auto& arcs : comps)
    for (const auto& [out, in] : arcs) {
      label[out] = next;
      label[in] = next;
      ++next;
    }
  std::vector<int> order(d.crossing_count());
  if (relabel_crossings) {
    std::vector<int> rank(d.crossing_count(), -1);
    int r = 0;
    for (const auto& arcs : comps)
      for (const auto& [out, in] : arcs)
        if (rank[in.crossing] < 0) rank[in.crossing] = r++;
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return rank[x] < rank[y]; });
  } else {
    std::iota(order.begin(), order.end(), 0);
  }
  std::string out;
  for (int c : order) {
    if (!out.empty()) out += ' ';
    out += "X[";
    for (int s = 0; s < 4; ++s) {
      if (s) out += ',';
      out += std::to_string(label[Port{c, s}]);
    }
    out += ']';
    if (relabel_crossings) out += d.signs[c] > 0 ? '+' : '-';
  }
  if (d.free_loops > 0) {
    if (!out.empty()) out += ' ';
    out += "L" + std::to_string(d.free_loops);
  }
  return out;
}

void key_search(const PlanarDiagram& d, const std::vector<Port>& outs,
                std::set<Port>& seen,
                std::vector<std::vector<std::pair<Port, Port>>>& comps,
                std::string& best) {
  if (seen.size() == outs.size()) {
    std::string s = encode_walks(d, comps, true);
    if (best.empty() || s < best) best = std::move(s);
    return;
  }
  for (Port p : outs) {
    if (seen.count(p)) continue;
    auto arcs = walk_component(d, p);
    for (const auto& [out, in] : arcs) seen.insert(out);
    comps.push_back(arcs);
    key_search(d, outs, seen, comps, best);
    comps.pop_back();
    for (const auto& [out, in] : arcs) seen.erase(out);
  }
}

}  // namespace

std::string render_pd(const PlanarDiagram& d) {
  return encode_walks(d, walk_all(d), false);
}

std::string pd_canonical_key(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) return encode_walks(d, {}, true);
  std::vector<Port> outs = out_ports(d);
  std::set<Port> seen;
  std::vector<std::vector<std::pair<Port, Port>>> comps;
  std::string best;
  key_search(d, outs, seen, comps, best);
  return best;
}

std::vector<std::vector<std::pair<Port, Port>>> walk_arcs(const PlanarDiagram& d) {
  return walk_all(d);
}

GaussDiagram pd_to_gauss(const PlanarDiagram& d) {
  GaussDiagram g;
  g.signs = d.signs;
  for (const auto& arcs : walk_all(d)) {
    std::vector<GaussEnd> circ;
    circ.reserve(arcs.size());
    for (const auto& [out, in] : arcs)
      circ.push_back(GaussEnd{in.crossing, in.slot == 0});
    g.circles.push_back(std::move(circ));
  }
  for (int k = 0; k < d.free_loops; ++k) g.circles.emplace_back();
  return g;
}

// ---------------------------------------------------------------------------
// counting

int writhe(const PlanarDiagram& d) {
  int w = 0;
  for (std::int8_t s : d.signs) w += s;
  return w;
}

int component_count(const PlanarDiagram& d) {
  return static_cast<int>(walk_all(d).size()) + d.free_loops;
}

int face_count(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  int faces = 0;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      if (seen[c][s]) continue;
      ++faces;
      Port p{c, s};
      while (!seen[p.crossing][p.slot]) {
        seen[p.crossing][p.slot] = true;
        Port q = d.peer(p);
        p = Port{q.crossing, (q.slot + 1) % 4};
      }
    }
  return faces;
}

bool euler_ok(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return true;
  UnionFind uf(n);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) uf.unite(c, d.peers[c][s].crossing);
  // V - E + F per connected map piece, with E = 2V and faces attributed to
  // the piece they touch
  std::map<int, int> verts, faces;
  for (int c = 0; c < n; ++c) verts[uf.find(c)]++;
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      if (seen[c][s]) continue;
      faces[uf.find(c)]++;
      Port p{c, s};
      while (!seen[p.crossing][p.slot]) {
        seen[p.crossing][p.slot] = true;
        Port q = d.peer(p);
        p = Port{q.crossing, (q.slot + 1) % 4};
      }
    }
  for (const auto& [root, v] : verts)
    if (faces[root] != v + 2) return false;
  return true;
}

// ---------------------------------------------------------------------------
// surgery

namespace {

// slot remap that moves `shift[c]` to slot 0 of crossing c, preserving the
// counterclockwise order
PlanarDiagram reanchor(const PlanarDiagram& d, const std::vector<int>& shift) {
  PlanarDiagram out;
  out.free_loops = d.free_loops;
  out.signs = d.signs;
  out.peers.resize(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) {
      Port t = d.peers[c][(s + shift[c]) % 4];
      out.peers[c][s] = Port{t.crossing, (t.slot - shift[t.crossing] + 4) % 4};
    }
  return out;
}

}  // namespace

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<int> shift(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c) shift[c] = d.over_in_slot(c);
  PlanarDiagram out = reanchor(d, shift);
  for (auto& s : out.signs) s = static_cast<std::int8_t>(-s);
  return out;
}

PlanarDiagram switch_crossing(const PlanarDiagram& d, int c) {
  if (c < 0 || c >= d.crossing_count())
    fail(Errc::unknown_crossing, "crossing " + std::to_string(c) + " out of range");
  std::vector<int> shift(d.crossing_count(), 0);
  shift[c] = d.over_in_slot(c);
  PlanarDiagram out = reanchor(d, shift);
  out.signs[c] = static_cast<std::int8_t>(-out.signs[c]);
  return out;
}

namespace {

// delete crossing c after gluing its slots in pairs partner[s]; stubs of
// outside arcs are chained together and all-internal cycles close up into
// free loops
PlanarDiagram remove_crossing(const PlanarDiagram& d, int c,
                              const std::array<int, 4>& partner) {
  auto internal = [&](int s) { return d.peers[c][s].crossing == c; };
  std::array<bool, 4> used{};
  std::vector<std::pair<Port, Port>> joins;
  int loops = 0;
  for (int s = 0; s < 4; ++s) {
    if (used[s] || internal(s)) continue;
    used[s] = true;
    int u = partner[s];
    while (internal(u)) {
      used[u] = true;
      int t = d.peers[c][u].slot;
      used[t] = true;
      u = partner[t];
    }
    used[u] = true;
    joins.emplace_back(d.peers[c][s], d.peers[c][u]);
  }
  for (int s = 0; s < 4; ++s) {
    if (used[s]) continue;
    ++loops;
    int u = s;
    do {
      used[u] = true;
      int j = partner[u];
      used[j] = true;
      u = d.peers[c][j].slot;
    } while (u != s);
  }

  PlanarDiagram out;
  out.free_loops = d.free_loops + loops;
  const int n = d.crossing_count();
  out.signs.reserve(n - 1);
  for (int c2 = 0; c2 < n; ++c2)
    if (c2 != c) out.signs.push_back(d.signs[c2]);
  out.peers.resize(n - 1);
  auto mapped = [&](Port p) {
    return Port{p.crossing - (p.crossing > c ? 1 : 0), p.slot};
  };
  for (int c2 = 0; c2 < n; ++c2) {
    if (c2 == c) continue;
    for (int s = 0; s < 4; ++s) {
      Port q = d.peers[c2][s];
      if (q.crossing == c) continue;  // rebuilt from joins below
      out.peers[mapped(Port{c2, s}).crossing][s] = mapped(q);
    }
  }
  for (const auto& [x, y] : joins) out.set_arc(mapped(x), mapped(y));
  return out;
}

}  // namespace

PlanarDiagram smooth_state(const PlanarDiagram& d, int c, bool a_state) {
  if (c < 0 || c >= d.crossing_count())
    fail(Errc::unknown_crossing, "crossing " + std::to_string(c) + " out of range");
  static const std::array<int, 4> kA{1, 0, 3, 2};
  static const std::array<int, 4> kB{3, 2, 1, 0};
  return remove_crossing(d, c, a_state ? kA : kB);
}

PlanarDiagram smooth_oriented(const PlanarDiagram& d, int c) {
  if (c < 0 || c >= d.crossing_count())
    fail(Errc::unknown_crossing, "crossing " + std::to_string(c) + " out of range");
  return smooth_state(d, c, d.signs[c] > 0);
}

}  // namespace skein
