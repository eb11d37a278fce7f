#include "skein/table.hpp"

#include <array>
#include <cstdint>

#include "skein/errors.hpp"

namespace skein {

namespace {

// One circle with n chords: slots 0..2n-1, chord ids by first appearance.
struct PairingScan {
  int n = 0;
  std::array<int, 16> chord_at{};   // slot -> chord
  std::array<bool, 16> first_at{};  // slot -> is this the chord's first slot
  const std::function<bool(const GaussDiagram&)>* visit = nullptr;
  bool stopped = false;

  // Gauss parity: on a closed plane curve every chord interleaves an even
  // number of chords. Decoration-free, so an odd chord sinks the whole
  // pairing before the sign scan.
  bool parity_ok() const {
    int len = 2 * n;
    // chord d interleaves c when exactly one endpoint of d lies between the
    // endpoints of c
    std::array<int, 8> f{}, s{};
    for (int k = 0; k < len; ++k) (first_at[k] ? f : s)[chord_at[k]] = k;
    for (int c = 0; c < n; ++c) {
      int cnt = 0;
      for (int d = 0; d < n; ++d) {
        if (d == c) continue;
        bool df_in = f[d] > f[c] && f[d] < s[c];
        bool ds_in = s[d] > f[c] && s[d] < s[c];
        cnt += df_in != ds_in;
      }
      if (cnt & 1) return false;
    }
    return true;
  }

  // Forced-map planarity for sign bits `neg` (bit c set = negative) with the
  // reference directions first-slot = tail. V=n, E=2n and a single circle
  // keeps the map connected, so planar means exactly n+2 faces. Port ids are
  // 4c+slot; slot 0 under-in, 2 under-out, over in/out 3/1 (+) or 1/3 (-).
  bool planar(std::uint32_t neg) const {
    std::array<std::int8_t, 32> peer;
    int len = 2 * n;
    for (int k = 0; k < len; ++k) {
      int kn = k + 1 == len ? 0 : k + 1;
      int c = chord_at[k], cn = chord_at[kn];
      int out = first_at[k] ? (neg >> c & 1 ? 3 : 1) : 2;
      int in = first_at[kn] ? (neg >> cn & 1 ? 1 : 3) : 0;
      peer[4 * c + out] = static_cast<std::int8_t>(4 * cn + in);
      peer[4 * cn + in] = static_cast<std::int8_t>(4 * c + out);
    }
    std::uint32_t seen = 0;
    int faces = 0;
    for (int p = 0; p < 4 * n; ++p) {
      if (seen >> p & 1) continue;
      ++faces;
      int q = p;
      do {
        seen |= 1u << q;
        int r = peer[q];
        q = (r & ~3) | ((r + 1) & 3);
      } while (q != p);
    }
    return faces == n + 2;
  }

  // True when the decorated word is already its own canonical key, i.e. no
  // rotation reads lexicographically smaller. Tokens compare exactly like
  // the rendered text (tail char < head char, then the first-appearance
  // label - one digit for n <= 8 - then '+' < '-'); labels at rotation 0
  // are the identity because chord ids follow first appearance.
  bool canonical(std::uint32_t neg, std::uint32_t dirs) const {
    int len = 2 * n;
    auto head_at = [&](int k) { return first_at[k] == bool(dirs >> chord_at[k] & 1); };
    auto minus = [&](int c) { return ((neg ^ dirs) >> c & 1) != 0; };
    for (int r = 1; r < len; ++r) {
      if (head_at(r)) continue;  // head-led rotations start 'U' > 'O'
      std::array<std::int8_t, 8> lbl;
      lbl.fill(-1);
      std::int8_t next = 0;
      for (int k = 0; k < len; ++k) {
        int kr = k + r < len ? k + r : k + r - len;
        bool h0 = head_at(k), hr = head_at(kr);
        if (h0 != hr) {
          if (hr) goto next_rotation;  // rotated token 'U' vs base 'O'
          return false;
        }
        int c0 = chord_at[k], cr = chord_at[kr];
        if (lbl[cr] < 0) lbl[cr] = next++;
        if (lbl[cr] != c0) {
          if (lbl[cr] > c0) goto next_rotation;
          return false;
        }
        bool m0 = minus(c0), mr = minus(cr);
        if (m0 != mr) {
          if (mr) goto next_rotation;
          return false;
        }
      }
    next_rotation:;
    }
    return true;
  }

  void emit_decorations(std::uint32_t neg) {
    // direction bits flip first-slot to head; the shadow survives when the
    // sign flips along (a direction+sign flip is a crossing switch), so
    // every choice here is realizable. Chord 0 stays tail-led: canonical
    // words open with a tail.
    std::uint32_t dirs_end = 1u << n;
    for (std::uint32_t dirs = 0; dirs < dirs_end && !stopped; dirs += 2) {
      if (!canonical(neg, dirs)) continue;
      GaussDiagram g;
      g.circles.resize(1);
      auto& circ = g.circles[0];
      circ.reserve(2 * n);
      for (int k = 0; k < 2 * n; ++k) {
        int c = chord_at[k];
        circ.push_back(GaussEnd{c, first_at[k] == bool(dirs >> c & 1)});
      }
      g.signs.resize(n);
      for (int c = 0; c < n; ++c)
        g.signs[c] = ((neg ^ dirs) >> c & 1) ? -1 : 1;
      if (!(*visit)(g)) stopped = true;
    }
  }

  void pair_slots(std::uint32_t used, int chords) {
    if (stopped) return;
    int len = 2 * n;
    int k = 0;
    while (k < len && (used >> k & 1)) ++k;
    if (k == len) {
      if (!parity_ok()) return;
      for (std::uint32_t neg = 0; neg < (1u << n) && !stopped; ++neg)
        if (planar(neg)) emit_decorations(neg);
      return;
    }
    chord_at[k] = chords;
    first_at[k] = true;
    for (int j = k + 1; j < len && !stopped; ++j) {
      if (used >> j & 1) continue;
      chord_at[j] = chords;
      first_at[j] = false;
      pair_slots(used | 1u << k | 1u << j, chords + 1);
    }
  }
};

}  // namespace

void for_each_classical_knot(int max_arrows,
                             const std::function<bool(const GaussDiagram&)>& visit) {
  if (max_arrows < 0 || max_arrows > 8)
    fail(Errc::bad_input, "table size must lie in 0..8 arrows");
  {
    GaussDiagram unknot;
    unknot.circles.emplace_back();
    if (!visit(unknot)) return;
  }
  for (int n = 1; n <= max_arrows; ++n) {
    PairingScan scan;
    scan.n = n;
    scan.visit = &visit;
    scan.pair_slots(0, 0);
    if (scan.stopped) return;
  }
}

}  // namespace skein
