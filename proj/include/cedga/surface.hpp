#pragma once

#include "cedga/quiver_dga.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cedga {

// A marked point on a boundary circle.  `piece` names the attached handle:
// a sphere piece owns exactly two points, a stop piece exactly one.
struct MarkedPoint {
  std::string id;
  std::string piece;
  bool is_stop = false;
  int maslov = 0;
};

// Boundary circle with points in counterclockwise order.  Gap k lies between
// points[k] and points[(k+1) % size].  The reference axis meets the circle
// twice; each meeting adds one to the axis weight of the gap containing it.
// When `axis_gap_weights` is empty the default places both meetings in the
// base gap (the gap following the point with the largest id).
struct BoundaryCircle {
  std::vector<MarkedPoint> points;
  std::map<int, int> axis_gap_weights;
};

struct SurfaceComponent {
  int genus = 0;
  std::vector<BoundaryCircle> circles;
};

struct MarkedSurface {
  std::vector<SurfaceComponent> components;
};

// Numeric ids compare numerically, everything else lexicographically.
inline bool id_less(const std::string& a, const std::string& b) {
  long long x = 0, y = 0;
  auto [pa, ea] = std::from_chars(a.data(), a.data() + a.size(), x);
  auto [pb, eb] = std::from_chars(b.data(), b.data() + b.size(), y);
  bool na = (ea == std::errc{} && pa == a.data() + a.size());
  bool nb = (eb == std::errc{} && pb == b.data() + b.size());
  if (na && nb) return x < y;
  return a < b;
}

inline Result<bool> validate_surface(const MarkedSurface& s) {
  using R = Result<bool>;
  std::set<std::string> point_ids;
  std::map<std::string, std::vector<const MarkedPoint*>> by_piece;
  for (const auto& comp : s.components) {
    if (comp.genus < 0) return R::failure("negative genus");
    for (const auto& circ : comp.circles) {
      for (const auto& p : circ.points) {
        if (!point_ids.insert(p.id).second)
          return R::failure("duplicate point id '" + p.id + "'");
        by_piece[p.piece].push_back(&p);
      }
      if (!circ.axis_gap_weights.empty()) {
        int total = 0;
        for (const auto& [gap, w] : circ.axis_gap_weights) {
          if (gap < 0 || gap >= static_cast<int>(circ.points.size()) || w < 0)
            return R::failure("axis weight on a nonexistent gap");
          total += w;
        }
        // The reference axis meets every circle exactly twice.
        if (total != 2) return R::failure("axis weights on a circle must total 2");
      }
    }
  }
  for (const auto& [piece, pts] : by_piece) {
    bool stop = pts.front()->is_stop;
    for (const auto* p : pts) {
      if (p->is_stop != stop)
        return R::failure("piece '" + piece + "' mixes stop and sphere points");
    }
    if (stop && pts.size() != 1)
      return R::failure("stop piece '" + piece + "' must own exactly one point, owns " +
                        std::to_string(pts.size()));
    if (!stop && pts.size() != 2)
      return R::failure("sphere piece '" + piece + "' must own exactly two points, owns " +
                        std::to_string(pts.size()));
  }
  return R::success(true);
}

inline bool simply_connected(const SurfaceComponent& c) {
  return c.genus == 0 && c.circles.size() == 1;
}

// Index of the gap following the largest-id point.
inline int base_gap(const BoundaryCircle& c) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(c.points.size()); ++i) {
    if (id_less(c.points[best].id, c.points[i].id)) best = i;
  }
  return best;
}

inline int axis_weight(const BoundaryCircle& c, int gap) {
  if (!c.axis_gap_weights.empty()) {
    auto it = c.axis_gap_weights.find(gap);
    return it == c.axis_gap_weights.end() ? 0 : it->second;
  }
  return gap == base_gap(c) ? 2 : 0;
}

// A boundary chord on circle (comp, circ) from point index `from` to point
// index `to`, whose arc crosses the base gap `passes` times.
struct ChordRef {
  int comp = 0;
  int circ = 0;
  int from = 0;
  int to = 0;
  int passes = 0;

  friend bool operator<(const ChordRef& a, const ChordRef& b) {
    return std::tie(a.comp, a.circ, a.from, a.to, a.passes) <
           std::tie(b.comp, b.circ, b.from, b.to, b.passes);
  }
  friend bool operator==(const ChordRef& a, const ChordRef& b) {
    return std::tie(a.comp, a.circ, a.from, a.to, a.passes) ==
           std::tie(b.comp, b.circ, b.from, b.to, b.passes);
  }
};

inline const BoundaryCircle& circle_of(const MarkedSurface& s, const ChordRef& c) {
  return s.components[c.comp].circles[c.circ];
}

// Number of steps of the arc before it first reaches its endpoint.
inline int first_reach_length(const BoundaryCircle& circ, int from, int to) {
  int m = static_cast<int>(circ.points.size());
  return ((to - from - 1) % m + m) % m + 1;
}

// Base-gap crossings during the first reach.
inline int first_reach_base_crossings(const BoundaryCircle& circ, int from, int to) {
  int m = static_cast<int>(circ.points.size());
  int L0 = first_reach_length(circ, from, to);
  int rel = ((base_gap(circ) - from) % m + m) % m;
  return rel < L0 ? 1 : 0;
}

inline bool chord_valid(const MarkedSurface& s, const ChordRef& c) {
  if (c.comp < 0 || c.comp >= static_cast<int>(s.components.size())) return false;
  const auto& comp = s.components[c.comp];
  if (c.circ < 0 || c.circ >= static_cast<int>(comp.circles.size())) return false;
  const auto& circ = comp.circles[c.circ];
  int m = static_cast<int>(circ.points.size());
  if (m == 0) return false;
  if (c.from < 0 || c.from >= m || c.to < 0 || c.to >= m) return false;
  return c.passes >= first_reach_base_crossings(circ, c.from, c.to);
}

// Total number of unit steps of the arc.
inline int chord_length(const MarkedSurface& s, const ChordRef& c) {
  const auto& circ = circle_of(s, c);
  int m = static_cast<int>(circ.points.size());
  int L0 = first_reach_length(circ, c.from, c.to);
  int b0 = first_reach_base_crossings(circ, c.from, c.to);
  return L0 + (c.passes - b0) * m;
}

inline bool chord_is_short(const MarkedSurface& s, const ChordRef& c) {
  return chord_length(s, c) == 1;
}

inline Weight chord_weight(const MarkedSurface& s, const ChordRef& c) {
  const auto& circ = circle_of(s, c);
  int m = static_cast<int>(circ.points.size());
  return Weight(chord_length(s, c) + c.passes * m);
}

// Total axis weight collected along the arc.
inline int chord_axis_crossings(const MarkedSurface& s, const ChordRef& c) {
  const auto& circ = circle_of(s, c);
  int m = static_cast<int>(circ.points.size());
  int L = chord_length(s, c);
  int q = 0;
  for (int t = 0; t < L; ++t) q += axis_weight(circ, (c.from + t) % m);
  return q;
}

inline int chord_degree(const MarkedSurface& s, const ChordRef& c) {
  const auto& circ = circle_of(s, c);
  return -chord_axis_crossings(s, c) + 1 + circ.points[c.from].maslov -
         circ.points[c.to].maslov;
}

inline std::string chord_id(const MarkedSurface& s, const ChordRef& c) {
  const auto& circ = circle_of(s, c);
  return "c[" + circ.points[c.from].id + "," + circ.points[c.to].id + "]^" +
         std::to_string(c.passes);
}

inline Result<ChordRef> make_chord(const MarkedSurface& s, const std::string& from_id,
                                   const std::string& to_id, int passes) {
  using R = Result<ChordRef>;
  for (int ci = 0; ci < static_cast<int>(s.components.size()); ++ci) {
    const auto& comp = s.components[ci];
    for (int cj = 0; cj < static_cast<int>(comp.circles.size()); ++cj) {
      const auto& circ = comp.circles[cj];
      int from = -1, to = -1;
      for (int k = 0; k < static_cast<int>(circ.points.size()); ++k) {
        if (circ.points[k].id == from_id) from = k;
        if (circ.points[k].id == to_id) to = k;
      }
      if (from >= 0 && to >= 0) {
        ChordRef c{ci, cj, from, to, passes};
        if (!chord_valid(s, c))
          return R::failure("chord " + from_id + " -> " + to_id + " with " +
                            std::to_string(passes) + " base crossings does not exist");
        return R::success(c);
      }
      if (from >= 0 || to >= 0)
        return R::failure("points '" + from_id + "' and '" + to_id +
                          "' are not on the same circle");
    }
  }
  return R::failure("no circle contains points '" + from_id + "' and '" + to_id + "'");
}

inline std::vector<ChordRef> enumerate_chords(const MarkedSurface& s, int max_passes) {
  std::vector<ChordRef> out;
  for (int ci = 0; ci < static_cast<int>(s.components.size()); ++ci) {
    const auto& comp = s.components[ci];
    for (int cj = 0; cj < static_cast<int>(comp.circles.size()); ++cj) {
      const auto& circ = comp.circles[cj];
      int m = static_cast<int>(circ.points.size());
      for (int from = 0; from < m; ++from) {
        for (int to = 0; to < m; ++to) {
          int b0 = first_reach_base_crossings(circ, from, to);
          for (int p = b0; p <= max_passes; ++p) out.push_back(ChordRef{ci, cj, from, to, p});
        }
      }
    }
  }
  return out;
}

// Interior passage splittings: one term per point the arc passes strictly
// between its endpoints.  Both factors are automatically valid chords.
inline std::vector<std::pair<ChordRef, ChordRef>> chord_splittings(const MarkedSurface& s,
                                                                   const ChordRef& c) {
  const auto& circ = circle_of(s, c);
  int m = static_cast<int>(circ.points.size());
  int L = chord_length(s, c);
  int base = base_gap(circ);
  std::vector<std::pair<ChordRef, ChordRef>> out;
  int crossings_so_far = 0;
  for (int t = 1; t < L; ++t) {
    if ((c.from + t - 1) % m == base) ++crossings_so_far;
    int k = (c.from + t) % m;
    ChordRef first{c.comp, c.circ, c.from, k, crossings_so_far};
    ChordRef second{c.comp, c.circ, k, c.to, c.passes - crossings_so_far};
    out.emplace_back(second, first);  // composition order: second after first
  }
  return out;
}

// Weight-preserving part of the differential: split at every interior
// passage.  Word letters are in composition order (last-applied first).
inline FormalSum chord_d0(const MarkedSurface& s, const ChordRef& c) {
  FormalSum out;
  const auto& circ = circle_of(s, c);
  for (const auto& [second, first] : chord_splittings(s, c)) {
    Word w;
    w.letters = {chord_id(s, second), chord_id(s, first)};
    w.src = circ.points[c.from].piece;
    w.tgt = circ.points[c.to].piece;
    add_term(out, w);
  }
  return out;
}

// Weight-lowering part: a loop chord with one base crossing on a simply
// connected component bounds, contributing the idempotent of its piece.
inline FormalSum chord_d1(const MarkedSurface& s, const ChordRef& c) {
  FormalSum out;
  if (c.from == c.to && c.passes == 1 && simply_connected(s.components[c.comp])) {
    out.insert(idempotent(circle_of(s, c).points[c.from].piece));
  }
  return out;
}

// The boundary algebra of the surface truncated at the given number of base
// crossings.  The truncation is closed under the differential: splitting
// never raises `passes` on either factor.
inline QuiverDga internal_dga(const MarkedSurface& s, int max_passes) {
  QuiverDga A;
  std::set<std::string> pieces;
  for (const auto& comp : s.components)
    for (const auto& circ : comp.circles)
      for (const auto& p : circ.points) pieces.insert(p.piece);
  A.vertices.assign(pieces.begin(), pieces.end());
  for (const auto& c : enumerate_chords(s, max_passes)) {
    const auto& circ = circle_of(s, c);
    Generator g;
    g.id = chord_id(s, c);
    g.src = circ.points[c.from].piece;
    g.tgt = circ.points[c.to].piece;
    g.degree = chord_degree(s, c);
    g.weight = chord_weight(s, c);
    A.add_generator(g);
    A.differential[g.id] = sum_add(chord_d0(s, c), chord_d1(s, c));
  }
  return A;
}

// ---- words of chords -------------------------------------------------------

// Words are stored in composition order: index 0 is applied last.
using ChordWord = std::vector<ChordRef>;

inline bool concatenable_pair(const MarkedSurface& s, const ChordRef& later,
                              const ChordRef& earlier) {
  if (later.comp != earlier.comp || later.circ != earlier.circ) return false;
  (void)s;
  return earlier.to == later.from;
}

inline bool piece_composable_pair(const MarkedSurface& s, const ChordRef& later,
                                  const ChordRef& earlier) {
  const auto& c1 = circle_of(s, earlier);
  const auto& c2 = circle_of(s, later);
  return c1.points[earlier.to].piece == c2.points[later.from].piece;
}

inline ChordRef merge_chords(const ChordRef& later, const ChordRef& earlier) {
  return ChordRef{later.comp, later.circ, earlier.from, later.to, earlier.passes + later.passes};
}

// Merges point-matching adjacent pairs until none remain.  The result does
// not depend on the merge order.
inline ChordWord total_concatenation(const MarkedSurface& s, ChordWord w) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (concatenable_pair(s, w[k], w[k + 1])) {
        ChordRef m = merge_chords(w[k], w[k + 1]);
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
        w.insert(w.begin() + static_cast<long>(k), m);
        merged = true;
        break;
      }
    }
  }
  return w;
}

// Splits a chord into its unit steps (composition order: first step last).
inline ChordWord total_splitting(const MarkedSurface& s, const ChordRef& c) {
  const auto& circ = circle_of(s, c);
  int m = static_cast<int>(circ.points.size());
  int L = chord_length(s, c);
  int base = base_gap(circ);
  ChordWord out;
  for (int t = L - 1; t >= 0; --t) {
    int a = (c.from + t) % m;
    int b = (c.from + t + 1) % m;
    out.push_back(ChordRef{c.comp, c.circ, a, b, a == base ? 1 : 0});
  }
  return out;
}

inline bool is_unconcatable(const MarkedSurface& s, const ChordWord& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (concatenable_pair(s, w[k], w[k + 1])) return false;
  }
  return true;
}

inline int word_passes(const ChordWord& w) {
  int p = 0;
  for (const auto& c : w) p += c.passes;
  return p;
}

inline Weight chord_word_weight(const MarkedSurface& s, const ChordWord& w) {
  Weight x(0);
  for (const auto& c : w) x += chord_weight(s, c);
  return x;
}

inline int chord_word_degree(const MarkedSurface& s, const ChordWord& w) {
  int d = 0;
  for (const auto& c : w) d += chord_degree(s, c);
  return d;
}

inline Word chord_word_to_word(const MarkedSurface& s, const ChordWord& w) {
  Word out;
  for (const auto& c : w) out.letters.push_back(chord_id(s, c));
  const auto& cf = circle_of(s, w.back());
  const auto& cl = circle_of(s, w.front());
  out.src = cf.points[w.back().from].piece;
  out.tgt = cl.points[w.front().to].piece;
  return out;
}

// All piece-composable words of short chords without any point-matching
// junction, bounded by total base crossings and by length.  Idempotents are
// not included.  Junctions at a stop piece are always point-matching, so the
// words only turn at sphere pieces.
inline std::vector<ChordWord> unconcatable_short_words(const MarkedSurface& s, int max_passes,
                                                       int max_length) {
  std::vector<ChordRef> shorts;
  for (const auto& c : enumerate_chords(s, max_passes)) {
    if (chord_is_short(s, c)) shorts.push_back(c);
  }
  // pieces -> short chords starting there
  std::map<std::string, std::vector<ChordRef>> by_src_piece;
  for (const auto& c : shorts) {
    const auto& circ = circle_of(s, c);
    by_src_piece[circ.points[c.from].piece].push_back(c);
  }
  std::vector<ChordWord> out;
  // seq holds first-applied order.
  std::vector<ChordRef> seq;
  std::function<void()> extend = [&]() {
    if (!seq.empty()) {
      ChordWord w(seq.rbegin(), seq.rend());
      out.push_back(w);
    }
    if (static_cast<int>(seq.size()) >= max_length) return;
    if (seq.empty()) return;  // starts handled by the caller loop
    const ChordRef last = seq.back();
    const int passes_so_far = word_passes({seq.begin(), seq.end()});
    const auto& circ = circle_of(s, last);
    const std::string& piece = circ.points[last.to].piece;
    auto it = by_src_piece.find(piece);
    if (it == by_src_piece.end()) return;
    for (const auto& c : it->second) {
      if (concatenable_pair(s, c, last)) continue;
      if (passes_so_far + c.passes > max_passes) continue;
      seq.push_back(c);
      extend();
      seq.pop_back();
    }
  };
  for (const auto& c : shorts) {
    seq = {c};
    extend();
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Concatenable sequences of chords whose total concatenation is a single
// once-crossing loop chord on a simply connected component.  Returned words
// are in composition order.
inline std::vector<ChordWord> disk_sequences(const MarkedSurface& s, int max_length) {
  std::vector<ChordWord> out;
  for (int ci = 0; ci < static_cast<int>(s.components.size()); ++ci) {
    const auto& comp = s.components[ci];
    if (!simply_connected(comp)) continue;
    const auto& circ = comp.circles[0];
    int m = static_cast<int>(circ.points.size());
    int base = base_gap(circ);
    for (int start = 0; start < m; ++start) {
      // Split positions: subset of interior arrivals t in [1, m-1].
      for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        std::vector<int> cuts = {0};
        for (int t = 1; t < m; ++t) {
          if (mask & (1u << (t - 1))) cuts.push_back(t);
        }
        cuts.push_back(m);
        if (static_cast<int>(cuts.size()) - 1 > max_length) continue;
        ChordWord w;  // build last-applied-first
        for (std::size_t a = cuts.size() - 1; a >= 1; --a) {
          int t0 = cuts[a - 1], t1 = cuts[a];
          int from = (start + t0) % m;
          int to = (start + t1) % m;
          int p = 0;
          for (int t = t0; t < t1; ++t)
            if ((start + t) % m == base) ++p;
          w.push_back(ChordRef{ci, 0, from, to, p});
        }
        out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- homology of the weight-preserving differential -------------------------

// Keyed by (total base crossings, total arc steps, degree).  The word span
// splits under the splitting differential by the first two invariants, and
// each block is finite, so every dimension below is exact (no escapes).
using D0Dims = std::map<std::tuple<int, int, int>, std::size_t>;

// Homology of the splitting-only differential on all composable chord words
// with the given bounds.  Idempotent words contribute one degree-0 class per
// piece in the (0, 0) block.
inline Result<D0Dims> d0_word_homology(const MarkedSurface& s, int max_passes, int max_steps,
                                       std::size_t hard_cap = 2000000) {
  using R = Result<D0Dims>;
  std::vector<ChordRef> chords;
  for (const auto& c : enumerate_chords(s, max_passes)) {
    if (chord_length(s, c) <= max_steps) chords.push_back(c);
  }
  std::map<std::string, std::vector<ChordRef>> by_src_piece;
  for (const auto& c : chords) {
    by_src_piece[circle_of(s, c).points[c.from].piece].push_back(c);
  }

  // Enumerate words grouped by (passes, steps).
  std::map<std::pair<int, int>, std::vector<ChordWord>> blocks;
  std::vector<ChordRef> seq;  // first-applied order
  int steps = 0, passes = 0;
  std::size_t total = 0;
  bool overflow = false;
  std::function<void()> extend = [&]() {
    if (overflow) return;
    if (!seq.empty()) {
      blocks[{passes, steps}].push_back(ChordWord(seq.rbegin(), seq.rend()));
      if (++total > hard_cap) overflow = true;
    }
    if (seq.empty()) return;
    const ChordRef last = seq.back();
    const std::string& piece = circle_of(s, last).points[last.to].piece;
    auto it = by_src_piece.find(piece);
    if (it == by_src_piece.end()) return;
    for (const auto& c : it->second) {
      int cl = chord_length(s, c);
      if (steps + cl > max_steps || passes + c.passes > max_passes) continue;
      seq.push_back(c);
      steps += cl;
      passes += c.passes;
      extend();
      seq.pop_back();
      steps -= cl;
      passes -= c.passes;
    }
  };
  for (const auto& c : chords) {
    seq = {c};
    steps = chord_length(s, c);
    passes = c.passes;
    extend();
  }
  if (overflow) return R::failure("word enumeration exceeded the hard cap");

  D0Dims dims;
  std::set<std::string> pieces;
  for (const auto& comp : s.components)
    for (const auto& circ : comp.circles)
      for (const auto& p : circ.points) pieces.insert(p.piece);
  if (!pieces.empty()) dims[{0, 0, 0}] = pieces.size();

  for (auto& [key, words] : blocks) {
    std::sort(words.begin(), words.end());
    std::map<ChordWord, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
    // Group block elements by degree and compute boundary ranks.
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < words.size(); ++i)
      by_degree[chord_word_degree(s, words[i])].push_back(i);
    std::map<std::size_t, std::size_t> pos_in_degree;
    for (const auto& [d, idxs] : by_degree)
      for (std::size_t k = 0; k < idxs.size(); ++k) pos_in_degree[idxs[k]] = k;
    std::map<int, std::size_t> ranks;  // rank of the map out of degree d
    for (const auto& [d, idxs] : by_degree) {
      std::size_t rows = by_degree.count(d + 1) ? by_degree.at(d + 1).size() : 0;
      std::vector<f2::Vec> cols;
      for (auto i : idxs) {
        const ChordWord& w = words[i];
        FormalSum image;
        for (std::size_t k = 0; k < w.size(); ++k) {
          for (const auto& [second, first] : chord_splittings(s, w[k])) {
            ChordWord t;
            t.insert(t.end(), w.begin(), w.begin() + static_cast<long>(k));
            t.push_back(second);
            t.push_back(first);
            t.insert(t.end(), w.begin() + static_cast<long>(k) + 1, w.end());
            Word marker;  // reuse mod-2 cancellation via a rendered key
            for (const auto& cc : t) marker.letters.push_back(chord_id(s, cc));
            marker.src = std::to_string(index.count(t) ? static_cast<long long>(index.at(t))
                                                       : -1);
            add_term(image, marker);
          }
        }
        f2::Vec v(rows);
        for (const auto& mk : image) {
          long long j = std::stoll(mk.src);
          if (j < 0) return R::failure("splitting image left its block");
          v.flip(pos_in_degree.at(static_cast<std::size_t>(j)));
        }
        cols.push_back(std::move(v));
      }
      ranks[d] = f2::rank(cols);
    }
    for (const auto& [d, idxs] : by_degree) {
      std::size_t r_out = ranks.count(d) ? ranks.at(d) : 0;
      std::size_t r_in = ranks.count(d - 1) ? ranks.at(d - 1) : 0;
      std::size_t h = idxs.size() - r_out - r_in;
      if (h) dims[{key.first, key.second, d}] = h;
    }
  }
  return R::success(std::move(dims));
}

// Expected homology of the splitting differential: unconcatable short words
// counted by (passes, length, degree), plus one degree-0 class per piece.
inline D0Dims unconcatable_short_census(const MarkedSurface& s, int max_passes, int max_steps) {
  D0Dims out;
  std::set<std::string> pieces;
  for (const auto& comp : s.components)
    for (const auto& circ : comp.circles)
      for (const auto& p : circ.points) pieces.insert(p.piece);
  if (!pieces.empty()) out[{0, 0, 0}] = pieces.size();
  for (const auto& w : unconcatable_short_words(s, max_passes, max_steps)) {
    int p = word_passes(w);
    int steps = static_cast<int>(w.size());
    int d = chord_word_degree(s, w);
    out[{p, steps, d}]++;
  }
  return out;
}

// ---- stock surfaces ---------------------------------------------------------

// One disk whose boundary carries n stops labelled "1".."n" with pieces
// "s1".."sn".
inline MarkedSurface stop_disk(int n) {
  MarkedSurface s;
  SurfaceComponent comp;
  BoundaryCircle circ;
  for (int i = 1; i <= n; ++i) {
    circ.points.push_back(MarkedPoint{std::to_string(i), "s" + std::to_string(i), true, 0});
  }
  comp.circles.push_back(std::move(circ));
  s.components.push_back(std::move(comp));
  return s;
}

// All single-disk surfaces with m marked points, for every m <= max_points
// and every partition of the points into stops and same-circle spheres.
inline std::vector<MarkedSurface> all_disk_surfaces(int max_points) {
  std::vector<MarkedSurface> out;
  for (int m = 1; m <= max_points; ++m) {
    // Partitions of {0..m-1} into singletons (stops) and pairs (spheres).
    std::vector<std::vector<std::pair<int, int>>> pairings;  // -1 partner = stop
    std::vector<int> partner(m, -2);
    std::function<void(int)> rec = [&](int i) {
      if (i == m) {
        std::vector<std::pair<int, int>> p;
        for (int k = 0; k < m; ++k) p.emplace_back(k, partner[k]);
        pairings.push_back(p);
        return;
      }
      if (partner[i] != -2) {
        rec(i + 1);
        return;
      }
      partner[i] = -1;
      rec(i + 1);
      partner[i] = -2;
      for (int j = i + 1; j < m; ++j) {
        if (partner[j] != -2) continue;
        partner[i] = j;
        partner[j] = i;
        rec(i + 1);
        partner[i] = -2;
        partner[j] = -2;
      }
    };
    rec(0);
    for (const auto& p : pairings) {
      MarkedSurface s;
      SurfaceComponent comp;
      BoundaryCircle circ;
      for (int k = 0; k < m; ++k) {
        MarkedPoint pt;
        pt.id = std::to_string(k + 1);
        if (p[k].second == -1) {
          pt.is_stop = true;
          pt.piece = "s" + std::to_string(k + 1);
        } else {
          int lo = std::min(k, p[k].second), hi = std::max(k, p[k].second);
          pt.piece = "P" + std::to_string(lo + 1) + "_" + std::to_string(hi + 1);
        }
        circ.points.push_back(std::move(pt));
      }
      comp.circles.push_back(std::move(circ));
      s.components.push_back(std::move(comp));
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace cedga
