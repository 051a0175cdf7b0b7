#pragma once

#include "cedga/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cedga {

// The surface obtained by attaching a 1-handle at every two-point piece and a
// half-handle at every stop.  The boundary is encoded as a successor map on
// segment nodes: the original gaps, plus one marker per handle side (where the
// handle's transversal arc meets the boundary) and an in/out marker pair per
// stop (where the boundary is cut into rays).
struct RibbonNode {
  bool is_marker = false;
  int comp = -1, circ = -1, gap = -1;  // gap nodes
  std::string piece;                   // marker nodes: owning piece
  std::string label;                   // marker nodes: "P:0", "P:1", "X:in", "X:out"
  bool is_stop = false;
};

struct SurgeredSurface {
  MarkedSurface base;
  std::optional<std::string> skipped;  // piece whose handle was not attached
  std::vector<RibbonNode> nodes;
  std::vector<int> next;  // successor node index; -1 ends a boundary ray

  // Connected parts of the result (handles can join components).
  struct Part {
    std::vector<int> comps;  // original component indices
    int euler = 0;
    int circles = 0;  // closed boundary components
    int rays = 0;     // boundary components cut open at a stop
  };
  std::vector<Part> parts;
  std::vector<int> part_of_comp;
  std::vector<std::string> cocores;  // pieces whose handle carries a transversal arc
};

namespace detail {
struct PiecePoint {
  int comp, circ, idx;
  bool is_stop;
};
}  // namespace detail

// Attaches the handles.  When `skip` names a piece, that handle is left off:
// the result is the surface cut along that handle's transversal arc (the cut
// halves are boundary collars and do not affect the counts).
inline Result<SurgeredSurface> attach_handles(const MarkedSurface& s,
                                              std::optional<std::string> skip = std::nullopt) {
  using R = Result<SurgeredSurface>;
  if (auto v = validate_surface(s); !v.ok()) return R::failure(v.error);

  std::map<std::string, std::vector<detail::PiecePoint>> pieces;
  for (int c = 0; c < static_cast<int>(s.components.size()); ++c) {
    const auto& comp = s.components[c];
    for (int k = 0; k < static_cast<int>(comp.circles.size()); ++k) {
      const auto& circ = comp.circles[k];
      for (int i = 0; i < static_cast<int>(circ.points.size()); ++i) {
        pieces[circ.points[i].piece].push_back({c, k, i, circ.points[i].is_stop});
      }
    }
  }
  if (skip && !pieces.count(*skip)) return R::failure("no piece named '" + *skip + "'");

  SurgeredSurface out;
  out.base = s;
  out.skipped = skip;

  // Gap nodes first; gap j runs from point j to point j+1 (mod m).
  std::map<std::tuple<int, int, int>, int> gap_node;
  for (int c = 0; c < static_cast<int>(s.components.size()); ++c) {
    const auto& comp = s.components[c];
    for (int k = 0; k < static_cast<int>(comp.circles.size()); ++k) {
      int m = static_cast<int>(comp.circles[k].points.size());
      for (int j = 0; j < m; ++j) {
        gap_node[{c, k, j}] = static_cast<int>(out.nodes.size());
        RibbonNode n;
        n.comp = c;
        n.circ = k;
        n.gap = j;
        out.nodes.push_back(n);
      }
    }
  }

  auto add_marker = [&](const std::string& piece, const std::string& label, bool stop) {
    int id = static_cast<int>(out.nodes.size());
    RibbonNode n;
    n.is_marker = true;
    n.piece = piece;
    n.label = label;
    n.is_stop = stop;
    out.nodes.push_back(n);
    return id;
  };

  out.next.assign(out.nodes.size(), -1);
  auto set_next = [&](int a, int b) {
    if (static_cast<int>(out.next.size()) <= a) out.next.resize(a + 1, -1);
    out.next[a] = b;
  };

  // Route the boundary through each attached handle.
  std::vector<std::pair<int, int>> handle_joins;  // component pairs joined by 1-handles
  for (const auto& [pid, pts] : pieces) {
    bool attached = !(skip && *skip == pid);
    if (attached) out.cocores.push_back(pid);
    auto gap_ending_at = [&](const detail::PiecePoint& p) {
      int m = static_cast<int>(s.components[p.comp].circles[p.circ].points.size());
      return gap_node.at({p.comp, p.circ, (p.idx + m - 1) % m});
    };
    auto gap_starting_at = [&](const detail::PiecePoint& p) {
      return gap_node.at({p.comp, p.circ, p.idx});
    };
    if (pts[0].is_stop) {
      const auto& x = pts[0];
      if (attached) {
        int in = add_marker(pid, pid + ":in", true);
        int outm = add_marker(pid, pid + ":out", true);
        out.next.resize(out.nodes.size(), -1);
        set_next(gap_ending_at(x), in);
        set_next(outm, gap_starting_at(x));
      } else {
        set_next(gap_ending_at(x), gap_starting_at(x));
      }
    } else {
      // Order the two points deterministically by id.
      auto a = pts[0], b = pts[1];
      const auto& ida = s.components[a.comp].circles[a.circ].points[a.idx].id;
      const auto& idb = s.components[b.comp].circles[b.circ].points[b.idx].id;
      if (!id_less(ida, idb)) std::swap(a, b);
      if (attached) {
        int m0 = add_marker(pid, pid + ":0", false);
        int m1 = add_marker(pid, pid + ":1", false);
        out.next.resize(out.nodes.size(), -1);
        set_next(gap_ending_at(a), m0);
        set_next(m0, gap_starting_at(b));
        set_next(gap_ending_at(b), m1);
        set_next(m1, gap_starting_at(a));
        handle_joins.emplace_back(a.comp, b.comp);
      } else {
        set_next(gap_ending_at(a), gap_starting_at(a));
        set_next(gap_ending_at(b), gap_starting_at(b));
      }
    }
  }
  std::sort(out.cocores.begin(), out.cocores.end(), id_less);

  // Connected parts: original components merged along 1-handles.
  int nc = static_cast<int>(s.components.size());
  std::vector<int> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [a, b] : handle_joins) parent[find(a)] = find(b);
  std::map<int, int> part_index;
  out.part_of_comp.assign(nc, -1);
  for (int c = 0; c < nc; ++c) {
    int r = find(c);
    if (!part_index.count(r)) {
      part_index[r] = static_cast<int>(out.parts.size());
      out.parts.emplace_back();
    }
    int pi = part_index[r];
    out.parts[pi].comps.push_back(c);
    out.part_of_comp[c] = pi;
    const auto& comp = s.components[c];
    out.parts[pi].euler += 2 - 2 * comp.genus - static_cast<int>(comp.circles.size());
  }
  for (auto [a, b] : handle_joins) {
    (void)b;
    out.parts[out.part_of_comp[a]].euler -= 1;
  }

  // Boundary components: rays start at out-markers; the rest are circles.
  std::vector<char> seen(out.nodes.size(), 0);
  auto part_of_node = [&](int n) {
    const auto& nd = out.nodes[n];
    if (!nd.is_marker) return out.part_of_comp[nd.comp];
    return out.part_of_comp[pieces.at(nd.piece)[0].comp];
  };
  for (int n = 0; n < static_cast<int>(out.nodes.size()); ++n) {
    if (out.nodes[n].is_marker && out.nodes[n].is_stop && out.nodes[n].label.size() >= 4 &&
        out.nodes[n].label.substr(out.nodes[n].label.size() - 4) == ":out") {
      int cur = n;
      while (cur != -1) {
        seen[cur] = 1;
        cur = out.next[cur];
      }
      out.parts[part_of_node(n)].rays += 1;
    }
  }
  for (int n = 0; n < static_cast<int>(out.nodes.size()); ++n) {
    if (seen[n]) continue;
    if (out.next[n] == -1 && out.nodes[n].is_marker) {  // unreached in-marker of a skipped walk
      seen[n] = 1;
      continue;
    }
    int cur = n;
    bool circle = true;
    std::vector<int> orbit;
    while (cur != -1 && !seen[cur]) {
      seen[cur] = 1;
      orbit.push_back(cur);
      cur = out.next[cur];
    }
    if (cur == -1) circle = false;  // fell off a ray tail (should not happen)
    if (circle && !orbit.empty()) out.parts[part_of_node(n)].circles += 1;
  }
  return R::success(std::move(out));
}

// A handle's transversal arc contracts into the boundary exactly when cutting
// the surgered surface along it leaves a piece that is a closed disk: Euler
// characteristic 1, a single boundary circle, and no ray cuts.
inline Result<bool> cocore_null_homotopic(const MarkedSurface& s, const std::string& piece) {
  using R = Result<bool>;
  auto cut = attach_handles(s, piece);
  if (!cut.ok()) return R::failure(cut.error);
  std::set<int> touched;
  for (const auto& comp : s.components) {
    for (const auto& circ : comp.circles) {
      for (const auto& p : circ.points) {
        if (p.piece == piece) {
          int ci = 0;
          for (int c = 0; c < static_cast<int>(s.components.size()); ++c) {
            if (&s.components[c] == &comp) ci = c;
          }
          touched.insert(cut->part_of_comp[ci]);
        }
      }
    }
  }
  for (int pi : touched) {
    const auto& part = cut->parts[pi];
    if (part.euler == 1 && part.circles == 1 && part.rays == 0) return R::success(true);
  }
  return R::success(false);
}

inline Result<bool> cocore_null_homotopic(const SurgeredSurface& ss, const std::string& cocore) {
  using R = Result<bool>;
  if (std::find(ss.cocores.begin(), ss.cocores.end(), cocore) == ss.cocores.end()) {
    return R::failure("'" + cocore + "' is not a co-core of this surface");
  }
  return cocore_null_homotopic(ss.base, cocore);
}

// First piece (in id order) whose transversal arc is inessential, if any.
inline std::optional<std::string> find_null_homotopic_cocore(const MarkedSurface& s) {
  std::set<std::string, bool (*)(const std::string&, const std::string&)> pieces(id_less);
  for (const auto& comp : s.components)
    for (const auto& circ : comp.circles)
      for (const auto& p : circ.points) pieces.insert(p.piece);
  for (const auto& pid : pieces) {
    auto r = cocore_null_homotopic(s, pid);
    if (r.ok() && *r.value) return pid;
  }
  return std::nullopt;
}

// A boundary walk between two transversal-arc markers, read off as the word
// of unit-hop chords it traverses.
struct SurgeredChord {
  std::string start_marker, end_marker;
  ChordWord word;  // composition order (last-applied first)
  int steps = 0;
  int passes = 0;
  Weight weight = Weight(0);
};

// Enumerates the boundary arcs between markers, bounded by total base-point
// crossings and total unit steps.  Arcs may run through intermediate markers,
// producing the longer chords.  The weight accumulates during the walk (one
// per step plus the circle length per base crossing), independently of the
// per-letter weights of the word read off.
inline Result<std::vector<SurgeredChord>> surgered_boundary_chords(const SurgeredSurface& ss,
                                                                   int max_passes,
                                                                   int max_steps) {
  using R = Result<std::vector<SurgeredChord>>;
  std::vector<SurgeredChord> out;
  for (int start = 0; start < static_cast<int>(ss.nodes.size()); ++start) {
    const auto& sn = ss.nodes[start];
    if (!sn.is_marker || ss.next[start] == -1) continue;  // in-markers never start
    std::vector<ChordRef> collected;                      // first-applied order
    int steps = 0, passes = 0;
    Weight weight(0);
    int cur = ss.next[start];
    while (cur != -1) {
      const auto& nd = ss.nodes[cur];
      if (nd.is_marker) {
        SurgeredChord c;
        c.start_marker = sn.label;
        c.end_marker = nd.label;
        c.word.assign(collected.rbegin(), collected.rend());
        c.steps = steps;
        c.passes = passes;
        c.weight = weight;
        out.push_back(std::move(c));
        cur = ss.next[cur];
        continue;
      }
      const auto& circ = ss.base.components[nd.comp].circles[nd.circ];
      int m = static_cast<int>(circ.points.size());
      bool is_base = nd.gap == base_gap(circ);
      if (steps + 1 > max_steps) break;
      if (is_base && passes + 1 > max_passes) break;
      steps += 1;
      weight += 1;
      if (is_base) {
        passes += 1;
        weight += m;
      }
      collected.push_back(ChordRef{nd.comp, nd.circ, nd.gap, (nd.gap + 1) % m, is_base ? 1 : 0});
      cur = ss.next[cur];
    }
  }
  std::sort(out.begin(), out.end(), [](const SurgeredChord& a, const SurgeredChord& b) {
    return std::tie(a.word, a.start_marker) < std::tie(b.word, b.start_marker);
  });
  return R::success(std::move(out));
}

// Full two-sided comparison used by the surgery correspondence check: the
// marker-to-marker arcs must read off exactly the unconcatable short-chord
// words within the same bounds, with matching weights.
struct SurgeryComparison {
  bool bijective = false;
  std::size_t chord_count = 0;
  std::size_t word_count = 0;
  std::vector<std::string> mismatches;
};

inline Result<SurgeryComparison> compare_surgery_bijection(const MarkedSurface& s, int max_passes,
                                                           int max_steps) {
  using R = Result<SurgeryComparison>;
  auto ss = attach_handles(s);
  if (!ss.ok()) return R::failure(ss.error);
  auto chords = surgered_boundary_chords(*ss, max_passes, max_steps);
  if (!chords.ok()) return R::failure(chords.error);
  auto words = unconcatable_short_words(s, max_passes, max_steps);

  SurgeryComparison cmp;
  cmp.chord_count = chords->size();
  cmp.word_count = words.size();

  std::vector<ChordWord> read_off;
  for (const auto& c : chords->empty() ? std::vector<SurgeredChord>{} : *chords) {
    read_off.push_back(c.word);
    if (c.word.empty()) {
      cmp.mismatches.push_back("empty arc from " + c.start_marker);
      continue;
    }
    if (!is_unconcatable(s, c.word)) {
      cmp.mismatches.push_back("concatenable read-off from " + c.start_marker);
    }
    for (const auto& letter : c.word) {
      if (!chord_is_short(s, letter)) {
        cmp.mismatches.push_back("long letter " + chord_id(s, letter));
      }
    }
    if (chord_word_weight(s, c.word) != c.weight) {
      cmp.mismatches.push_back("weight mismatch on arc from " + c.start_marker + " to " +
                               c.end_marker);
    }
    if (word_passes(c.word) != c.passes) {
      cmp.mismatches.push_back("pass-count mismatch on arc from " + c.start_marker);
    }
  }
  std::sort(read_off.begin(), read_off.end());
  if (std::adjacent_find(read_off.begin(), read_off.end()) != read_off.end()) {
    cmp.mismatches.push_back("two arcs read off the same word");
  }
  std::vector<ChordWord> expected = words;
  std::sort(expected.begin(), expected.end());
  if (read_off != expected) {
    cmp.mismatches.push_back("arc words differ from the unconcatable short words");
  }
  cmp.bijective = cmp.mismatches.empty() && cmp.chord_count == cmp.word_count;
  return R::success(std::move(cmp));
}

}  // namespace cedga
