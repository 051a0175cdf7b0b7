#pragma once

#include "cedga/ainfty.hpp"
#include "cedga/surface.hpp"
#include "cedga/surgery.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cedga {

// ---- closed-form minimal model ----------------------------------------------

struct ClosedFormModel {
  AInfinityAlgebra model;
  // Tensors where two pattern instances asked for different values; the first
  // assignment wins and the clash is reported here.
  std::vector<std::string> coincidences;
  // Binary products that fell outside the enumerated word window.
  std::size_t dropped_products = 0;
};

// The minimal model read off combinatorially: basis = unconcatable words of
// short chords; mu_2 concatenates words and cancels point-matching junction
// pairs whose merged chord bounds a disk (the absorbed idempotent acts as a
// unit); mu_k for k >= 3 is given by the two flanked disk-sequence patterns
//   mu_k(d_k (x) ... (x) d_2 (x) d_1 u) = u
//   mu_k(u d_k (x) d_{k-1} (x) ... (x) d_1) = u
// over disk sequences d_k ... d_1 of short chords, where the flank u ranges
// over basis words (or the idempotent at the loop's piece, in which case both
// patterns name the same value on the bare tensor, assigned once).
// Everything else vanishes.
//
// The construction requires every co-core of the surgered surface to be
// essential; a null-homotopic one is rejected with its piece as witness.
//
// With `max_weight` set, the basis is additionally restricted to words of at
// most that weight, matching a weight-truncated word complex on the nose.
inline Result<ClosedFormModel> closed_form_minimal_model(
    const MarkedSurface& s, int max_passes, int max_length, int arity_bound = 6,
    std::optional<Weight> max_weight = std::nullopt) {
  using R = Result<ClosedFormModel>;
  if (auto witness = find_null_homotopic_cocore(s)) {
    return R::failure("co-core of piece '" + *witness +
                      "' is null-homotopic; remove that handle first");
  }

  ClosedFormModel out;
  AInfinityAlgebra& M = out.model;
  M.arity_bound = arity_bound;
  std::set<std::string> pieces;
  for (const auto& comp : s.components)
    for (const auto& circ : comp.circles)
      for (const auto& p : circ.points) pieces.insert(p.piece);
  M.vertices.assign(pieces.begin(), pieces.end());

  auto words = unconcatable_short_words(s, max_passes, max_length);
  if (max_weight) {
    words.erase(std::remove_if(words.begin(), words.end(),
                               [&](const ChordWord& w) {
                                 return chord_word_weight(s, w) > *max_weight;
                               }),
                words.end());
  }
  std::map<std::string, std::size_t> by_id;
  std::vector<Weight> word_wt;
  for (const auto& w : words) {
    Word rendered = chord_word_to_word(s, w);
    ModelElement e;
    e.id = word_to_string(rendered);
    e.degree = chord_word_degree(s, w);
    e.src = rendered.src;
    e.tgt = rendered.tgt;
    by_id[e.id] = M.basis.size();
    M.basis.push_back(std::move(e));
    word_wt.push_back(chord_word_weight(s, w));
  }
  // With a weight window in force, an operation is part of the windowed
  // structure only when the total weight of its inputs stays inside the
  // window; heavier operations are treated as zero, like any product that
  // leaves a weight-truncated word complex.
  auto within_window = [&](const Weight& total) {
    return !max_weight || total <= *max_weight;
  };
  auto id_of_word = [&](const ChordWord& w) -> std::optional<std::string> {
    std::string id = word_to_string(chord_word_to_word(s, w));
    if (by_id.count(id)) return id;
    return std::nullopt;
  };
  auto id_of_chord = [&](const ChordRef& c) { return chord_id(s, c); };

  // Binary products: concatenate and cascade-cancel at the junction.
  for (std::size_t i2 = 0; i2 < words.size(); ++i2) {
    for (std::size_t i1 = 0; i1 < words.size(); ++i1) {
      const ModelElement& b2 = M.basis[i2];
      const ModelElement& b1 = M.basis[i1];
      if (b2.src != b1.tgt) continue;
      if (!within_window(word_wt[i2] + word_wt[i1])) {
        out.dropped_products += 1;
        continue;
      }
      ChordWord later = words[i2];
      ChordWord earlier = words[i1];
      bool zero = false;
      while (!later.empty() && !earlier.empty()) {
        const ChordRef& lt = later.back();
        const ChordRef& er = earlier.front();
        if (!concatenable_pair(s, lt, er)) break;
        ChordRef m = merge_chords(lt, er);
        if (chord_d1(s, m).empty()) {
          zero = true;
          break;
        }
        later.pop_back();
        earlier.erase(earlier.begin());
      }
      if (zero) continue;
      ChordWord product = later;
      product.insert(product.end(), earlier.begin(), earlier.end());
      ModelSum value;
      if (product.empty()) {
        value.insert(unit_id(b1.src));
      } else if (auto id = id_of_word(product)) {
        value.insert(*id);
      } else {
        out.dropped_products += 1;
        continue;
      }
      M.mu[2][{b2.id, b1.id}] = std::move(value);
    }
  }

  // Flanked disk-sequence patterns.
  auto assign_once = [&](int k, std::vector<std::string> tensor, const std::string& value) {
    auto& table = M.mu[k];
    auto it = table.find(tensor);
    if (it == table.end()) {
      table.emplace(std::move(tensor), ModelSum{value});
    } else if (it->second != ModelSum{value}) {
      out.coincidences.push_back("mu_" + std::to_string(k) + "(" +
                                 detail::render_tensor(tensor) + "): '" + value +
                                 "' clashes with an earlier assignment");
    }
  };
  for (const auto& seq : disk_sequences(s, std::min(max_length, arity_bound))) {
    int k = static_cast<int>(seq.size());
    if (k < 3 || k > arity_bound) continue;
    bool all_short = true;
    for (const auto& c : seq) {
      if (!chord_is_short(s, c) || c.passes > max_passes) all_short = false;
    }
    if (!all_short) continue;
    std::vector<std::string> bare;
    bool in_basis = true;
    for (const auto& c : seq) {
      std::string id = id_of_chord(c);
      if (!by_id.count(id)) in_basis = false;
      bare.push_back(id);
    }
    if (!in_basis) continue;
    Weight seq_wt = chord_word_weight(s, seq);
    const ChordRef& d1 = seq.back();
    const ChordRef& dk = seq.front();
    // The sequence splits a once-around loop, so it starts and ends at the
    // same marked point; its piece is both d_1's source and d_k's target.
    std::string loop_piece = circle_of(s, d1).points[d1.from].piece;

    // Idempotent flank: both patterns name the unit of the loop's piece.
    if (within_window(seq_wt)) assign_once(k, bare, unit_id(loop_piece));

    // The flank ranges over the whole basis: any word u that composes with
    // the sequence without concatenating at the junction gives
    //   mu_k(d_k (x) ... (x) d_2 (x) (d_1 u)) = u
    //   mu_k((u d_k) (x) d_{k-1} (x) ... (x) d_1) = u
    // provided the glued word is itself a basis element.
    for (std::size_t iu = 0; iu < words.size(); ++iu) {
      const ChordWord& u = words[iu];
      if (!within_window(seq_wt + word_wt[iu])) continue;
      // front: ... (x) d_2 (x) (d_1 u), output u
      if (M.basis[iu].tgt == loop_piece && !concatenable_pair(s, d1, u.front())) {
        ChordWord w{d1};
        w.insert(w.end(), u.begin(), u.end());
        if (auto id = id_of_word(w)) {
          std::vector<std::string> tensor(bare.begin(), bare.end() - 1);
          tensor.push_back(*id);
          assign_once(k, std::move(tensor), M.basis[iu].id);
        }
      }
      // back: (u d_k) (x) d_{k-1} (x) ..., output u
      if (M.basis[iu].src == loop_piece && !concatenable_pair(s, u.back(), dk)) {
        ChordWord w = u;
        w.push_back(dk);
        if (auto id = id_of_word(w)) {
          std::vector<std::string> tensor{*id};
          tensor.insert(tensor.end(), bare.begin() + 1, bare.end());
          assign_once(k, std::move(tensor), M.basis[iu].id);
        }
      }
    }
  }
  // Drop empty tables so absent arities read as identically zero.
  for (auto it = M.mu.begin(); it != M.mu.end();) {
    it = it->second.empty() ? M.mu.erase(it) : std::next(it);
  }
  return R::success(std::move(out));
}

}  // namespace cedga
