#pragma once

#include "cedga/quiver_dga.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cedga {

// Bounds for carving a finite piece out of the word complex.  At least one of
// max_length / max_weight must make the enumeration finite when the quiver
// has directed cycles.
struct TruncationPolicy {
  std::optional<int> max_length;
  std::optional<Weight> max_weight;
  // Degrees of interest [lo, hi]; the complex keeps one guard degree on each
  // side so that both ranks entering dim H^d are available for d in range.
  std::optional<std::pair<int, int>> degree_window;
};

// A finite piece of the word complex spanned by words with both endpoints in
// a chosen vertex set.  `boundary[i]` lists the indices of the differential
// of basis word i; columns may be missing (untracked) or incomplete
// (escaped), in which case the affected degrees are recorded and any
// cohomology request touching them is refused.
struct GradedComplex {
  std::vector<Word> basis;
  std::vector<int> degrees;
  std::vector<Weight> weights;
  std::map<Word, std::size_t> index;
  std::vector<std::vector<std::size_t>> boundary;
  std::vector<bool> column_tracked;
  std::set<int> escaped_degrees;    // differential left the truncation bounds
  std::set<int> untracked_degrees;  // column intentionally not computed
};

// Enumerates all composable words w with src(w), tgt(w) in S subject to the
// policy bounds, together with the differential restricted to that span.
inline Result<GradedComplex> corner_subcomplex(const QuiverDga& A,
                                               const std::set<std::string>& S,
                                               const TruncationPolicy& policy,
                                               std::size_t hard_cap = 2000000) {
  using R = Result<GradedComplex>;
  for (const auto& v : S) {
    if (!A.has_vertex(v)) return R::failure("corner vertex '" + v + "' does not exist");
  }
  if (!policy.max_length && !policy.max_weight)
    return R::failure("a length or weight bound is required");
  for (const auto& g : A.generators) {
    if (policy.max_weight && g.weight <= Weight(0) && !policy.max_length)
      return R::failure("generator '" + g.id +
                        "' has weight 0; a weight bound alone cannot terminate");
  }

  std::map<std::string, std::vector<const Generator*>> by_src;
  for (const auto& g : A.generators) by_src[g.src].push_back(&g);

  struct Item {
    std::vector<std::string> rev_letters;
    std::string src, tgt;
    Weight weight{0};
  };

  std::vector<Word> words;
  auto keep = [&](const Item& it) {
    if (!S.count(it.tgt)) return;
    Word w;
    w.letters.assign(it.rev_letters.rbegin(), it.rev_letters.rend());
    w.src = it.src;
    w.tgt = it.tgt;
    words.push_back(std::move(w));
  };

  std::vector<Item> frontier;
  for (const auto& v : S) {
    Item it;
    it.src = v;
    it.tgt = v;
    frontier.push_back(it);
    words.push_back(idempotent(v));
  }
  while (!frontier.empty()) {
    std::vector<Item> next;
    for (const auto& item : frontier) {
      if (policy.max_length && static_cast<int>(item.rev_letters.size()) >= *policy.max_length)
        continue;
      auto it = by_src.find(item.tgt);
      if (it == by_src.end()) continue;
      for (const Generator* g : it->second) {
        Item n = item;
        n.rev_letters.push_back(g->id);
        n.tgt = g->tgt;
        n.weight += g->weight;
        if (policy.max_weight && n.weight > *policy.max_weight) continue;
        keep(n);
        next.push_back(std::move(n));
        if (words.size() > hard_cap || next.size() > hard_cap)
          return R::failure("word enumeration exceeded the hard cap");
      }
    }
    frontier = std::move(next);
  }

  GradedComplex C;
  std::vector<std::pair<std::vector<int>, Word>> keyed;  // sort key, word
  std::vector<Word> kept;
  for (auto& w : words) {
    auto d = word_degree(A, w);
    if (!d) return R::failure("word with unknown letters");
    if (policy.degree_window) {
      int lo = policy.degree_window->first - 1, hi = policy.degree_window->second + 1;
      if (*d < lo || *d > hi) continue;
    }
    kept.push_back(std::move(w));
  }
  std::sort(kept.begin(), kept.end(), [&](const Word& a, const Word& b) {
    int da = *word_degree(A, a), db = *word_degree(A, b);
    if (da != db) return da < db;
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a < b;
  });
  for (auto& w : kept) {
    C.index[w] = C.basis.size();
    C.degrees.push_back(*word_degree(A, w));
    auto wt = word_weight(A, w);
    C.weights.push_back(wt ? *wt : Weight(0));
    C.basis.push_back(std::move(w));
  }

  C.boundary.resize(C.basis.size());
  C.column_tracked.assign(C.basis.size(), true);
  for (std::size_t i = 0; i < C.basis.size(); ++i) {
    const Word& w = C.basis[i];
    int d = C.degrees[i];
    if (policy.degree_window && d == policy.degree_window->second + 1) {
      // Guard degree on the top edge: the differential would land outside
      // the window and is intentionally not computed.
      C.column_tracked[i] = false;
      C.untracked_degrees.insert(d);
      continue;
    }
    WordDifferential dw = differential_of_word(A, w);
    if (!dw.untracked.empty()) {
      C.column_tracked[i] = false;
      C.escaped_degrees.insert(d);
      continue;
    }
    bool escaped = false;
    for (const auto& t : dw.sum) {
      auto it = C.index.find(t);
      if (it == C.index.end()) {
        // The image left the truncation.  A weight bound can never cause
        // this (the differential does not raise weight), so the escape is a
        // length/window artefact and the degree is marked unusable.
        auto wt = word_weight(A, t);
        if (policy.max_weight && wt && *wt > *policy.max_weight)
          return R::failure("differential raised weight past the bound on '" +
                            word_to_string(w) + "'");
        escaped = true;
        continue;
      }
      C.boundary[i].push_back(it->second);
    }
    if (escaped) {
      C.column_tracked[i] = false;
      C.escaped_degrees.insert(d);
      C.boundary[i].clear();
    } else {
      std::sort(C.boundary[i].begin(), C.boundary[i].end());
    }
  }
  return R::success(std::move(C));
}

namespace detail {

struct DegreeSlices {
  std::map<int, std::vector<std::size_t>> by_degree;
};

inline DegreeSlices slice_by_degree(const GradedComplex& C) {
  DegreeSlices s;
  for (std::size_t i = 0; i < C.basis.size(); ++i) s.by_degree[C.degrees[i]].push_back(i);
  return s;
}

// Columns of the boundary restricted to source degree d, expressed in the
// coordinates of degree d+1.  Returns nullopt when any column is untracked.
inline std::optional<std::vector<f2::Vec>> degree_block(const GradedComplex& C,
                                                        const DegreeSlices& s, int d) {
  auto src = s.by_degree.find(d);
  if (src == s.by_degree.end()) return std::vector<f2::Vec>{};
  auto tgt = s.by_degree.find(d + 1);
  std::map<std::size_t, std::size_t> tgt_pos;
  std::size_t rows = 0;
  if (tgt != s.by_degree.end()) {
    rows = tgt->second.size();
    for (std::size_t k = 0; k < tgt->second.size(); ++k) tgt_pos[tgt->second[k]] = k;
  }
  std::vector<f2::Vec> cols;
  for (auto i : src->second) {
    if (!C.column_tracked[i]) return std::nullopt;
    f2::Vec v(rows);
    for (auto j : C.boundary[i]) v.set(tgt_pos.at(j));
    cols.push_back(std::move(v));
  }
  return cols;
}

}  // namespace detail

struct CohomologyReport {
  std::map<int, std::size_t> dims;
  std::map<int, std::string> skipped;  // degree -> reason
};

// dim H^d = dim C^d - rank d_d - rank d_{d-1} for each degree in [lo, hi].
// Degrees whose answer would depend on an escaped or untracked column are
// reported as skipped with the reason, never silently approximated.
inline Result<CohomologyReport> cohomology_dims(const GradedComplex& C, int lo, int hi) {
  using R = Result<CohomologyReport>;
  if (lo > hi) return R::failure("empty degree range");
  auto slices = detail::slice_by_degree(C);
  CohomologyReport rep;
  for (int d = lo; d <= hi; ++d) {
    if (C.escaped_degrees.count(d) || C.escaped_degrees.count(d - 1)) {
      rep.skipped[d] = "differential escaped the truncation near degree " + std::to_string(d);
      continue;
    }
    auto block_d = detail::degree_block(C, slices, d);
    auto block_dm1 = detail::degree_block(C, slices, d - 1);
    if (!block_d || !block_dm1) {
      rep.skipped[d] = "untracked column near degree " + std::to_string(d);
      continue;
    }
    std::size_t dim_d =
        slices.by_degree.count(d) ? slices.by_degree.at(d).size() : 0;
    rep.dims[d] = dim_d - f2::rank(*block_d) - f2::rank(*block_dm1);
  }
  return R::success(std::move(rep));
}

// Deterministic representatives of H^d: kernel vectors of the degree-d block
// reduced against the image of the degree-(d-1) block, with pivots in the
// fixed basis order.
inline Result<std::vector<FormalSum>> representatives(const GradedComplex& C, int d) {
  using RS = Result<std::vector<FormalSum>>;
  if (C.escaped_degrees.count(d) || C.escaped_degrees.count(d - 1))
    return RS::failure("differential escaped the truncation near degree " + std::to_string(d));
  auto slices = detail::slice_by_degree(C);
  auto block_d = detail::degree_block(C, slices, d);
  auto block_dm1 = detail::degree_block(C, slices, d - 1);
  if (!block_d || !block_dm1)
    return RS::failure("untracked column near degree " + std::to_string(d));
  f2::Reducer image;
  for (const auto& c : *block_dm1) image.insert(c);
  f2::Reducer picked;
  std::vector<FormalSum> reps;
  if (!slices.by_degree.count(d)) return RS::success(std::move(reps));
  const auto& idxs = slices.by_degree.at(d);
  for (const auto& k : f2::kernel(*block_d)) {
    f2::Vec r = image.reduce(k);
    r = picked.reduce(r);
    if (r.none()) continue;
    picked.insert(r);
    FormalSum s;
    for (std::size_t j = r.find_first(); j != f2::Vec::npos; j = r.find_next(j))
      s.insert(C.basis[idxs[j]]);
    reps.push_back(std::move(s));
  }
  return RS::success(std::move(reps));
}

}  // namespace cedga
