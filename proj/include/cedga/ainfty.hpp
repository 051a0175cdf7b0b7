#pragma once

#include "cedga/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cedga {

// ---- models ------------------------------------------------------------------

struct ModelElement {
  std::string id;
  int degree = 0;
  std::string src, tgt;
};

// Sum of model element ids over Z2 (symmetric difference).
using ModelSum = std::set<std::string>;

inline void model_add(ModelSum& s, const std::string& id) {
  auto it = s.find(id);
  if (it == s.end()) {
    s.insert(id);
  } else {
    s.erase(it);
  }
}

inline std::string unit_id(const std::string& vertex) { return "e[" + vertex + "]"; }

inline std::optional<std::string> unit_vertex(const std::string& id) {
  if (id.size() >= 3 && id.rfind("e[", 0) == 0 && id.back() == ']') {
    return id.substr(2, id.size() - 3);
  }
  return std::nullopt;
}

// A finite-basis algebra with operations mu_k of degree 2 - k.  The units
// eps_v are implicit: they never appear inside stored tensors, multiply
// strictly (mu_2(eps, x) = mu_2(x, eps) = x) and annihilate every other
// operation.  Tensors are stored with index 0 holding the LAST-applied factor,
// matching the letter order of words.
struct AInfinityAlgebra {
  std::vector<std::string> vertices;
  std::vector<ModelElement> basis;  // non-unit elements
  int arity_bound = 6;
  std::map<int, std::map<std::vector<std::string>, ModelSum>> mu;

  const ModelElement* find(const std::string& id) const {
    for (const auto& e : basis)
      if (e.id == id) return &e;
    return nullptr;
  }
  bool has_vertex(const std::string& v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }
  // Endpoints of any id, units included.
  std::optional<std::pair<std::string, std::string>> endpoints(const std::string& id) const {
    if (auto v = unit_vertex(id)) {
      if (!has_vertex(*v)) return std::nullopt;
      return std::make_pair(*v, *v);
    }
    const auto* e = find(id);
    if (!e) return std::nullopt;
    return std::make_pair(e->src, e->tgt);
  }
  std::optional<int> degree_of(const std::string& id) const {
    if (unit_vertex(id)) return 0;
    const auto* e = find(id);
    if (!e) return std::nullopt;
    return e->degree;
  }
};

// Applies mu_k, with the strict-unit rules folded in.  Inputs that fail to
// compose endpoint-wise give 0.
inline Result<ModelSum> evaluate_mu(const AInfinityAlgebra& A, int k,
                                    const std::vector<std::string>& tensor) {
  using R = Result<ModelSum>;
  if (static_cast<int>(tensor.size()) != k) return R::failure("tensor size differs from k");
  std::vector<std::pair<std::string, std::string>> ends;
  for (const auto& id : tensor) {
    auto e = A.endpoints(id);
    if (!e) return R::failure("unknown element '" + id + "'");
    ends.push_back(*e);
  }
  for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
    if (ends[i].first != ends[i + 1].second) return R::success(ModelSum{});
  }
  int units = 0;
  for (const auto& id : tensor)
    if (unit_vertex(id)) ++units;
  if (units > 0) {
    if (k == 2) {
      if (unit_vertex(tensor[0]) && unit_vertex(tensor[1]))
        return R::success(ModelSum{tensor[0]});
      if (unit_vertex(tensor[0])) return R::success(ModelSum{tensor[1]});
      return R::success(ModelSum{tensor[0]});
    }
    return R::success(ModelSum{});
  }
  auto kit = A.mu.find(k);
  if (kit == A.mu.end()) return R::success(ModelSum{});
  auto it = kit->second.find(tensor);
  if (it == kit->second.end()) return R::success(ModelSum{});
  return R::success(it->second);
}

// ---- relation checking ---------------------------------------------------------

struct RelationReport {
  bool ok = true;
  std::size_t tensors_checked = 0;
  std::vector<std::string> failures;
};

namespace detail {
inline std::string render_tensor(const std::vector<std::string>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += " (x) ";
    s += t[i];
  }
  return s;
}
}  // namespace detail

// Verifies structural consistency (composability, degree 2 - k, endpoints of
// the outputs) and the quadratic relations
//   sum_{i,s} mu(id^r (x) mu_s (x) id^t) = 0
// over every composable basis tensor up to the arity bound.
inline RelationReport check_relations(const AInfinityAlgebra& A, int arity_bound) {
  RelationReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };

  // Structural pass over the stored tables.
  for (const auto& [k, table] : A.mu) {
    if (k < 1) fail("operation table with arity " + std::to_string(k));
    for (const auto& [tensor, value] : table) {
      if (static_cast<int>(tensor.size()) != k) {
        fail("tensor arity mismatch at mu_" + std::to_string(k));
        continue;
      }
      bool bad = false;
      int deg_in = 0;
      for (const auto& id : tensor) {
        if (unit_vertex(id)) {
          fail("stored tensor contains a unit: " + detail::render_tensor(tensor));
          bad = true;
          break;
        }
        auto d = A.degree_of(id);
        if (!d) {
          fail("unknown element '" + id + "' in a stored tensor");
          bad = true;
          break;
        }
        deg_in += *d;
      }
      if (bad) continue;
      auto src = A.endpoints(tensor.back());
      auto tgt = A.endpoints(tensor.front());
      for (const auto& out : value) {
        auto d = A.degree_of(out);
        auto e = A.endpoints(out);
        if (!d || !e) {
          fail("unknown output '" + out + "' at mu_" + std::to_string(k) + "(" +
               detail::render_tensor(tensor) + ")");
          continue;
        }
        if (*d != deg_in + 2 - k) {
          fail("degree of mu_" + std::to_string(k) + "(" + detail::render_tensor(tensor) +
               ") is off: output '" + out + "'");
        }
        if (e->first != src->first || e->second != tgt->second) {
          fail("endpoints of mu_" + std::to_string(k) + "(" + detail::render_tensor(tensor) +
               ") are off: output '" + out + "'");
        }
      }
    }
  }

  // Quadratic relations on all composable non-unit tensors.
  std::vector<std::string> chain;  // first-applied order
  std::function<void()> extend = [&]() {
    if (!chain.empty()) {
      std::vector<std::string> tensor(chain.rbegin(), chain.rend());
      int n = static_cast<int>(tensor.size());
      ModelSum total;
      bool eval_ok = true;
      for (int s = 1; s <= n && eval_ok; ++s) {
        for (int i = 0; i + s <= n && eval_ok; ++i) {
          std::vector<std::string> block(tensor.begin() + i, tensor.begin() + i + s);
          auto inner = evaluate_mu(A, s, block);
          if (!inner.ok()) {
            eval_ok = false;
            break;
          }
          for (const auto& o : *inner) {
            std::vector<std::string> outer(tensor.begin(), tensor.begin() + i);
            outer.push_back(o);
            outer.insert(outer.end(), tensor.begin() + i + s, tensor.end());
            auto res = evaluate_mu(A, n - s + 1, outer);
            if (!res.ok()) {
              eval_ok = false;
              break;
            }
            for (const auto& r : *res) model_add(total, r);
          }
        }
      }
      rep.tensors_checked += 1;
      if (!eval_ok) {
        fail("evaluation error inside relation at (" + detail::render_tensor(tensor) + ")");
      } else if (!total.empty()) {
        std::string rem;
        for (const auto& r : total) rem += (rem.empty() ? "" : " + ") + r;
        fail("relation fails at (" + detail::render_tensor(tensor) + "): remainder " + rem);
      }
    }
    if (static_cast<int>(chain.size()) >= arity_bound) return;
    for (const auto& e : A.basis) {
      if (!chain.empty()) {
        const auto* prev = A.find(chain.back());
        if (e.src != prev->tgt) continue;
      }
      chain.push_back(e.id);
      extend();
      chain.pop_back();
    }
  };
  extend();
  return rep;
}

// ---- comparison ----------------------------------------------------------------

struct ModelComparison {
  bool equal = false;
  std::string first_discrepancy;
};

// Compares the operation tables of two models under a supplied basis
// bijection (and optional vertex renaming).  Tables are compared as total
// functions: entries missing on one side count as zero.
inline Result<ModelComparison> compare_models(
    const AInfinityAlgebra& A, const AInfinityAlgebra& B,
    const std::map<std::string, std::string>& correspondence, int arity_bound,
    const std::map<std::string, std::string>& vertex_map = {}) {
  using R = Result<ModelComparison>;
  auto map_vertex = [&](const std::string& v) {
    auto it = vertex_map.find(v);
    return it == vertex_map.end() ? v : it->second;
  };
  // Bijection and invariance checks.
  if (correspondence.size() != A.basis.size())
    return R::failure("correspondence does not cover the left basis");
  std::set<std::string> image;
  for (const auto& e : A.basis) {
    auto it = correspondence.find(e.id);
    if (it == correspondence.end())
      return R::failure("correspondence misses '" + e.id + "'");
    const auto* f = B.find(it->second);
    if (!f) return R::failure("correspondence target '" + it->second + "' is not in the right basis");
    if (!image.insert(f->id).second)
      return R::failure("correspondence is not injective at '" + f->id + "'");
    if (f->degree != e.degree)
      return R::failure("correspondence changes the degree of '" + e.id + "'");
    if (f->src != map_vertex(e.src) || f->tgt != map_vertex(e.tgt))
      return R::failure("correspondence changes the endpoints of '" + e.id + "'");
  }
  if (image.size() != B.basis.size())
    return R::failure("correspondence does not cover the right basis");

  auto map_id = [&](const std::string& id) -> std::optional<std::string> {
    if (auto v = unit_vertex(id)) return unit_id(map_vertex(*v));
    auto it = correspondence.find(id);
    if (it == correspondence.end()) return std::nullopt;
    return it->second;
  };

  ModelComparison out;
  out.equal = true;
  for (int k = 1; k <= arity_bound && out.equal; ++k) {
    // Collect tensors present on either side (expressed on the left basis).
    std::set<std::vector<std::string>> keys;
    if (auto it = A.mu.find(k); it != A.mu.end()) {
      for (const auto& [t, v] : it->second) {
        if (!v.empty()) keys.insert(t);
      }
    }
    std::map<std::string, std::string> back;  // right id -> left id
    for (const auto& [a, b] : correspondence) back[b] = a;
    if (auto it = B.mu.find(k); it != B.mu.end()) {
      for (const auto& [t, v] : it->second) {
        if (v.empty()) continue;
        std::vector<std::string> left;
        bool known = true;
        for (const auto& id : t) {
          auto bit = back.find(id);
          if (bit == back.end()) {
            known = false;
            break;
          }
          left.push_back(bit->second);
        }
        if (!known) {
          out.equal = false;
          out.first_discrepancy =
              "mu_" + std::to_string(k) + " on the right uses an unmatched tensor (" +
              detail::render_tensor(t) + ")";
          break;
        }
        keys.insert(left);
      }
    }
    for (const auto& t : keys) {
      auto va = evaluate_mu(A, k, t);
      std::vector<std::string> tb;
      for (const auto& id : t) {
        auto m = map_id(id);
        if (!m) return R::failure("tensor entry '" + id + "' has no counterpart");
        tb.push_back(*m);
      }
      auto vb = evaluate_mu(B, k, tb);
      if (!va.ok() || !vb.ok()) return R::failure("evaluation error during comparison");
      ModelSum mapped;
      bool unmapped_output = false;
      std::string unmapped_id;
      for (const auto& o : *va) {
        auto m = map_id(o);
        if (!m) {
          unmapped_output = true;
          unmapped_id = o;
          break;
        }
        model_add(mapped, *m);
      }
      if (unmapped_output) {
        out.equal = false;
        out.first_discrepancy = "mu_" + std::to_string(k) + "(" + detail::render_tensor(t) +
                                "): output '" + unmapped_id + "' has no counterpart";
        break;
      }
      if (mapped != *vb) {
        out.equal = false;
        std::string lhs, rhs;
        for (const auto& o : mapped) lhs += (lhs.empty() ? "" : " + ") + o;
        for (const auto& o : *vb) rhs += (rhs.empty() ? "" : " + ") + o;
        out.first_discrepancy = "mu_" + std::to_string(k) + "(" + detail::render_tensor(t) +
                                "): " + (lhs.empty() ? "0" : lhs) + " vs " +
                                (rhs.empty() ? "0" : rhs);
        break;
      }
    }
  }
  return R::success(std::move(out));
}

// ---- contraction ----------------------------------------------------------------

enum class PivotOrder { ByWord, ByWordReversed };

// Deterministic strong deformation retraction of a finite complex onto its
// cohomology: proj/incl/h with dh + hd = id - incl proj, h^2 = 0,
// h incl = 0, proj h = 0 (arranged by the paired-basis construction).
struct Contraction {
  std::size_t n = 0;
  std::vector<f2::Vec> d_cols;     // differential, original indexing
  std::vector<f2::Vec> h_cols;     // homotopy
  std::vector<f2::Vec> proj_cols;  // C -> H, coordinates over the class list
  std::vector<f2::Vec> incl_cols;  // one column per class, over C

  struct ClassInfo {
    std::size_t pivot = 0;  // complex basis index naming the class
    std::string id;
    int degree = 0;
    std::string src, tgt;
    bool unit_word = false;  // pivot is an idempotent word
    bool pure_unit = false;  // representative is exactly that idempotent
  };
  std::vector<ClassInfo> classes;
};

inline Result<Contraction> contraction_from_complex(const GradedComplex& C,
                                                    PivotOrder order = PivotOrder::ByWord) {
  using R = Result<Contraction>;
  if (!C.escaped_degrees.empty() || !C.untracked_degrees.empty())
    return R::failure("the truncation window is not closed under the differential");
  const std::size_t n = C.basis.size();

  // Degree-ascending order with lighter (then shorter) words first, so that
  // pivots fall on the heaviest word in each image and surviving classes are
  // represented by the lightest available cycles.  The two orders differ only
  // in the final lexicographic tie, which the transferred structure should
  // not notice.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  const bool rev = order == PivotOrder::ByWordReversed;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (C.degrees[a] != C.degrees[b]) return C.degrees[a] < C.degrees[b];
    if (!C.weights.empty() && C.weights[a] != C.weights[b])
      return C.weights[a] < C.weights[b];
    if (C.basis[a].letters.size() != C.basis[b].letters.size())
      return C.basis[a].letters.size() < C.basis[b].letters.size();
    return rev ? C.basis[b] < C.basis[a] : C.basis[a] < C.basis[b];
  });
  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[perm[p]] = p;

  // The reduction pivots on the LOWEST set bit while sweeping columns left to
  // right, so feed the rows reversed: then a pivot is the latest position in
  // the column's support, which is what makes pivot rows reduce to zero
  // columns themselves (the usual clearing property of a reduction of a
  // squared-zero matrix).
  std::vector<f2::Vec> D(n, f2::Vec(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (auto t : C.boundary[perm[p]]) D[p].set(n - 1 - pos[t]);
  }
  auto red = f2::reduce_columns(D);

  std::vector<long> row_partner(n, -1);  // position space
  for (std::size_t j = 0; j < n; ++j) {
    if (red.low[j]) {
      std::size_t i = n - 1 - *red.low[j];
      if (row_partner[i] != -1) return R::failure("internal: duplicate pivot row");
      row_partner[i] = static_cast<long>(j);
    }
  }
  std::vector<std::size_t> colp, unpaired;
  for (std::size_t j = 0; j < n; ++j) {
    bool cp = red.low[j].has_value();
    bool rp = row_partner[j] != -1;
    if (cp && rp) return R::failure("internal: pairing conflict");
    if (cp) {
      colp.push_back(j);
    } else if (!rp) {
      unpaired.push_back(j);
    }
  }

  auto col_to_orig = [&](const f2::Vec& v) {  // column-combination space
    f2::Vec out(n);
    for (auto p = v.find_first(); p != f2::Vec::npos; p = v.find_next(p)) out.set(perm[p]);
    return out;
  };
  auto row_to_orig = [&](const f2::Vec& v) {  // reversed row space
    f2::Vec out(n);
    for (auto p = v.find_first(); p != f2::Vec::npos; p = v.find_next(p))
      out.set(perm[n - 1 - p]);
    return out;
  };

  // New basis, expressed over the original indexing: killers v_j, their
  // boundaries d(v_j), then the cycle classes.
  std::vector<f2::Vec> T;
  T.reserve(n);
  for (auto j : colp) T.push_back(col_to_orig(red.V[j]));
  for (auto j : colp) T.push_back(row_to_orig(red.R[j]));
  for (auto u : unpaired) T.push_back(col_to_orig(red.V[u]));
  auto Tinv = f2::invert(T);
  if (!Tinv) return R::failure("internal: change of basis is singular");

  Contraction K;
  K.n = n;
  K.d_cols.assign(n, f2::Vec(n));
  for (std::size_t b = 0; b < n; ++b) {
    for (auto t : C.boundary[b]) K.d_cols[b].set(t);
  }

  const std::size_t np = colp.size();
  K.h_cols.assign(n, f2::Vec(n));
  K.proj_cols.assign(n, f2::Vec(unpaired.size()));
  for (std::size_t b = 0; b < n; ++b) {
    f2::Vec e(n);
    e.set(b);
    f2::Vec y = f2::apply(*Tinv, e, n);
    for (std::size_t i = 0; i < np; ++i) {
      if (y.test(np + i)) K.h_cols[b] ^= T[i];
    }
    for (std::size_t u = 0; u < unpaired.size(); ++u) {
      if (y.test(2 * np + u)) K.proj_cols[b].set(u);
    }
  }
  for (std::size_t u = 0; u < unpaired.size(); ++u) {
    K.incl_cols.push_back(T[2 * np + u]);
    Contraction::ClassInfo info;
    info.pivot = perm[unpaired[u]];
    const Word& w = C.basis[info.pivot];
    info.id = word_to_string(w);
    info.degree = C.degrees[info.pivot];
    info.src = w.src;
    info.tgt = w.tgt;
    info.unit_word = w.is_idempotent();
    info.pure_unit = info.unit_word && K.incl_cols.back().count() == 1;
    K.classes.push_back(std::move(info));
  }
  return R::success(std::move(K));
}

// Checks the retraction identities on every basis vector.
inline Result<bool> verify_contraction(const Contraction& K) {
  using R = Result<bool>;
  const std::size_t n = K.n;
  auto appK = [&](const std::vector<f2::Vec>& cols, const f2::Vec& x) {
    return f2::apply(cols, x, cols.empty() ? 0 : cols[0].size());
  };
  for (std::size_t b = 0; b < n; ++b) {
    f2::Vec e(n);
    e.set(b);
    f2::Vec lhs = appK(K.d_cols, K.h_cols[b]) ^ appK(K.h_cols, K.d_cols[b]);
    f2::Vec rhs = e ^ appK(K.incl_cols, K.proj_cols[b]);
    if (lhs != rhs) return R::failure("dh + hd != id - incl proj at basis " + std::to_string(b));
    if (appK(K.h_cols, K.h_cols[b]).any()) return R::failure("h^2 != 0 at " + std::to_string(b));
    if (K.proj_cols[b].size() && appK(K.proj_cols, K.h_cols[b]).any())
      return R::failure("proj h != 0 at " + std::to_string(b));
  }
  for (std::size_t u = 0; u < K.incl_cols.size(); ++u) {
    if (appK(K.h_cols, K.incl_cols[u]).any())
      return R::failure("h incl != 0 at class " + std::to_string(u));
    if (appK(K.d_cols, K.incl_cols[u]).any())
      return R::failure("incl image is not closed at class " + std::to_string(u));
    f2::Vec p = appK(K.proj_cols, K.incl_cols[u]);
    f2::Vec eu(K.incl_cols.size());
    eu.set(u);
    if (p != eu) return R::failure("proj incl != id at class " + std::to_string(u));
  }
  return R::success(true);
}

// ---- homotopy transfer -----------------------------------------------------------

struct TransferOptions {
  int arity_bound = 6;
  PivotOrder order = PivotOrder::ByWord;
  std::size_t hard_cap = 200000;  // complex dimension limit while enlarging
  int max_enlargements = 8;
  // When set, products that leave the truncation window are treated as zero
  // instead of triggering an enlargement: the result is the structure carried
  // by the window itself rather than a window-independent model.
  bool drop_out_of_window = false;
};

struct TransferResult {
  AInfinityAlgebra model;
  TruncationPolicy used_policy;
  std::size_t complex_dim = 0;
  int enlargements = 0;
  // The word complex and retraction data the model was read off from, kept so
  // callers can locate class representatives (e.g. to match bases between two
  // independent constructions).
  GradedComplex complex;
  Contraction contraction;
};

// Transfers the truncated word complex of the algebra onto its cohomology by
// summing over planar binary trees (homotopy on the inner edges, inclusion at
// the leaves, projection at the root).  The truncation is enlarged until it is
// closed under both the differential and the products the trees require.
inline Result<TransferResult> transfer(const QuiverDga& A, TruncationPolicy policy,
                                       TransferOptions opt = {}) {
  using R = Result<TransferResult>;
  if (!policy.max_length && !policy.max_weight)
    return R::failure("a length or weight bound is required");
  policy.degree_window.reset();
  TruncationPolicy initial = policy;

  std::set<std::string> S(A.vertices.begin(), A.vertices.end());
  for (int round = 0;; ++round) {
    if (round > opt.max_enlargements)
      return R::failure("truncation did not become multiplicatively closed within the cap");
    auto grown = [&]() {
      if (policy.max_weight) {
        *policy.max_weight += initial.max_weight ? *initial.max_weight : Weight(4);
      }
      if (policy.max_length) {
        *policy.max_length += initial.max_length ? std::max(1, *initial.max_length / 2) : 2;
      }
    };
    auto Cres = corner_subcomplex(A, S, policy, opt.hard_cap);
    if (!Cres.ok()) return R::failure(Cres.error);
    const GradedComplex& C = *Cres.value;
    if (!C.escaped_degrees.empty() || !C.untracked_degrees.empty()) {
      grown();
      continue;
    }
    auto Kres = contraction_from_complex(C, opt.order);
    if (!Kres.ok()) return R::failure(Kres.error);
    const Contraction& K = *Kres.value;

    // Units must appear as honest classes represented by their idempotents.
    std::map<std::string, std::size_t> class_index;
    for (std::size_t u = 0; u < K.classes.size(); ++u) class_index[K.classes[u].id] = u;
    for (const auto& v : A.vertices) {
      auto it = class_index.find(unit_id(v));
      if (it == class_index.end())
        return R::failure("the unit of '" + v + "' is not a cohomology class in this window");
      if (!K.classes[it->second].pure_unit)
        return R::failure("the unit class of '" + v + "' has a mixed representative");
    }

    const std::size_t n = C.basis.size();
    bool out_of_span = false;
    auto product = [&](const f2::Vec& later, const f2::Vec& earlier) {
      f2::Vec out(n);
      for (auto a = later.find_first(); a != f2::Vec::npos && !out_of_span;
           a = later.find_next(a)) {
        const Word& wa = C.basis[a];
        for (auto b = earlier.find_first(); b != f2::Vec::npos; b = earlier.find_next(b)) {
          const Word& wb = C.basis[b];
          if (wa.src != wb.tgt) continue;
          Word w;
          w.letters = wa.letters;
          w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
          w.src = wb.src;
          w.tgt = wa.tgt;
          auto it = C.index.find(w);
          if (it == C.index.end()) {
            if (opt.drop_out_of_window) continue;
            out_of_span = true;
            break;
          }
          out.flip(it->second);
        }
      }
      return out;
    };
    auto apply_h = [&](const f2::Vec& x) { return f2::apply(K.h_cols, x, n); };

    AInfinityAlgebra M;
    M.vertices = A.vertices;
    M.arity_bound = opt.arity_bound;
    std::vector<std::size_t> basis_classes;
    for (std::size_t u = 0; u < K.classes.size(); ++u) {
      const auto& ci = K.classes[u];
      if (ci.unit_word) continue;
      M.basis.push_back(ModelElement{ci.id, ci.degree, ci.src, ci.tgt});
      basis_classes.push_back(u);
    }

    // Composable input tensors over the non-unit classes.
    std::vector<std::size_t> chain;  // first-applied order
    std::function<void()> extend = [&]() {
      if (out_of_span) return;
      int k = static_cast<int>(chain.size());
      if (k >= 2) {
        // Interval DP over logical positions 1..k (1 = first applied).
        std::vector<std::vector<f2::Vec>> wrap(k + 1, std::vector<f2::Vec>(k + 1));
        std::vector<std::vector<f2::Vec>> raw(k + 1, std::vector<f2::Vec>(k + 1));
        for (int a = 1; a <= k; ++a) wrap[a][a] = K.incl_cols[basis_classes[chain[a - 1]]];
        for (int len = 2; len <= k && !out_of_span; ++len) {
          for (int a = 1; a + len - 1 <= k && !out_of_span; ++a) {
            int b = a + len - 1;
            f2::Vec acc(n);
            for (int m = a; m < b; ++m) {
              acc ^= product(wrap[m + 1][b], wrap[a][m]);
              if (out_of_span) break;
            }
            raw[a][b] = acc;
            if (len < k) wrap[a][b] = apply_h(acc);
          }
        }
        if (!out_of_span) {
          f2::Vec res = f2::apply(K.proj_cols, raw[1][k], K.classes.size());
          if (res.any()) {
            std::vector<std::string> tensor;
            for (auto it = chain.rbegin(); it != chain.rend(); ++it)
              tensor.push_back(K.classes[basis_classes[*it]].id);
            ModelSum val;
            for (auto u = res.find_first(); u != f2::Vec::npos; u = res.find_next(u))
              model_add(val, K.classes[u].id);
            M.mu[k][tensor] = std::move(val);
          }
        }
      }
      if (out_of_span || k >= opt.arity_bound) return;
      for (std::size_t i = 0; i < basis_classes.size(); ++i) {
        if (!chain.empty()) {
          const auto& prev = K.classes[basis_classes[chain.back()]];
          const auto& nxt = K.classes[basis_classes[i]];
          if (nxt.src != prev.tgt) continue;
        }
        chain.push_back(i);
        extend();
        chain.pop_back();
        if (out_of_span) return;
      }
    };
    extend();

    if (out_of_span) {
      grown();
      continue;
    }
    TransferResult out;
    out.model = std::move(M);
    out.used_policy = policy;
    out.complex_dim = n;
    out.enlargements = round;
    out.complex = std::move(*Cres.value);
    out.contraction = std::move(*Kres.value);
    return R::success(std::move(out));
  }
}

// Dimension census and nonzero-operation pattern, for cross-order stability
// checks.
inline std::map<int, std::size_t> model_dims(const AInfinityAlgebra& A) {
  std::map<int, std::size_t> out;
  for (const auto& e : A.basis) out[e.degree]++;
  return out;
}

inline std::set<std::pair<int, std::vector<std::string>>> nonzero_pattern(
    const AInfinityAlgebra& A) {
  std::set<std::pair<int, std::vector<std::string>>> out;
  for (const auto& [k, table] : A.mu) {
    for (const auto& [t, v] : table) {
      if (!v.empty()) out.insert({k, t});
    }
  }
  return out;
}

}  // namespace cedga
