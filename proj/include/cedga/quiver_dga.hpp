#pragma once

#include "cedga/core.hpp"
#include "cedga/linalg2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace cedga {

// A composable word of generators.  Letters are stored in composition order:
// letters.front() is applied last, letters.back() first.  An empty word is
// the idempotent at the vertex src (== tgt).
struct Word {
  std::vector<std::string> letters;
  std::string src;
  std::string tgt;

  bool is_idempotent() const { return letters.empty(); }

  friend bool operator<(const Word& a, const Word& b) {
    return std::tie(a.letters, a.src, a.tgt) < std::tie(b.letters, b.src, b.tgt);
  }
  friend bool operator==(const Word& a, const Word& b) {
    return a.letters == b.letters && a.src == b.src && a.tgt == b.tgt;
  }
};

inline Word idempotent(const std::string& v) { return Word{{}, v, v}; }

// Mod-2 formal sum of words: a word is present iff its coefficient is 1.
using FormalSum = std::set<Word>;

inline void add_term(FormalSum& s, const Word& w) {
  auto it = s.find(w);
  if (it == s.end())
    s.insert(w);
  else
    s.erase(it);
}

inline FormalSum sum_add(FormalSum a, const FormalSum& b) {
  for (const auto& w : b) add_term(a, w);
  return a;
}

// a after b: defined only when a.src == b.tgt.
inline std::optional<Word> compose(const Word& a, const Word& b) {
  if (a.src != b.tgt) return std::nullopt;
  Word r;
  r.letters = a.letters;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  r.src = b.src;
  r.tgt = a.tgt;
  return r;
}

struct Generator {
  std::string id;
  std::string src;  // arrow runs src -> tgt
  std::string tgt;
  int degree = 0;
  Weight weight = Weight(1);
};

// A differential graded algebra presented on a quiver: free product of the
// vertex idempotents and the generator arrows, with a degree +1 differential
// stored per generator.  A generator without a stored differential is
// "untracked": it exists (e.g. beyond a truncation bound) but its
// differential was not computed.
struct QuiverDga {
  std::vector<std::string> vertices;
  std::vector<Generator> generators;
  std::map<std::string, FormalSum> differential;
  std::map<std::string, std::size_t> index;

  const Generator* find(const std::string& id) const {
    auto it = index.find(id);
    if (it == index.end()) return nullptr;
    return &generators[it->second];
  }

  bool has_vertex(const std::string& v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }

  void add_generator(Generator g) {
    index[g.id] = generators.size();
    generators.push_back(std::move(g));
  }

  void rebuild_index() {
    index.clear();
    for (std::size_t i = 0; i < generators.size(); ++i) index[generators[i].id] = i;
  }
};

// Builds a word from letters given in composition order, validating
// generator existence and composability.
inline Result<Word> make_word(const QuiverDga& A,
                              const std::vector<std::string>& letters,
                              const std::string& vertex_if_empty = "") {
  if (letters.empty()) {
    if (!A.has_vertex(vertex_if_empty))
      return Result<Word>::failure("idempotent word needs an existing vertex, got '" +
                                   vertex_if_empty + "'");
    return Result<Word>::success(idempotent(vertex_if_empty));
  }
  Word w;
  w.letters = letters;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    const Generator* a = A.find(letters[i]);
    const Generator* b = A.find(letters[i + 1]);
    if (!a) return Result<Word>::failure("unknown generator '" + letters[i] + "'");
    if (!b) return Result<Word>::failure("unknown generator '" + letters[i + 1] + "'");
    if (a->src != b->tgt)
      return Result<Word>::failure("letters '" + letters[i] + "' and '" + letters[i + 1] +
                                   "' do not compose: '" + letters[i] + "' starts at " +
                                   a->src + " but '" + letters[i + 1] + "' ends at " + b->tgt);
  }
  const Generator* first = A.find(letters.back());
  const Generator* last = A.find(letters.front());
  if (!first) return Result<Word>::failure("unknown generator '" + letters.back() + "'");
  if (!last) return Result<Word>::failure("unknown generator '" + letters.front() + "'");
  w.src = first->src;
  w.tgt = last->tgt;
  return Result<Word>::success(w);
}

inline std::optional<int> word_degree(const QuiverDga& A, const Word& w) {
  int d = 0;
  for (const auto& l : w.letters) {
    const Generator* g = A.find(l);
    if (!g) return std::nullopt;
    d += g->degree;
  }
  return d;
}

inline std::optional<Weight> word_weight(const QuiverDga& A, const Word& w) {
  Weight s(0);
  for (const auto& l : w.letters) {
    const Generator* g = A.find(l);
    if (!g) return std::nullopt;
    s += g->weight;
  }
  return s;
}

inline std::string word_to_string(const Word& w) {
  if (w.is_idempotent()) return "e[" + w.src + "]";
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += " ";
    s += w.letters[i];
  }
  return s;
}

inline std::string sum_to_string(const FormalSum& s) {
  if (s.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& w : s) {
    if (!first) out += " + ";
    out += word_to_string(w);
    first = false;
  }
  return out;
}

// Differential extended to a word by the graded Leibniz rule (all signs are
// trivial over the two-element field): splice the differential of each letter
// into its slot.  Letters whose differential is untracked are reported.
struct WordDifferential {
  FormalSum sum;
  std::vector<std::string> untracked;
};

inline WordDifferential differential_of_word(const QuiverDga& A, const Word& w) {
  WordDifferential out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    auto it = A.differential.find(w.letters[i]);
    if (it == A.differential.end()) {
      out.untracked.push_back(w.letters[i]);
      continue;
    }
    for (const auto& t : it->second) {
      Word spliced;
      spliced.letters.reserve(w.letters.size() - 1 + t.letters.size());
      spliced.letters.insert(spliced.letters.end(), w.letters.begin(),
                             w.letters.begin() + static_cast<long>(i));
      spliced.letters.insert(spliced.letters.end(), t.letters.begin(), t.letters.end());
      spliced.letters.insert(spliced.letters.end(),
                             w.letters.begin() + static_cast<long>(i) + 1, w.letters.end());
      spliced.src = w.src;
      spliced.tgt = w.tgt;
      add_term(out.sum, spliced);
    }
  }
  return out;
}

// Structural validation: endpoints exist, differential terms compose with
// matching endpoints, degree increases by exactly one, and weight never
// increases (strictly decreasing terms are the weight-lowering part).
inline Result<bool> validate_dga(const QuiverDga& A) {
  using R = Result<bool>;
  std::set<std::string> vset(A.vertices.begin(), A.vertices.end());
  if (vset.size() != A.vertices.size()) return R::failure("duplicate vertex id");
  std::set<std::string> gset;
  for (const auto& g : A.generators) {
    if (!gset.insert(g.id).second) return R::failure("duplicate generator id '" + g.id + "'");
    if (!vset.count(g.src) || !vset.count(g.tgt))
      return R::failure("generator '" + g.id + "' references a missing vertex");
    if (g.weight < Weight(0))
      return R::failure("generator '" + g.id + "' has negative weight");
  }
  for (const auto& [id, sum] : A.differential) {
    const Generator* g = A.find(id);
    if (!g) return R::failure("differential stored for unknown generator '" + id + "'");
    for (const auto& w : sum) {
      if (w.src != g->src || w.tgt != g->tgt)
        return R::failure("differential term of '" + id + "' has endpoints (" + w.src + " -> " +
                          w.tgt + ") instead of (" + g->src + " -> " + g->tgt + ")");
      for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
        const Generator* a = A.find(w.letters[i]);
        const Generator* b = A.find(w.letters[i + 1]);
        if (!a || !b)
          return R::failure("differential term of '" + id + "' uses an unknown generator");
        if (a->src != b->tgt)
          return R::failure("differential term of '" + id + "' is not composable at '" +
                            w.letters[i] + "' '" + w.letters[i + 1] + "'");
      }
      if (!w.letters.empty()) {
        const Generator* first = A.find(w.letters.back());
        const Generator* last = A.find(w.letters.front());
        if (!first || !last)
          return R::failure("differential term of '" + id + "' uses an unknown generator");
        if (first->src != g->src || last->tgt != g->tgt)
          return R::failure("differential term of '" + id + "' has mismatched endpoints");
      }
      auto d = word_degree(A, w);
      if (!d) return R::failure("differential term of '" + id + "' has unknown letters");
      if (*d != g->degree + 1)
        return R::failure("differential term '" + word_to_string(w) + "' of '" + id +
                          "' has degree " + std::to_string(*d) + ", expected " +
                          std::to_string(g->degree + 1));
      auto wt = word_weight(A, w);
      if (!wt) return R::failure("differential term of '" + id + "' has unknown letters");
      if (*wt > g->weight)
        return R::failure("differential term '" + word_to_string(w) + "' of '" + id +
                          "' has weight " + weight_to_string(*wt) + " > " +
                          weight_to_string(g->weight));
    }
  }
  return R::success(true);
}

// Checks that the square of the differential vanishes on every tracked
// generator.  A letter without a stored differential inside some
// differential term makes the check impossible and is reported as an error
// (never silently skipped).
inline Result<bool> check_d_squared(const QuiverDga& A) {
  using R = Result<bool>;
  for (const auto& [id, sum] : A.differential) {
    FormalSum total;
    for (const auto& w : sum) {
      WordDifferential dw = differential_of_word(A, w);
      if (!dw.untracked.empty())
        return R::failure("d^2 check blocked on '" + id + "': term '" + word_to_string(w) +
                          "' contains '" + dw.untracked.front() +
                          "' whose differential is not stored");
      total = sum_add(std::move(total), dw.sum);
    }
    if (!total.empty())
      return R::failure("d^2 != 0 on '" + id + "': residue " + sum_to_string(total));
  }
  return R::success(true);
}

// The weight-preserving part of the differential of a generator.
inline FormalSum weight_preserving_part(const QuiverDga& A, const std::string& id) {
  FormalSum out;
  const Generator* g = A.find(id);
  auto it = A.differential.find(id);
  if (!g || it == A.differential.end()) return out;
  for (const auto& w : it->second) {
    auto wt = word_weight(A, w);
    if (wt && *wt == g->weight) out.insert(w);
  }
  return out;
}

// The strictly weight-lowering part.
inline FormalSum weight_lowering_part(const QuiverDga& A, const std::string& id) {
  FormalSum out;
  const Generator* g = A.find(id);
  auto it = A.differential.find(id);
  if (!g || it == A.differential.end()) return out;
  for (const auto& w : it->second) {
    auto wt = word_weight(A, w);
    if (wt && *wt < g->weight) out.insert(w);
  }
  return out;
}

// Removes a generator a with src == tgt == v and differential exactly the
// idempotent at v, together with the vertex v and everything touching it.
// Preconditions are checked and violations reported with a witness.
inline Result<QuiverDga> remove_exact_generator(const QuiverDga& A, const std::string& a,
                                                const std::string& v) {
  using R = Result<QuiverDga>;
  const Generator* g = A.find(a);
  if (!g) return R::failure("no generator '" + a + "'");
  if (!A.has_vertex(v)) return R::failure("no vertex '" + v + "'");
  if (g->src != v || g->tgt != v)
    return R::failure("generator '" + a + "' runs " + g->src + " -> " + g->tgt +
                      ", not a loop at '" + v + "'");
  auto it = A.differential.find(a);
  if (it == A.differential.end())
    return R::failure("generator '" + a + "' has no stored differential");
  FormalSum expected{idempotent(v)};
  if (it->second != expected)
    return R::failure("differential of '" + a + "' is " + sum_to_string(it->second) +
                      ", expected exactly e[" + v + "]");
  for (const auto& [id, sum] : A.differential) {
    if (id == a) continue;
    for (const auto& w : sum) {
      for (const auto& l : w.letters) {
        if (l == a)
          return R::failure("generator '" + a + "' appears in the differential of '" + id +
                            "' (term '" + word_to_string(w) + "')");
      }
    }
  }

  std::set<std::string> removed_gens;
  for (const auto& gen : A.generators) {
    if (gen.src == v || gen.tgt == v) removed_gens.insert(gen.id);
  }

  QuiverDga B;
  for (const auto& vert : A.vertices) {
    if (vert != v) B.vertices.push_back(vert);
  }
  for (const auto& gen : A.generators) {
    if (!removed_gens.count(gen.id)) B.add_generator(gen);
  }
  for (const auto& [id, sum] : A.differential) {
    if (removed_gens.count(id)) continue;
    FormalSum ns;
    for (const auto& w : sum) {
      bool drop = false;
      for (const auto& l : w.letters) {
        if (removed_gens.count(l)) {
          drop = true;
          break;
        }
      }
      if (!drop) ns.insert(w);
    }
    B.differential[id] = std::move(ns);
  }
  return R::success(std::move(B));
}

// Disjoint union.  Ids of the second factor colliding with the first get
// apostrophes appended until fresh.
inline QuiverDga direct_product(const QuiverDga& A, const QuiverDga& B) {
  QuiverDga C = A;
  std::set<std::string> vnames(A.vertices.begin(), A.vertices.end());
  std::set<std::string> gnames;
  for (const auto& g : A.generators) gnames.insert(g.id);

  std::map<std::string, std::string> vmap, gmap;
  for (const auto& v : B.vertices) {
    std::string nv = v;
    while (vnames.count(nv)) nv += "'";
    vnames.insert(nv);
    vmap[v] = nv;
    C.vertices.push_back(nv);
  }
  for (const auto& g : B.generators) {
    std::string ng = g.id;
    while (gnames.count(ng)) ng += "'";
    gnames.insert(ng);
    gmap[g.id] = ng;
    Generator h = g;
    h.id = ng;
    h.src = vmap[g.src];
    h.tgt = vmap[g.tgt];
    C.add_generator(std::move(h));
  }
  for (const auto& [id, sum] : B.differential) {
    FormalSum ns;
    for (const auto& w : sum) {
      Word nw;
      nw.src = vmap[w.src];
      nw.tgt = vmap[w.tgt];
      for (const auto& l : w.letters) nw.letters.push_back(gmap[l]);
      ns.insert(nw);
    }
    C.differential[gmap[id]] = std::move(ns);
  }
  return C;
}

namespace detail {

// Enumerates all composable words of exactly the given length, any endpoints.
inline std::vector<Word> words_of_length(const QuiverDga& A, int len, std::size_t hard_cap,
                                         bool* overflow) {
  std::vector<Word> out;
  if (len == 0) {
    for (const auto& v : A.vertices) out.push_back(idempotent(v));
    return out;
  }
  // by_src[v]: generators with src == v, used to extend a path forward
  // (appending the next letter applied after the current word).
  std::map<std::string, std::vector<const Generator*>> by_src;
  for (const auto& g : A.generators) by_src[g.src].push_back(&g);
  // Build words letter by letter from the first-applied end.
  struct Item {
    std::vector<std::string> rev_letters;  // first-applied first
    std::string src, tgt;
  };
  std::vector<Item> frontier;
  for (const auto& g : A.generators)
    frontier.push_back(Item{{g.id}, g.src, g.tgt});
  for (int l = 1; l < len; ++l) {
    std::vector<Item> next;
    for (const auto& item : frontier) {
      auto it = by_src.find(item.tgt);
      if (it == by_src.end()) continue;
      for (const Generator* g : it->second) {
        Item n = item;
        n.rev_letters.push_back(g->id);
        n.tgt = g->tgt;
        next.push_back(std::move(n));
        if (next.size() > hard_cap) {
          if (overflow) *overflow = true;
          return out;
        }
      }
    }
    frontier = std::move(next);
  }
  for (const auto& item : frontier) {
    Word w;
    w.letters.assign(item.rev_letters.rbegin(), item.rev_letters.rend());
    w.src = item.src;
    w.tgt = item.tgt;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace detail

// Dimension, length by length, of the zeroth Hochschild homology of the
// underlying algebra (differential must be identically zero): the quotient of
// the word span by commutators.  For each word w = u v with both parts
// nonempty, the commutator relation contributes w + vu when the rotation
// composes (w a loop) and w alone otherwise; words with src != tgt also die
// against an endpoint idempotent.  Length 0 contributes one class per vertex.
inline Result<std::map<int, std::size_t>> hh0_truncated(const QuiverDga& A, int max_length) {
  using R = Result<std::map<int, std::size_t>>;
  for (const auto& g : A.generators) {
    auto it = A.differential.find(g.id);
    if (it == A.differential.end())
      return R::failure("generator '" + g.id + "' has no stored differential (must be zero)");
    if (!it->second.empty())
      return R::failure("differential of '" + g.id + "' is nonzero");
  }
  std::map<int, std::size_t> dims;
  dims[0] = A.vertices.size();
  for (int len = 1; len <= max_length; ++len) {
    bool overflow = false;
    auto words = detail::words_of_length(A, len, 200000, &overflow);
    if (overflow)
      return R::failure("word enumeration exceeded 200000 items at length " +
                        std::to_string(len));
    std::map<Word, std::size_t> idx;
    for (std::size_t i = 0; i < words.size(); ++i) idx[words[i]] = i;
    f2::Reducer relations;
    auto add_relation = [&](const std::vector<std::size_t>& cols) {
      f2::Vec v(words.size());
      for (auto c : cols) v.flip(c);
      relations.insert(std::move(v));
    };
    for (const auto& w : words) {
      if (w.src != w.tgt) {
        add_relation({idx.at(w)});
        continue;
      }
      for (std::size_t s = 1; s < w.letters.size(); ++s) {
        Word rot;
        rot.letters.insert(rot.letters.end(), w.letters.begin() + static_cast<long>(s),
                           w.letters.end());
        rot.letters.insert(rot.letters.end(), w.letters.begin(),
                           w.letters.begin() + static_cast<long>(s));
        // Both rotation endpoints sit at the vertex where the split happened.
        const std::string& mid = A.find(w.letters[s - 1])->src;
        rot.src = mid;
        rot.tgt = mid;
        add_relation({idx.at(w), idx.at(rot)});
      }
    }
    dims[len] = words.size() - relations.rank();
  }
  return R::success(std::move(dims));
}

}  // namespace cedga
