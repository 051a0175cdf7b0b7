#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

// Dense linear algebra over the two-element field.  Vectors are bitsets;
// matrices are stored as vectors of columns.  Pivot selection is always the
// lowest set bit, so reduced representatives are deterministic given the
// basis order.
namespace cedga::f2 {

using Vec = boost::dynamic_bitset<>;

inline std::optional<std::size_t> lowest_bit(const Vec& v) {
  std::size_t p = v.find_first();
  if (p == Vec::npos) return std::nullopt;
  return p;
}

// Maintains a row-echelon basis keyed by pivot position (lowest set bit).
struct Reducer {
  std::map<std::size_t, Vec> by_pivot;

  // Reduces v modulo the span of the inserted vectors.
  Vec reduce(Vec v) const {
    while (true) {
      auto p = lowest_bit(v);
      if (!p) return v;
      auto it = by_pivot.find(*p);
      if (it == by_pivot.end()) return v;
      v ^= it->second;
    }
  }

  // Inserts v if independent; returns false when v was already in the span.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    auto p = lowest_bit(v);
    if (!p) return false;
    by_pivot.emplace(*p, std::move(v));
    return true;
  }

  std::size_t rank() const { return by_pivot.size(); }
};

inline std::size_t rank(const std::vector<Vec>& cols) {
  Reducer r;
  for (const auto& c : cols) r.insert(c);
  return r.rank();
}

// Kernel basis of the linear map sending unit vector j to cols[j].
// Returned vectors live in F2^{cols.size()}.
inline std::vector<Vec> kernel(const std::vector<Vec>& cols) {
  const std::size_t n = cols.size();
  // Echelon basis of the column space together with the combination that
  // produced each echelon vector.
  std::map<std::size_t, std::pair<Vec, Vec>> by_pivot;  // pivot -> (vec, combo)
  std::vector<Vec> ker;
  for (std::size_t j = 0; j < n; ++j) {
    Vec v = cols[j];
    Vec combo(n);
    combo.set(j);
    while (true) {
      auto p = lowest_bit(v);
      if (!p) break;
      auto it = by_pivot.find(*p);
      if (it == by_pivot.end()) break;
      v ^= it->second.first;
      combo ^= it->second.second;
    }
    if (v.none()) {
      ker.push_back(std::move(combo));
    } else {
      const std::size_t pivot = *lowest_bit(v);
      by_pivot.emplace(pivot, std::make_pair(std::move(v), std::move(combo)));
    }
  }
  return ker;
}

// Column reduction R = D * V with V invertible and upper-triangular in the
// processing order: column j is reduced by earlier columns while its lowest
// set bit collides.  Zero columns of R mark kernel combinations V[j]; nonzero
// columns pair the row low(R[j]) with column j.
struct ColumnReduction {
  std::vector<Vec> R;
  std::vector<Vec> V;
  std::vector<std::optional<std::size_t>> low;  // lowest set bit of R[j]
};

inline ColumnReduction reduce_columns(const std::vector<Vec>& cols) {
  const std::size_t n = cols.size();
  ColumnReduction out;
  out.R.reserve(n);
  out.V.reserve(n);
  out.low.assign(n, std::nullopt);
  std::map<std::size_t, std::size_t> owner;  // low -> column index
  for (std::size_t j = 0; j < n; ++j) {
    Vec r = cols[j];
    Vec v(n);
    v.set(j);
    while (true) {
      auto p = lowest_bit(r);
      if (!p) break;
      auto it = owner.find(*p);
      if (it == owner.end()) {
        owner.emplace(*p, j);
        out.low[j] = *p;
        break;
      }
      r ^= out.R[it->second];
      v ^= out.V[it->second];
    }
    out.R.push_back(std::move(r));
    out.V.push_back(std::move(v));
  }
  return out;
}

// Inverse of a square matrix given by columns; nullopt when singular.
inline std::optional<std::vector<Vec>> invert(const std::vector<Vec>& cols) {
  const std::size_t n = cols.size();
  std::vector<Vec> a = cols;          // working copy
  std::vector<Vec> inv(n, Vec(n));    // starts as identity
  for (std::size_t j = 0; j < n; ++j) inv[j].set(j);
  // Gauss-Jordan on columns.
  std::vector<bool> used(n, false);
  for (std::size_t row = 0; row < n; ++row) {
    std::size_t pivot = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (!used[j] && a[j].test(row)) {
        pivot = j;
        break;
      }
    }
    if (pivot == n) return std::nullopt;
    used[pivot] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != pivot && a[j].test(row)) {
        a[j] ^= a[pivot];
        inv[j] ^= inv[pivot];
      }
    }
  }
  // Permute columns so that a becomes the identity: column with pivot row r
  // must sit at position r.
  std::vector<Vec> result(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t r = a[j].find_first();
    result[r] = inv[j];
  }
  return result;
}

inline Vec apply(const std::vector<Vec>& cols, const Vec& x, std::size_t rows) {
  Vec y(rows);
  for (std::size_t j = x.find_first(); j != Vec::npos; j = x.find_next(j)) {
    y ^= cols[j];
  }
  return y;
}

}  // namespace cedga::f2
