#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "lieprobe/error.hpp"
#include "lieprobe/field.hpp"

namespace lieprobe {

using Vec = std::vector<Elem>;

/// Row-reduces `rows` (each of length `dim`) in place to reduced row-echelon
/// form, drops zero rows, and returns the pivot columns.
inline std::vector<int> rref_in_place(std::vector<Vec>& rows, int dim, const FieldTable& f) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Elem inv = f.inv(rows[r][c]);
    for (int j = c; j < dim; ++j) rows[r][j] = f.mul(rows[r][j], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Elem factor = rows[i][c];
      for (int j = c; j < dim; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// A vector subspace of F_q^d held by its canonical reduced row-echelon
/// basis. Equal subspaces have identical bases, so comparison and hashing
/// work on the basis entries directly.
class Subspace {
 public:
  Subspace() = default;

  /// Canonical span of `vectors` inside F_q^dim.
  static Subspace span(std::vector<Vec> vectors, int dim, const FieldTable& f) {
    for (const auto& v : vectors) {
      if (static_cast<int>(v.size()) != dim) {
        throw Error(ErrorCode::DimensionMismatch,
                    "vector of length " + std::to_string(v.size()) + " in ambient dimension " + std::to_string(dim));
      }
    }
    rref_in_place(vectors, dim, f);
    Subspace s;
    s.dim_ = dim;
    s.rank_ = static_cast<int>(vectors.size());
    s.data_.reserve(vectors.size() * dim);
    for (const auto& v : vectors) s.data_.insert(s.data_.end(), v.begin(), v.end());
    return s;
  }

  static Subspace zero(int dim) {
    Subspace s;
    s.dim_ = dim;
    return s;
  }

  static Subspace full(int dim, const FieldTable& f) {
    std::vector<Vec> rows(dim, Vec(dim, 0));
    for (int i = 0; i < dim; ++i) rows[i][i] = 1;
    return span(std::move(rows), dim, f);
  }

  /// Wraps rows already known to be in reduced row-echelon form.
  static Subspace from_rref(std::vector<Elem> flat, int rank, int dim) {
    Subspace s;
    s.dim_ = dim;
    s.rank_ = rank;
    s.data_ = std::move(flat);
    return s;
  }

  int ambient_dim() const { return dim_; }
  int dim() const { return rank_; }

  std::span<const Elem> row(int i) const { return {data_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)}; }

  std::vector<Vec> basis() const {
    std::vector<Vec> out;
    for (int i = 0; i < rank_; ++i) out.emplace_back(row(i).begin(), row(i).end());
    return out;
  }

  std::vector<int> pivots() const {
    std::vector<int> out;
    for (int i = 0; i < rank_; ++i) {
      auto r = row(i);
      out.push_back(static_cast<int>(std::find_if(r.begin(), r.end(), [](Elem e) { return e != 0; }) - r.begin()));
    }
    return out;
  }

  bool contains(std::span<const Elem> v, const FieldTable& f) const {
    if (static_cast<int>(v.size()) != dim_) throw Error(ErrorCode::DimensionMismatch, "contains: length mismatch");
    Vec w(v.begin(), v.end());
    auto piv = pivots();
    for (int i = 0; i < rank_; ++i) {
      Elem c = w[piv[i]];
      if (c == 0) continue;
      auto r = row(i);
      for (int j = 0; j < dim_; ++j) w[j] = f.sub(w[j], f.mul(c, r[j]));
    }
    return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
  }

  bool contains(const Subspace& other, const FieldTable& f) const {
    for (int i = 0; i < other.dim(); ++i)
      if (!contains(other.row(i), f)) return false;
    return true;
  }

  const std::vector<Elem>& flat() const { return data_; }

  auto operator<=>(const Subspace& other) const = default;
  bool operator==(const Subspace& other) const = default;

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < rank_; ++i) {
      if (i) s += ' ';
      for (Elem e : row(i)) s += static_cast<char>('0' + e);
    }
    return s + "]";
  }

 private:
  int dim_ = 0;
  int rank_ = 0;
  std::vector<Elem> data_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.ambient_dim()) * 1315423911u + s.dim();
    for (Elem e : s.flat()) h = h * 31 + e;
    return h;
  }
};

inline Subspace subspace_rref(const std::vector<Vec>& vectors, const FieldTable& f) {
  if (vectors.empty()) return Subspace::zero(0);
  return Subspace::span(vectors, static_cast<int>(vectors.front().size()), f);
}

inline Subspace join(const Subspace& a, const Subspace& b, const FieldTable& f) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "join of different ambient dimensions");
  auto rows = a.basis();
  auto rb = b.basis();
  rows.insert(rows.end(), rb.begin(), rb.end());
  return Subspace::span(std::move(rows), a.ambient_dim(), f);
}

/// { w : w . v = 0 for all v in s } under the standard dot product.
inline Subspace annihilator(const Subspace& s, const FieldTable& f) {
  int d = s.ambient_dim();
  auto piv = s.pivots();
  std::vector<bool> is_pivot(d, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (int free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    Vec w(d, 0);
    w[free] = 1;
    for (int i = 0; i < s.dim(); ++i) w[piv[i]] = f.neg(s.row(i)[free]);
    rows.push_back(std::move(w));
  }
  return Subspace::span(std::move(rows), d, f);
}

inline Subspace meet(const Subspace& a, const Subspace& b, const FieldTable& f) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "meet of different ambient dimensions");
  return annihilator(join(annihilator(a, f), annihilator(b, f), f), f);
}

/// Calls fn(Subspace) for every k-dimensional subspace of F_q^d, walking
/// pivot sets in lexicographic order and free entries in counting order.
template <class Fn>
void for_each_subspace(int d, int k, const FieldTable& f, Fn&& fn) {
  if (k < 0 || k > d) return;
  const int q = f.q();
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    // Free positions: (row i, column c) with c > piv[i] and c not a pivot.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < k; ++i)
      for (int c = piv[i] + 1; c < d; ++c)
        if (!std::binary_search(piv.begin(), piv.end(), c)) free.emplace_back(i, c);
    std::vector<Elem> flat(static_cast<std::size_t>(k) * d, 0);
    for (int i = 0; i < k; ++i) flat[static_cast<std::size_t>(i) * d + piv[i]] = 1;
    std::vector<int> counter(free.size(), 0);
    for (;;) {
      for (std::size_t t = 0; t < free.size(); ++t)
        flat[static_cast<std::size_t>(free[t].first) * d + free[t].second] = static_cast<Elem>(counter[t]);
      fn(Subspace::from_rref(flat, k, d));
      std::size_t t = 0;
      while (t < counter.size() && ++counter[t] == q) counter[t++] = 0;
      if (t == counter.size()) break;
    }
    int i = k - 1;
    while (i >= 0 && piv[i] == d - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

/// All k-dimensional subspaces of F_q^d in lexicographic order of their
/// flattened RREF bases.
inline std::vector<Subspace> enumerate_subspaces(int d, int k, const FieldTable& f) {
  std::vector<Subspace> out;
  for_each_subspace(d, k, f, [&](Subspace s) { out.push_back(std::move(s)); });
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return a.flat() < b.flat(); });
  return out;
}

/// Gaussian binomial [d choose k]_q.
inline long long gaussian_binomial(int d, int k, long long q) {
  if (k < 0 || k > d) return 0;
  long long num = 1;
  long long den = 1;
  for (int i = 0; i < k; ++i) {
    long long a = 1, b = 1;
    for (int j = 0; j < d - i; ++j) a *= q;
    for (int j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
    long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

/// Scales v so its first nonzero coordinate is 1.
inline Vec normalize_projective(Vec v, const FieldTable& f) {
  for (Elem& lead : v) {
    if (lead == 0) continue;
    Elem inv = f.inv(lead);
    for (Elem& x : v) x = f.mul(x, inv);
    break;
  }
  return v;
}

}  // namespace lieprobe
