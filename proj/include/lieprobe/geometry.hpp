#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "lieprobe/bitset.hpp"
#include "lieprobe/cliques.hpp"
#include "lieprobe/error.hpp"
#include "lieprobe/graph.hpp"
#include "lieprobe/parallel.hpp"

namespace lieprobe {

/// A point-line geometry: points 0..n-1 and lines as strictly increasing
/// point lists. Lines are kept in lexicographic order, so two geometries
/// with the same line set compare equal.
class Geometry {
 public:
  Geometry() = default;
  Geometry(int n_points, std::vector<std::vector<int>> lines, std::vector<std::string> labels = {})
      : n_(n_points), lines_(std::move(lines)), labels_(std::move(labels)) {
    if (n_ < 0) throw Error(ErrorCode::InvalidGeometry, "negative point count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_) {
      throw Error(ErrorCode::InvalidGeometry, "label count differs from point count");
    }
    for (auto& l : lines_) {
      std::sort(l.begin(), l.end());
      if (l.size() < 2) throw Error(ErrorCode::InvalidGeometry, "line with fewer than two points", l);
      if (l.front() < 0 || l.back() >= n_) throw Error(ErrorCode::InvalidGeometry, "line point out of range", l);
      if (std::adjacent_find(l.begin(), l.end()) != l.end()) throw Error(ErrorCode::InvalidGeometry, "repeated point on a line", l);
    }
    std::sort(lines_.begin(), lines_.end());
    if (auto it = std::adjacent_find(lines_.begin(), lines_.end()); it != lines_.end()) {
      throw Error(ErrorCode::InvalidGeometry, "duplicate line", *it);
    }
    through_.assign(n_, {});
    for (std::size_t i = 0; i < lines_.size(); ++i)
      for (int p : lines_[i]) through_[p].push_back(static_cast<int>(i));
    // A line inside another shares its two smallest points with it.
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      const auto& a = lines_[i];
      for (int j : through_[a[0]]) {
        if (static_cast<std::size_t>(j) == i) continue;
        const auto& b = lines_[j];
        if (b.size() > a.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
          throw Error(ErrorCode::InvalidGeometry, "line contained in another line", a);
        }
      }
    }
  }

  int n_points() const { return n_; }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Indices of the lines through p, increasing.
  const std::vector<int>& lines_through(int p) const { return through_.at(p); }

  bool operator==(const Geometry& o) const { return n_ == o.n_ && lines_ == o.lines_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> lines_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> through_;
};

/// Collinearity graph: points adjacent iff distinct and on a common line.
inline Graph point_graph(const Geometry& d) {
  Graph g(d.n_points());
  for (const auto& l : d.lines())
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) g.add_edge(l[i], l[j]);
  return g;
}

/// Point graph plus an O(1) lookup of the line through two collinear points.
class GeometryIndex {
 public:
  explicit GeometryIndex(const Geometry& d) : d_(&d), g_(point_graph(d)) {
    const std::size_t n = g_.size();
    const std::size_t stride = g_.stride();
    prefix_.assign(n * stride, 0);
    offset_.assign(n + 1, 0);
    for (std::size_t p = 0; p < n; ++p) {
      auto r = g_.row(static_cast<int>(p));
      int acc = 0;
      for (std::size_t w = 0; w < stride; ++w) {
        prefix_[p * stride + w] = acc;
        acc += std::popcount(r[w]);
      }
      offset_[p + 1] = offset_[p] + acc;
    }
    pair_line_.assign(offset_[n], -1);
    for (std::size_t i = 0; i < d.lines().size(); ++i) {
      const auto& l = d.lines()[i];
      for (int a : l)
        for (int b : l) {
          if (a == b) continue;
          int& slot = pair_line_[offset_[a] + rank(a, b)];
          if (slot < 0) slot = static_cast<int>(i);
        }
    }
  }

  const Geometry& geometry() const { return *d_; }
  const Graph& collinearity() const { return g_; }

  /// Smallest-index line through collinear points p != w; -1 if not collinear.
  int line_of(int p, int w) const {
    if (p == w || !g_.adjacent(p, w)) return -1;
    return pair_line_[offset_[p] + rank(p, w)];
  }

  VertexSet line_set(int line) const { return VertexSet::from(g_.size(), d_->lines()[line]); }

 private:
  int rank(int p, int w) const {
    const std::size_t stride = g_.stride();
    Word word = g_.row(p)[w >> 6] & ((Word{1} << (w & 63)) - 1);
    return prefix_[p * stride + (w >> 6)] + std::popcount(word);
  }

  const Geometry* d_;
  Graph g_;
  std::vector<int> prefix_;
  std::vector<int> offset_;
  std::vector<int> pair_line_;
};

struct AxiomReport {
  std::string axiom;
  bool holds = false;
  std::vector<int> witness;  // meaning depends on the axiom; see `detail`
  std::optional<int> rank;
  std::string detail;
};

/// Every line has >= 3 points and two lines share at most one point.
inline AxiomReport check_partial_linear(const Geometry& d) {
  AxiomReport rep{"partial_linear", true, {}, {}, ""};
  for (std::size_t i = 0; i < d.lines().size(); ++i) {
    if (d.lines()[i].size() < 3) {
      rep.holds = false;
      rep.witness = d.lines()[i];
      rep.detail = "line " + std::to_string(i) + " has fewer than three points";
      return rep;
    }
  }
  std::vector<int> mark(d.n_points(), -1);
  for (int p = 0; p < d.n_points(); ++p) {
    for (int li : d.lines_through(p)) {
      for (int w : d.lines()[li]) {
        if (w <= p) continue;
        if (mark[w] == p) {
          rep.holds = false;
          rep.witness = {p, w};
          rep.detail = "points lie on two distinct lines";
          return rep;
        }
      }
      for (int w : d.lines()[li])
        if (w > p) mark[w] = p;
    }
  }
  return rep;
}

namespace detail {

/// For every line L and point p outside L, counts |L n p^perp| and reports
/// the first (line, point) pair whose count violates `ok(count, |L|)`.
template <class Ok>
std::optional<std::pair<int, int>> scan_point_line_counts(const GeometryIndex& idx, Ok&& ok) {
  const Geometry& d = idx.geometry();
  const Graph& g = idx.collinearity();
  std::vector<int> count(d.n_points(), 0);
  std::vector<int> touched;
  for (std::size_t li = 0; li < d.lines().size(); ++li) {
    const auto& l = d.lines()[li];
    touched.clear();
    for (int x : l) {
      g.neighbors(x).for_each([&](int y) {
        if (count[y]++ == 0) touched.push_back(y);
      });
    }
    for (int x : l) count[x] = -1000000;  // members of L are skipped below
    std::optional<std::pair<int, int>> bad;
    const int size = static_cast<int>(l.size());
    if (!ok(0, size)) {
      for (int p = 0; p < d.n_points() && !bad; ++p)
        if (count[p] == 0 && !std::binary_search(l.begin(), l.end(), p)) bad = std::make_pair(static_cast<int>(li), p);
    }
    if (!bad) {
      std::sort(touched.begin(), touched.end());
      for (int p : touched)
        if (count[p] > 0 && !ok(count[p], size)) {
          bad = std::make_pair(static_cast<int>(li), p);
          break;
        }
    }
    for (int p : touched) count[p] = 0;
    for (int x : l) count[x] = 0;
    if (bad) return bad;
  }
  return std::nullopt;
}

}  // namespace detail

/// Gamma space: a point outside a line sees 0, 1 or all of its points.
inline AxiomReport check_gamma(const GeometryIndex& idx) {
  AxiomReport rep{"gamma", true, {}, {}, ""};
  auto bad = detail::scan_point_line_counts(idx, [](int c, int size) { return c == 0 || c == 1 || c == size; });
  if (bad) {
    rep.holds = false;
    rep.witness = {bad->second, bad->first};
    rep.detail = "point " + std::to_string(bad->second) + " is collinear with some but not all points of line " +
                 std::to_string(bad->first) + " (witness = point, line)";
  }
  return rep;
}
inline AxiomReport check_gamma(const Geometry& d) { return check_gamma(GeometryIndex(d)); }

/// Shult space: a point outside a line sees exactly one or all of its points.
inline AxiomReport check_shult(const GeometryIndex& idx) {
  AxiomReport rep{"shult", true, {}, {}, ""};
  auto bad = detail::scan_point_line_counts(idx, [](int c, int size) { return c == 1 || c == size; });
  if (bad) {
    rep.holds = false;
    rep.witness = {bad->second, bad->first};
    rep.detail = "point " + std::to_string(bad->second) + " violates the one-or-all rule for line " +
                 std::to_string(bad->first) + " (witness = point, line)";
  }
  return rep;
}
inline AxiomReport check_shult(const Geometry& d) { return check_shult(GeometryIndex(d)); }

/// holds = degenerate: some point is collinear with every point.
inline AxiomReport check_degenerate(const GeometryIndex& idx) {
  AxiomReport rep{"degenerate", false, {}, {}, ""};
  const Graph& g = idx.collinearity();
  for (std::size_t p = 0; p < g.size(); ++p) {
    if (g.degree(static_cast<int>(p)) + 1 == static_cast<int>(g.size())) {
      rep.holds = true;
      rep.witness = {static_cast<int>(p)};
      rep.detail = "point " + std::to_string(p) + " is collinear with all points";
      return rep;
    }
  }
  return rep;
}
inline AxiomReport check_degenerate(const Geometry& d) { return check_degenerate(GeometryIndex(d)); }

/// Smallest singular subspace containing the pairwise collinear set S.
/// Every pair of members is joined through its line; a pair with no common
/// line means the set (or its closure) is not singular.
inline VertexSet singular_closure(const GeometryIndex& idx, const VertexSet& s) {
  const Geometry& d = idx.geometry();
  VertexSet cur = s;
  std::vector<int> members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      int li = idx.line_of(members[i], members[j]);
      if (li < 0) {
        bool original = i < s.count();
        throw Error(ErrorCode::NotAClique, original ? "points are not collinear" : "closure is not singular", {members[j], members[i]});
      }
      for (int w : d.lines()[li]) {
        if (cur.test(w)) continue;
        cur.set(w);
        members.push_back(w);
      }
    }
  }
  return cur;
}

inline std::vector<int> singular_closure(const Geometry& d, const std::vector<int>& s) {
  GeometryIndex idx(d);
  for (int p : s) idx.collinearity().check(p);
  return singular_closure(idx, VertexSet::from(d.n_points(), s)).to_vector();
}

/// True iff every line meeting S in two or more points lies inside S.
inline bool is_subspace(const GeometryIndex& idx, const VertexSet& s) {
  const Geometry& d = idx.geometry();
  bool ok = true;
  s.for_each([&](int u) {
    if (!ok) return;
    for (int li : d.lines_through(u)) {
      const auto& l = d.lines()[li];
      int inside = 0;
      for (int w : l) inside += s.test(w);
      if (inside >= 2 && inside != static_cast<int>(l.size())) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

namespace detail {

inline bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int u) {
    if (ok && !s.is_subset_of(g.closed_neighbors(u))) ok = false;
  });
  return ok;
}

inline std::vector<std::vector<int>> singular_by_cliques(const GeometryIndex& idx, const VertexSet& within) {
  std::vector<std::vector<int>> out;
  for_each_maximal_clique(idx.collinearity(), within, [&](const VertexSet& c) {
    if (is_subspace(idx, c)) out.push_back(c.to_vector());
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

enum class SingularMethod { ClosureGrowth, CliqueEnumeration };

/// Maximal singular subspaces containing every point of `seed` (all of them
/// when the seed is empty), as sorted point lists in lexicographic order.
///
/// ClosureGrowth walks singular subspaces: from S it moves to the closure of
/// S + c for each c in S^perp \ S and keeps the subspaces with no extension.
/// If some closure turns out not to be singular the search switches to
/// clique enumeration filtered by the subspace property (<= 5000 points).
inline std::vector<std::vector<int>> maximal_singular_subspaces(const GeometryIndex& idx, const std::vector<int>& seed = {},
                                                                SingularMethod method = SingularMethod::ClosureGrowth) {
  const Geometry& d = idx.geometry();
  const Graph& g = idx.collinearity();
  const std::size_t n = g.size();
  if (method == SingularMethod::CliqueEnumeration) {
    if (n > 5000) throw Error(ErrorCode::SizeLimitExceeded, "clique enumeration limited to 5000 points");
    VertexSet within = seed.empty() ? g.all() : closed_perp(g, seed);
    auto all = detail::singular_by_cliques(idx, within);
    std::vector<std::vector<int>> out;
    for (auto& c : all)
      if (std::includes(c.begin(), c.end(), seed.begin(), seed.end())) out.push_back(std::move(c));
    return out;
  }
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::set<std::vector<int>> found;
  std::vector<VertexSet> stack;
  try {
    if (seed.empty()) {
      for (const auto& l : d.lines()) stack.push_back(singular_closure(idx, VertexSet::from(n, l)));
      for (int p = 0; p < d.n_points(); ++p)
        if (d.lines_through(p).empty()) stack.push_back(VertexSet::from(n, std::vector<int>{p}));
    } else {
      stack.push_back(singular_closure(idx, VertexSet::from(n, seed)));
    }
    while (!stack.empty()) {
      VertexSet s = std::move(stack.back());
      stack.pop_back();
      if (!seen.insert(s).second) continue;
      VertexSet cand = closed_perp(g, s) - s;
      if (cand.empty()) {
        found.insert(s.to_vector());
        continue;
      }
      cand.for_each([&](int c) {
        VertexSet t = s;
        t.set(c);
        VertexSet next = singular_closure(idx, t);
        if (!seen.count(next)) stack.push_back(std::move(next));
      });
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAClique) throw;
    return maximal_singular_subspaces(idx, seed, SingularMethod::CliqueEnumeration);
  }
  return {found.begin(), found.end()};
}

inline std::vector<std::vector<int>> maximal_singular_subspaces(const Geometry& d) {
  return maximal_singular_subspaces(GeometryIndex(d));
}

struct ProjectiveCheck {
  bool holds = false;
  int dimension = -1;
  std::vector<int> witness;
  std::string detail;
};

/// Checks that `points` (global indices) with the traces of `lines` of at
/// least two points form PG(k, q): |S| = (q^{k+1}-1)/(q-1), every trace has
/// q+1 points, every pair of points lies on exactly one trace, and any two
/// meeting traces close up to a plane of q^2+q+1 points.
inline ProjectiveCheck check_projective_space_on(const std::vector<int>& points, const std::vector<std::vector<int>>& traces, int q) {
  ProjectiveCheck res;
  const long long m = static_cast<long long>(points.size());
  if (q < 2) {
    res.detail = "order must be at least 2";
    return res;
  }
  int k = -1;
  for (long long size = 1, power = 1, dim = 0; size <= m; ++dim) {
    if (size == m) {
      k = static_cast<int>(dim);
      break;
    }
    power *= q;
    size += power;
  }
  if (k < 0) {
    res.detail = std::to_string(m) + " points is not the size of a projective space of order " + std::to_string(q);
    return res;
  }
  std::map<int, int> local;
  for (std::size_t i = 0; i < points.size(); ++i) local[points[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> ls;
  for (const auto& t : traces) {
    if (static_cast<int>(t.size()) != q + 1) {
      res.witness = t;
      res.detail = "line with " + std::to_string(t.size()) + " points instead of " + std::to_string(q + 1);
      return res;
    }
    std::vector<int> l;
    for (int p : t) l.push_back(local.at(p));
    ls.push_back(std::move(l));
  }
  std::vector<int> cover(static_cast<std::size_t>(m * m), 0);
  for (const auto& l : ls)
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) {
        ++cover[l[i] * m + l[j]];
        ++cover[l[j] * m + l[i]];
      }
  for (long long a = 0; a < m; ++a)
    for (long long b = a + 1; b < m; ++b)
      if (cover[a * m + b] != 1) {
        res.witness = {points[a], points[b]};
        res.detail = "pair lies on " + std::to_string(cover[a * m + b]) + " lines";
        return res;
      }
  std::vector<std::vector<int>> on(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (int p : ls[i]) on[p].push_back(static_cast<int>(i));
  const std::size_t plane = static_cast<std::size_t>(q) * q + q + 1;
  for (std::size_t a = 0; a < ls.size(); ++a) {
    for (std::size_t b = a + 1; b < ls.size(); ++b) {
      std::vector<int> inter;
      std::set_intersection(ls[a].begin(), ls[a].end(), ls[b].begin(), ls[b].end(), std::back_inserter(inter));
      if (inter.empty()) continue;
      std::vector<char> in(static_cast<std::size_t>(m), 0);
      std::vector<int> members;
      for (int p : ls[a]) in[p] = 1;
      for (int p : ls[b]) in[p] = 1;
      for (long long p = 0; p < m; ++p)
        if (in[p]) members.push_back(static_cast<int>(p));
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (int li : on[members[i]]) {
          int inside = 0;
          for (int p : ls[li]) inside += in[p];
          if (inside >= 2 && inside < q + 1)
            for (int p : ls[li])
              if (!in[p]) {
                in[p] = 1;
                members.push_back(p);
              }
        }
        if (members.size() > plane) break;
      }
      if (members.size() != plane) {
        res.witness = {points[ls[a][0]], points[ls[a][1]], points[ls[b][0]], points[ls[b][1]]};
        res.detail = "two meeting lines span " + std::to_string(members.size()) + " points, not a plane";
        return res;
      }
    }
  }
  res.holds = true;
  res.dimension = k;
  return res;
}

/// Projective-space check of S inside D; the traces are the lines of D
/// meeting S in at least two points.
inline ProjectiveCheck check_projective_space(const GeometryIndex& idx, const std::vector<int>& s, int q) {
  const Geometry& d = idx.geometry();
  VertexSet set = VertexSet::from(d.n_points(), s);
  std::set<int> line_ids;
  for (int p : s)
    for (int li : d.lines_through(p)) line_ids.insert(li);
  std::vector<std::vector<int>> traces;
  for (int li : line_ids) {
    std::vector<int> t;
    for (int p : d.lines()[li])
      if (set.test(p)) t.push_back(p);
    if (t.size() >= 2) traces.push_back(std::move(t));
  }
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  return check_projective_space_on(sorted, traces, q);
}

inline ProjectiveCheck check_projective_space(const Geometry& d, const std::vector<int>& s, int q) {
  return check_projective_space(GeometryIndex(d), s, q);
}

/// Common line size q+1 of the geometry, or nullopt when sizes differ.
inline std::optional<int> uniform_order(const Geometry& d) {
  if (d.lines().empty()) return std::nullopt;
  std::size_t s = d.lines().front().size();
  for (const auto& l : d.lines())
    if (l.size() != s) return std::nullopt;
  return static_cast<int>(s) - 1;
}

/// Rank r of a polar space: Shult, nondegenerate, and every maximal
/// singular subspace a projective space of dimension r-1.
inline AxiomReport polar_rank(const GeometryIndex& idx) {
  const Geometry& d = idx.geometry();
  auto shult = check_shult(idx);
  if (!shult.holds) throw Error(ErrorCode::ShultViolated, shult.detail, shult.witness);
  auto deg = check_degenerate(idx);
  if (deg.holds) throw Error(ErrorCode::Degenerate, deg.detail, deg.witness);
  auto q = uniform_order(d);
  if (!q) throw Error(ErrorCode::MixedSingularDimensions, "lines have different sizes");
  AxiomReport rep{"polar_rank", true, {}, {}, ""};
  int dim = -2;
  for (const auto& s : maximal_singular_subspaces(idx)) {
    auto pc = check_projective_space(idx, s, *q);
    if (!pc.holds) throw Error(ErrorCode::MixedSingularDimensions, "maximal singular subspace is not projective: " + pc.detail, s);
    if (dim == -2) dim = pc.dimension;
    if (pc.dimension != dim) throw Error(ErrorCode::MixedSingularDimensions, "maximal singular subspaces of dimensions " + std::to_string(dim) + " and " + std::to_string(pc.dimension), s);
  }
  rep.rank = dim + 1;
  rep.detail = "rank " + std::to_string(dim + 1);
  return rep;
}
inline AxiomReport polar_rank(const Geometry& d) { return polar_rank(GeometryIndex(d)); }

/// Subgeometry on `points` with the lines lying entirely inside; labels
/// carry the original point indices.
inline Geometry induced_geometry(const GeometryIndex& idx, const std::vector<int>& points) {
  const Geometry& d = idx.geometry();
  std::vector<int> local(d.n_points(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) local[points[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> lines;
  for (int p : points) {
    for (int li : d.lines_through(p)) {
      const auto& l = d.lines()[li];
      if (l.front() != p) continue;
      bool inside = std::all_of(l.begin(), l.end(), [&](int w) { return local[w] >= 0; });
      if (!inside) continue;
      std::vector<int> m;
      for (int w : l) m.push_back(local[w]);
      lines.push_back(std::move(m));
    }
  }
  std::vector<std::string> labels;
  for (int p : points) labels.push_back(std::to_string(p));
  return Geometry(static_cast<int>(points.size()), std::move(lines), std::move(labels));
}

/// Geometry induced on x^perp n y^perp for non-collinear x != y.
inline Geometry perp_geometry(const GeometryIndex& idx, int x, int y) {
  const Graph& g = idx.collinearity();
  g.check(x);
  g.check(y);
  if (x == y || g.adjacent(x, y)) throw Error(ErrorCode::CollinearPair, "perp geometry needs distinct non-collinear points", {x, y});
  return induced_geometry(idx, closed_perp(g, {x, y}).to_vector());
}
inline Geometry perp_geometry(const Geometry& d, int x, int y) { return perp_geometry(GeometryIndex(d), x, y); }

/// (q+1) x (q+1) grid: two parallel classes of q+1 disjoint lines of size
/// q+1, each line of one class meeting each line of the other once, with
/// no further collinearities.
inline bool check_grid(const Geometry& d, int q) {
  const int s = q + 1;
  if (q < 1 || d.n_points() != s * s || static_cast<int>(d.lines().size()) != 2 * s) return false;
  for (const auto& l : d.lines())
    if (static_cast<int>(l.size()) != s) return false;
  for (int p = 0; p < d.n_points(); ++p)
    if (d.lines_through(p).size() != 2) return false;
  // Two-colour the lines: meeting lines get different classes.
  const auto& ls = d.lines();
  std::vector<int> cls(ls.size(), -1);
  cls[0] = 0;
  for (std::size_t pass = 0; pass < ls.size(); ++pass)
    for (int p = 0; p < d.n_points(); ++p) {
      int a = d.lines_through(p)[0], b = d.lines_through(p)[1];
      if (cls[a] >= 0 && cls[b] < 0) cls[b] = 1 - cls[a];
      if (cls[b] >= 0 && cls[a] < 0) cls[a] = 1 - cls[b];
      if (cls[a] >= 0 && cls[a] == cls[b]) return false;
    }
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (cls[i] < 0) return false;
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(ls[i].begin(), ls[i].end(), ls[j].begin(), ls[j].end(), std::back_inserter(inter));
      std::size_t want = cls[i] == cls[j] ? 0 : 1;
      if (inter.size() != want) return false;
    }
  }
  Graph g = point_graph(d);
  for (int p = 0; p < d.n_points(); ++p)
    if (g.degree(p) != 2 * q) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Perp classification. Perps of up to 64 points are handled with one machine
// word per point; larger ones go through the general Geometry checks.

struct PerpInfo {
  int size = 0;
  int polar_rank = -1;  // -1 when not a polar space
  bool grid = false;
  std::string failure;
};

namespace detail {

struct SmallGeometry {
  int n = 0;
  std::vector<std::uint64_t> adj;    // open neighbourhoods
  std::vector<std::uint64_t> lines;  // point masks

  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

  bool shult(std::string& why) const {
    // Bit-sliced counters: bit p of c[i] is bit i of |adj(p) n L|.
    for (std::uint64_t l : lines) {
      std::uint64_t c[5] = {0, 0, 0, 0, 0};
      for (std::uint64_t m = l; m; m &= m - 1) {
        std::uint64_t carry = adj[std::countr_zero(m)];
        for (auto& bit : c) {
          std::uint64_t next = bit & carry;
          bit ^= carry;
          carry = next;
        }
      }
      auto equal = [&](int v) {
        std::uint64_t e = ~std::uint64_t{0};
        for (int i = 0; i < 5; ++i) e &= ((v >> i) & 1) ? c[i] : ~c[i];
        return e;
      };
      const int size = std::popcount(l);
      std::uint64_t bad = all() & ~l & ~(equal(1) | equal(size));
      if (bad) {
        int p = std::countr_zero(bad);
        why = "point sees " + std::to_string(std::popcount(adj[p] & l)) + " of " + std::to_string(size) + " points of a line";
        return false;
      }
    }
    return true;
  }

  bool degenerate() const {
    for (int p = 0; p < n; ++p)
      if ((adj[p] | (std::uint64_t{1} << p)) == all()) return true;
    return false;
  }

  /// Dimension of the projective space on clique c, or -1.
  int projective_dimension(std::uint64_t c, int q) const {
    const int m = std::popcount(c);
    int k = -1;
    for (long long size = 1, power = 1, dim = 0; size <= m; ++dim) {
      if (size == m) {
        k = static_cast<int>(dim);
        break;
      }
      power *= q;
      size += power;
    }
    if (k < 0) return -1;
    std::vector<std::uint64_t> ls;
    long long pairs = 0;
    for (std::uint64_t l : lines) {
      std::uint64_t t = l & c;
      int s = std::popcount(t);
      if (s < 2) continue;
      if (s != q + 1) return -1;
      ls.push_back(t);
      pairs += static_cast<long long>(s) * (s - 1) / 2;
    }
    for (std::size_t a = 0; a < ls.size(); ++a)
      for (std::size_t b = a + 1; b < ls.size(); ++b)
        if (std::popcount(ls[a] & ls[b]) > 1) return -1;
    if (pairs != static_cast<long long>(m) * (m - 1) / 2) return -1;
    // A linear space on q^2+q+1 points with lines of q+1 points is already
    // a projective plane; the plane axiom matters from dimension 3 on.
    if (k <= 2) return k;
    const int plane = q * q + q + 1;
    for (std::size_t a = 0; a < ls.size(); ++a)
      for (std::size_t b = a + 1; b < ls.size(); ++b) {
        if (!(ls[a] & ls[b])) continue;
        std::uint64_t s = ls[a] | ls[b];
        for (bool grew = true; grew;) {
          grew = false;
          for (std::uint64_t l : ls)
            if (std::popcount(l & s) >= 2 && (l & ~s)) {
              s |= l;
              grew = true;
            }
        }
        if (std::popcount(s) != plane) return -1;
      }
    return k;
  }

  /// Polar rank, or -1 with a reason.
  int polar_rank(int q, std::string& why) const {
    if (lines.empty()) {
      why = "no lines";
      return -1;
    }
    for (std::uint64_t l : lines)
      if (std::popcount(l) != q + 1) {
        why = "line size differs from q+1";
        return -1;
      }
    if (!shult(why)) return -1;
    if (degenerate()) {
      why = "degenerate";
      return -1;
    }
    int dim = -2;
    bool bad = false;
    for_each_maximal_clique_small(adj, 0, all(), 0, [&](std::uint64_t c) {
      if (bad) return;
      int k = projective_dimension(c, q);
      if (k < 0 || (dim != -2 && k != dim)) {
        bad = true;
        return;
      }
      dim = k;
    });
    if (bad || dim < 1) {
      why = "maximal singular subspaces are not projective spaces of one dimension";
      return -1;
    }
    return dim + 1;
  }

  bool grid(int q) const {
    const int s = q + 1;
    if (n != s * s || static_cast<int>(lines.size()) != 2 * s) return false;
    for (std::uint64_t l : lines)
      if (std::popcount(l) != s) return false;
    for (int p = 0; p < n; ++p) {
      int on = 0;
      std::uint64_t span = 0;
      for (std::uint64_t l : lines)
        if ((l >> p) & 1) {
          ++on;
          span |= l;
        }
      if (on != 2) return false;
      if ((span & ~(std::uint64_t{1} << p)) != adj[p]) return false;
    }
    // Lines of one class are disjoint, of different classes meet once.
    std::uint64_t first = lines[0];
    for (std::uint64_t l : lines) {
      int meet = std::popcount(l & first);
      if (l != first && meet > 1) return false;
    }
    for (std::size_t a = 0; a < lines.size(); ++a)
      for (std::size_t b = a + 1; b < lines.size(); ++b)
        if (std::popcount(lines[a] & lines[b]) > 1) return false;
    return true;
  }
};

inline SmallGeometry small_induced(const GeometryIndex& idx, const std::vector<int>& pts, std::vector<int>& local) {
  const Graph& g = idx.collinearity();
  const Geometry& d = idx.geometry();
  SmallGeometry sg;
  sg.n = static_cast<int>(pts.size());
  sg.adj.assign(sg.n, 0);
  for (int i = 0; i < sg.n; ++i) local[pts[i]] = i;
  for (int i = 0; i < sg.n; ++i) {
    auto row = g.row(pts[i]);
    for (int j : pts) {
      if ((row[j >> 6] >> (j & 63)) & 1) sg.adj[i] |= std::uint64_t{1} << local[j];
    }
  }
  for (int i = 0; i < sg.n; ++i) {
    for (std::uint64_t m = sg.adj[i] & ~((std::uint64_t{2} << i) - 1); m; m &= m - 1) {
      int j = std::countr_zero(m);
      int li = idx.line_of(pts[i], pts[j]);
      std::uint64_t mask = 0;
      bool inside = true;
      for (int w : d.lines()[li]) {
        if (local[w] < 0) {
          inside = false;
          break;
        }
        mask |= std::uint64_t{1} << local[w];
      }
      // Record each line once, from its two smallest local points.
      if (inside && std::countr_zero(mask) == i && std::countr_zero(mask & (mask - 1)) == j) sg.lines.push_back(mask);
    }
  }
  for (int p : pts) local[p] = -1;
  return sg;
}

}  // namespace detail

/// Classifies the perp geometry of a non-collinear pair: its size, polar
/// rank (if it is a polar space with lines of q+1 points) and grid shape.
inline PerpInfo classify_perp(const GeometryIndex& idx, int x, int y, int q, std::vector<int>& scratch) {
  const Graph& g = idx.collinearity();
  VertexSet p = closed_perp(g, {x, y});
  PerpInfo info;
  info.size = static_cast<int>(p.count());
  if (info.size <= 1) return info;
  std::vector<int> pts = p.to_vector();
  if (info.size <= 64) {
    if (scratch.size() != g.size()) scratch.assign(g.size(), -1);
    auto sg = detail::small_induced(idx, pts, scratch);
    info.polar_rank = sg.polar_rank(q, info.failure);
    info.grid = sg.grid(q);
    return info;
  }
  Geometry sub = induced_geometry(idx, pts);
  try {
    GeometryIndex sidx(sub);
    auto ord = uniform_order(sub);
    if (!ord || *ord != q) {
      info.failure = "line size differs from q+1";
    } else {
      info.polar_rank = *polar_rank(sidx).rank;
    }
  } catch (const Error& e) {
    info.failure = e.what();
    info.polar_rank = -1;
  }
  info.grid = check_grid(sub, q);
  return info;
}

struct PerpSummary {
  long long pairs = 0;                 // non-collinear pairs with nonempty perp
  std::map<int, long long> sizes;      // perp size -> count
  std::map<int, long long> ranks;      // polar rank (-1 = not polar) -> count
  long long grids = 0;
  long long single_points = 0;
  std::optional<std::pair<int, int>> first_non_polar;
  std::optional<std::pair<int, int>> first_single;
  std::optional<std::pair<int, int>> first_non_grid;
  std::string first_failure;
};

/// Runs classify_perp over every non-collinear pair with a common neighbour.
inline PerpSummary summarize_perps(const GeometryIndex& idx, int q) {
  const Graph& g = idx.collinearity();
  const std::size_t n = g.size();
  std::vector<PerpSummary> per(n);
  parallel_for(n, [&](std::size_t xi) {
    int x = static_cast<int>(xi);
    PerpSummary& s = per[xi];
    std::vector<int> scratch(n, -1);
    // Points at distance exactly 2 with larger index.
    VertexSet two(n);
    g.neighbors(x).for_each([&](int u) { two |= g.neighbors(u); });
    two -= g.closed_neighbors(x);
    two.for_each([&](int y) {
      if (y <= x) return;
      PerpInfo info = classify_perp(idx, x, y, q, scratch);
      ++s.pairs;
      ++s.sizes[info.size];
      if (info.size == 1) {
        ++s.single_points;
        if (!s.first_single) s.first_single = {x, y};
        return;
      }
      ++s.ranks[info.polar_rank];
      if (info.grid) ++s.grids;
      else if (!s.first_non_grid) s.first_non_grid = {x, y};
      if (info.polar_rank < 0 && !s.first_non_polar) {
        s.first_non_polar = {x, y};
        s.first_failure = info.failure;
      }
    });
  });
  PerpSummary total;
  for (auto& s : per) {
    total.pairs += s.pairs;
    for (auto [k, v] : s.sizes) total.sizes[k] += v;
    for (auto [k, v] : s.ranks) total.ranks[k] += v;
    total.grids += s.grids;
    total.single_points += s.single_points;
    if (!total.first_non_polar && s.first_non_polar) {
      total.first_non_polar = s.first_non_polar;
      total.first_failure = s.first_failure;
    }
    if (!total.first_single && s.first_single) total.first_single = s.first_single;
    if (!total.first_non_grid && s.first_non_grid) total.first_non_grid = s.first_non_grid;
  }
  return total;
}

struct ParapolarReport {
  AxiomReport report;
  bool strong = false;
  bool uniform = false;
  PerpSummary perps;
};

/// Parapolar space of symplectic rank >= r: connected gamma space; every
/// non-collinear perp is empty, a point, or a polar space of rank >= r-1;
/// every line has two non-collinear points in its perp. `strong` means no
/// distance-2 pair has a single-point perp, `uniform` that all perp polar
/// ranks agree.
inline ParapolarReport check_parapolar(const GeometryIndex& idx, int r) {
  const Geometry& d = idx.geometry();
  const Graph& g = idx.collinearity();
  ParapolarReport out;
  out.report.axiom = "parapolar:" + std::to_string(r);
  auto fail = [&](std::vector<int> w, std::string why) {
    out.report.holds = false;
    out.report.witness = std::move(w);
    out.report.detail = std::move(why);
    return out;
  };
  if (d.n_points() == 0 || !is_connected(g)) return fail({}, "point graph is not connected");
  auto gamma = check_gamma(idx);
  if (!gamma.holds) return fail(gamma.witness, gamma.detail);
  auto q = uniform_order(d);
  if (!q) return fail({}, "lines have different sizes");
  for (std::size_t li = 0; li < d.lines().size(); ++li) {
    VertexSet lp = closed_perp(g, d.lines()[li]);
    bool found = false;
    lp.for_each([&](int u) {
      if (!found && !lp.is_subset_of(g.closed_neighbors(u))) found = true;
    });
    if (!found) return fail({static_cast<int>(li)}, "perp of line " + std::to_string(li) + " has no two non-collinear points");
  }
  out.perps = summarize_perps(idx, *q);
  if (out.perps.first_non_polar) {
    auto [x, y] = *out.perps.first_non_polar;
    return fail({x, y}, "perp of non-collinear pair is not a polar space: " + out.perps.first_failure);
  }
  for (auto [rank, count] : out.perps.ranks) {
    if (rank < r - 1) {
      return fail({}, "some perp is a polar space of rank " + std::to_string(rank) + " < " + std::to_string(r - 1));
    }
  }
  out.report.holds = true;
  out.strong = out.perps.single_points == 0;
  out.uniform = out.perps.ranks.size() <= 1;
  if (out.perps.ranks.size() == 1) out.report.rank = out.perps.ranks.begin()->first + 1;
  out.report.detail = std::string(out.strong ? "strong" : "not strong") + ", " + (out.uniform ? "uniform" : "not uniform");
  return out;
}
inline ParapolarReport check_parapolar(const Geometry& d, int r) { return check_parapolar(GeometryIndex(d), r); }

}  // namespace lieprobe
