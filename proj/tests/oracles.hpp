#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// into lieprobe beyond reading a Graph's adjacency, so a bug in the library
// cannot hide behind the same bug in the expected values.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lieprobe/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const lieprobe::Graph& g) {
  const int n = static_cast<int>(g.size());
  Matrix m(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) m[u][v] = g.adjacent(u, v);
  return m;
}

inline lieprobe::Graph from_matrix(const Matrix& m) {
  lieprobe::Graph g(m.size());
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 1; v < m.size(); ++v)
      if (m[u][v]) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

inline lieprobe::Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  lieprobe::Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Small named graphs

inline lieprobe::Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return from_edges(n, e);
}

inline lieprobe::Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return from_edges(n, e);
}

inline lieprobe::Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return from_edges(n, e);
}

inline lieprobe::Graph star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return from_edges(leaves + 1, e);
}

// Kneser graph K(5,2).
inline lieprobe::Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) e.push_back({i, j});
    }
  return from_edges(10, e);
}

// Johnson graph J(n,2): 2-subsets adjacent when they share one element.
inline lieprobe::Graph johnson2(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      int common = (a == c) + (a == d) + (b == c) + (b == d);
      if (common == 1) e.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  return from_edges(static_cast<int>(pairs.size()), e);
}

// n x n rook graph (q x q grid).
inline lieprobe::Graph rook(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n * n; ++a)
    for (int b = a + 1; b < n * n; ++b)
      if (a / n == b / n || a % n == b % n) e.push_back({a, b});
  return from_edges(n * n, e);
}

// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
inline lieprobe::Graph shrikhande() {
  auto id = [](int a, int b) { return ((a % 4 + 4) % 4) * 4 + ((b % 4 + 4) % 4); };
  const int gens[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  std::set<std::pair<int, int>> e;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (auto& g : gens) {
        int u = id(a, b), v = id(a + g[0], b + g[1]);
        e.insert({std::min(u, v), std::max(u, v)});
      }
  return from_edges(16, {e.begin(), e.end()});
}

inline lieprobe::Graph paley(int p) {
  std::set<int> squares;
  for (int x = 1; x < p; ++x) squares.insert(x * x % p);
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b)
      if (squares.count((b - a) % p)) e.push_back({a, b});
  return from_edges(p, e);
}

// Random d-regular graph on n vertices by the configuration model with
// restarts; simple (no loops or multi-edges).
inline lieprobe::Graph random_regular(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> e;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v || e.count({std::min(u, v), std::max(u, v)})) ok = false;
      e.insert({std::min(u, v), std::max(u, v)});
    }
    if (ok) return from_edges(n, {e.begin(), e.end()});
  }
}

// ---------------------------------------------------------------------------
// Graph computations by definition

// Closed neighbourhood of x including x.
inline std::set<int> closed_nbhd(const Matrix& m, int x) {
  std::set<int> s{x};
  for (int v = 0; v < static_cast<int>(m.size()); ++v)
    if (m[x][v]) s.insert(v);
  return s;
}

// Vertices adjacent or equal to every member of s.
inline std::set<int> perp(const Matrix& m, const std::set<int>& s) {
  std::set<int> out;
  for (int v = 0; v < static_cast<int>(m.size()); ++v) {
    bool ok = true;
    for (int x : s) ok = ok && (v == x || m[v][x]);
    if (ok) out.insert(v);
  }
  return out;
}

inline std::vector<std::vector<int>> all_distances(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j)
      if (m[i][j]) d[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline int diameter(const Matrix& m) {
  int best = 0;
  for (auto& row : all_distances(m))
    for (int x : row) best = std::max(best, x);
  return best;
}

struct Srg {
  bool regular = false;
  int v = 0, k = 0, lambda = 0, mu = 0;
};

// Strongly regular parameters when the common-neighbour counts are constant.
inline std::optional<Srg> srg(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::set<int> deg, lam, mu;
  for (int u = 0; u < n; ++u) {
    deg.insert(static_cast<int>(std::count(m[u].begin(), m[u].end(), true)));
    for (int v = u + 1; v < n; ++v) {
      int c = 0;
      for (int w = 0; w < n; ++w) c += m[u][w] && m[v][w];
      (m[u][v] ? lam : mu).insert(c);
    }
  }
  if (deg.size() != 1 || lam.size() != 1 || mu.size() != 1) return std::nullopt;
  return Srg{true, n, *deg.begin(), *lam.begin(), *mu.begin()};
}

// Maximal cliques by plain Bron-Kerbosch without pivoting.
inline void maximal_cliques(const Matrix& m, std::vector<int> r, std::vector<int> p, std::vector<int> x,
                            std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    std::sort(r.begin(), r.end());
    out.push_back(r);
    return;
  }
  while (!p.empty()) {
    int v = p.back();
    p.pop_back();
    std::vector<int> np, nx;
    for (int w : p)
      if (m[v][w]) np.push_back(w);
    for (int w : x)
      if (m[v][w]) nx.push_back(w);
    auto nr = r;
    nr.push_back(v);
    maximal_cliques(m, nr, np, nx, out);
    x.push_back(v);
  }
}

inline std::vector<std::vector<int>> maximal_cliques(const Matrix& m) {
  std::vector<int> all(m.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<int>> out;
  maximal_cliques(m, {}, all, {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Isomorphism by backtracking over vertex images with adjacency pruning
// and degree filtering. Only meant for graphs of a few dozen vertices.
inline bool isomorphic(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  auto degs = [](const Matrix& m) {
    std::vector<int> d;
    for (auto& r : m) d.push_back(static_cast<int>(std::count(r.begin(), r.end(), true)));
    return d;
  };
  auto da = degs(a), db = degs(b);
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> go = [&](int i) {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || da[i] != db[c]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = a[i][j] == b[c][map[j]];
      if (!ok) continue;
      map[i] = c;
      used[c] = true;
      if (go(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return go(0);
}

// True iff mapping is a bijection carrying adjacency and non-adjacency.
inline bool is_isomorphism(const lieprobe::Graph& g, const lieprobe::Graph& h, const std::vector<int>& mapping) {
  const int n = static_cast<int>(g.size());
  if (static_cast<int>(h.size()) != n || static_cast<int>(mapping.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : mapping) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(mapping[u], mapping[v])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Finite fields by explicit polynomial arithmetic

struct Gf {
  int p = 2, e = 1;
  std::vector<int> modulus;  // monic, lowest degree first, length e+1

  int q() const {
    int r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
  }
  std::vector<int> digits(int a) const {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i, a /= p) d[i] = a % p;
    return d;
  }
  int value(const std::vector<int>& d) const {
    int a = 0;
    for (int i = e - 1; i >= 0; --i) a = a * p + d[i];
    return a;
  }
  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < e; ++i) x[i] = (x[i] + y[i]) % p;
    return value(x);
  }
  int mul(int a, int b) const {
    auto x = digits(a), y = digits(b);
    std::vector<int> r(2 * e, 0);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    for (int k = 2 * e - 1; k >= e; --k) {
      int c = r[k];
      for (int i = 0; i <= e; ++i) r[k - e + i] = ((r[k - e + i] - c * modulus[i]) % p + p) % p;
    }
    r.resize(e);
    return value(r);
  }
};

// Conway polynomials for the non-prime orders up to 9.
inline Gf gf(int q) {
  switch (q) {
    case 4: return {2, 2, {1, 1, 1}};       // x^2 + x + 1
    case 8: return {2, 3, {1, 1, 0, 1}};    // x^3 + x + 1
    case 9: return {3, 2, {2, 2, 1}};       // x^2 + 2x + 2
    default: return {q, 1, {0, 1}};
  }
}

// ---------------------------------------------------------------------------
// Counting formulas

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Number of k-dimensional subspaces of F_q^d: ordered bases of k vectors in
// F_q^d divided by ordered bases of F_q^k.
inline long long subspace_count(int d, int k, long long q) {
  if (k < 0 || k > d) return 0;
  __int128 num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(q, d) - ipow(q, i);
    den *= ipow(q, k) - ipow(q, i);
  }
  return static_cast<long long>(num / den);
}

// F_2 vectors as bitmasks: the span of a set of vectors as a bitmask set.
inline std::set<int> span2(const std::vector<int>& vs) {
  std::set<int> s{0};
  for (int v : vs) {
    std::set<int> t = s;
    for (int x : s) t.insert(x ^ v);
    s = t;
  }
  return s;
}

// All k-dimensional subspaces of F_2^d, each as the sorted set of its
// nonzero vectors.
inline std::vector<std::vector<int>> subspaces2(int d, int k) {
  std::set<std::vector<int>> found;
  std::function<void(std::vector<int>, int)> rec = [&](std::vector<int> basis, int start) {
    if (static_cast<int>(basis.size()) == k) {
      auto s = span2(basis);
      s.erase(0);
      found.insert({s.begin(), s.end()});
      return;
    }
    auto cur = span2(basis);
    for (int v = start; v < (1 << d); ++v) {
      if (cur.count(v)) continue;
      auto b = basis;
      b.push_back(v);
      rec(b, v + 1);
    }
  };
  rec({}, 1);
  return {found.begin(), found.end()};
}

// Nonzero vectors (bitmask, coordinate i = bit i) of the F_2 subspace
// spanned by the rows of a generator label such as "[(0,1,0)(1,0,1)]".
inline std::set<int> label_points2(const std::string& label) {
  std::vector<int> rows;
  int v = 0, bit = 0;
  for (char c : label) {
    if (c == '(') {
      v = 0;
      bit = 0;
    } else if (c == '0' || c == '1') {
      v |= (c - '0') << bit++;
    } else if (c == ')') {
      rows.push_back(v);
    }
  }
  auto s = span2(rows);
  s.erase(0);
  return s;
}

inline int parity(int x) { return __builtin_popcount(static_cast<unsigned>(x)) & 1; }

// Standard alternating form x0y1 + x1y0 + x2y3 + ... over F_2.
inline int symplectic2(int x, int y) {
  int r = 0;
  for (int i = 0; i < 16; i += 2) r ^= (((x >> i) & 1) & ((y >> (i + 1)) & 1)) ^ (((x >> (i + 1)) & 1) & ((y >> i) & 1));
  return r;
}

// Hyperbolic quadratic form x0x1 + x2x3 + ... over F_2.
inline int hyperbolic2(int x) {
  int r = 0;
  for (int i = 0; i < 16; i += 2) r ^= ((x >> i) & 1) & ((x >> (i + 1)) & 1);
  return r;
}

// ---------------------------------------------------------------------------
// Point-line geometries over F_2 built straight from their definitions.

struct RawGeometry {
  int n = 0;
  std::vector<std::vector<int>> lines;  // each sorted; list sorted
};

inline RawGeometry finish(int n, std::vector<std::vector<int>> lines) {
  for (auto& l : lines) std::sort(l.begin(), l.end());
  std::sort(lines.begin(), lines.end());
  return {n, std::move(lines)};
}

// PG(d-1, 2): point v (nonzero bitmask) has index v - 1.
inline RawGeometry projective2(int d) {
  std::vector<std::vector<int>> lines;
  for (auto& l : subspaces2(d, 2)) {
    std::vector<int> pts;
    for (int v : l) pts.push_back(v - 1);
    lines.push_back(pts);
  }
  return finish((1 << d) - 1, std::move(lines));
}

// Polar space over F_2 from a quadratic form `quad` with polar form `bil`
// (for the symplectic case quad is identically zero). Points are the
// singular vectors in increasing order; lines the totally singular 2-spaces.
inline RawGeometry polar2(int d, const std::function<int(int)>& quad, const std::function<int(int, int)>& bil) {
  std::vector<int> index(1 << d, -1);
  int n = 0;
  for (int v = 1; v < (1 << d); ++v)
    if (quad(v) == 0) index[v] = n++;
  std::vector<std::vector<int>> lines;
  for (auto& l : subspaces2(d, 2)) {
    bool ok = true;
    for (int a : l) {
      ok = ok && quad(a) == 0;
      for (int b : l) ok = ok && bil(a, b) == 0;
    }
    if (!ok) continue;
    std::vector<int> pts;
    for (int v : l) pts.push_back(index[v]);
    lines.push_back(pts);
  }
  return finish(n, std::move(lines));
}

inline RawGeometry symplectic_polar2(int d) {
  return polar2(d, [](int) { return 0; }, symplectic2);
}

inline RawGeometry hyperbolic_polar2(int d) {
  auto q = [](int x) { return hyperbolic2(x); };
  return polar2(d, q, [&](int x, int y) { return q(x ^ y) ^ q(x) ^ q(y); });
}

// Line Grassmannian of PG(n, 2): points are the 2-spaces of F_2^{n+1};
// lines are the pencils {L : p < L < pi} of a point p in a plane pi.
inline RawGeometry grassmann2(int n) {
  auto pts = subspaces2(n + 1, 2);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> lines;
  for (auto& plane : subspaces2(n + 1, 3)) {
    std::set<int> pl(plane.begin(), plane.end());
    for (int p : plane) {
      std::vector<int> pencil;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& l = pts[i];
        bool through = std::find(l.begin(), l.end(), p) != l.end();
        bool inside = std::all_of(l.begin(), l.end(), [&](int v) { return pl.count(v) > 0; });
        if (through && inside) pencil.push_back(static_cast<int>(i));
      }
      lines.push_back(pencil);
    }
  }
  return finish(static_cast<int>(pts.size()), std::move(lines));
}

// (s+1) x (s+1) grid: point (i, j) = i*(s+1) + j, rows and columns as lines.
inline RawGeometry grid(int s) {
  const int m = s + 1;
  std::vector<std::vector<int>> lines;
  for (int i = 0; i < m; ++i) {
    std::vector<int> row, col;
    for (int j = 0; j < m; ++j) {
      row.push_back(i * m + j);
      col.push_back(j * m + i);
    }
    lines.push_back(row);
    lines.push_back(col);
  }
  return finish(m * m, std::move(lines));
}

// Collinearity matrix of a raw geometry.
inline Matrix collinearity(const RawGeometry& d) {
  Matrix m(d.n, std::vector<bool>(d.n, false));
  for (auto& l : d.lines)
    for (int a : l)
      for (int b : l)
        if (a != b) m[a][b] = true;
  return m;
}

}  // namespace oracle
