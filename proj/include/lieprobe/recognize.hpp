#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lieprobe/cliques.hpp"
#include "lieprobe/error.hpp"
#include "lieprobe/generators.hpp"
#include "lieprobe/geometry.hpp"
#include "lieprobe/graph.hpp"
#include "lieprobe/isomorphism.hpp"
#include "lieprobe/parallel.hpp"
#include "lieprobe/reconstruct.hpp"

namespace lieprobe {

struct Diagnostic {
  std::string code;
  std::string message;
  std::vector<int> witness;
};

inline Diagnostic diagnostic(const Error& e) { return {std::string(to_string(e.code())), e.message(), e.witness()}; }

// ---------------------------------------------------------------------------
// Strongly regular parameters

struct SrgParameters {
  bool strongly_regular = false;
  int v = 0, k = 0, lambda = 0, mu = 0;
  std::vector<int> witness;  // offending vertices when not strongly regular
  std::string detail;
};

inline SrgParameters srg_parameters(const Graph& g) {
  SrgParameters s;
  s.v = static_cast<int>(g.size());
  auto fail = [&](std::vector<int> w, std::string why) {
    s.strongly_regular = false;
    s.witness = std::move(w);
    s.detail = std::move(why);
    return s;
  };
  if (g.size() < 2) return fail({}, "fewer than two vertices");
  s.k = g.degree(0);
  for (std::size_t v = 1; v < g.size(); ++v)
    if (g.degree(static_cast<int>(v)) != s.k) return fail({0, static_cast<int>(v)}, "degrees differ");
  if (s.k == 0 || s.k + 1 == s.v) return fail({}, "complete or edgeless graph");
  const std::size_t n = g.size();
  std::vector<int> lam(n, -1), mu(n, -1);
  std::vector<std::vector<int>> bad(n);
  parallel_for(n, [&](std::size_t ui) {
    auto ru = g.row(static_cast<int>(ui));
    for (std::size_t vi = ui + 1; vi < n && bad[ui].empty(); ++vi) {
      auto rv = g.row(static_cast<int>(vi));
      int c = 0;
      for (std::size_t w = 0; w < ru.size(); ++w) c += std::popcount(ru[w] & rv[w]);
      int& slot = g.adjacent(static_cast<int>(ui), static_cast<int>(vi)) ? lam[ui] : mu[ui];
      if (slot < 0) slot = c;
      else if (slot != c) bad[ui] = {static_cast<int>(ui), static_cast<int>(vi)};
    }
  });
  int l = -1, m = -1;
  for (std::size_t u = 0; u < n; ++u) {
    if (!bad[u].empty()) return fail(bad[u], "common-neighbour counts differ");
    if (lam[u] >= 0) {
      if (l >= 0 && l != lam[u]) return fail({static_cast<int>(u)}, "lambda differs between pairs");
      l = lam[u];
    }
    if (mu[u] >= 0) {
      if (m >= 0 && m != mu[u]) return fail({static_cast<int>(u)}, "mu differs between pairs");
      m = mu[u];
    }
  }
  s.strongly_regular = true;
  s.lambda = std::max(l, 0);
  s.mu = m;
  return s;
}

// ---------------------------------------------------------------------------
// Recognition table

namespace detail {

inline long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > LLONG_MAX / b) return LLONG_MAX;
  return a * b;
}

inline long long sat_pow(long long q, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r = sat_mul(r, q);
  return r;
}

/// [m]_q = (q^m - 1)/(q - 1).
inline long long qint(int m, long long q) {
  long long r = 0;
  for (int i = 0; i < m; ++i) r = std::min(LLONG_MAX / 2, r + sat_pow(q, i));
  return r;
}

}  // namespace detail

constexpr int kTableMaxPolarRank = 8;
constexpr int kTableMaxGrassmann = 9;

/// Parameters a family member should show: points, collinearity degree,
/// diameter, maximal clique sizes of the point graph, and projective
/// dimensions of the maximal singular subspaces.
struct FamilyParameters {
  long long points = 0;
  long long degree = 0;
  int diameter = 0;
  std::vector<long long> clique_sizes;
  std::pair<int, int> dims{0, 0};
};

inline FamilyParameters family_parameters(const FamilyLabel& f) {
  using detail::qint;
  using detail::sat_mul;
  using detail::sat_pow;
  const long long q = f.q;
  const int n = f.n;
  FamilyParameters p;
  auto dims = [&](int a, int b) {
    p.dims = {std::min(a, b), std::max(a, b)};
    p.clique_sizes = {qint(p.dims.first + 1, q)};
    if (b != a) p.clique_sizes.push_back(qint(p.dims.second + 1, q));
  };
  switch (f.family) {
    case Family::PolarW:
    case Family::PolarQ:
    case Family::PolarQplus:
    case Family::PolarQminus: {
      const int e = polar_e(f.family);
      auto count = [&](int r) {
        return r <= 0 ? 1 : sat_mul(qint(r, q), sat_pow(q, r - 1 + e) + 1);
      };
      p.points = count(n);
      // x^perp \ {x} is q copies of the residual polar space of rank n-1;
      // for rank 1 the residual is empty.
      p.degree = n <= 1 ? 0 : sat_mul(q, count(n - 1));
      p.diameter = n <= 1 ? 1 : 2;
      dims(n - 1, n - 1);
      break;
    }
    case Family::Segre:
      p.points = sat_mul(q + 1, qint(n + 1, q));
      p.degree = q + qint(n + 1, q) - 1;
      p.diameter = 2;
      dims(1, n);
      break;
    case Family::A_n2:
      p.points = gaussian_binomial(n + 1, 2, q);
      p.degree = sat_mul(sat_mul(q + 1, q), qint(n - 1, q));
      p.diameter = std::min(2, n - 1);
      dims(2, n - 1);
      break;
    case Family::D_nn: {
      long long c = 1;
      for (int i = 1; i < n; ++i) c = sat_mul(c, sat_pow(q, i) + 1);
      p.points = c;
      p.degree = sat_mul(q, gaussian_binomial(n, 2, q));
      p.diameter = n / 2;
      dims(3, n - 1);
      break;
    }
    case Family::E6_1: {
      p.points = sat_mul(sat_pow(q, 12) - 1, sat_pow(q, 9) - 1) / ((sat_pow(q, 4) - 1) * (q - 1));
      long long c = 1;
      for (int i = 1; i < 5; ++i) c = sat_mul(c, sat_pow(q, i) + 1);
      p.degree = sat_mul(q, c);
      p.diameter = 2;
      dims(4, 5);
      break;
    }
    case Family::E7_7: {
      p.points = sat_mul(sat_mul(qint(14, q), sat_pow(q, 9) + 1), sat_pow(q, 5) + 1);
      FamilyParameters e6 = family_parameters({Family::E6_1, 6, f.q});
      p.degree = sat_mul(q, e6.points);
      p.diameter = 3;
      dims(5, 6);
      break;
    }
  }
  return p;
}

struct TableRow {
  FamilyLabel family;
  FamilyLabel local;
  std::pair<int, int> dims;
  int diameter = 0;
  int perp_rank = 0;  // polar rank of distance-2 perps; 0 for polar rows
  long long points = 0;
  bool has_generator = false;
};

/// Rows of the recognition table for field order q: polar spaces of rank
/// 3..kTableMaxPolarRank (four kinds), A_{n,2} for 4 <= n <= 9, D_{n,n}
/// for 5 <= n <= 9, E_{6,1} and E_{7,7}. D_{4,4} is the polar space
/// Q+(7,q) and is recognized through that row.
inline std::vector<TableRow> recognition_table(int q) {
  std::vector<TableRow> rows;
  auto add = [&](FamilyLabel fam, FamilyLabel local, int perp_rank, bool gen) {
    FamilyParameters p = family_parameters(fam);
    rows.push_back({fam, local, p.dims, p.diameter, perp_rank, p.points, gen});
  };
  for (Family k : {Family::PolarW, Family::PolarQ, Family::PolarQplus, Family::PolarQminus})
    for (int r = 3; r <= kTableMaxPolarRank; ++r) add({k, r, q}, {k, r - 1, q}, 0, true);
  for (int n = 4; n <= kTableMaxGrassmann; ++n) add({Family::A_n2, n, q}, {Family::Segre, n - 2, q}, 2, true);
  for (int n = 5; n <= 9; ++n) add({Family::D_nn, n, q}, {Family::A_n2, n - 1, q}, 3, true);
  add({Family::E6_1, 6, q}, {Family::D_nn, 5, q}, 4, false);
  add({Family::E7_7, 7, q}, {Family::E6_1, 6, q}, 5, false);
  return rows;
}

/// (local family, local n, dimension pair, diameter) of a row.
inline auto row_signature(const TableRow& r) { return std::make_tuple(r.local.family, r.local.n, r.dims, r.diameter); }

/// Pairs of rows with equal signatures; empty when the table discriminates.
inline std::vector<std::pair<std::string, std::string>> table_signature_collisions(int q) {
  auto rows = recognition_table(q);
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (row_signature(rows[i]) == row_signature(rows[j])) out.emplace_back(rows[i].family.name(), rows[j].family.name());
  return out;
}

// ---------------------------------------------------------------------------
// Local structure

/// |{x, y}^perp^perp| for the first non-adjacent pair (x = 0): q+1 for
/// symplectic spaces, 2 for quadrics over odd q. 0 if 0 sees everything.
inline int hyperbolic_line_size(const Graph& g) {
  if (g.size() == 0) return 0;
  VertexSet far = g.all() - g.closed_neighbors(0);
  if (far.empty()) return 0;
  return static_cast<int>(double_perp(g, VertexSet::of(g.size(), {0, far.first()})).count());
}

/// Geometry of the lines through p, with the pencils of lines through p in
/// the singular planes on p as lines. Points are labelled by line index in D.
inline Geometry point_residual(const GeometryIndex& idx, int p) {
  const Geometry& d = idx.geometry();
  const Graph& g = idx.collinearity();
  g.check(p);
  const auto& through = d.lines_through(p);
  const int m = static_cast<int>(through.size());
  auto other = [&](int li) { return d.lines()[li][0] == p ? d.lines()[li][1] : d.lines()[li][0]; };
  std::set<std::vector<int>> lines;
  std::vector<std::vector<char>> covered(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (covered[a][b]) continue;
      int x = other(through[a]);
      int y = other(through[b]);
      if (!g.adjacent(x, y)) continue;
      // The singular closure agrees with plane_span wherever the latter is a
      // plane, and stays a plane where the perp span swells (concurrent
      // non-coplanar lines in a line Grassmannian).
      auto plane = singular_closure(idx, VertexSet::of(g.size(), {p, x, y})).to_vector();
      std::vector<int> line;
      for (int c = 0; c < m; ++c) {
        const auto& l = d.lines()[through[c]];
        if (std::includes(plane.begin(), plane.end(), l.begin(), l.end())) line.push_back(c);
      }
      for (int u : line)
        for (int v : line) covered[u][v] = 1;
      lines.insert(std::move(line));
    }
  std::vector<std::string> labels;
  for (int li : through) labels.push_back(std::to_string(li));
  return Geometry(m, {lines.begin(), lines.end()}, std::move(labels));
}

inline Geometry point_residual(const Geometry& d, int p) { return point_residual(GeometryIndex(d), p); }

struct LocalSignature {
  long long points = 0;
  long long degree = -1;  // -1 when not regular
  int diameter = -1;      // -1 when disconnected
  std::vector<long long> clique_sizes;  // empty when not computed
};

inline LocalSignature graph_signature(const Graph& g, std::size_t clique_limit = 1000) {
  LocalSignature s;
  s.points = static_cast<long long>(g.size());
  if (g.size() == 0) return s;
  s.degree = g.degree(0);
  for (std::size_t v = 1; v < g.size(); ++v)
    if (g.degree(static_cast<int>(v)) != s.degree) s.degree = -1;
  s.diameter = is_connected(g) ? diameter(g) : -1;
  if (g.size() <= clique_limit) {
    std::set<long long> sizes;
    for_each_maximal_clique(g, [&](const VertexSet& c) { sizes.insert(static_cast<long long>(c.count())); });
    s.clique_sizes.assign(sizes.begin(), sizes.end());
  }
  return s;
}

inline bool matches(const LocalSignature& s, const FamilyParameters& p) {
  if (s.points != p.points || s.degree != p.degree || s.diameter != p.diameter) return false;
  if (s.clique_sizes.empty()) return true;
  auto want = p.clique_sizes;
  std::sort(want.begin(), want.end());
  return s.clique_sizes == want;
}

struct LocalResult {
  std::optional<FamilyLabel> label;
  int q = 0;
  LocalSignature signature;
  bool iso_confirmed = false;
  std::vector<Diagnostic> diagnostics;
};

struct LocalOptions {
  bool confirm = true;                // isomorphism check against a generated reference
  std::size_t confirm_limit = 500;    // quotient size bound for the check
  std::size_t max_nodes = 200000;
};

/// Identifies a graph as the point graph of one of the local families of the
/// recognition table (for order q) by its parameters.
inline std::optional<FamilyLabel> match_local_family(const Graph& qg, const LocalSignature& sig, int q, std::vector<Diagnostic>& diags) {
  std::vector<FamilyLabel> cands;
  std::set<std::pair<int, int>> seen;
  for (const auto& row : recognition_table(q)) {
    if (!seen.insert({static_cast<int>(row.local.family), row.local.n}).second) continue;
    if (matches(sig, family_parameters(row.local))) cands.push_back(row.local);
  }
  // Symplectic and parabolic spaces share parameters; over odd q the
  // hyperbolic lines tell them apart, over even q they are isomorphic.
  bool w = std::any_of(cands.begin(), cands.end(), [](const FamilyLabel& f) { return f.family == Family::PolarW; });
  bool pq = std::any_of(cands.begin(), cands.end(), [](const FamilyLabel& f) { return f.family == Family::PolarQ; });
  if (w && pq) {
    bool symplectic = q % 2 == 0 || hyperbolic_line_size(qg) == q + 1;
    std::erase_if(cands, [&](const FamilyLabel& f) { return f.family == (symplectic ? Family::PolarQ : Family::PolarW); });
  }
  if (cands.size() == 1) return cands.front();
  if (cands.empty()) {
    diags.push_back({"TableMismatch",
                     "local quotient with " + std::to_string(sig.points) + " points, degree " + std::to_string(sig.degree) + ", diameter " +
                         std::to_string(sig.diameter) + " matches no local family",
                     {}});
  } else {
    std::string names;
    for (const auto& c : cands) names += (names.empty() ? "" : ", ") + c.name();
    diags.push_back({"AmbiguousMatch", "local quotient matches " + names, {}});
  }
  return std::nullopt;
}

inline LocalResult classify_local(const Graph& g, int v, const LocalOptions& opt = {}) {
  LocalResult res;
  Graph qg;
  try {
    g.check(v);
    Graph l = local_graph(g, v);
    RayPartition rp = recover_rays(l);
    res.q = rp.q;
    qg = ray_quotient(l, rp);
  } catch (const Error& e) {
    res.diagnostics.push_back(diagnostic(detail::tag_vertex(e, v)));
    return res;
  }
  if (res.q > FieldTable::kMaxOrder) {
    res.diagnostics.push_back({"TableMismatch", "height " + std::to_string(res.q) + " is not a supported field order", {v}});
    return res;
  }
  res.signature = graph_signature(qg);
  auto label = match_local_family(qg, res.signature, res.q, res.diagnostics);
  if (!label) {
    for (auto& d : res.diagnostics) d.witness.insert(d.witness.begin(), v);
    return res;
  }
  if (opt.confirm && qg.size() <= opt.confirm_limit) {
    try {
      Graph ref = point_graph(generate(*label));
      IsomorphismOptions io;
      io.max_nodes = opt.max_nodes;
      auto iso = are_isomorphic(qg, ref, io);
      if (!iso.isomorphic) {
        res.diagnostics.push_back({"LocalIsomorphismFailed", "local quotient is not isomorphic to " + label->name(), {v}});
        return res;
      }
      res.iso_confirmed = true;
    } catch (const Error& e) {
      res.diagnostics.push_back(diagnostic(detail::tag_vertex(e, v)));
    }
  }
  res.label = label;
  return res;
}

// ---------------------------------------------------------------------------
// End-to-end recognition

struct LocalEvidence {
  int vertex = 0;
  std::string family;
  bool iso_confirmed = false;
};

struct PerpEvidence {
  long long pairs = 0;
  long long grids = 0;
  long long single_points = 0;
  std::map<int, long long> sizes;
  std::map<int, long long> ranks;
};

struct RecognitionReport {
  std::optional<FamilyLabel> outcome;
  int q = 0;
  std::string branch;
  std::string identification_level;  // line-set-verified | parameter-level; empty when Unknown
  struct {
    std::vector<LocalEvidence> local_families;
    long long locals_checked = 0;
    std::optional<std::pair<int, int>> max_singular_dims;
    std::optional<PerpEvidence> perps;
    std::optional<bool> strong;
    std::optional<bool> uniform;
    std::optional<int> diameter;
    long long points = 0;
    std::optional<long long> lines;
    std::optional<SrgParameters> srg;
  } evidence;
  std::vector<Diagnostic> diagnostics;
  std::optional<unsigned long long> seed;

  bool recognized() const { return outcome.has_value(); }
  std::string outcome_string() const { return outcome ? outcome->outcome() : "Unknown"; }
};

struct RecognizeOptions {
  std::size_t exhaustive_limit = 500;  // classify and confirm every local up to this size
  int sample = 5;                      // locals confirmed by isomorphism beyond it
  std::size_t iso_limit = 2500;
};

namespace detail {

/// Projective dimensions of the maximal singular subspaces through the
/// given points.
inline std::set<int> singular_dimensions(const GeometryIndex& idx, const std::vector<int>& at, int q, std::vector<Diagnostic>& diags) {
  std::set<int> dims;
  for (int p : at) {
    for (const auto& s : maximal_singular_subspaces(idx, {p})) {
      auto pc = check_projective_space(idx, s, q);
      if (!pc.holds) {
        diags.push_back({"MixedSingularDimensions", "maximal singular subspace is not projective: " + pc.detail, s});
        return {};
      }
      dims.insert(pc.dimension);
    }
  }
  return dims;
}

}  // namespace detail

inline RecognitionReport recognize(const Graph& g, const RecognizeOptions& opt = {}) {
  RecognitionReport rep;
  auto& ev = rep.evidence;
  ev.points = static_cast<long long>(g.size());
  auto unknown = [&](Diagnostic d) {
    rep.diagnostics.push_back(std::move(d));
    rep.outcome.reset();
    rep.identification_level.clear();
    return rep;
  };
  if (g.size() < 2) return unknown({"EmptyGraph", "graph needs at least two vertices", {}});
  if (!is_connected(g)) return unknown({"DisconnectedGraph", "graph is disconnected", {}});
  ev.diameter = diameter(g);
  if (*ev.diameter == 2) ev.srg = srg_parameters(g);

  int q = 0;
  try {
    q = height(g);
  } catch (const Error& e) {
    return unknown(diagnostic(e));
  }
  rep.q = q;
  if (q > FieldTable::kMaxOrder) return unknown({"TableMismatch", "height " + std::to_string(q) + " is not a supported field order", {}});

  Geometry d;
  try {
    d = build_geometry(g);
  } catch (const Error& e) {
    return unknown(diagnostic(e));
  }
  ev.lines = static_cast<long long>(d.lines().size());
  GeometryIndex idx(d);
  auto gamma = check_gamma(idx);
  if (!gamma.holds) return unknown({"GammaViolated", gamma.detail, gamma.witness});

  // Local classification: every vertex by parameters, isomorphism-confirmed
  // everywhere on small graphs and at the lowest-index vertices otherwise.
  const std::size_t n = g.size();
  const bool exhaustive = n <= opt.exhaustive_limit;
  std::vector<LocalResult> locals(n);
  parallel_for(n, [&](std::size_t v) {
    LocalOptions lo;
    lo.confirm = exhaustive || v < static_cast<std::size_t>(opt.sample);
    locals[v] = classify_local(g, static_cast<int>(v), lo);
  });
  ev.locals_checked = static_cast<long long>(n);
  for (std::size_t v = 0; v < n && static_cast<int>(v) < opt.sample; ++v) {
    ev.local_families.push_back({static_cast<int>(v), locals[v].label ? locals[v].label->name() : "Unknown", locals[v].iso_confirmed});
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!locals[v].label) {
      for (auto& dg : locals[v].diagnostics) rep.diagnostics.push_back(dg);
      return unknown({"LocalUnknown", "local structure at vertex " + std::to_string(v) + " is not in the table", {static_cast<int>(v)}});
    }
    if (!(*locals[v].label == *locals[0].label)) {
      return unknown({"LocalMismatch", "vertices 0 and " + std::to_string(v) + " have local families " + locals[0].label->name() + " and " +
                                           locals[v].label->name(),
                      {0, static_cast<int>(v)}});
    }
    if (locals[v].q != q) return unknown({"HeightMismatch", "local height differs", {static_cast<int>(v)}});
  }
  const FamilyLabel local = *locals[0].label;

  std::vector<TableRow> cands;
  auto shult = check_shult(idx);
  if (shult.holds) {
    rep.branch = "polar";
    int r = 0;
    try {
      r = *polar_rank(idx).rank;
    } catch (const Error& e) {
      return unknown(diagnostic(e));
    }
    ev.max_singular_dims = std::make_pair(r - 1, r - 1);
    if (r < 3) return unknown({"RankTooSmall", "polar space of rank " + std::to_string(r) + " is below the table range", {}});
    for (const auto& row : recognition_table(q))
      if (row.perp_rank == 0 && row.family.n == r && row.points == ev.points && row.local == local) cands.push_back(row);
  } else {
    auto pp = check_parapolar(idx, 3);
    PerpEvidence pe;
    pe.pairs = pp.perps.pairs;
    pe.grids = pp.perps.grids;
    pe.single_points = pp.perps.single_points;
    pe.sizes = pp.perps.sizes;
    pe.ranks = pp.perps.ranks;
    ev.perps = pe;
    if (!pp.report.holds) return unknown({"NotParapolar", pp.report.detail, pp.report.witness});
    ev.strong = pp.strong;
    ev.uniform = pp.uniform;
    if (!pp.strong) {
      auto w = pp.perps.first_single ? std::vector<int>{pp.perps.first_single->first, pp.perps.first_single->second} : std::vector<int>{};
      return unknown({"NotStrong", "some pair at distance 2 has a single-point perp", w});
    }
    if (!pp.uniform) return unknown({"MixedPerpRanks", "perps of distance-2 pairs have different polar ranks", {}});
    int perp_rank = pp.perps.ranks.empty() ? 0 : pp.perps.ranks.begin()->first;
    if (perp_rank == 2 && pe.grids == pe.pairs) {
      rep.branch = "grassmann";
    } else {
      rep.branch = "parapolar";
      if (perp_rank == 2) {
        auto w = pp.perps.first_non_grid ? std::vector<int>{pp.perps.first_non_grid->first, pp.perps.first_non_grid->second} : std::vector<int>{};
        return unknown({"NotGrid", "rank-2 perps that are not grids", w});
      }
    }
    std::vector<int> at;
    for (int p = 0; p < static_cast<int>(n) && p < opt.sample; ++p) at.push_back(p);
    std::vector<Diagnostic> dd;
    std::set<int> dims;
    try {
      dims = detail::singular_dimensions(idx, at, q, dd);
    } catch (const Error& e) {
      return unknown(diagnostic(e));
    }
    if (!dd.empty()) return unknown(dd.front());
    if (dims.empty() || dims.size() > 2) return unknown({"MixedSingularDimensions", "maximal singular subspaces of more than two dimensions", {}});
    ev.max_singular_dims = std::make_pair(*dims.begin(), *dims.rbegin());
    for (const auto& row : recognition_table(q))
      if (row.perp_rank == perp_rank && row.dims == *ev.max_singular_dims && row.diameter == *ev.diameter && row.points == ev.points &&
          row.local == local)
        cands.push_back(row);
  }
  if (cands.empty()) {
    return unknown({"TableMismatch", "no table row for " + std::to_string(ev.points) + " points with local family " + local.name(), {}});
  }
  if (cands.size() > 1) return unknown({"AmbiguousMatch", "several table rows match", {}});
  const TableRow& row = cands.front();
  if (row.family.family == Family::A_n2 && ev.srg && ev.srg->strongly_regular && ev.srg->mu != (q + 1) * (q + 1)) {
    return unknown({"MuMismatch", "grassmann branch with mu " + std::to_string(ev.srg->mu), {}});
  }

  rep.identification_level = "parameter-level";
  if (row.has_generator) {
    try {
      Geometry ref = generate(row.family);
      bool same = ref == d;
      if (!same && n <= opt.iso_limit) {
        auto iso = are_isomorphic(point_graph(ref), g);
        if (!iso.isomorphic) return unknown({"GeneratorMismatch", "point graph is not isomorphic to " + row.family.name(), {}});
        same = true;
      }
      if (same) rep.identification_level = "line-set-verified";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InstanceTooLarge && e.code() != ErrorCode::SizeLimitExceeded) return unknown(diagnostic(e));
    }
  }
  rep.outcome = row.family;
  return rep;
}

}  // namespace lieprobe
