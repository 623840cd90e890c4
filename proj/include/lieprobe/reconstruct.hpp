#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieprobe/error.hpp"
#include "lieprobe/geometry.hpp"
#include "lieprobe/graph.hpp"
#include "lieprobe/parallel.hpp"

namespace lieprobe {

struct RayPartition {
  std::vector<std::vector<int>> rays;  // sorted; ordered by smallest member
  std::vector<int> ray_of;             // vertex -> ray index
  int q = 0;
};

/// Rays of a local graph: ray(v) = (v^perp)^perp with the closed perp.
inline RayPartition recover_rays(const Graph& l) {
  const std::size_t n = l.size();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "local graph has no vertices");
  RayPartition out;
  out.ray_of.assign(n, -1);
  std::vector<VertexSet> ray(n, VertexSet(n));
  for (std::size_t v = 0; v < n; ++v) ray[v] = double_perp(l, VertexSet::of(n, {static_cast<int>(v)}));
  for (std::size_t v = 0; v < n; ++v) {
    if (out.ray_of[v] >= 0) continue;
    const int id = static_cast<int>(out.rays.size());
    ray[v].for_each([&](int u) {
      if (!(ray[u] == ray[v])) {
        throw Error(ErrorCode::RaysNotPartition, "rays of " + std::to_string(v) + " and " + std::to_string(u) + " overlap but differ",
                    {static_cast<int>(v), u});
      }
      out.ray_of[u] = id;
    });
    out.rays.push_back(ray[v].to_vector());
  }
  for (const auto& r : out.rays)
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j)
        if (!l.adjacent(r[i], r[j])) throw Error(ErrorCode::RayNotClique, "ray contains non-adjacent vertices", {r[i], r[j]});
  for (const auto& r : out.rays) {
    if (r.size() != out.rays.front().size()) {
      throw Error(ErrorCode::RaysUnequalSize,
                  "rays of sizes " + std::to_string(out.rays.front().size()) + " and " + std::to_string(r.size()),
                  {out.rays.front().front(), r.front()});
    }
  }
  out.q = static_cast<int>(out.rays.front().size());
  if (out.q < 2) throw Error(ErrorCode::HeightTooSmall, "rays are single vertices", {0});
  if (out.rays.size() == 1) throw Error(ErrorCode::TrivialLocalGraph, "the whole local graph is a single ray", {0});
  return out;
}

namespace detail {

inline Error tag_vertex(const Error& e, int v) {
  std::vector<int> w{v};
  w.insert(w.end(), e.witness().begin(), e.witness().end());
  return Error(e.code(), "at vertex " + std::to_string(v) + ": " + e.message(), std::move(w));
}

}  // namespace detail

/// Common ray size of all local graphs.
inline int height(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "graph is disconnected");
  std::vector<int> qs(g.size(), 0);
  parallel_for(g.size(), [&](std::size_t v) {
    try {
      qs[v] = recover_rays(local_graph(g, static_cast<int>(v))).q;
    } catch (const Error& e) {
      throw detail::tag_vertex(e, static_cast<int>(v));
    }
  });
  for (std::size_t v = 1; v < g.size(); ++v) {
    if (qs[v] != qs[0]) {
      throw Error(ErrorCode::HeightMismatch,
                  "vertex 0 has height " + std::to_string(qs[0]) + ", vertex " + std::to_string(v) + " has height " + std::to_string(qs[v]),
                  {0, static_cast<int>(v), qs[0], qs[v]});
    }
  }
  return qs[0];
}

struct ExtendedRay {
  std::vector<int> vertices;
  std::pair<int, int> generators;
};

/// (x^perp n p^perp)^perp for adjacent p, x. With expected_q > 0 the result
/// must have expected_q + 1 vertices; in any case it must not swallow the
/// closed neighbourhood of p or x.
inline ExtendedRay extended_ray(const Graph& g, int p, int x, int expected_q = 0) {
  g.check(p);
  g.check(x);
  if (p == x || !g.adjacent(p, x)) throw Error(ErrorCode::NotAdjacent, "extended ray needs adjacent vertices", {p, x});
  VertexSet r = closed_perp(g, closed_perp(g, {p, x}));
  if (g.closed_neighbors(p).is_subset_of(r) || g.closed_neighbors(x).is_subset_of(r)) {
    throw Error(ErrorCode::WrongRaySize, "extended ray contains a whole closed neighbourhood", {p, x});
  }
  const int size = static_cast<int>(r.count());
  if (size < 3 || (expected_q > 0 && size != expected_q + 1)) {
    throw Error(ErrorCode::WrongRaySize,
                "extended ray has " + std::to_string(size) + " vertices" + (expected_q > 0 ? ", expected " + std::to_string(expected_q + 1) : ""),
                {p, x});
  }
  return {r.to_vector(), {p, x}};
}

/// Builds the point-line geometry whose lines are the extended rays.
inline Geometry build_geometry(const Graph& g) {
  const int q = height(g);
  const std::size_t n = g.size();
  std::vector<std::vector<std::vector<int>>> per(n);
  parallel_for(n, [&](std::size_t pi) {
    int p = static_cast<int>(pi);
    g.neighbors(p).for_each([&](int x) {
      if (x < p) return;
      auto r = extended_ray(g, p, x, q).vertices;
      // Each line is emitted from its two smallest vertices only.
      if (r[0] == p && r[1] == x) per[pi].push_back(std::move(r));
    });
  });
  std::vector<std::vector<int>> lines;
  for (auto& v : per)
    for (auto& l : v) lines.push_back(std::move(l));
  std::vector<std::string> labels;
  if (g.labels().size() == n) labels = g.labels();
  Geometry d(static_cast<int>(n), std::move(lines), std::move(labels));
  auto pl = check_partial_linear(d);
  if (!pl.holds) throw Error(ErrorCode::NotPartialLinear, pl.detail, pl.witness);
  Graph pg = point_graph(d);
  if (!(pg == g)) {
    for (auto [u, v] : g.edges())
      if (!pg.adjacent(u, v)) throw Error(ErrorCode::PointGraphMismatch, "edge lies on no recovered line", {u, v});
    throw Error(ErrorCode::PointGraphMismatch, "recovered lines add collinearities");
  }
  return d;
}

/// Recomputes extended_ray from every ordered pair of every line of `d`;
/// returns the first (u, v, line index) whose recomputation differs.
inline std::optional<std::vector<int>> two_point_violation(const Graph& g, const Geometry& d) {
  std::vector<std::optional<std::vector<int>>> bad(d.lines().size());
  parallel_for(d.lines().size(), [&](std::size_t li) {
    const auto& l = d.lines()[li];
    for (int u : l)
      for (int v : l) {
        if (u == v || bad[li]) continue;
        std::vector<int> r;
        try {
          r = extended_ray(g, u, v).vertices;
        } catch (const Error&) {
        }
        if (r != l) bad[li] = std::vector<int>{u, v, static_cast<int>(li)};
      }
  });
  for (auto& b : bad)
    if (b) return b;
  return std::nullopt;
}

/// Span (x^perp n y^perp n z^perp)^perp of a triangle not on one extended
/// ray; checked to be a projective plane of order q.
inline std::vector<int> plane_span(const Graph& g, int x, int y, int z) {
  for (int v : {x, y, z}) g.check(v);
  if (x == y || y == z || x == z) throw Error(ErrorCode::PreconditionViolated, "triangle vertices must be distinct", {x, y, z});
  if (!g.adjacent(x, y) || !g.adjacent(y, z) || !g.adjacent(x, z)) throw Error(ErrorCode::NotAdjacent, "triangle is not a clique", {x, y, z});
  auto rxy = extended_ray(g, x, y);
  if (std::binary_search(rxy.vertices.begin(), rxy.vertices.end(), z)) {
    throw Error(ErrorCode::PreconditionViolated, "third vertex lies on the extended ray of the other two", {x, y, z});
  }
  const int q = static_cast<int>(rxy.vertices.size()) - 1;
  VertexSet s = closed_perp(g, closed_perp(g, {x, y, z}));
  std::vector<int> pts = s.to_vector();
  std::vector<std::vector<int>> traces;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!g.adjacent(pts[i], pts[j])) {
        throw Error(ErrorCode::CollapsedSpan, "span contains non-adjacent vertices", {pts[i], pts[j]});
      }
      std::vector<int> r;
      try {
        r = extended_ray(g, pts[i], pts[j], q).vertices;
      } catch (const Error& e) {
        throw Error(ErrorCode::CollapsedSpan, "span line: " + e.message(), {pts[i], pts[j]});
      }
      std::vector<int> t;
      std::set_intersection(r.begin(), r.end(), pts.begin(), pts.end(), std::back_inserter(t));
      if (t[0] == pts[i] && t[1] == pts[j]) traces.push_back(std::move(t));
    }
  auto pc = check_projective_space_on(pts, traces, q);
  if (!pc.holds || pc.dimension != 2) {
    throw Error(ErrorCode::CollapsedSpan,
                "span of " + std::to_string(pts.size()) + " vertices is not a projective plane of order " + std::to_string(q) +
                    (pc.detail.empty() ? "" : ": " + pc.detail),
                {x, y, z});
  }
  return pts;
}

/// One vertex per ray; rays adjacent iff all cross pairs are adjacent.
inline Graph ray_quotient(const Graph& l, const RayPartition& p) {
  const std::size_t k = p.rays.size();
  Graph out(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      std::size_t hits = 0;
      for (int u : p.rays[a])
        for (int v : p.rays[b]) hits += l.adjacent(u, v);
      if (hits == p.rays[a].size() * p.rays[b].size()) {
        out.add_edge(static_cast<int>(a), static_cast<int>(b));
      } else if (hits != 0) {
        throw Error(ErrorCode::InconsistentCrossEdges, "rays " + std::to_string(a) + " and " + std::to_string(b) + " are partially joined",
                    {p.rays[a].front(), p.rays[b].front()});
      }
    }
  std::vector<std::string> labels;
  for (const auto& r : p.rays) {
    std::string s;
    for (int v : r) s += (s.empty() ? "" : ",") + (l.labels().size() == l.size() ? l.labels()[v] : std::to_string(v));
    labels.push_back("{" + s + "}");
  }
  out.set_labels(std::move(labels));
  return out;
}

}  // namespace lieprobe
