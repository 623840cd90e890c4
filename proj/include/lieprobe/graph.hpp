#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lieprobe/bitset.hpp"
#include "lieprobe/error.hpp"

namespace lieprobe {

/// Finite simple graph with bit-packed symmetric adjacency rows.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 40000;

  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), stride_(words_for(n)) {
    if (n > kMaxVertices) {
      throw Error(ErrorCode::SizeLimitExceeded, std::to_string(n) + " vertices exceeds the limit of " + std::to_string(kMaxVertices));
    }
    bits_.assign(n_ * stride_, 0);
  }

  static Graph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t size() const { return n_; }
  std::size_t stride() const { return stride_; }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw Error(ErrorCode::MalformedInput, "loop at vertex " + std::to_string(u), {u});
    set_bit(u, v);
    set_bit(v, u);
  }

  bool adjacent(int u, int v) const { return (bits_[u * stride_ + (v >> 6)] >> (v & 63)) & 1; }

  std::span<const Word> row(int v) const { return {bits_.data() + v * stride_, stride_}; }

  VertexSet neighbors(int v) const { return VertexSet(n_, row(v)); }
  VertexSet closed_neighbors(int v) const {
    VertexSet s = neighbors(v);
    s.set(v);
    return s;
  }
  VertexSet all() const { return VertexSet(n_, true); }

  int degree(int v) const {
    int d = 0;
    for (Word w : row(v)) d += std::popcount(w);
    return d;
  }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (std::size_t v = 0; v < n_; ++v) m += degree(static_cast<int>(v));
    return m / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < n_; ++u) {
      neighbors(static_cast<int>(u)).for_each([&](int v) {
        if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
      });
    }
    return out;
  }

  std::vector<std::vector<int>> adjacency_lists() const {
    std::vector<std::vector<int>> out(n_);
    for (std::size_t v = 0; v < n_; ++v) out[v] = neighbors(static_cast<int>(v)).to_vector();
    return out;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  /// Adjacency equality; labels are provenance only.
  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  void check(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= n_) {
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_) + "-1", {v});
    }
  }

 private:
  void set_bit(int u, int v) { bits_[u * stride_ + (v >> 6)] |= Word{1} << (v & 63); }

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
  std::vector<std::string> labels_;
};

/// Intersects `acc` with the closed neighbourhood of v.
inline void intersect_closed(const Graph& g, VertexSet& acc, int v) {
  bool keep = acc.test(v);
  auto r = g.row(v);
  auto w = acc.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] &= r[i];
  if (keep) acc.set(v);
}

/// { v : v equal or adjacent to every s in S }; all vertices when S is empty.
inline VertexSet closed_perp(const Graph& g, const VertexSet& s) {
  VertexSet acc = g.all();
  s.for_each([&](int v) {
    g.check(v);
    intersect_closed(g, acc, v);
  });
  return acc;
}

inline VertexSet closed_perp(const Graph& g, std::initializer_list<int> s) {
  VertexSet acc = g.all();
  for (int v : s) {
    g.check(v);
    intersect_closed(g, acc, v);
  }
  return acc;
}

inline VertexSet closed_perp(const Graph& g, const std::vector<int>& s) {
  VertexSet acc = g.all();
  for (int v : s) {
    g.check(v);
    intersect_closed(g, acc, v);
  }
  return acc;
}

/// (S^perp)^perp with the closed perp.
inline VertexSet double_perp(const Graph& g, const VertexSet& s) { return closed_perp(g, closed_perp(g, s)); }

struct InducedSubgraph {
  Graph graph;
  std::vector<int> origin;  // origin[i] = vertex of the parent graph
};

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  InducedSubgraph out{Graph(vertices.size()), vertices};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.check(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (int v : vertices) labels.push_back(std::to_string(v));
  out.graph.set_labels(std::move(labels));
  return out;
}

/// The graph induced on the open neighbourhood of v; labels hold the
/// original vertex indices.
inline InducedSubgraph local_graph_with_origin(const Graph& g, int v) {
  g.check(v);
  return induced_subgraph(g, g.neighbors(v).to_vector());
}

inline Graph local_graph(const Graph& g, int v) { return local_graph_with_origin(g, v).graph; }

/// q-clique extension: vertex (x, i) has index x*q + i.
inline Graph clique_extension(const Graph& g, int q) {
  if (q < 1) throw Error(ErrorCode::InvalidParameters, "clique extension needs q >= 1");
  const std::size_t n = g.size();
  Graph out(n * q);
  for (std::size_t x = 0; x < n; ++x) {
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) out.add_edge(static_cast<int>(x * q + i), static_cast<int>(x * q + j));
    g.neighbors(static_cast<int>(x)).for_each([&](int y) {
      if (static_cast<std::size_t>(y) <= x) return;
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) out.add_edge(static_cast<int>(x * q + i), static_cast<int>(y * q + j));
    });
  }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x)
    for (int i = 0; i < q; ++i) labels.push_back(std::to_string(x) + ":" + std::to_string(i + 1));
  out.set_labels(std::move(labels));
  return out;
}

/// BFS distances from `source`; -1 for unreachable vertices.
inline std::vector<int> distances_from(const Graph& g, int source) {
  g.check(source);
  std::vector<int> dist(g.size(), -1);
  VertexSet seen(g.size());
  VertexSet frontier(g.size());
  frontier.set(source);
  seen.set(source);
  dist[source] = 0;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next(g.size());
    frontier.for_each([&](int v) {
      auto r = g.row(v);
      auto w = next.words();
      for (std::size_t i = 0; i < w.size(); ++i) w[i] |= r[i];
    });
    next -= seen;
    next.for_each([&](int v) { dist[v] = d; });
    seen |= next;
    frontier = std::move(next);
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  auto d = distances_from(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

inline int eccentricity(const Graph& g, int v) {
  auto d = distances_from(g, v);
  int e = 0;
  for (int x : d) {
    if (x < 0) throw Error(ErrorCode::DisconnectedGraph, "graph is disconnected", {v});
    e = std::max(e, x);
  }
  return e;
}

inline int diameter(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  int diam = 0;
  for (std::size_t v = 0; v < g.size(); ++v) diam = std::max(diam, eccentricity(g, static_cast<int>(v)));
  return diam;
}

/// One round-stable 1-dimensional Weisfeiler-Leman refinement of `colors`
/// over a neighbour-list graph. New colours are numbered by the sorted order
/// of (old colour, sorted neighbour colours), so the numbering depends only
/// on the signatures and is isomorphism invariant.
inline std::vector<int> refine_colors(const std::vector<std::vector<int>>& adj, std::vector<int> colors) {
  const std::size_t n = adj.size();
  std::size_t classes = 0;
  {
    auto c = colors;
    std::sort(c.begin(), c.end());
    classes = std::unique(c.begin(), c.end()) - c.begin();
  }
  std::vector<std::vector<int>> sig(n);
  std::vector<int> order(n);
  for (;;) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.reserve(adj[v].size() + 1);
      for (int u : adj[v]) s.push_back(colors[u]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), colors[v]);
    }
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> next(n);
    int c = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++c;
      next[order[i]] = c;
    }
    std::size_t next_classes = static_cast<std::size_t>(c + 1);
    colors = std::move(next);
    if (next_classes == classes) return colors;
    classes = next_classes;
  }
}

/// Coarsest equitable partition refining the degree partition.
inline std::vector<int> color_refine(const Graph& g) {
  std::vector<int> deg(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) deg[v] = g.degree(static_cast<int>(v));
  return refine_colors(g.adjacency_lists(), deg);
}

/// Class sizes indexed by colour.
inline std::vector<int> color_histogram(const std::vector<int>& colors) {
  int k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  std::vector<int> h(k, 0);
  for (int c : colors) ++h[c];
  return h;
}

}  // namespace lieprobe
