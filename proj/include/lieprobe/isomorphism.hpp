#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "lieprobe/error.hpp"
#include "lieprobe/graph.hpp"

namespace lieprobe {

struct IsomorphismOptions {
  std::size_t max_vertices = 2500;
  std::size_t max_nodes = 2000000;
};

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<int> mapping;  // mapping[v in G] = vertex of H
  std::size_t nodes = 0;     // search nodes visited
};

/// True iff `mapping` is a bijection V(g) -> V(h) preserving adjacency and
/// non-adjacency.
inline bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& mapping) {
  if (g.size() != h.size() || mapping.size() != g.size()) return false;
  std::vector<char> hit(h.size(), 0);
  for (int w : mapping) {
    if (w < 0 || static_cast<std::size_t>(w) >= h.size() || hit[w]) return false;
    hit[w] = 1;
  }
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (g.adjacent(static_cast<int>(u), static_cast<int>(v)) != h.adjacent(mapping[u], mapping[v])) return false;
  return true;
}

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, const IsomorphismOptions& opt) : g_(g), h_(h), opt_(opt), n_(g.size()) {
    adj_.resize(2 * n_);
    auto ga = g.adjacency_lists();
    auto ha = h.adjacency_lists();
    for (std::size_t v = 0; v < n_; ++v) {
      adj_[v] = std::move(ga[v]);
      adj_[n_ + v].reserve(ha[v].size());
      for (int u : ha[v]) adj_[n_ + v].push_back(static_cast<int>(n_) + u);
    }
  }

  IsomorphismResult run() {
    std::vector<int> colors(2 * n_);
    for (std::size_t v = 0; v < 2 * n_; ++v) colors[v] = static_cast<int>(adj_[v].size());
    IsomorphismResult res;
    res.isomorphic = search(colors);
    res.nodes = nodes_;
    if (res.isomorphic) res.mapping = mapping_;
    return res;
  }

 private:
  bool search(std::vector<int> colors) {
    if (++nodes_ > opt_.max_nodes) {
      throw Error(ErrorCode::SizeLimitExceeded, "isomorphism search exceeded " + std::to_string(opt_.max_nodes) + " nodes");
    }
    colors = refine_colors(adj_, std::move(colors));
    int k = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<int> count_g(k, 0), count_h(k, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      ++count_g[colors[v]];
      ++count_h[colors[n_ + v]];
    }
    if (count_g != count_h) return false;

    int cell = -1;
    for (int c = 0; c < k; ++c)
      if (count_g[c] > 1 && (cell < 0 || count_g[c] < count_g[cell])) cell = c;
    if (cell < 0) {
      std::vector<int> h_of_color(k, -1);
      for (std::size_t v = 0; v < n_; ++v) h_of_color[colors[n_ + v]] = static_cast<int>(v);
      mapping_.assign(n_, -1);
      for (std::size_t v = 0; v < n_; ++v) mapping_[v] = h_of_color[colors[v]];
      return verify_isomorphism(g_, h_, mapping_);
    }
    int v = -1;
    for (std::size_t x = 0; x < n_ && v < 0; ++x)
      if (colors[x] == cell) v = static_cast<int>(x);
    for (std::size_t w = 0; w < n_; ++w) {
      if (colors[n_ + w] != cell) continue;
      auto next = colors;
      next[v] = k;
      next[n_ + w] = k;
      if (search(std::move(next))) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  IsomorphismOptions opt_;
  std::size_t n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mapping_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Exact isomorphism test by joint colour refinement of G and H with
/// individualization and backtracking. A positive answer carries a witness
/// that has been re-verified edge by edge.
inline IsomorphismResult are_isomorphic(const Graph& g, const Graph& h, const IsomorphismOptions& opt = {}) {
  if (std::max(g.size(), h.size()) > opt.max_vertices) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "isomorphism test limited to " + std::to_string(opt.max_vertices) + " vertices");
  }
  IsomorphismResult none;
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return none;
  std::vector<int> dg, dh;
  for (std::size_t v = 0; v < g.size(); ++v) {
    dg.push_back(g.degree(static_cast<int>(v)));
    dh.push_back(h.degree(static_cast<int>(v)));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return none;
  if (g.size() == 0) return {true, {}, 0};
  return detail::IsoSearch(g, h, opt).run();
}

}  // namespace lieprobe
