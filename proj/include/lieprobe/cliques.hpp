#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "lieprobe/bitset.hpp"
#include "lieprobe/graph.hpp"

namespace lieprobe {

namespace detail {

template <class Fn>
void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, Fn& fn) {
  if (p.empty() && x.empty()) {
    fn(r);
    return;
  }
  // Tomita pivot: the vertex of P u X with most neighbours in P.
  int pivot = -1;
  std::size_t best = 0;
  auto scan = [&](int u) {
    std::size_t c = 0;
    auto row = g.row(u);
    auto pw = p.words();
    for (std::size_t i = 0; i < pw.size(); ++i) c += std::popcount(pw[i] & row[i]);
    if (pivot < 0 || c > best) {
      pivot = u;
      best = c;
    }
  };
  p.for_each(scan);
  x.for_each(scan);
  VertexSet cand = p - g.neighbors(pivot);
  cand.for_each([&](int v) {
    VertexSet nv = g.neighbors(v);
    r.set(v);
    bron_kerbosch(g, r, p & nv, x & nv, fn);
    r.reset(v);
    p.reset(v);
    x.set(v);
  });
}

}  // namespace detail

/// Calls fn(const VertexSet&) for every maximal clique of the subgraph
/// induced on `within`.
template <class Fn>
void for_each_maximal_clique(const Graph& g, const VertexSet& within, Fn&& fn) {
  VertexSet r(g.size());
  detail::bron_kerbosch(g, r, within, VertexSet(g.size()), fn);
}

template <class Fn>
void for_each_maximal_clique(const Graph& g, Fn&& fn) {
  for_each_maximal_clique(g, g.all(), fn);
}

/// Maximal cliques of a graph on at most 64 vertices given as adjacency masks.
template <class Fn>
void for_each_maximal_clique_small(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p, std::uint64_t x, Fn&& fn) {
  if (!p && !x) {
    fn(r);
    return;
  }
  std::uint64_t px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  for (std::uint64_t m = px; m; m &= m - 1) {
    int u = std::countr_zero(m);
    int c = std::popcount(p & adj[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (std::uint64_t cand = p & ~adj[pivot]; cand; cand &= cand - 1) {
    int v = std::countr_zero(cand);
    std::uint64_t bit = std::uint64_t{1} << v;
    for_each_maximal_clique_small(adj, r | bit, p & adj[v], x & adj[v], fn);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace lieprobe
