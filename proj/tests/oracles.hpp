#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no search code with it: cycles are found either by trying
// every injective map of the template's vertices or by examining every
// l-subset of edges.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "loose/hypergraph.hpp"

namespace oracle {

using Edge = std::vector<int>;

// Edge j of the cyclic template on labels 0..l(r-1)-1.
inline std::vector<Edge> template_edges(int r, int l) {
  const int k = l * (r - 1);
  std::vector<Edge> out;
  for (int j = 0; j < l; ++j) {
    Edge e;
    for (int i = 0; i < r; ++i) e.push_back((j * (r - 1) + i) % k);
    out.push_back(e);
  }
  return out;
}

// Number of injective maps from template labels into [n] sending every
// template edge onto a host edge. Stops after `limit` maps.
inline std::uint64_t count_embeddings(const loose::Hypergraph &h, int l,
                                      std::uint64_t limit = UINT64_MAX) {
  const int r = h.uniformity();
  const int n = h.ground_n();
  const int k = l * (r - 1);
  if (k > n || h.edge_count() < static_cast<std::size_t>(l)) return 0;
  std::set<Edge> host;
  for (const auto &e : h.edge_list()) host.insert(e);
  const auto tmpl = template_edges(r, l);

  // Template edges whose last-assigned label is t, checked when t is placed.
  std::vector<std::vector<int>> closing(static_cast<std::size_t>(k));
  for (int j = 0; j < l; ++j) {
    int last = *std::max_element(tmpl[j].begin(), tmpl[j].end());
    closing[static_cast<std::size_t>(last)].push_back(j);
  }

  std::vector<int> image(static_cast<std::size_t>(k), 0);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t found = 0;

  auto rec = [&](auto &&self, int t) -> void {
    if (found >= limit) return;
    if (t == k) {
      ++found;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      image[static_cast<std::size_t>(t)] = v;
      bool ok = true;
      for (int j : closing[static_cast<std::size_t>(t)]) {
        Edge e;
        for (int lab : tmpl[static_cast<std::size_t>(j)]) e.push_back(image[static_cast<std::size_t>(lab)]);
        std::sort(e.begin(), e.end());
        if (!host.count(e)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = 1;
      self(self, t + 1);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0);
  return found;
}

inline bool has_cycle_by_embedding(const loose::Hypergraph &h, int l) {
  return count_embeddings(h, l, 1) > 0;
}

inline std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Automorphisms of the template: rotations and reflections of the cycle
// times permutations of each edge's r-2 private vertices.
inline std::uint64_t template_automorphisms(int r, int l) {
  std::uint64_t a = 2 * static_cast<std::uint64_t>(l);
  for (int j = 0; j < l; ++j) a *= factorial(r - 2);
  return a;
}

// True iff the given edges, in some order, form a loose cycle: pairwise
// intersections have size 0 or 1, the intersection graph is one cycle
// through all edges, and the union has l(r-1) vertices.
inline bool is_loose_cycle_set(const std::vector<Edge> &edges, int r) {
  const int l = static_cast<int>(edges.size());
  if (l < 3) return false;
  std::set<int> uni;
  for (const auto &e : edges) uni.insert(e.begin(), e.end());
  if (static_cast<int>(uni.size()) != l * (r - 1)) return false;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(l));
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b) {
      std::vector<int> common;
      std::set_intersection(edges[a].begin(), edges[a].end(), edges[b].begin(), edges[b].end(),
                            std::back_inserter(common));
      if (common.size() > 1) return false;
      if (common.size() == 1) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
      }
    }
  for (const auto &nb : adj)
    if (nb.size() != 2) return false;
  // Connected 2-regular graph is one cycle.
  std::vector<char> seen(static_cast<std::size_t>(l), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 0;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    ++visited;
    for (int b : adj[static_cast<std::size_t>(a)])
      if (!seen[static_cast<std::size_t>(b)]) {
        seen[static_cast<std::size_t>(b)] = 1;
        stack.push_back(b);
      }
  }
  return visited == l;
}

// Number of l-edge subsets forming a loose cycle.
inline std::uint64_t count_cycle_sets(const loose::Hypergraph &h, int l) {
  const auto edges = h.edge_list();
  const int m = static_cast<int>(edges.size());
  if (m < l) return 0;
  std::uint64_t count = 0;
  std::vector<int> idx(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<Edge> pick;
    for (int i : idx) pick.push_back(edges[static_cast<std::size_t>(i)]);
    if (is_loose_cycle_set(pick, h.uniformity())) ++count;
    int i = l - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - l + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < l; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return count;
}

// Cycle-free colorings counted the other way round: enumerate every
// coloring, group colorings by their extension, then test each distinct
// extension once with the embedding oracle.
inline std::uint64_t count_free_colorings_by_extension(const loose::Hypergraph &g, int l, int n) {
  const int r = g.uniformity();
  const std::size_t m = g.edge_count();
  std::vector<std::vector<int>> choices(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto e = g.edge(i);
    for (int c = 1; c <= n; ++c)
      if (std::find(e.begin(), e.end(), c) == e.end()) choices[i].push_back(c);
    if (choices[i].empty()) return 0;
  }
  std::map<std::vector<Edge>, std::uint64_t> by_extension;
  std::vector<std::size_t> pos(m, 0);
  while (true) {
    std::set<Edge> ext;
    for (std::size_t i = 0; i < m; ++i) {
      auto e = g.edge(i);
      Edge x(e.begin(), e.end());
      x.push_back(choices[i][pos[i]]);
      std::sort(x.begin(), x.end());
      ext.insert(x);
    }
    ++by_extension[std::vector<Edge>(ext.begin(), ext.end())];
    std::size_t i = 0;
    while (i < m && ++pos[i] == choices[i].size()) pos[i++] = 0;
    if (i == m) break;
  }
  std::uint64_t total = 0;
  for (const auto &[edges, count] : by_extension) {
    const loose::Hypergraph ext(r + 1, n, edges);
    if (!has_cycle_by_embedding(ext, l)) total += count;
  }
  return total;
}

// Largest cycle-free subset of h's edges by trying all 2^m subsets.
inline std::size_t max_free_subset(const loose::Hypergraph &h, int l) {
  const std::size_t m = h.edge_count();
  const auto edges = h.edge_list();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    std::vector<Edge> pick;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) pick.push_back(edges[i]);
    if (!has_cycle_by_embedding(loose::Hypergraph(h.uniformity(), h.ground_n(), pick), l))
      best = size;
  }
  return best;
}

// Uniform random r-graph on [n] with edge probability p, from a plain
// 64-bit LCG so fixtures do not depend on library randomness.
struct Lcg {
  std::uint64_t state;
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 11;
  }
  double unit() { return static_cast<double>(next()) * 0x1.0p-53; }
  int below(int k) { return static_cast<int>(next() % static_cast<std::uint64_t>(k)); }
};

inline loose::Hypergraph random_graph(int r, int n, double p, Lcg &rng) {
  std::vector<Edge> edges;
  std::vector<int> c(static_cast<std::size_t>(r));
  auto rec = [&](auto &&self, int start, int depth) -> void {
    if (depth == r) {
      if (rng.unit() < p) edges.push_back(c);
      return;
    }
    for (int v = start; v <= n; ++v) {
      c[static_cast<std::size_t>(depth)] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 1, 0);
  return loose::Hypergraph(r, n, edges);
}

} // namespace oracle
