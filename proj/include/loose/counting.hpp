#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "loose/combinatorics.hpp"
#include "loose/hypergraph.hpp"

namespace loose {

enum class CountMethod { exhaustive, monte_carlo };

struct McEstimate {
  double mean = 0.0;
  // Standard error of the mean; +infinity when it is undefined (one sample).
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t free_samples = 0; // samples whose extension was cycle-free
};

struct CountReport {
  std::string quantity; // "colorings", "forb" or "gr"
  int n = 0;
  int r = 0;
  int length = 0;
  std::optional<std::uint64_t> seed;
  CountMethod method = CountMethod::exhaustive;
  std::optional<BigInt> exact_count;
  std::optional<McEstimate> mc_estimate;
  // Trivial upper bound (total number of objects counted over) and what it is.
  BigInt bound_value;
  std::string bound_description;
  // Largest cycle-free edge count seen by an exhaustive walk (forb only).
  std::optional<std::uint64_t> max_free_edges;
  std::string note;
};

struct WorkLimits {
  BigInt max_colorings = 100'000'000;   // coloring evaluations
  int max_edge_slots = 24;              // forb: C(n,r) representation width
  int max_forb_walk = 22;               // forb: C(n,r) for the 2^C(n,r) walk
  BigInt max_gr_leaves = 100'000'000;   // gr: colored graphs to enumerate
};

// Number of colorings chi: g -> [n] (chi(e) not in e) whose extension, an
// (r+1)-graph for r = g's uniformity, has no loose cycle of the given
// length. Enumerates colorings edge by edge and abandons a branch as soon
// as the partial extension contains a cycle.
CountReport count_colorings_exact(const Hypergraph &g, int length, int n,
                                  const WorkLimits &limits = {}, unsigned threads = 1);

// Monte Carlo estimate of the same count from uniformly random colorings.
// Samples are split over fixed shards seeded from `seed`, so the result
// does not depend on `threads`.
CountReport count_colorings_mc(const Hypergraph &g, int length, int n,
                               std::uint64_t samples, std::uint64_t seed,
                               unsigned threads = 1);

struct ColorSetSize {
  std::size_t used = 0;     // |Z|, Z the image of the coloring
  std::size_t external = 0; // |Z \ V(G)|
};

ColorSetSize color_set_size(const Hypergraph &g, const EdgeColoring &chi);

// |Forb_r(n, C_length)|: r-graphs on [n] without a loose cycle of the given
// length, by a walk over edge subsets that tests only cycles through the
// newest edge and never enters supersets of a graph with a cycle.
CountReport enumerate_forb(int n, int r, int length, const WorkLimits &limits = {},
                           unsigned threads = 1);

// g_r(n, length): colored (r-1)-graphs on [n] whose extension has no loose
// cycle of the given length. Counted by edge set and coloring; isolated
// vertices are not distinguished.
CountReport count_gr_small(int n, int r, int length, const WorkLimits &limits = {},
                           unsigned threads = 1);

} // namespace loose
