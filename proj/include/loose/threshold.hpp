#pragma once

#include <cstdint>
#include <vector>

#include "loose/hypergraph.hpp"

namespace loose {

struct ThresholdReport {
  int r = 0;
  int length = 0;
  int s = 0;
  std::size_t max_edges = 0;
  double ratio = 0.0; // max_edges / s^(r-1)
  // Exact maximum when true, otherwise a lower bound from local search.
  bool exact = false;
  std::uint64_t seed = 0;
  int effort = 0;
  Hypergraph best{2, 0}; // a cycle-free subgraph attaining max_edges
};

struct ThresholdOptions {
  int effort = 8;            // local-search restarts in heuristic mode
  std::size_t exact_limit = 16; // exact mode when s^r <= exact_limit
  unsigned threads = 1;
};

// Complete r-partite r-graph with classes {1..s}, {s+1..2s}, ...
Hypergraph complete_partite(int r, int s);

// Largest number of edges of a subgraph of K_r(s) without a loose cycle of
// the given length.
ThresholdReport probe_threshold(int r, int length, int s, std::uint64_t seed,
                                const ThresholdOptions &options = {});

} // namespace loose
