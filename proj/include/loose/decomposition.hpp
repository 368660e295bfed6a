#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "loose/combinatorics.hpp"
#include "loose/hypergraph.hpp"
#include "loose/random.hpp"

namespace loose {

// Family-size constant c(r) = -r / log2(1 - r!/r^r). A family of
// ceil(c(r) log2 n) independent uniform r-partitions misses a fixed r-set
// with probability at most n^-r.
double c_of_r(int r);

// ceil(c(r) * log2 n).
int capture_family_size(int n, int r);

// Each vertex of {1..n} joins one of r classes independently and uniformly.
RPartition random_partition(int n, int r, Rng &rng);

// True iff e meets every class of p in exactly one vertex.
bool captures(const RPartition &p, std::span<const Vertex> e);

// Largest n for which capture is certified against all r-subsets of [n];
// above it only the edges of a supplied hypergraph are checked.
int default_exhaustive_capture_bound(int r);

struct CaptureOptions {
  std::optional<int> family_size;       // overrides ceil(c(r) log2 n)
  int max_rounds = 32;                  // whole-family resamples
  std::optional<int> exhaustive_bound;  // overrides the default bound
  unsigned threads = 1;
};

struct PartitionFamily {
  int n = 0;
  int r = 0;
  std::vector<RPartition> partitions;
  int rounds = 0;            // families drawn, including the accepted one
  bool exhaustive = false;   // certified against every r-subset of [n]
};

class CaptureFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// First r-set not captured by any member. Checks every r-subset of [n] when
// `required` is null, otherwise only the edges of `required`.
std::optional<std::vector<Vertex>>
first_uncaptured(std::span<const RPartition> family, int n, int r,
                 const Hypergraph *required = nullptr, unsigned threads = 1);

// Draws families until one captures every r-subset of [n] (exhaustive mode,
// n <= bound or no `required` graph) or every edge of `required`. Throws
// CaptureFailure after max_rounds unsuccessful families.
PartitionFamily capture_family(int n, int r, Rng &rng, const CaptureOptions &options = {},
                               const Hypergraph *required = nullptr);

// Union-bound estimate C(n,r) (1 - r!/r^r)^k of the probability that a
// family of k partitions misses some r-set, and its k = ceil(c log n)
// envelope C(n,r) n^-r.
double capture_failure_union_bound(int n, int r, int family_size);
double capture_failure_envelope(int n, int r);

// 1 <= s <= (1 - 1/r) n, checked in integers.
bool block_size_admissible(int n, int r, int s);

// Every class of a partition cut into consecutive blocks of at most s
// vertices (ascending order). The blocks of all classes index the cells
// W(k_1, ..., k_r).
struct BlockGrid {
  int s = 0;
  // blocks[j][k] is block k of class j.
  std::vector<std::vector<std::vector<Vertex>>> blocks;
  // block_of[v - 1] is the block index of v inside its class.
  std::vector<int> block_of;

  // prod_j ceil(|V_j| / s); zero if some class is empty.
  BigInt cell_count() const;
};

// Throws PreconditionError unless block_size_admissible(n, r, s).
BlockGrid block_grid(const RPartition &p, int s);

// cells * s^r <= n^r, i.e. the cell count is at most (n/s)^r.
bool cell_count_within_bound(const BlockGrid &grid, int n, int r);

struct DecompositionPart {
  Hypergraph graph;
  // Class j holds the part's vertices from block cell[j] of class j of
  // partition `partition_index`; every class has at most s vertices.
  std::vector<std::vector<Vertex>> classes;
  std::size_t partition_index = 0; // 0-based
  std::vector<int> cell;           // 0-based block indices k_1..k_r
};

struct Decomposition {
  int n = 0;
  int r = 0;
  int s = 0;
  std::vector<DecompositionPart> parts;
  // edge_assignment[i] is the part holding edge i of the input graph.
  std::vector<std::size_t> edge_assignment;
  PartitionFamily family;
  BigInt total_cells; // cells over all partitions, empty or not

  std::size_t t() const noexcept { return parts.size(); }
};

struct DecomposeOptions {
  CaptureOptions capture;
  unsigned threads = 1;
};

// Splits g into edge-disjoint r-partite parts, each inside one cell of one
// partition of a capture family, assigning every edge to its
// lexicographically first capturing (partition, k_1, ..., k_r) cell. Only
// non-empty parts are emitted, in that cell order.
Decomposition decompose(const Hypergraph &g, int s, Rng &rng,
                        const DecomposeOptions &options = {});

// t * s^r <= n^r * family_size, i.e. t <= (n/s)^r ceil(c log n) with the
// family size in place of the ceiling.
bool part_count_within_bound(std::size_t t, int n, int r, int s, std::size_t family_size);

// (n/s)^r * family_size as a double, for display.
double part_count_bound(int n, int r, int s, std::size_t family_size);

// Independent invariant check of a decomposition of g. Returns the name of
// the first violated invariant with details, or nullopt.
std::optional<std::string> decomposition_violation(const Hypergraph &g,
                                                   const Decomposition &d);

// Text format: header "t s n r"; then per part a provenance line
// "i k_1 ... k_r" (1-based), r class lines "size v_1 ... v_size", and the
// part's edges in the hypergraph text format.
void write_decomposition(std::ostream &out, const Decomposition &d);

// Reads parts and provenance; the partition family is not stored in the
// file, so `family` stays empty and edge_assignment refers to the union of
// all parts in sorted edge order.
Decomposition read_decomposition(std::istream &in);

} // namespace loose
