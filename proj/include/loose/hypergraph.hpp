#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace loose {

// Vertex labels are 1-based: the ground set of an n-vertex hypergraph is
// {1, ..., n}.
using Vertex = int;

struct Violation {
  enum class Kind {
    bad_parameters,  // r < 1 or n < 0
    wrong_size,      // edge does not have exactly r entries
    repeated_vertex, // edge lists a vertex twice
    out_of_range,    // vertex outside 1..n
    duplicate_edge,  // the same r-set appears twice
  };

  Kind kind;
  std::size_t edge_index;
  std::string message;
};

// Checks raw edge data against the r-uniform hypergraph invariants and
// reports the first violation (edges are examined in input order).
std::optional<Violation> validate(int r, int n,
                                  std::span<const std::vector<Vertex>> edges);

// An r-uniform hypergraph on the ground set {1..n}.
//
// Edges are stored as the rows of a dense m x r row-major array; every row
// is strictly increasing and rows are kept in lexicographic order without
// duplicates. Instances are immutable after construction.
class Hypergraph {
public:
  Hypergraph(int r, int n);

  // Throws PreconditionError when validate() reports a violation.
  Hypergraph(int r, int n, std::span<const std::vector<Vertex>> edges);

  // Like the constructor but collapses duplicate edges instead of rejecting
  // them (set-builder semantics).
  static Hypergraph collect(int r, int n, std::vector<std::vector<Vertex>> edges);

  int uniformity() const noexcept { return r_; }
  int ground_n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept {
    return r_ == 0 ? 0 : data_.size() / static_cast<std::size_t>(r_);
  }
  bool empty() const noexcept { return data_.empty(); }

  std::span<const Vertex> edge(std::size_t i) const noexcept {
    return {data_.data() + i * static_cast<std::size_t>(r_),
            static_cast<std::size_t>(r_)};
  }

  // All edges as one contiguous row-major block.
  std::span<const Vertex> flat() const noexcept { return data_; }

  std::vector<std::vector<Vertex>> edge_list() const;

  // Sorted union of all edges.
  std::vector<Vertex> support() const;

  // Index of `e` (strictly increasing) in the edge order, if present.
  std::optional<std::size_t> find(std::span<const Vertex> e) const;
  bool contains(std::span<const Vertex> e) const { return find(e).has_value(); }

  // The sub-hypergraph on the given edge indices (any order, no repeats).
  Hypergraph subgraph(std::span<const std::size_t> indices) const;

  bool is_subgraph_of(const Hypergraph &other) const;

  friend bool operator==(const Hypergraph &, const Hypergraph &) = default;
  friend auto operator<=>(const Hypergraph &, const Hypergraph &) = default;

private:
  Hypergraph(int r, int n, std::vector<Vertex> sorted_rows);

  int r_;
  int n_;
  std::vector<Vertex> data_;
};

// An ordered partition of {1..n} into a fixed number of classes. Classes may
// be empty.
class RPartition {
public:
  // class_of[v - 1] is the class index (0-based) of vertex v.
  RPartition(int parts, std::vector<int> class_of);

  static RPartition from_classes(int n, std::vector<std::vector<Vertex>> classes);

  int parts() const noexcept { return static_cast<int>(classes_.size()); }
  int ground_n() const noexcept { return static_cast<int>(class_of_.size()); }
  int class_of(Vertex v) const { return class_of_[static_cast<std::size_t>(v - 1)]; }

  // Members of each class in ascending order.
  const std::vector<std::vector<Vertex>> &classes() const noexcept { return classes_; }

  friend bool operator==(const RPartition &a, const RPartition &b) {
    return a.class_of_ == b.class_of_ && a.classes_.size() == b.classes_.size();
  }

private:
  std::vector<int> class_of_;
  std::vector<std::vector<Vertex>> classes_;
};

// A coloring of the edges of an underlying hypergraph: colors[i] is the color
// of edge(i). Valid iff total (one color per edge), every color lies in
// 1..n and no edge receives one of its own vertices.
struct EdgeColoring {
  std::vector<Vertex> colors;

  friend bool operator==(const EdgeColoring &, const EdgeColoring &) = default;
};

std::optional<std::string> coloring_violation(const Hypergraph &h,
                                              const EdgeColoring &chi);

// Throws PreconditionError with the violation message.
void require_valid_coloring(const Hypergraph &h, const EdgeColoring &chi);

struct ColoredHypergraph {
  Hypergraph graph;
  EdgeColoring coloring;
};

// The extension { e + chi(e) : e in H }, an (r+1)-graph on the same ground
// set. Colliding extended edges collapse, so the result can have fewer edges
// than H.
Hypergraph extend(const Hypergraph &h, const EdgeColoring &chi);

// Image of the coloring, sorted.
std::vector<Vertex> color_set(const Hypergraph &h, const EdgeColoring &chi);

// For every color outside V(H) keeps the lexicographically smallest edge of
// that color. The result is strongly rainbow and has exactly
// |Z \ V(H)| edges.
ColoredHypergraph strongly_rainbow_subgraph(const Hypergraph &h,
                                            const EdgeColoring &chi);

// True iff chi is injective on the edges of h and no color lies in V(h).
bool is_strongly_rainbow(const Hypergraph &h, const EdgeColoring &chi);

// The complete r-graph on {1..n}.
Hypergraph complete_hypergraph(int r, int n);

} // namespace loose
