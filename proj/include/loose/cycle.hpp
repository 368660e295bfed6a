#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "loose/hypergraph.hpp"

namespace loose {

// The canonical loose cycle C_l^r on labels 1..l(r-1): edge j (0-based) is
// the r consecutive labels starting at j(r-1)+1, read cyclically, so the
// last edge ends at label 1.
struct LooseCycleTemplate {
  int uniformity;
  int length;
  int vertex_count;
  std::vector<std::vector<Vertex>> edges; // cyclic order, each sorted

  Hypergraph as_hypergraph() const;
};

// Requires r >= 3 and length >= 3.
LooseCycleTemplate loose_cycle_template(int r, int length);

// An embedding of the template into a host hypergraph.
struct CycleWitness {
  // vertex_map[t - 1] is the host vertex of template label t.
  std::vector<Vertex> vertex_map;
  // Host edges in cyclic order: edge_list[j] is the image of template edge j.
  std::vector<std::vector<Vertex>> edge_list;

  friend bool operator==(const CycleWitness &, const CycleWitness &) = default;
};

// Backtracking search for loose cycles of one fixed length and uniformity.
//
// Edges are added and removed in stack order, which lets exhaustive walks
// over edge subsets test only the cycles through the newest edge. The search
// grows a path edge by edge: the next edge must meet the current end edge in
// exactly one vertex that is not a link vertex, and must avoid every earlier
// edge except that the closing edge meets the first edge in exactly one
// non-link vertex. Also valid for r = 2, where loose cycles are ordinary
// cycles.
//
// Not thread-safe; use one instance per thread.
class LooseCycleSearch {
public:
  // Visitor receives edge indices in cyclic order; return false to stop.
  using Visitor = std::function<bool(std::span<const std::size_t>)>;

  LooseCycleSearch(int r, int n, int length);

  int uniformity() const noexcept { return r_; }
  int length() const noexcept { return length_; }
  std::size_t edge_count() const noexcept { return m_; }
  std::span<const Vertex> edge(std::size_t i) const noexcept {
    return {edges_.data() + i * static_cast<std::size_t>(r_),
            static_cast<std::size_t>(r_)};
  }

  // `e` must be strictly increasing with entries in 1..n. Duplicate edges
  // are allowed (they never lie on a common loose cycle).
  std::size_t push_edge(std::span<const Vertex> e);
  void pop_edge();
  void clear();

  // The first cycle in canonical order: smallest first-edge index, then
  // depth-first in ascending vertex and edge order.
  bool find_any(std::vector<std::size_t> *cycle = nullptr);

  // A cycle that uses edge `e`, starting from it.
  bool find_through(std::size_t e, std::vector<std::size_t> *cycle = nullptr);

  // Number of distinct copies (edge sets forming a loose cycle).
  std::uint64_t count_copies();

  // Calls visit once per copy, starting at its smallest edge index.
  void for_each_copy(const Visitor &visit);

private:
  bool search_from(std::size_t first, bool restricted, const Visitor &visit);
  bool grow(int pos, const Visitor &visit);
  bool fits(std::size_t f, int pos, bool closing) const;
  void place(std::size_t f, int pos);
  void unplace(std::size_t f);

  int r_;
  int n_;
  int length_;
  std::vector<Vertex> edges_;
  std::size_t m_ = 0;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<int> count_;
  std::vector<int> owner_;
  std::vector<char> used_;
  std::vector<std::size_t> path_;
  std::size_t first_ = 0;
  bool restricted_ = false;
};

// Builds the witness for a cycle given as host edges in cyclic order.
CycleWitness make_witness(const LooseCycleSearch &search,
                          std::span<const std::size_t> cycle);

// Decides whether h contains a loose cycle of the given length (>= 3) and
// returns the canonical witness when it does.
std::optional<CycleWitness> contains_loose_cycle(const Hypergraph &h, int length);

// Re-checks a witness against h: vertex_map injective into 1..n, template
// edges map onto edge_list, and every listed edge belongs to h.
bool witness_is_valid(const Hypergraph &h, int length, const CycleWitness &w);

struct CountGuard {
  int max_support = 12;
  std::size_t max_edges = 64;
};

// Number of unlabeled copies of C_length^r in h. Refuses (WorkBoundError)
// instances beyond the guard.
std::uint64_t count_loose_cycles(const Hypergraph &h, int length,
                                 const CountGuard &guard = {});

// Every copy as sorted edge indices into h, sorted lexicographically.
std::vector<std::vector<std::size_t>>
loose_cycle_copies(const Hypergraph &h, int length, const CountGuard &guard = {});

// Witness text: "witness <length> <r>", then one line per cycle edge, then
// one "template_label host_label" line per template vertex.
void write_witness(std::ostream &out, const CycleWitness &w);
CycleWitness read_witness(std::istream &in);

} // namespace loose
