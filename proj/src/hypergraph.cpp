#include "loose/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "loose/combinatorics.hpp"
#include "loose/errors.hpp"

namespace loose {

namespace {

std::string edge_string(std::span<const Vertex> e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + "]";
}

bool row_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Sorts rows of a row-major block and drops duplicate rows.
std::vector<Vertex> sort_rows(std::vector<Vertex> data, int r, bool dedupe) {
  const auto width = static_cast<std::size_t>(r);
  const std::size_t m = width == 0 ? 0 : data.size() / width;
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) {
    return std::span<const Vertex>(data.data() + i * width, width);
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return row_less(row(a), row(b)); });
  std::vector<Vertex> out;
  out.reserve(data.size());
  for (std::size_t k = 0; k < m; ++k) {
    auto cur = row(order[k]);
    if (dedupe && k > 0 && std::ranges::equal(cur, row(order[k - 1]))) continue;
    out.insert(out.end(), cur.begin(), cur.end());
  }
  return out;
}

} // namespace

std::optional<Violation> validate(int r, int n,
                                  std::span<const std::vector<Vertex>> edges) {
  if (r < 1 || n < 0)
    return Violation{Violation::Kind::bad_parameters, 0,
                     "uniformity must be >= 1 and n >= 0"};
  std::set<std::vector<Vertex>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto &e = edges[i];
    if (static_cast<int>(e.size()) != r)
      return Violation{Violation::Kind::wrong_size, i,
                       "edge " + std::to_string(i) + " " + edge_string(e) + " has " +
                           std::to_string(e.size()) + " vertices, expected " +
                           std::to_string(r)};
    for (Vertex v : e)
      if (v < 1 || v > n)
        return Violation{Violation::Kind::out_of_range, i,
                         "edge " + std::to_string(i) + " " + edge_string(e) +
                             " has vertex " + std::to_string(v) + " outside 1.." +
                             std::to_string(n)};
    std::vector<Vertex> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return Violation{Violation::Kind::repeated_vertex, i,
                       "edge " + std::to_string(i) + " " + edge_string(e) +
                           " repeats a vertex"};
    if (!seen.insert(std::move(sorted)).second)
      return Violation{Violation::Kind::duplicate_edge, i,
                       "edge " + std::to_string(i) + " " + edge_string(e) +
                           " duplicates an earlier edge"};
  }
  return std::nullopt;
}

Hypergraph::Hypergraph(int r, int n) : r_(r), n_(n) {
  if (r < 1 || n < 0) throw PreconditionError("uniformity must be >= 1 and n >= 0");
}

Hypergraph::Hypergraph(int r, int n, std::vector<Vertex> sorted_rows)
    : r_(r), n_(n), data_(std::move(sorted_rows)) {}

Hypergraph::Hypergraph(int r, int n, std::span<const std::vector<Vertex>> edges)
    : r_(r), n_(n) {
  if (auto v = validate(r, n, edges)) throw PreconditionError(v->message);
  std::vector<Vertex> data;
  data.reserve(edges.size() * static_cast<std::size_t>(r));
  for (const auto &e : edges) {
    auto start = data.insert(data.end(), e.begin(), e.end());
    std::sort(start, data.end());
  }
  data_ = sort_rows(std::move(data), r, false);
}

Hypergraph Hypergraph::collect(int r, int n, std::vector<std::vector<Vertex>> edges) {
  for (auto &e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Hypergraph(r, n, std::span<const std::vector<Vertex>>(edges));
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < edge_count(); ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

std::vector<Vertex> Hypergraph::support() const {
  std::vector<Vertex> s(data_);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::optional<std::size_t> Hypergraph::find(std::span<const Vertex> e) const {
  if (static_cast<int>(e.size()) != r_) return std::nullopt;
  std::size_t lo = 0, hi = edge_count();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (row_less(edge(mid), e))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < edge_count() && std::ranges::equal(edge(lo), e)) return lo;
  return std::nullopt;
}

Hypergraph Hypergraph::subgraph(std::span<const std::size_t> indices) const {
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  std::sort(idx.begin(), idx.end());
  std::vector<Vertex> data;
  data.reserve(idx.size() * static_cast<std::size_t>(r_));
  for (std::size_t i : idx) {
    if (i >= edge_count()) throw PreconditionError("subgraph: edge index out of range");
    auto e = edge(i);
    data.insert(data.end(), e.begin(), e.end());
  }
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw PreconditionError("subgraph: repeated edge index");
  return Hypergraph(r_, n_, std::move(data));
}

bool Hypergraph::is_subgraph_of(const Hypergraph &other) const {
  if (r_ != other.r_) return empty();
  for (std::size_t i = 0; i < edge_count(); ++i)
    if (!other.contains(edge(i))) return false;
  return true;
}

RPartition::RPartition(int parts, std::vector<int> class_of)
    : class_of_(std::move(class_of)) {
  if (parts < 1) throw PreconditionError("partition needs at least one class");
  classes_.resize(static_cast<std::size_t>(parts));
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    const int c = class_of_[i];
    if (c < 0 || c >= parts)
      throw PreconditionError("partition class index out of range for vertex " +
                              std::to_string(i + 1));
    classes_[static_cast<std::size_t>(c)].push_back(static_cast<Vertex>(i + 1));
  }
}

RPartition RPartition::from_classes(int n, std::vector<std::vector<Vertex>> classes) {
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Vertex v : classes[c]) {
      if (v < 1 || v > n)
        throw PreconditionError("partition vertex " + std::to_string(v) +
                                " outside 1.." + std::to_string(n));
      auto &slot = class_of[static_cast<std::size_t>(v - 1)];
      if (slot != -1)
        throw PreconditionError("partition classes overlap at vertex " +
                                std::to_string(v));
      slot = static_cast<int>(c);
    }
  }
  for (std::size_t i = 0; i < class_of.size(); ++i)
    if (class_of[i] == -1)
      throw PreconditionError("partition misses vertex " + std::to_string(i + 1));
  return RPartition(static_cast<int>(classes.size()), std::move(class_of));
}

std::optional<std::string> coloring_violation(const Hypergraph &h,
                                              const EdgeColoring &chi) {
  if (chi.colors.size() != h.edge_count())
    return "coloring has " + std::to_string(chi.colors.size()) + " colors for " +
           std::to_string(h.edge_count()) + " edges";
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Vertex z = chi.colors[i];
    auto e = h.edge(i);
    if (z < 1 || z > h.ground_n())
      return "color " + std::to_string(z) + " of edge " + edge_string(e) +
             " outside 1.." + std::to_string(h.ground_n());
    if (std::binary_search(e.begin(), e.end(), z))
      return "color " + std::to_string(z) + " lies inside its edge " + edge_string(e);
  }
  return std::nullopt;
}

void require_valid_coloring(const Hypergraph &h, const EdgeColoring &chi) {
  if (auto msg = coloring_violation(h, chi)) throw PreconditionError(*msg);
}

Hypergraph extend(const Hypergraph &h, const EdgeColoring &chi) {
  require_valid_coloring(h, chi);
  const int r = h.uniformity() + 1;
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(h.edge_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    std::vector<Vertex> x(e.begin(), e.end());
    x.insert(std::upper_bound(x.begin(), x.end(), chi.colors[i]), chi.colors[i]);
    edges.push_back(std::move(x));
  }
  return Hypergraph::collect(r, h.ground_n(), std::move(edges));
}

std::vector<Vertex> color_set(const Hypergraph &h, const EdgeColoring &chi) {
  require_valid_coloring(h, chi);
  std::vector<Vertex> z = chi.colors;
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  return z;
}

ColoredHypergraph strongly_rainbow_subgraph(const Hypergraph &h,
                                            const EdgeColoring &chi) {
  require_valid_coloring(h, chi);
  const auto support = h.support();
  std::vector<bool> taken(static_cast<std::size_t>(h.ground_n()) + 1, false);
  std::vector<std::size_t> picked;
  // Edges are in lexicographic order, so the first edge seen with a given
  // color is the smallest one.
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Vertex z = chi.colors[i];
    if (taken[static_cast<std::size_t>(z)]) continue;
    if (std::binary_search(support.begin(), support.end(), z)) continue;
    taken[static_cast<std::size_t>(z)] = true;
    picked.push_back(i);
  }
  EdgeColoring restricted;
  restricted.colors.reserve(picked.size());
  for (std::size_t i : picked) restricted.colors.push_back(chi.colors[i]);
  return {h.subgraph(picked), std::move(restricted)};
}

bool is_strongly_rainbow(const Hypergraph &h, const EdgeColoring &chi) {
  require_valid_coloring(h, chi);
  const auto support = h.support();
  std::vector<Vertex> z = chi.colors;
  std::sort(z.begin(), z.end());
  if (std::adjacent_find(z.begin(), z.end()) != z.end()) return false;
  return std::none_of(z.begin(), z.end(), [&](Vertex c) {
    return std::binary_search(support.begin(), support.end(), c);
  });
}

Hypergraph complete_hypergraph(int r, int n) {
  std::vector<std::vector<Vertex>> edges;
  for_each_combination(n, r, [&](std::span<const int> c) {
    edges.emplace_back(c.begin(), c.end());
    return true;
  });
  return Hypergraph(r, n, std::span<const std::vector<Vertex>>(edges));
}

} // namespace loose
