#include "loose/cycle.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "loose/errors.hpp"

namespace loose {

namespace {

// Template edges for any r >= 2 (the public constructor is stricter).
std::vector<std::vector<Vertex>> template_edges(int r, int length) {
  const int total = length * (r - 1);
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(length));
  for (int j = 0; j < length; ++j) {
    std::vector<Vertex> e;
    for (int k = 0; k < r; ++k) e.push_back((j * (r - 1) + k) % total + 1);
    std::sort(e.begin(), e.end());
    edges.push_back(std::move(e));
  }
  return edges;
}

} // namespace

Hypergraph LooseCycleTemplate::as_hypergraph() const {
  return Hypergraph(uniformity, vertex_count, edges);
}

LooseCycleTemplate loose_cycle_template(int r, int length) {
  if (r < 3) throw PreconditionError("loose cycle template needs r >= 3");
  if (length < 3) throw PreconditionError("loose cycle template needs length >= 3");
  return {r, length, length * (r - 1), template_edges(r, length)};
}

LooseCycleSearch::LooseCycleSearch(int r, int n, int length)
    : r_(r), n_(n), length_(length) {
  if (r < 2) throw PreconditionError("loose cycle search needs r >= 2");
  if (length < 3) throw PreconditionError("loose cycle length must be >= 3");
  if (n < 0) throw PreconditionError("negative ground set size");
  incident_.resize(static_cast<std::size_t>(n) + 1);
  count_.assign(static_cast<std::size_t>(n) + 1, 0);
  owner_.assign(static_cast<std::size_t>(n) + 1, -1);
  path_.reserve(static_cast<std::size_t>(length));
}

std::size_t LooseCycleSearch::push_edge(std::span<const Vertex> e) {
  if (static_cast<int>(e.size()) != r_)
    throw PreconditionError("edge size does not match uniformity");
  const std::size_t idx = m_++;
  for (Vertex v : e) {
    if (v < 1 || v > n_) throw PreconditionError("edge vertex out of range");
    edges_.push_back(v);
    incident_[static_cast<std::size_t>(v)].push_back(idx);
  }
  used_.push_back(0);
  return idx;
}

void LooseCycleSearch::pop_edge() {
  if (m_ == 0) return;
  --m_;
  for (int k = 0; k < r_; ++k) {
    incident_[static_cast<std::size_t>(edges_.back())].pop_back();
    edges_.pop_back();
  }
  used_.pop_back();
}

void LooseCycleSearch::clear() {
  while (m_ > 0) pop_edge();
}

void LooseCycleSearch::place(std::size_t f, int pos) {
  for (Vertex w : edge(f)) {
    auto &c = count_[static_cast<std::size_t>(w)];
    if (c == 0) owner_[static_cast<std::size_t>(w)] = pos;
    ++c;
  }
  used_[f] = 1;
  path_.push_back(f);
}

void LooseCycleSearch::unplace(std::size_t f) {
  for (Vertex w : edge(f)) --count_[static_cast<std::size_t>(w)];
  used_[f] = 0;
  path_.pop_back();
}

// A vertex held by one path edge is owned by that edge (stack discipline
// keeps the earliest holder as owner). Link vertices are held twice.
bool LooseCycleSearch::fits(std::size_t f, int pos, bool closing) const {
  int hits_prev = 0, hits_first = 0;
  for (Vertex w : edge(f)) {
    const int c = count_[static_cast<std::size_t>(w)];
    if (c == 0) continue;
    if (c >= 2) return false;
    const int o = owner_[static_cast<std::size_t>(w)];
    if (o == pos - 1)
      ++hits_prev;
    else if (closing && o == 0)
      ++hits_first;
    else
      return false;
  }
  return hits_prev == 1 && (!closing || hits_first == 1);
}

bool LooseCycleSearch::grow(int pos, const Visitor &visit) {
  if (pos == length_) return visit(path_);
  const std::size_t prev = path_.back();
  const bool closing = pos == length_ - 1;
  for (Vertex u : edge(prev)) {
    if (count_[static_cast<std::size_t>(u)] != 1) continue;
    for (std::size_t f : incident_[static_cast<std::size_t>(u)]) {
      if (used_[f] || (restricted_ && f < first_)) continue;
      if (!fits(f, pos, closing)) continue;
      place(f, pos);
      const bool go_on = grow(pos + 1, visit);
      unplace(f);
      if (!go_on) return false;
    }
  }
  return true;
}

bool LooseCycleSearch::search_from(std::size_t first, bool restricted,
                                   const Visitor &visit) {
  first_ = first;
  restricted_ = restricted;
  place(first, 0);
  const bool go_on = grow(1, visit);
  unplace(first);
  return go_on;
}

bool LooseCycleSearch::find_any(std::vector<std::size_t> *cycle) {
  bool found = false;
  const Visitor stop = [&](std::span<const std::size_t> c) {
    found = true;
    if (cycle) cycle->assign(c.begin(), c.end());
    return false;
  };
  for (std::size_t first = 0; first < m_ && !found; ++first)
    search_from(first, true, stop);
  return found;
}

bool LooseCycleSearch::find_through(std::size_t e, std::vector<std::size_t> *cycle) {
  if (e >= m_) throw PreconditionError("edge index out of range");
  bool found = false;
  search_from(e, false, [&](std::span<const std::size_t> c) {
    found = true;
    if (cycle) cycle->assign(c.begin(), c.end());
    return false;
  });
  return found;
}

void LooseCycleSearch::for_each_copy(const Visitor &visit) {
  // Each copy is reached twice from its smallest edge, once per direction;
  // keep the direction whose second edge is smaller than its last.
  const Visitor oriented = [&](std::span<const std::size_t> c) {
    if (c[1] > c[c.size() - 1]) return true;
    return visit(c);
  };
  for (std::size_t first = 0; first < m_; ++first)
    if (!search_from(first, true, oriented)) return;
}

std::uint64_t LooseCycleSearch::count_copies() {
  std::uint64_t total = 0;
  for_each_copy([&](std::span<const std::size_t>) {
    ++total;
    return true;
  });
  return total;
}

CycleWitness make_witness(const LooseCycleSearch &search,
                          std::span<const std::size_t> cycle) {
  const int r = search.uniformity();
  const int length = static_cast<int>(cycle.size());
  auto edge_of = [&](int j) { return search.edge(cycle[static_cast<std::size_t>((j + length) % length)]); };
  auto shared = [&](int a, int b) {
    auto ea = edge_of(a), eb = edge_of(b);
    for (Vertex v : ea)
      if (std::binary_search(eb.begin(), eb.end(), v)) return v;
    throw VerificationError("consecutive cycle edges do not intersect");
  };

  CycleWitness w;
  w.vertex_map.assign(static_cast<std::size_t>(length * (r - 1)), 0);
  for (int j = 0; j < length; ++j) {
    auto e = edge_of(j);
    w.edge_list.emplace_back(e.begin(), e.end());
    const Vertex in_link = shared(j - 1, j);
    const Vertex out_link = shared(j, j + 1);
    const int base = j * (r - 1); // 0-based slot of this edge's first label
    w.vertex_map[static_cast<std::size_t>(base)] = in_link;
    int k = 1;
    for (Vertex v : e)
      if (v != in_link && v != out_link)
        w.vertex_map[static_cast<std::size_t>(base + k++)] = v;
    // The out link is the first label of the next edge; set there.
  }
  return w;
}

std::optional<CycleWitness> contains_loose_cycle(const Hypergraph &h, int length) {
  if (length < 3) throw PreconditionError("loose cycle length must be >= 3");
  if (h.uniformity() < 2) return std::nullopt;
  if (h.edge_count() < static_cast<std::size_t>(length)) return std::nullopt;
  LooseCycleSearch search(h.uniformity(), h.ground_n(), length);
  for (std::size_t i = 0; i < h.edge_count(); ++i) search.push_edge(h.edge(i));
  std::vector<std::size_t> cycle;
  if (!search.find_any(&cycle)) return std::nullopt;
  return make_witness(search, cycle);
}

bool witness_is_valid(const Hypergraph &h, int length, const CycleWitness &w) {
  const int r = h.uniformity();
  if (r < 2 || length < 3) return false;
  if (w.vertex_map.size() != static_cast<std::size_t>(length * (r - 1))) return false;
  if (w.edge_list.size() != static_cast<std::size_t>(length)) return false;
  std::vector<Vertex> image = w.vertex_map;
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
  if (image.front() < 1 || image.back() > h.ground_n()) return false;
  const auto tmpl = template_edges(r, length);
  for (int j = 0; j < length; ++j) {
    std::vector<Vertex> mapped;
    for (Vertex t : tmpl[static_cast<std::size_t>(j)])
      mapped.push_back(w.vertex_map[static_cast<std::size_t>(t - 1)]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != w.edge_list[static_cast<std::size_t>(j)]) return false;
    if (!h.contains(mapped)) return false;
  }
  return true;
}

namespace {

void check_guard(const Hypergraph &h, const CountGuard &guard) {
  const auto support = h.support().size();
  if (support > static_cast<std::size_t>(guard.max_support) ||
      h.edge_count() > guard.max_edges)
    throw WorkBoundError("loose cycle counting refused: support " +
                             std::to_string(support) + " (max " +
                             std::to_string(guard.max_support) + "), edges " +
                             std::to_string(h.edge_count()) + " (max " +
                             std::to_string(guard.max_edges) + ")",
                         std::to_string(support) + " vertices / " +
                             std::to_string(h.edge_count()) + " edges");
}

} // namespace

std::uint64_t count_loose_cycles(const Hypergraph &h, int length,
                                 const CountGuard &guard) {
  if (length < 3) throw PreconditionError("loose cycle length must be >= 3");
  check_guard(h, guard);
  if (h.uniformity() < 2) return 0;
  LooseCycleSearch search(h.uniformity(), h.ground_n(), length);
  for (std::size_t i = 0; i < h.edge_count(); ++i) search.push_edge(h.edge(i));
  return search.count_copies();
}

std::vector<std::vector<std::size_t>>
loose_cycle_copies(const Hypergraph &h, int length, const CountGuard &guard) {
  if (length < 3) throw PreconditionError("loose cycle length must be >= 3");
  check_guard(h, guard);
  std::vector<std::vector<std::size_t>> copies;
  if (h.uniformity() < 2) return copies;
  LooseCycleSearch search(h.uniformity(), h.ground_n(), length);
  for (std::size_t i = 0; i < h.edge_count(); ++i) search.push_edge(h.edge(i));
  search.for_each_copy([&](std::span<const std::size_t> c) {
    std::vector<std::size_t> s(c.begin(), c.end());
    std::sort(s.begin(), s.end());
    copies.push_back(std::move(s));
    return true;
  });
  std::sort(copies.begin(), copies.end());
  return copies;
}

void write_witness(std::ostream &out, const CycleWitness &w) {
  const std::size_t length = w.edge_list.size();
  const std::size_t r = length ? w.edge_list.front().size() : 0;
  out << "witness " << length << ' ' << r << '\n';
  for (const auto &e : w.edge_list) {
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    out << '\n';
  }
  for (std::size_t t = 0; t < w.vertex_map.size(); ++t)
    out << t + 1 << ' ' << w.vertex_map[t] << '\n';
}

CycleWitness read_witness(std::istream &in) {
  std::string tag;
  std::size_t length = 0, r = 0;
  if (!(in >> tag >> length >> r) || tag != "witness" || length < 3 || r < 2)
    throw FormatError("malformed witness header");
  CycleWitness w;
  w.edge_list.assign(length, std::vector<Vertex>(r));
  for (auto &e : w.edge_list)
    for (auto &v : e)
      if (!(in >> v)) throw FormatError("truncated witness edge list");
  w.vertex_map.assign(length * (r - 1), 0);
  for (std::size_t t = 0; t < w.vertex_map.size(); ++t) {
    std::size_t label = 0;
    if (!(in >> label >> w.vertex_map[t]) || label != t + 1)
      throw FormatError("malformed witness vertex map");
  }
  return w;
}

} // namespace loose
