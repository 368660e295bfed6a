#include "loose/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "loose/errors.hpp"
#include "loose/io.hpp"
#include "loose/parallel.hpp"

namespace loose {

double c_of_r(int r) {
  if (r < 2) throw PreconditionError("c(r) needs r >= 2");
  double capture = 1.0; // r! / r^r, accumulated as a product of i/r
  for (int i = 1; i <= r; ++i) capture *= static_cast<double>(i) / r;
  return -static_cast<double>(r) / std::log2(1.0 - capture);
}

int capture_family_size(int n, int r) {
  if (n < 1) throw PreconditionError("capture family needs n >= 1");
  return static_cast<int>(std::ceil(c_of_r(r) * std::log2(static_cast<double>(n))));
}

RPartition random_partition(int n, int r, Rng &rng) {
  if (n < 1 || r < 2) throw PreconditionError("random partition needs n >= 1 and r >= 2");
  std::vector<int> class_of(static_cast<std::size_t>(n));
  for (auto &c : class_of) c = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(r)));
  return RPartition(r, std::move(class_of));
}

bool captures(const RPartition &p, std::span<const Vertex> e) {
  if (static_cast<int>(e.size()) != p.parts()) return false;
  std::uint64_t seen = 0;
  std::vector<char> seen_large;
  for (Vertex v : e) {
    if (v < 1 || v > p.ground_n()) return false;
    const int c = p.class_of(v);
    if (p.parts() <= 64) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if (seen & bit) return false;
      seen |= bit;
    } else {
      if (seen_large.empty()) seen_large.assign(static_cast<std::size_t>(p.parts()), 0);
      if (seen_large[static_cast<std::size_t>(c)]) return false;
      seen_large[static_cast<std::size_t>(c)] = 1;
    }
  }
  return true;
}

int default_exhaustive_capture_bound(int r) {
  switch (r) {
  case 2: return 64;
  case 3: return 16;
  case 4: return 13;
  default: return r + 8;
  }
}

std::optional<std::vector<Vertex>>
first_uncaptured(std::span<const RPartition> family, int n, int r,
                 const Hypergraph *required, unsigned threads) {
  auto captured = [&](std::span<const Vertex> e) {
    return std::any_of(family.begin(), family.end(),
                       [&](const RPartition &p) { return captures(p, e); });
  };
  if (!required) {
    std::optional<std::vector<Vertex>> missing;
    for_each_combination(n, r, [&](std::span<const int> c) {
      if (captured(c)) return true;
      missing.emplace(c.begin(), c.end());
      return false;
    });
    return missing;
  }
  const std::size_t m = required->edge_count();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(m, 64));
  std::vector<std::optional<std::size_t>> first_bad(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    for (std::size_t i = c * m / chunks; i < (c + 1) * m / chunks; ++i)
      if (!captured(required->edge(i))) {
        first_bad[c] = i;
        return;
      }
  });
  for (const auto &bad : first_bad)
    if (bad) {
      auto e = required->edge(*bad);
      return std::vector<Vertex>(e.begin(), e.end());
    }
  return std::nullopt;
}

PartitionFamily capture_family(int n, int r, Rng &rng, const CaptureOptions &options,
                               const Hypergraph *required) {
  if (r < 2) throw PreconditionError("capture family needs r >= 2");
  if (n < r) throw PreconditionError("capture family needs n >= r");
  if (options.max_rounds < 1) throw PreconditionError("max_rounds must be >= 1");
  const int size = options.family_size.value_or(capture_family_size(n, r));
  if (size < 0) throw PreconditionError("family size must be non-negative");
  const int bound = options.exhaustive_bound.value_or(default_exhaustive_capture_bound(r));
  const bool exhaustive = n <= bound || required == nullptr;

  PartitionFamily family{n, r, {}, 0, exhaustive};
  std::optional<std::vector<Vertex>> missing;
  for (int round = 1; round <= options.max_rounds; ++round) {
    family.rounds = round;
    family.partitions.clear();
    family.partitions.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) family.partitions.push_back(random_partition(n, r, rng));
    missing = first_uncaptured(family.partitions, n, r, exhaustive ? nullptr : required,
                               options.threads);
    if (!missing) return family;
  }
  std::ostringstream msg;
  msg << "capture completeness: no family of " << size << " partitions captured every "
      << (exhaustive ? "r-subset" : "edge") << " within " << options.max_rounds
      << " rounds (last missed {";
  for (std::size_t i = 0; i < missing->size(); ++i) msg << (i ? "," : "") << (*missing)[i];
  msg << "})";
  throw CaptureFailure(msg.str());
}

double capture_failure_union_bound(int n, int r, int family_size) {
  double capture = 1.0;
  for (int i = 1; i <= r; ++i) capture *= static_cast<double>(i) / r;
  return static_cast<double>(binomial(n, r)) * std::pow(1.0 - capture, family_size);
}

double capture_failure_envelope(int n, int r) {
  return static_cast<double>(binomial(n, r)) * std::pow(static_cast<double>(n), -r);
}

bool block_size_admissible(int n, int r, int s) {
  return s >= 1 && static_cast<long long>(s) * r <= static_cast<long long>(r - 1) * n;
}

BigInt BlockGrid::cell_count() const {
  BigInt cells = 1;
  for (const auto &cls : blocks) cells *= cls.size();
  return cells;
}

BlockGrid block_grid(const RPartition &p, int s) {
  const int n = p.ground_n(), r = p.parts();
  if (!block_size_admissible(n, r, s))
    throw PreconditionError("block size s = " + std::to_string(s) +
                            " violates 1 <= s <= (1 - 1/r) n for n = " +
                            std::to_string(n) + ", r = " + std::to_string(r));
  BlockGrid grid;
  grid.s = s;
  grid.block_of.assign(static_cast<std::size_t>(n), -1);
  for (const auto &cls : p.classes()) {
    auto &blocks = grid.blocks.emplace_back();
    for (std::size_t pos = 0; pos < cls.size(); ++pos) {
      if (pos % static_cast<std::size_t>(s) == 0) blocks.emplace_back();
      blocks.back().push_back(cls[pos]);
      grid.block_of[static_cast<std::size_t>(cls[pos] - 1)] = static_cast<int>(blocks.size() - 1);
    }
  }
  return grid;
}

bool cell_count_within_bound(const BlockGrid &grid, int n, int r) {
  return grid.cell_count() * pow_big(grid.s, static_cast<std::uint64_t>(r)) <=
         pow_big(n, static_cast<std::uint64_t>(r));
}

bool part_count_within_bound(std::size_t t, int n, int r, int s, std::size_t family_size) {
  return BigInt(t) * pow_big(s, static_cast<std::uint64_t>(r)) <=
         pow_big(n, static_cast<std::uint64_t>(r)) * family_size;
}

double part_count_bound(int n, int r, int s, std::size_t family_size) {
  return std::pow(static_cast<double>(n) / s, r) * static_cast<double>(family_size);
}

Decomposition decompose(const Hypergraph &g, int s, Rng &rng, const DecomposeOptions &options) {
  const int n = g.ground_n(), r = g.uniformity();
  if (r < 2) throw PreconditionError("decomposition needs r >= 2");
  if (!block_size_admissible(n, r, s))
    throw PreconditionError("block size s = " + std::to_string(s) +
                            " violates 1 <= s <= (1 - 1/r) n for n = " +
                            std::to_string(n) + ", r = " + std::to_string(r));

  Decomposition d;
  d.n = n;
  d.r = r;
  d.s = s;
  d.family = capture_family(n, r, rng, options.capture, &g);

  std::vector<BlockGrid> grids;
  grids.reserve(d.family.partitions.size());
  d.total_cells = 0;
  for (const auto &p : d.family.partitions) {
    grids.push_back(block_grid(p, s));
    d.total_cells += grids.back().cell_count();
  }

  // Key: partition index followed by the block index in each class.
  using CellKey = std::vector<int>;
  const std::size_t m = g.edge_count();
  std::vector<CellKey> key_of(m);
  parallel_for(m, options.threads, [&](std::size_t i) {
    auto e = g.edge(i);
    for (std::size_t pi = 0; pi < d.family.partitions.size(); ++pi) {
      const auto &p = d.family.partitions[pi];
      if (!captures(p, e)) continue;
      CellKey key(static_cast<std::size_t>(r) + 1);
      key[0] = static_cast<int>(pi);
      for (Vertex v : e)
        key[static_cast<std::size_t>(p.class_of(v)) + 1] =
            grids[pi].block_of[static_cast<std::size_t>(v - 1)];
      key_of[i] = std::move(key);
      return;
    }
    throw VerificationError("capture completeness: edge not captured by the family");
  });

  std::map<CellKey, std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < m; ++i) cells[key_of[i]].push_back(i);

  d.edge_assignment.assign(m, 0);
  for (const auto &[key, members] : cells) {
    const std::size_t part_index = d.parts.size();
    const auto &p = d.family.partitions[static_cast<std::size_t>(key[0])];
    DecompositionPart part{g.subgraph(members), std::vector<std::vector<Vertex>>(static_cast<std::size_t>(r)),
                           static_cast<std::size_t>(key[0]),
                           std::vector<int>(key.begin() + 1, key.end())};
    for (std::size_t i : members) {
      d.edge_assignment[i] = part_index;
      for (Vertex v : g.edge(i)) part.classes[static_cast<std::size_t>(p.class_of(v))].push_back(v);
    }
    for (auto &cls : part.classes) {
      std::sort(cls.begin(), cls.end());
      cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    }
    d.parts.push_back(std::move(part));
  }
  return d;
}

std::optional<std::string> decomposition_violation(const Hypergraph &g, const Decomposition &d) {
  const int r = g.uniformity();
  if (d.r != r || d.n != g.ground_n())
    return std::string("parameters: decomposition (n, r) does not match the graph");

  // Edge partition: every input edge in exactly one part, nothing else.
  std::vector<int> hits(g.edge_count(), 0);
  std::size_t total = 0;
  for (std::size_t pi = 0; pi < d.parts.size(); ++pi) {
    const auto &part = d.parts[pi];
    if (part.graph.empty()) return "non-empty parts: part " + std::to_string(pi) + " is empty";
    for (std::size_t k = 0; k < part.graph.edge_count(); ++k) {
      auto idx = g.find(part.graph.edge(k));
      if (!idx) return "edge partition: part " + std::to_string(pi) + " has an edge outside the graph";
      ++hits[*idx];
      ++total;
      if (!d.edge_assignment.empty() && d.edge_assignment[*idx] != pi)
        return "edge assignment: edge " + std::to_string(*idx) + " not mapped to its part";
    }
  }
  if (total != g.edge_count())
    return "edge partition: parts hold " + std::to_string(total) + " edges, graph has " +
           std::to_string(g.edge_count());
  for (std::size_t i = 0; i < hits.size(); ++i)
    if (hits[i] != 1)
      return "edge partition: edge " + std::to_string(i) + " appears in " +
             std::to_string(hits[i]) + " parts";

  // r-partiteness against the attached classes, class sizes at most s.
  for (std::size_t pi = 0; pi < d.parts.size(); ++pi) {
    const auto &part = d.parts[pi];
    if (static_cast<int>(part.classes.size()) != r)
      return "r-partite: part " + std::to_string(pi) + " has " +
             std::to_string(part.classes.size()) + " classes";
    std::map<Vertex, int> class_of;
    for (std::size_t j = 0; j < part.classes.size(); ++j) {
      if (static_cast<int>(part.classes[j].size()) > d.s)
        return "class size: part " + std::to_string(pi) + " class " + std::to_string(j) +
               " has " + std::to_string(part.classes[j].size()) + " > s vertices";
      for (Vertex v : part.classes[j])
        if (!class_of.emplace(v, static_cast<int>(j)).second)
          return "r-partite: part " + std::to_string(pi) + " classes overlap at vertex " +
                 std::to_string(v);
    }
    for (std::size_t k = 0; k < part.graph.edge_count(); ++k) {
      std::vector<int> per_class(static_cast<std::size_t>(r), 0);
      for (Vertex v : part.graph.edge(k)) {
        auto it = class_of.find(v);
        if (it == class_of.end())
          return "r-partite: part " + std::to_string(pi) + " edge vertex " + std::to_string(v) +
                 " lies in no class";
        ++per_class[static_cast<std::size_t>(it->second)];
      }
      if (std::any_of(per_class.begin(), per_class.end(), [](int c) { return c != 1; }))
        return "r-partite: part " + std::to_string(pi) + " has an edge not meeting every class once";
    }

    // Provenance: classes sit inside the named cell of the named partition.
    if (!d.family.partitions.empty()) {
      if (part.partition_index >= d.family.partitions.size())
        return "provenance: part " + std::to_string(pi) + " names a missing partition";
      const auto &p = d.family.partitions[part.partition_index];
      const auto grid = block_grid(p, d.s);
      for (std::size_t j = 0; j < part.classes.size(); ++j)
        for (Vertex v : part.classes[j])
          if (p.class_of(v) != static_cast<int>(j) ||
              grid.block_of[static_cast<std::size_t>(v - 1)] != part.cell[j])
            return "provenance: part " + std::to_string(pi) + " vertex " + std::to_string(v) +
                   " lies outside its cell";
    }
  }

  if (!d.family.partitions.empty()) {
    for (const auto &p : d.family.partitions)
      if (!cell_count_within_bound(block_grid(p, d.s), d.n, r))
        return std::string("cell count: a partition has more than (n/s)^r cells");
    if (!part_count_within_bound(d.t(), d.n, r, d.s, d.family.partitions.size()))
      return "part count: t = " + std::to_string(d.t()) + " exceeds (n/s)^r * family size";
  }
  return std::nullopt;
}

void write_decomposition(std::ostream &out, const Decomposition &d) {
  out << d.t() << ' ' << d.s << ' ' << d.n << ' ' << d.r << '\n';
  for (const auto &part : d.parts) {
    out << part.partition_index + 1;
    for (int k : part.cell) out << ' ' << k + 1;
    out << '\n';
    for (const auto &cls : part.classes) {
      out << cls.size();
      for (Vertex v : cls) out << ' ' << v;
      out << '\n';
    }
    write_hypergraph(out, part.graph);
  }
}

Decomposition read_decomposition(std::istream &in) {
  Decomposition d;
  std::size_t t = 0;
  if (!(in >> t >> d.s >> d.n >> d.r) || d.r < 1 || d.n < 0 || d.s < 1)
    throw FormatError("malformed decomposition header");
  std::vector<std::vector<Vertex>> all_edges;
  for (std::size_t pi = 0; pi < t; ++pi) {
    DecompositionPart part{Hypergraph(d.r, d.n), {}, 0, {}};
    std::size_t i = 0;
    if (!(in >> i) || i < 1) throw FormatError("malformed provenance line");
    part.partition_index = i - 1;
    part.cell.resize(static_cast<std::size_t>(d.r));
    for (auto &k : part.cell) {
      if (!(in >> k) || k < 1) throw FormatError("malformed provenance line");
      --k;
    }
    part.classes.resize(static_cast<std::size_t>(d.r));
    for (auto &cls : part.classes) {
      std::size_t size = 0;
      if (!(in >> size)) throw FormatError("malformed class line");
      cls.resize(size);
      for (auto &v : cls)
        if (!(in >> v)) throw FormatError("malformed class line");
    }
    // The embedded hypergraph block is line-oriented.
    std::string line;
    std::getline(in, line);
    std::ostringstream block;
    int r = 0, n = 0;
    std::size_t m = 0;
    if (!std::getline(in, line)) throw FormatError("missing part hypergraph");
    std::istringstream header(line);
    if (!(header >> r >> n >> m)) throw FormatError("malformed part hypergraph header");
    block << line << '\n';
    for (std::size_t k = 0; k < m; ++k) {
      if (!std::getline(in, line)) throw FormatError("truncated part hypergraph");
      block << line << '\n';
    }
    part.graph = hypergraph_from_text(block.str());
    for (auto &e : part.graph.edge_list()) all_edges.push_back(std::move(e));
    d.parts.push_back(std::move(part));
  }
  const Hypergraph all = Hypergraph::collect(d.r, d.n, all_edges);
  d.edge_assignment.assign(all.edge_count(), 0);
  for (std::size_t pi = 0; pi < d.parts.size(); ++pi)
    for (std::size_t k = 0; k < d.parts[pi].graph.edge_count(); ++k)
      d.edge_assignment[*all.find(d.parts[pi].graph.edge(k))] = pi;
  return d;
}

} // namespace loose
