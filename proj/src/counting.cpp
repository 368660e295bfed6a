#include "loose/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "loose/cycle.hpp"
#include "loose/errors.hpp"
#include "loose/parallel.hpp"
#include "loose/random.hpp"

namespace loose {

namespace {

// One decision of an exhaustive walk: either leave the slot empty (when
// allowed) or add one of its candidate edges.
struct Slot {
  std::vector<std::vector<Vertex>> options;
  bool may_skip = false;
};

struct WalkResult {
  std::uint64_t leaves = 0;
  std::uint64_t max_edges = 0;
};

// Depth-first walk over all choices, abandoning a branch as soon as the
// edge just added closes a loose cycle. Every cycle-free leaf counts once.
class ExtensionWalk {
public:
  ExtensionWalk(int r, int n, int length, const std::vector<Slot> &slots)
      : search_(r, n, length), slots_(slots) {}

  // Replays a prefix of choices (-1 = skip); false if it closes a cycle.
  bool replay(std::span<const int> prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] < 0) continue;
      const auto idx = search_.push_edge(slots_[i].options[static_cast<std::size_t>(prefix[i])]);
      if (search_.find_through(idx)) return false;
    }
    return true;
  }

  WalkResult run(std::size_t depth) {
    result_ = {};
    walk(depth);
    return result_;
  }

private:
  void walk(std::size_t i) {
    if (i == slots_.size()) {
      ++result_.leaves;
      result_.max_edges = std::max<std::uint64_t>(result_.max_edges, search_.edge_count());
      return;
    }
    const Slot &slot = slots_[i];
    if (slot.may_skip) walk(i + 1);
    for (const auto &e : slot.options) {
      const auto idx = search_.push_edge(e);
      if (!search_.find_through(idx)) walk(i + 1);
      search_.pop_edge();
    }
  }

  LooseCycleSearch search_;
  const std::vector<Slot> &slots_;
  WalkResult result_;
};

// Splits the walk into prefix subtrees so workers can share it; the sum and
// maximum are reduced in prefix order.
WalkResult run_walk(int r, int n, int length, const std::vector<Slot> &slots,
                    unsigned threads) {
  std::vector<std::vector<int>> prefixes{{}};
  std::size_t depth = 0;
  const std::size_t wanted = threads > 1 ? 16 * static_cast<std::size_t>(threads) : 1;
  while (prefixes.size() < wanted && depth < slots.size()) {
    std::vector<std::vector<int>> next;
    const Slot &slot = slots[depth];
    for (const auto &p : prefixes) {
      if (slot.may_skip) {
        next.push_back(p);
        next.back().push_back(-1);
      }
      for (std::size_t k = 0; k < slot.options.size(); ++k) {
        next.push_back(p);
        next.back().push_back(static_cast<int>(k));
      }
    }
    prefixes = std::move(next);
    ++depth;
  }

  std::vector<WalkResult> parts(prefixes.size());
  parallel_for(prefixes.size(), threads, [&](std::size_t i) {
    ExtensionWalk walk(r, n, length, slots);
    if (walk.replay(prefixes[i])) parts[i] = walk.run(depth);
  });
  WalkResult total;
  for (const auto &p : parts) {
    total.leaves += p.leaves;
    total.max_edges = std::max(total.max_edges, p.max_edges);
  }
  return total;
}

std::vector<Vertex> with_color(std::span<const Vertex> e, Vertex c) {
  std::vector<Vertex> x(e.begin(), e.end());
  x.insert(std::upper_bound(x.begin(), x.end(), c), c);
  return x;
}

std::vector<Vertex> colors_outside(std::span<const Vertex> e, int n) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v)
    if (!std::binary_search(e.begin(), e.end(), v)) out.push_back(v);
  return out;
}

BigInt coloring_count(const Hypergraph &g, int n) {
  BigInt total = 1;
  for (std::size_t i = 0; i < g.edge_count(); ++i) total *= n - g.uniformity();
  return total;
}

void check_coloring_args(const Hypergraph &g, int length, int n) {
  if (length < 3) throw PreconditionError("cycle length must be >= 3");
  if (g.ground_n() > n)
    throw PreconditionError("graph ground set exceeds the color range [n]");
  if (g.uniformity() < 1) throw PreconditionError("graph uniformity must be >= 1");
}

} // namespace

CountReport count_colorings_exact(const Hypergraph &g, int length, int n,
                                  const WorkLimits &limits, unsigned threads) {
  check_coloring_args(g, length, n);
  CountReport report;
  report.quantity = "colorings";
  report.n = n;
  report.r = g.uniformity() + 1;
  report.length = length;
  report.method = CountMethod::exhaustive;
  report.bound_value = coloring_count(g, n);
  report.bound_description = "all colorings, prod_e (n - |e|)";
  if (report.bound_value > limits.max_colorings)
    throw WorkBoundError("exhaustive coloring count refused: " +
                             to_string(report.bound_value) + " colorings exceed the work bound " +
                             to_string(limits.max_colorings),
                         to_string(report.bound_value));

  std::vector<Slot> slots;
  slots.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    Slot slot;
    for (Vertex c : colors_outside(g.edge(i), n)) slot.options.push_back(with_color(g.edge(i), c));
    slots.push_back(std::move(slot));
  }
  report.exact_count = run_walk(report.r, n, length, slots, threads).leaves;
  return report;
}

CountReport count_colorings_mc(const Hypergraph &g, int length, int n,
                               std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  check_coloring_args(g, length, n);
  if (samples < 1) throw PreconditionError("Monte Carlo needs at least one sample");
  CountReport report;
  report.quantity = "colorings";
  report.n = n;
  report.r = g.uniformity() + 1;
  report.length = length;
  report.seed = seed;
  report.method = CountMethod::monte_carlo;
  report.bound_value = coloring_count(g, n);
  report.bound_description = "all colorings, prod_e (n - |e|)";

  McEstimate est;
  est.samples = samples;
  if (report.bound_value == 0) {
    // Some edge has no admissible color: there are no colorings at all.
    est.mean = 0.0;
    est.standard_error = 0.0;
    report.mc_estimate = est;
    report.note = "no admissible coloring exists";
    return report;
  }

  std::vector<std::vector<Vertex>> choices;
  for (std::size_t i = 0; i < g.edge_count(); ++i) choices.push_back(colors_outside(g.edge(i), n));

  const std::uint64_t shards = std::min<std::uint64_t>(samples, 64);
  std::vector<std::uint64_t> free_per_shard(shards, 0);
  parallel_for(shards, threads, [&](std::size_t k) {
    Rng rng(derive_seed(seed, k));
    LooseCycleSearch search(report.r, n, length);
    const std::uint64_t count = samples / shards + (k < samples % shards ? 1 : 0);
    for (std::uint64_t s = 0; s < count; ++s) {
      search.clear();
      bool cycle = false;
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto &opts = choices[i];
        const Vertex c = opts[uniform_below(rng, opts.size())];
        if (cycle) continue; // keep the stream layout independent of outcomes
        const auto idx = search.push_edge(with_color(g.edge(i), c));
        cycle = search.find_through(idx);
      }
      if (!cycle) ++free_per_shard[k];
    }
  });

  for (auto f : free_per_shard) est.free_samples += f;
  const double total = static_cast<double>(report.bound_value);
  const double p = static_cast<double>(est.free_samples) / static_cast<double>(samples);
  est.mean = p * total;
  est.standard_error = samples < 2 ? std::numeric_limits<double>::infinity()
                                   : total * std::sqrt(p * (1.0 - p) / static_cast<double>(samples - 1));
  report.mc_estimate = est;
  return report;
}

ColorSetSize color_set_size(const Hypergraph &g, const EdgeColoring &chi) {
  const auto z = color_set(g, chi);
  const auto support = g.support();
  ColorSetSize out;
  out.used = z.size();
  out.external = static_cast<std::size_t>(std::count_if(z.begin(), z.end(), [&](Vertex c) {
    return !std::binary_search(support.begin(), support.end(), c);
  }));
  return out;
}

CountReport enumerate_forb(int n, int r, int length, const WorkLimits &limits, unsigned threads) {
  if (r < 2) throw PreconditionError("forb enumeration needs r >= 2");
  if (length < 3) throw PreconditionError("cycle length must be >= 3");
  if (n < 0) throw PreconditionError("n must be non-negative");
  const BigInt slots_big = binomial(n, r);
  CountReport report;
  report.quantity = "forb";
  report.n = n;
  report.r = r;
  report.length = length;
  report.method = CountMethod::exhaustive;
  if (slots_big > (1 << 20))
    throw WorkBoundError("forb enumeration refused: C(n,r) = " + to_string(slots_big) +
                             " edge slots",
                         "2^" + to_string(slots_big) + " subsets");
  report.bound_value = pow_big(2, static_cast<std::uint64_t>(slots_big));
  report.bound_description = "all r-graphs on [n], 2^C(n,r)";

  const BigInt walk_limit = std::min(limits.max_edge_slots, limits.max_forb_walk);
  if (slots_big > walk_limit) {
    if (n < length * (r - 1)) {
      report.exact_count = report.bound_value;
      report.note = "closed form: fewer than length*(r-1) vertices, every graph is cycle-free";
      report.max_free_edges = static_cast<std::uint64_t>(slots_big);
      return report;
    }
    throw WorkBoundError("forb enumeration refused: C(n,r) = " + to_string(slots_big) +
                             " edge slots exceed the walk bound " + to_string(walk_limit),
                         "2^" + to_string(slots_big) + " subsets");
  }

  std::vector<Slot> slots;
  for_each_combination(n, r, [&](std::span<const int> c) {
    slots.push_back(Slot{{std::vector<Vertex>(c.begin(), c.end())}, true});
    return true;
  });
  const WalkResult result = run_walk(r, n, length, slots, threads);
  report.exact_count = result.leaves;
  report.max_free_edges = result.max_edges;
  return report;
}

CountReport count_gr_small(int n, int r, int length, const WorkLimits &limits, unsigned threads) {
  if (r < 3) throw PreconditionError("g_r counting needs r >= 3");
  if (length < 3) throw PreconditionError("cycle length must be >= 3");
  if (n < r - 1) throw PreconditionError("g_r counting needs n >= r - 1");
  const BigInt slot_count = binomial(n, r - 1);
  CountReport report;
  report.quantity = "gr";
  report.n = n;
  report.r = r;
  report.length = length;
  report.method = CountMethod::exhaustive;
  if (slot_count > 4096)
    throw WorkBoundError("g_r counting refused: C(n, r-1) = " + to_string(slot_count) + " slots",
                         to_string(slot_count) + " slots");
  report.bound_value = pow_big(n - r + 2, static_cast<std::uint64_t>(slot_count));
  report.bound_description = "all colored (r-1)-graphs on [n], (n-r+2)^C(n,r-1)";

  if (report.bound_value > limits.max_gr_leaves) {
    if (n < length * (r - 1)) {
      report.exact_count = report.bound_value;
      report.note = "closed form: fewer than length*(r-1) vertices, every extension is cycle-free";
      return report;
    }
    throw WorkBoundError("g_r counting refused: " + to_string(report.bound_value) +
                             " colored graphs exceed the work bound " +
                             to_string(limits.max_gr_leaves),
                         to_string(report.bound_value));
  }

  std::vector<Slot> slots;
  for_each_combination(n, r - 1, [&](std::span<const int> e) {
    Slot slot;
    slot.may_skip = true;
    for (Vertex c : colors_outside(e, n)) slot.options.push_back(with_color(e, c));
    slots.push_back(std::move(slot));
    return true;
  });
  report.exact_count = run_walk(r, n, length, slots, threads).leaves;
  return report;
}

} // namespace loose
