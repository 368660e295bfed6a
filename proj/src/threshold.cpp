#include "loose/threshold.hpp"

#include <algorithm>
#include <numeric>

#include "loose/cycle.hpp"
#include "loose/errors.hpp"
#include "loose/parallel.hpp"
#include "loose/random.hpp"

namespace loose {

Hypergraph complete_partite(int r, int s) {
  if (r < 2 || s < 1) throw PreconditionError("complete partite graph needs r >= 2 and s >= 1");
  std::vector<std::vector<Vertex>> edges;
  std::vector<int> idx(static_cast<std::size_t>(r), 0);
  while (true) {
    std::vector<Vertex> e(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) e[static_cast<std::size_t>(j)] = j * s + idx[static_cast<std::size_t>(j)] + 1;
    edges.push_back(std::move(e));
    int j = r - 1;
    while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == s) idx[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
  }
  return Hypergraph(r, r * s, edges);
}

namespace {

// Branch and bound over include/exclude decisions in edge order.
class ExactMax {
public:
  ExactMax(const Hypergraph &host, int length)
      : host_(host), search_(host.uniformity(), host.ground_n(), length) {}

  std::vector<std::size_t> run() {
    walk(0);
    return best_;
  }

private:
  void walk(std::size_t i) {
    const std::size_t m = host_.edge_count();
    if (chosen_.size() + (m - i) <= best_.size() && !best_.empty()) return;
    if (i == m) {
      if (chosen_.size() > best_.size() || best_.empty()) best_ = chosen_;
      return;
    }
    const auto idx = search_.push_edge(host_.edge(i));
    if (!search_.find_through(idx)) {
      chosen_.push_back(i);
      walk(i + 1);
      chosen_.pop_back();
    }
    search_.pop_edge();
    walk(i + 1);
  }

  const Hypergraph &host_;
  LooseCycleSearch search_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

// Greedy insertion in random order followed by remove-and-refill moves that
// never decrease the edge count.
std::vector<std::size_t> local_search(const Hypergraph &host, int length, Rng &rng) {
  const std::size_t m = host.edge_count();
  LooseCycleSearch search(host.uniformity(), host.ground_n(), length);
  std::vector<char> in(m, 0);

  auto rebuild = [&] {
    search.clear();
    for (std::size_t i = 0; i < m; ++i)
      if (in[i]) search.push_edge(host.edge(i));
  };
  auto shuffled = [&] {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
    return order;
  };
  auto fill = [&] {
    for (std::size_t i : shuffled()) {
      if (in[i]) continue;
      const auto idx = search.push_edge(host.edge(i));
      if (search.find_through(idx)) search.pop_edge();
      else in[i] = 1;
    }
  };

  fill();
  const std::size_t moves = 20 * m;
  for (std::size_t step = 0; step < moves; ++step) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < m; ++i)
      if (in[i]) members.push_back(i);
    if (members.empty()) break;
    const auto before = in;
    const std::size_t drop = std::min<std::size_t>(members.size(), 1 + uniform_below(rng, 2));
    for (std::size_t k = 0; k < drop; ++k) {
      const std::size_t pick = uniform_below(rng, members.size() - k);
      std::swap(members[pick], members[members.size() - 1 - k]);
      in[members[members.size() - 1 - k]] = 0;
    }
    rebuild();
    fill();
    if (std::count(in.begin(), in.end(), 1) < std::count(before.begin(), before.end(), 1)) {
      in = before;
      rebuild();
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

} // namespace

ThresholdReport probe_threshold(int r, int length, int s, std::uint64_t seed,
                                const ThresholdOptions &options) {
  if (r < 2) throw PreconditionError("threshold probe needs r >= 2");
  if (length < 3) throw PreconditionError("cycle length must be >= 3");
  if (s < 1) throw PreconditionError("class size s must be >= 1");
  if (options.effort < 1) throw PreconditionError("effort must be >= 1");

  const Hypergraph host = complete_partite(r, s);
  ThresholdReport report;
  report.r = r;
  report.length = length;
  report.s = s;
  report.seed = seed;
  report.effort = options.effort;
  report.exact = host.edge_count() <= options.exact_limit;

  std::vector<std::size_t> best;
  if (report.exact) {
    best = ExactMax(host, length).run();
  } else {
    std::vector<std::vector<std::size_t>> found(static_cast<std::size_t>(options.effort));
    parallel_for(found.size(), options.threads, [&](std::size_t k) {
      Rng rng(derive_seed(seed, k));
      found[k] = local_search(host, length, rng);
    });
    for (auto &f : found)
      if (f.size() > best.size()) best = std::move(f);
  }

  report.best = host.subgraph(best);
  report.max_edges = best.size();
  double denom = 1.0;
  for (int j = 0; j < r - 1; ++j) denom *= s;
  report.ratio = static_cast<double>(report.max_edges) / denom;
  return report;
}

} // namespace loose
