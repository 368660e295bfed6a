#include "doctest.h"

#include <cmath>
#include <fstream>
#include <string>

#include "loose/counting.hpp"
#include "loose/cycle.hpp"
#include "loose/decomposition.hpp"
#include "loose/errors.hpp"
#include "loose/io.hpp"
#include "oracles.hpp"

using namespace loose;

namespace {

std::uint64_t exact(const Hypergraph &g, int l, int n, unsigned threads = 1) {
  return static_cast<std::uint64_t>(*count_colorings_exact(g, l, n, {}, threads).exact_count);
}

std::uint64_t read_fixture_number(const char *path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line.front() != '#') return std::stoull(line);
  FAIL("fixture has no value");
  return 0;
}

} // namespace

TEST_CASE("colorings of one edge and of two disjoint edges") {
  std::vector<std::vector<Vertex>> one{{1, 2, 3}};
  for (int n = 3; n <= 9; ++n)
    for (int l : {3, 4, 5}) CHECK(exact(Hypergraph(3, n, one), l, n) == static_cast<std::uint64_t>(n - 3));

  std::vector<std::vector<Vertex>> two{{1, 2, 3}, {4, 5, 6}};
  CHECK(exact(Hypergraph(3, 10, two), 3, 10) == 49);
  for (int l : {3, 4, 6}) CHECK(exact(Hypergraph(3, 8, two), l, 8) == 25);
  CHECK(exact(Hypergraph(3, 10), 3, 10) == 1);
}

TEST_CASE("colorings of the loose triangle template agree with the extension-first count") {
  const Hypergraph t = loose_cycle_template(3, 3).as_hypergraph();
  const auto r9 = count_colorings_exact(t, 3, 9);
  CHECK(r9.bound_value == 216);
  CHECK(*r9.exact_count == 210);
  CHECK(oracle::count_free_colorings_by_extension(t, 3, 9) == 210);
  CHECK(exact(t, 3, 10) == 319);
  CHECK(oracle::count_free_colorings_by_extension(t, 3, 10) == 319);
  CHECK(exact(t, 3, 10, 4) == 319);
}

TEST_CASE("exact counts match the extension-first oracle on random small graphs") {
  oracle::Lcg rng{77};
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 7 + trial % 3;
    Hypergraph g = oracle::random_graph(3, n, 0.12, rng);
    if (g.edge_count() > 5) {
      std::vector<std::size_t> keep{0, 1, 2, 3, 4};
      g = g.subgraph(keep);
    }
    const int l = 3 + trial % 2;
    INFO("trial " << trial);
    CHECK(exact(g, l, n) == oracle::count_free_colorings_by_extension(g, l, n));
  }
}

TEST_CASE("exhaustive counting refuses beyond the work bound") {
  const Hypergraph k = complete_hypergraph(3, 9);
  try {
    count_colorings_exact(k, 3, 9);
    FAIL("expected refusal");
  } catch (const WorkBoundError &e) {
    CHECK(e.estimated_work() == to_string(pow_big(6, 84)));
  }
  CHECK_THROWS_AS(count_colorings_exact(Hypergraph(3, 9), 2, 9), PreconditionError);
  CHECK_THROWS_AS(count_colorings_exact(Hypergraph(3, 9), 3, 8), PreconditionError);
}

TEST_CASE("Monte Carlo degenerate cases") {
  const auto empty = count_colorings_mc(Hypergraph(3, 6), 3, 6, 100, 1);
  CHECK(empty.mc_estimate->mean == 1.0);
  CHECK_FALSE(empty.exact_count.has_value());

  std::vector<std::vector<Vertex>> one{{1, 2, 3}};
  const auto single = count_colorings_mc(Hypergraph(3, 6, one), 3, 6, 1, 1);
  CHECK(std::isinf(single.mc_estimate->standard_error));
  CHECK(single.mc_estimate->mean == 3.0);
  CHECK_THROWS_AS(count_colorings_mc(Hypergraph(3, 6), 3, 6, 0, 1), PreconditionError);
}

TEST_CASE("Monte Carlo is reproducible and thread-independent") {
  const Hypergraph t = loose_cycle_template(3, 3).as_hypergraph();
  const auto a = count_colorings_mc(t, 3, 9, 5000, 17, 1);
  const auto b = count_colorings_mc(t, 3, 9, 5000, 17, 4);
  CHECK(a.mc_estimate->free_samples == b.mc_estimate->free_samples);
  CHECK(std::fabs(a.mc_estimate->mean - 210.0) <= 4 * a.mc_estimate->standard_error);
}

TEST_CASE("color-set sizes") {
  std::vector<std::vector<Vertex>> e{{1, 2}, {3, 4}, {5, 6}};
  const Hypergraph g(2, 9, e);
  CHECK(color_set_size(g, {{7, 7, 7}}).used == 1);
  const auto inj = color_set_size(g, {{7, 8, 9}});
  CHECK(inj.used == 3);
  CHECK(inj.external == 3);

  const Hypergraph f = load_hypergraph(FIXTURE_DIR "/colored_5.txt");
  const auto mixed = color_set_size(f, load_coloring(FIXTURE_DIR "/colored_5.coloring", f));
  // Colors {8, 3, 8, 9, 1}; V = {1..7}, so 8 and 9 are external.
  CHECK(mixed.used == 4);
  CHECK(mixed.external == 2);
}

TEST_CASE("forb closed form below the cycle's vertex count") {
  CHECK(*enumerate_forb(5, 3, 3).exact_count == 1024);
  CHECK(*enumerate_forb(4, 3, 3).exact_count == 16);
  CHECK(*enumerate_forb(8, 3, 5).exact_count == pow_big(2, 56));
  CHECK(*enumerate_forb(8, 4, 3).exact_count == pow_big(2, 70));
  CHECK_THROWS_AS(enumerate_forb(8, 3, 3), WorkBoundError);
}

TEST_CASE("forb regression fixture for r = 3, l = 3, n = 6") {
  const auto rep = enumerate_forb(6, 3, 3);
  CHECK(*rep.exact_count == read_fixture_number(FIXTURE_DIR "/forb_r3_l3_n6.txt"));
  CHECK(*rep.max_free_edges == 10);
  CHECK(*enumerate_forb(6, 3, 3, {}, 4).exact_count == *rep.exact_count);
  // Graphs on [5] embed into [6]; every subset of a cycle-free maximum is cycle-free.
  CHECK(*rep.exact_count >= *enumerate_forb(5, 3, 3).exact_count);
  CHECK(*rep.exact_count >= pow_big(2, *rep.max_free_edges));
  CHECK(*rep.exact_count <= rep.bound_value);
}

TEST_CASE("forb on ordinary graphs: triangle-free graphs on five vertices") {
  // Labeled triangle-free graphs on 4 and 5 vertices (OEIS A006785).
  CHECK(*enumerate_forb(4, 2, 3).exact_count == 41);
  CHECK(*enumerate_forb(5, 2, 3).exact_count == 388);
}

TEST_CASE("g_r on tiny ground sets") {
  CHECK(*count_gr_small(3, 4, 3).exact_count == 1);
  const auto four = count_gr_small(4, 4, 3);
  // Each of the four 3-sets of [4] is absent or carries its only color.
  CHECK(*four.exact_count == 16);

  // Direct enumeration: every edge subset of the 2-sets of [4], every
  // coloring, tested with the embedding oracle.
  std::uint64_t direct = 0;
  const Hypergraph all = complete_hypergraph(2, 4);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 6; ++i)
      if (mask >> i & 1) idx.push_back(i);
    direct += oracle::count_free_colorings_by_extension(all.subgraph(idx), 3, 4);
  }
  CHECK(*count_gr_small(4, 3, 3).exact_count == direct);

  std::uint64_t prev = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto v = static_cast<std::uint64_t>(*count_gr_small(n, 3, 3).exact_count);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(count_gr_small(7, 3, 3), WorkBoundError);
}

TEST_CASE("colorings factor over a decomposition") {
  oracle::Lcg lcg{31};
  for (int trial = 0; trial < 4; ++trial) {
    Hypergraph g = oracle::random_graph(3, 8, 0.15, lcg);
    if (g.edge_count() > 6) {
      std::vector<std::size_t> keep{0, 1, 2, 3, 4, 5};
      g = g.subgraph(keep);
    }
    Rng rng(static_cast<std::uint64_t>(trial));
    const Decomposition d = decompose(g, 3, rng);
    BigInt product = 1;
    for (const auto &part : d.parts) product *= *count_colorings_exact(part.graph, 3, 8).exact_count;
    CHECK(*count_colorings_exact(g, 3, 8).exact_count <= product);
  }
}

TEST_CASE("cycle-free extensions have no strongly rainbow cycle below") {
  const int n = 9;
  const Hypergraph g(3, n, loose_cycle_template(3, 3).edges);
  std::size_t checked = 0;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = 1; b <= n; ++b)
      for (Vertex c = 1; c <= n; ++c) {
        const EdgeColoring chi{{a, b, c}};
        if (coloring_violation(g, chi)) continue;
        if (contains_loose_cycle(extend(g, chi), 3)) continue;
        const auto sr = strongly_rainbow_subgraph(g, chi);
        CHECK_FALSE(contains_loose_cycle(sr.graph, 3).has_value());
        ++checked;
      }
  CHECK(checked == 210);
}
