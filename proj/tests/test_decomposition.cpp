#include "doctest.h"

#include <cmath>
#include <sstream>

#include "loose/decomposition.hpp"
#include "loose/errors.hpp"
#include "oracles.hpp"

using namespace loose;

TEST_CASE("family-size constant") {
  CHECK(c_of_r(2) == 2.0);
  CHECK(c_of_r(3) == doctest::Approx(8.274262468351182).epsilon(1e-14));
  CHECK(c_of_r(4) == doctest::Approx(28.1652445290199).epsilon(1e-13));
  CHECK(capture_family_size(12, 3) == 30);
  CHECK(capture_family_size(9, 3) == 27);
  CHECK(capture_family_size(16, 2) == 8);
  CHECK_THROWS_AS(c_of_r(1), PreconditionError);
}

TEST_CASE("capture means one vertex in every class") {
  auto p = RPartition::from_classes(6, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(captures(p, std::vector<Vertex>{1, 3, 5}));
  CHECK_FALSE(captures(p, std::vector<Vertex>{1, 2, 5}));
  CHECK_FALSE(captures(p, std::vector<Vertex>{1, 3}));
}

TEST_CASE("random partitions are reproducible") {
  Rng a(7), b(7);
  for (int i = 0; i < 5; ++i) CHECK(random_partition(20, 4, a) == random_partition(20, 4, b));
}

TEST_CASE("capture families cover every r-set") {
  Rng rng(99);
  const auto fam = capture_family(10, 3, rng);
  CHECK(fam.exhaustive);
  CHECK(fam.partitions.size() == static_cast<std::size_t>(capture_family_size(10, 3)));
  CHECK_FALSE(first_uncaptured(fam.partitions, 10, 3).has_value());

  CaptureOptions tiny;
  tiny.family_size = 1;
  tiny.max_rounds = 2;
  Rng rng2(1);
  CHECK_THROWS_AS(capture_family(10, 3, rng2, tiny), CaptureFailure);
}

TEST_CASE("block size condition") {
  CHECK(block_size_admissible(9, 3, 6));
  CHECK_FALSE(block_size_admissible(9, 3, 7));
  CHECK_FALSE(block_size_admissible(9, 3, 0));
  auto p = RPartition::from_classes(9, {{1, 2, 3, 4, 5}, {6, 7}, {8, 9}});
  CHECK_THROWS_WITH_AS(block_grid(p, 7), doctest::Contains("1 <= s <= (1 - 1/r) n"),
                       PreconditionError);
  const BlockGrid g = block_grid(p, 2);
  CHECK(g.blocks[0] == std::vector<std::vector<Vertex>>{{1, 2}, {3, 4}, {5}});
  CHECK(g.cell_count() == 3);
  CHECK(g.block_of[4] == 2);
  CHECK(cell_count_within_bound(g, 9, 3));
}

TEST_CASE("decomposition of the complete 3-graph on nine vertices") {
  const Hypergraph k = complete_hypergraph(3, 9);
  Rng rng(2024);
  const Decomposition d = decompose(k, 3, rng);
  CHECK_FALSE(decomposition_violation(k, d).has_value());
  CHECK(d.t() <= 729);
  CHECK(part_count_within_bound(d.t(), 9, 3, 3, d.family.partitions.size()));
  std::size_t edges = 0;
  for (const auto &part : d.parts) edges += part.graph.edge_count();
  CHECK(edges == 84);
}

TEST_CASE("empty input gives no parts") {
  Rng rng(1);
  const Decomposition d = decompose(Hypergraph(3, 9), 3, rng);
  CHECK(d.t() == 0);
  CHECK_FALSE(decomposition_violation(Hypergraph(3, 9), d).has_value());
}

TEST_CASE("same seed, same decomposition; independent of threads") {
  oracle::Lcg lcg{5};
  const Hypergraph g = oracle::random_graph(4, 14, 0.3, lcg);
  Rng a(11), b(11);
  DecomposeOptions par;
  par.threads = 4;
  par.capture.threads = 4;
  const Decomposition x = decompose(g, 4, a);
  const Decomposition y = decompose(g, 4, b, par);
  std::ostringstream sx, sy;
  write_decomposition(sx, x);
  write_decomposition(sy, y);
  CHECK(sx.str() == sy.str());
}

TEST_CASE("decomposition text round-trips parts and provenance") {
  oracle::Lcg lcg{8};
  const Hypergraph g = oracle::random_graph(3, 12, 0.25, lcg);
  Rng rng(3);
  const Decomposition d = decompose(g, 5, rng);
  std::ostringstream out;
  write_decomposition(out, d);
  std::istringstream in(out.str());
  const Decomposition back = read_decomposition(in);
  REQUIRE(back.t() == d.t());
  for (std::size_t i = 0; i < d.t(); ++i) {
    CHECK(back.parts[i].graph == d.parts[i].graph);
    CHECK(back.parts[i].classes == d.parts[i].classes);
    CHECK(back.parts[i].partition_index == d.parts[i].partition_index);
    CHECK(back.parts[i].cell == d.parts[i].cell);
  }
  std::ostringstream again;
  write_decomposition(again, back);
  CHECK(again.str() == out.str());
}

TEST_CASE("verifier catches broken decompositions") {
  const Hypergraph k = complete_hypergraph(3, 8);
  Rng rng(4);
  const Decomposition d = decompose(k, 3, rng);
  REQUIRE(d.t() >= 2);

  Decomposition dropped = d;
  dropped.parts.pop_back();
  CHECK(decomposition_violation(k, dropped).has_value());

  Decomposition moved = d;
  std::swap(moved.parts[0].cell, moved.parts[1].cell);
  if (moved.parts[0].cell != d.parts[0].cell) CHECK(decomposition_violation(k, moved).has_value());

  Decomposition fat = d;
  fat.parts[0].classes[0].push_back(8);
  fat.parts[0].classes[0].push_back(7);
  fat.parts[0].classes[0].push_back(6);
  CHECK(decomposition_violation(k, fat).has_value());
}

TEST_CASE("union-bound estimates") {
  const double env = capture_failure_envelope(12, 3);
  CHECK(env == doctest::Approx(220.0 / 1728.0));
  CHECK(capture_failure_union_bound(12, 3, 30) <= env);
  CHECK(part_count_bound(9, 3, 3, 27) == doctest::Approx(729.0));
}
