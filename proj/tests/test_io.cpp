#include "doctest.h"

#include <sstream>

#include "loose/errors.hpp"
#include "loose/io.hpp"

using namespace loose;

TEST_CASE("hypergraph text round-trips exactly") {
  std::vector<std::vector<Vertex>> e{{2, 4, 7}, {1, 2, 3}};
  Hypergraph h(3, 7, e);
  const std::string text = to_text(h);
  CHECK(text == "3 7 2\n1 2 3\n2 4 7\n");
  const Hypergraph back = hypergraph_from_text(text);
  CHECK(back == h);
  CHECK(to_text(back) == text);
  CHECK(to_text(Hypergraph(3, 9)) == "3 9 0\n");
}

TEST_CASE("comment lines before the header are skipped") {
  const Hypergraph h = hypergraph_from_text("# seed 42\n# more\n2 3 1\n1 3\n");
  CHECK(h.edge_count() == 1);
  CHECK(h.ground_n() == 3);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(hypergraph_from_text(""), FormatError);
  CHECK_THROWS_AS(hypergraph_from_text("3 5 2\n1 2 3\n"), FormatError);
  CHECK_THROWS_AS(hypergraph_from_text("3 5 1\n1 2 9\n"), FormatError);
  CHECK_THROWS_AS(hypergraph_from_text("3 5 1\n1 2 3 4\n"), FormatError);
  CHECK_THROWS_AS(hypergraph_from_text("3 5 1\n1 2 3\n4 5 1\n"), FormatError);
  CHECK_THROWS_AS(hypergraph_from_text("3 5 2\n1 2 3\n3 2 1\n"), FormatError);
  CHECK_THROWS_AS(hypergraph_from_text("3 5 1\n1 2 x\n"), FormatError);
}

TEST_CASE("coloring text round-trips and validates") {
  const Hypergraph h = load_hypergraph(FIXTURE_DIR "/colored_5.txt");
  const EdgeColoring chi = load_coloring(FIXTURE_DIR "/colored_5.coloring", h);
  CHECK(chi.colors == std::vector<Vertex>{8, 3, 8, 9, 1});
  std::ostringstream out;
  write_coloring(out, chi);
  CHECK(out.str() == "1 8\n2 3\n3 8\n4 9\n5 1\n");

  std::istringstream shuffled("3 8\n1 8\n5 1\n2 3\n4 9\n");
  CHECK(read_coloring(shuffled, h) == chi);

  std::istringstream missing("1 8\n2 3\n3 8\n4 9\n");
  CHECK_THROWS_AS(read_coloring(missing, h), FormatError);
  std::istringstream twice("1 8\n1 8\n2 3\n3 8\n4 9\n5 1\n");
  CHECK_THROWS_AS(read_coloring(twice, h), FormatError);
  std::istringstream own("1 2\n2 3\n3 8\n4 9\n5 1\n");
  CHECK_THROWS_AS(read_coloring(own, h), PreconditionError);
}
