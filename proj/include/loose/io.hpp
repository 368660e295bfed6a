#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "loose/hypergraph.hpp"

namespace loose {

// Hypergraph text format: a header line "r n m" followed by m lines of r
// space-separated increasing vertex labels. Lines starting with '#' before
// the header are comments and are skipped on input.
void write_hypergraph(std::ostream &out, const Hypergraph &h);
Hypergraph read_hypergraph(std::istream &in);

// Coloring text format: one line "e_index color" per edge, where e_index is
// the 1-based position of the edge in the hypergraph's edge order. Lines may
// come in any order on input but every edge must be colored exactly once;
// output is in edge order.
void write_coloring(std::ostream &out, const EdgeColoring &chi);
EdgeColoring read_coloring(std::istream &in, const Hypergraph &h);

std::string to_text(const Hypergraph &h);
Hypergraph hypergraph_from_text(const std::string &text);

Hypergraph load_hypergraph(const std::filesystem::path &path);
void save_hypergraph(const std::filesystem::path &path, const Hypergraph &h);
EdgeColoring load_coloring(const std::filesystem::path &path, const Hypergraph &h);

} // namespace loose
