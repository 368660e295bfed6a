#include "loose/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "loose/errors.hpp"

namespace loose {

namespace {

bool next_content_line(std::istream &in, std::string &line, bool skip_comments) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip_comments && !line.empty() && line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    return true;
  }
  return false;
}

template <typename T>
std::vector<T> parse_numbers(const std::string &line, std::size_t expected,
                             const char *what) {
  std::istringstream ss(line);
  std::vector<T> values;
  T x;
  while (ss >> x) values.push_back(x);
  if (!ss.eof() || values.size() != expected)
    throw FormatError(std::string("malformed ") + what + " line: '" + line + "'");
  return values;
}

} // namespace

void write_hypergraph(std::ostream &out, const Hypergraph &h) {
  out << h.uniformity() << ' ' << h.ground_n() << ' ' << h.edge_count() << '\n';
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    out << '\n';
  }
}

Hypergraph read_hypergraph(std::istream &in) {
  std::string line;
  if (!next_content_line(in, line, true)) throw FormatError("missing 'r n m' header");
  const auto header = parse_numbers<long long>(line, 3, "header");
  const long long r = header[0], n = header[1], m = header[2];
  if (r < 1 || n < 0 || m < 0 || n > (1LL << 30))
    throw FormatError("invalid header '" + line + "'");
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, false))
      throw FormatError("expected " + std::to_string(m) + " edges, found " +
                        std::to_string(i));
    edges.push_back(parse_numbers<Vertex>(line, static_cast<std::size_t>(r), "edge"));
  }
  if (next_content_line(in, line, false))
    throw FormatError("trailing content after " + std::to_string(m) + " edges");
  if (auto v = validate(static_cast<int>(r), static_cast<int>(n), edges))
    throw FormatError(v->message);
  return Hypergraph(static_cast<int>(r), static_cast<int>(n), edges);
}

void write_coloring(std::ostream &out, const EdgeColoring &chi) {
  for (std::size_t i = 0; i < chi.colors.size(); ++i)
    out << i + 1 << ' ' << chi.colors[i] << '\n';
}

EdgeColoring read_coloring(std::istream &in, const Hypergraph &h) {
  EdgeColoring chi;
  chi.colors.assign(h.edge_count(), 0);
  std::vector<bool> seen(h.edge_count(), false);
  std::string line;
  std::size_t count = 0;
  while (next_content_line(in, line, true)) {
    const auto v = parse_numbers<long long>(line, 2, "coloring");
    if (v[0] < 1 || static_cast<std::size_t>(v[0]) > h.edge_count())
      throw FormatError("coloring edge index " + std::to_string(v[0]) + " out of range");
    const auto idx = static_cast<std::size_t>(v[0] - 1);
    if (seen[idx])
      throw FormatError("edge " + std::to_string(v[0]) + " colored twice");
    seen[idx] = true;
    chi.colors[idx] = static_cast<Vertex>(v[1]);
    ++count;
  }
  if (count != h.edge_count())
    throw FormatError("coloring covers " + std::to_string(count) + " of " +
                      std::to_string(h.edge_count()) + " edges");
  if (auto msg = coloring_violation(h, chi)) throw FormatError(*msg);
  return chi;
}

std::string to_text(const Hypergraph &h) {
  std::ostringstream ss;
  write_hypergraph(ss, h);
  return ss.str();
}

Hypergraph hypergraph_from_text(const std::string &text) {
  std::istringstream ss(text);
  return read_hypergraph(ss);
}

Hypergraph load_hypergraph(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path.string());
  return read_hypergraph(in);
}

void save_hypergraph(const std::filesystem::path &path, const Hypergraph &h) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path.string());
  write_hypergraph(out, h);
}

EdgeColoring load_coloring(const std::filesystem::path &path, const Hypergraph &h) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path.string());
  return read_coloring(in, h);
}

} // namespace loose
