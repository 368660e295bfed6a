#include "loose/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "loose/bound_report.hpp"
#include "loose/counting.hpp"
#include "loose/cycle.hpp"
#include "loose/decomposition.hpp"
#include "loose/errors.hpp"
#include "loose/io.hpp"
#include "loose/reports.hpp"
#include "loose/threshold.hpp"

namespace loose {

namespace {

struct RunConfig {
  std::string command;
  std::string count_kind;
  int n = 0;
  int r = 0;
  int ell = 0;
  std::vector<int> s;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  int effort = 8;
  std::optional<std::string> work_bound;
  std::string format = "text";
  std::string out_path;
  std::string results_dir;
  std::string in_path;
  std::optional<double> p;
  std::optional<std::uint64_t> edges;
  std::uint64_t samples = 10000;
  double c_threshold = 0.0;
  std::int64_t big_n = 0; // bound-report accepts n beyond int range
};

std::uint64_t draw_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

BigInt parse_big(const std::string &text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw PreconditionError("--work-bound must be a non-negative integer, got '" + text + "'");
  return BigInt(text);
}

// Writes the command's main output to --out (or the given stream) and, with
// --results-dir, both formats to <dir>/<name>.txt and <dir>/<name>.jsonl.
class Sink {
public:
  Sink(const RunConfig &cfg, std::ostream &fallback) : cfg_(cfg), fallback_(fallback) {
    if (!cfg.out_path.empty()) {
      file_.open(cfg.out_path);
      if (!file_) throw PreconditionError("cannot open output file " + cfg.out_path);
    }
  }

  std::ostream &main() { return file_.is_open() ? static_cast<std::ostream &>(file_) : fallback_; }

  void emit(const std::string &name, const std::function<void(std::ostream &)> &table,
            const std::string &record) {
    if (cfg_.format == "records") main() << record << '\n';
    else table(main());
    if (!cfg_.results_dir.empty()) {
      std::filesystem::create_directories(cfg_.results_dir);
      const auto base = std::filesystem::path(cfg_.results_dir) / name;
      std::ofstream txt(base.string() + ".txt", std::ios::app);
      std::ofstream rec(base.string() + ".jsonl", std::ios::app);
      if (!txt || !rec) throw PreconditionError("cannot write to results directory " + cfg_.results_dir);
      table(txt);
      rec << record << '\n';
    }
  }

private:
  const RunConfig &cfg_;
  std::ostream &fallback_;
  std::ofstream file_;
};

Hypergraph load_input(const RunConfig &cfg) {
  if (cfg.in_path.empty()) throw PreconditionError("--in is required");
  return load_hypergraph(cfg.in_path);
}

int cmd_gen(const RunConfig &cfg, std::ostream &out) {
  if (cfg.r < 1 || cfg.n < 0) throw PreconditionError("gen needs r >= 1 and n >= 0");
  if (cfg.p.has_value() == cfg.edges.has_value())
    throw PreconditionError("gen needs exactly one of --p and --edges");
  if (cfg.p && !(*cfg.p >= 0.0 && *cfg.p <= 1.0)) throw PreconditionError("--p must lie in [0, 1]");
  const BigInt total = binomial(cfg.n, cfg.r);
  if (total > 50'000'000) throw PreconditionError("gen supports at most 5e7 candidate edges");
  if (cfg.edges && BigInt(*cfg.edges) > total)
    throw PreconditionError("--edges " + std::to_string(*cfg.edges) + " exceeds C(n, r) = " +
                            to_string(total));

  const bool drawn = !cfg.seed;
  const std::uint64_t seed = cfg.seed ? *cfg.seed : draw_seed();
  Rng rng(seed);
  std::vector<std::vector<Vertex>> edges;
  if (cfg.p) {
    for_each_combination(cfg.n, cfg.r, [&](std::span<const int> c) {
      if (uniform_unit(rng) < *cfg.p) edges.emplace_back(c.begin(), c.end());
      return true;
    });
  } else {
    std::vector<std::vector<Vertex>> all;
    for_each_combination(cfg.n, cfg.r, [&](std::span<const int> c) {
      all.emplace_back(c.begin(), c.end());
      return true;
    });
    const std::size_t m = static_cast<std::size_t>(*cfg.edges);
    for (std::size_t i = 0; i < m; ++i)
      std::swap(all[i], all[i + uniform_below(rng, all.size() - i)]);
    all.resize(m);
    edges = std::move(all);
  }
  const Hypergraph h(cfg.r, cfg.n, edges);

  Sink sink(cfg, out);
  if (drawn) sink.main() << "# seed " << seed << '\n';
  write_hypergraph(sink.main(), h);
  return exit_ok;
}

int cmd_decompose(const RunConfig &cfg, std::ostream &out) {
  const Hypergraph g = load_input(cfg);
  if (cfg.s.size() != 1) throw PreconditionError("decompose needs exactly one --s");
  const int s = cfg.s.front();
  const int n = g.ground_n(), r = g.uniformity();
  if (!block_size_admissible(n, r, s))
    throw PreconditionError("block size s = " + std::to_string(s) +
                            " violates the block-size condition 1 <= s <= (1 - 1/r) n"
                            " (here n = " + std::to_string(n) + ", r = " + std::to_string(r) + ")");
  const std::uint64_t seed = cfg.seed ? *cfg.seed : draw_seed();
  Rng rng(seed);
  DecomposeOptions opts;
  opts.threads = cfg.threads;
  opts.capture.threads = cfg.threads;
  const Decomposition d = decompose(g, s, rng, opts);

  DecompositionSummary sum;
  sum.t = d.t();
  sum.s = s;
  sum.seed = seed;
  sum.family_size = d.family.partitions.size();
  sum.t_bound = part_count_bound(n, r, s, sum.family_size);
  sum.within_bound = part_count_within_bound(sum.t, n, r, s, sum.family_size);
  const auto violation = decomposition_violation(g, d);
  sum.verified = !violation;
  if (violation) sum.violation = *violation;

  if (!cfg.out_path.empty()) {
    std::ofstream file(cfg.out_path);
    if (!file) throw PreconditionError("cannot open output file " + cfg.out_path);
    write_decomposition(file, d);
  }
  RunConfig summary_cfg = cfg;
  summary_cfg.out_path.clear();
  Sink sink(summary_cfg, out);
  sink.emit("decompose", [&](std::ostream &o) { print_table(o, d, sum); }, to_record(d, sum));
  if (violation) throw VerificationError("decomposition invariant violated: " + *violation);
  return exit_ok;
}

int cmd_find_cycle(const RunConfig &cfg, std::ostream &out) {
  const Hypergraph g = load_input(cfg);
  if (cfg.ell < 3) throw PreconditionError("--ell must be >= 3");
  const auto w = contains_loose_cycle(g, cfg.ell);
  if (w && !witness_is_valid(g, cfg.ell, *w))
    throw VerificationError("witness validity: reported cycle is not a loose cycle of the input");
  Sink sink(cfg, out);
  if (cfg.format == "records") {
    std::ostringstream rec;
    rec << "{\"kind\":\"find-cycle\",\"ell\":" << cfg.ell << ",\"found\":" << (w ? "true" : "false");
    if (w) {
      rec << ",\"edges\":[";
      for (std::size_t j = 0; j < w->edge_list.size(); ++j) {
        rec << (j ? ",[" : "[");
        for (std::size_t k = 0; k < w->edge_list[j].size(); ++k)
          rec << (k ? "," : "") << w->edge_list[j][k];
        rec << ']';
      }
      rec << "],\"vertex_map\":[";
      for (std::size_t t = 0; t < w->vertex_map.size(); ++t)
        rec << (t ? "," : "") << w->vertex_map[t];
      rec << ']';
    }
    rec << '}';
    sink.main() << rec.str() << '\n';
  } else if (w) {
    write_witness(sink.main(), *w);
  } else {
    sink.main() << "none\n";
  }
  return exit_ok;
}

void check_report(const CountReport &rep) {
  if (rep.exact_count && *rep.exact_count > rep.bound_value)
    throw VerificationError("count bound: exact_count " + to_string(*rep.exact_count) +
                            " exceeds bound_value " + to_string(rep.bound_value));
}

int cmd_count(const RunConfig &cfg, std::ostream &out) {
  if (cfg.ell < 3) throw PreconditionError("--ell must be >= 3");
  WorkLimits limits;
  if (cfg.work_bound) {
    const BigInt wb = parse_big(*cfg.work_bound);
    limits.max_colorings = wb;
    limits.max_gr_leaves = wb;
    const int slots = wb > 1024 ? 1024 : static_cast<int>(wb);
    limits.max_edge_slots = slots;
    limits.max_forb_walk = slots;
  }

  CountReport rep;
  if (cfg.count_kind == "colorings" || cfg.count_kind == "colorings-mc") {
    const Hypergraph g = load_input(cfg);
    const int n = cfg.n > 0 ? cfg.n : g.ground_n();
    if (cfg.count_kind == "colorings") {
      rep = count_colorings_exact(g, cfg.ell, n, limits, cfg.threads);
    } else {
      const std::uint64_t seed = cfg.seed ? *cfg.seed : draw_seed();
      rep = count_colorings_mc(g, cfg.ell, n, cfg.samples, seed, cfg.threads);
    }
  } else if (cfg.count_kind == "forb") {
    rep = enumerate_forb(cfg.n, cfg.r, cfg.ell, limits, cfg.threads);
  } else {
    rep = count_gr_small(cfg.n, cfg.r, cfg.ell, limits, cfg.threads);
  }
  check_report(rep);
  Sink sink(cfg, out);
  sink.emit("count-" + cfg.count_kind, [&](std::ostream &o) { print_table(o, rep); },
            to_record(rep));
  return exit_ok;
}

int cmd_probe(const RunConfig &cfg, std::ostream &out) {
  if (cfg.s.empty()) throw PreconditionError("probe-threshold needs --s");
  if (cfg.r < 2) throw PreconditionError("--r must be >= 2");
  if (cfg.ell < 3) throw PreconditionError("--ell must be >= 3");
  for (int s : cfg.s)
    if (s < 1) throw PreconditionError("--s values must be >= 1");
  const std::uint64_t seed = cfg.seed ? *cfg.seed : draw_seed();
  ThresholdOptions opts;
  opts.effort = cfg.effort;
  opts.threads = cfg.threads;
  Sink sink(cfg, out);
  for (int s : cfg.s) {
    const ThresholdReport rep = probe_threshold(cfg.r, cfg.ell, s, seed, opts);
    if (rep.best.edge_count() != rep.max_edges || contains_loose_cycle(rep.best, cfg.ell))
      throw VerificationError("threshold witness: best subgraph is not cycle-free");
    sink.emit("probe-threshold", [&](std::ostream &o) { print_table(o, rep); }, to_record(rep));
  }
  return exit_ok;
}

int cmd_bound(const RunConfig &cfg, std::ostream &out) {
  const BoundReport rep = bound_report(cfg.big_n, cfg.r, cfg.ell, cfg.c_threshold);
  Sink sink(cfg, out);
  sink.emit("bound-report", [&](std::ostream &o) { print_table(o, rep); }, to_record(rep));
  return exit_ok;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  CLI::App app{"Loose-cycle counting and decomposition experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Help for every command");

  app.add_option("--threads", cfg.threads, "Maximum worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--out", cfg.out_path, "Output file (default: standard output)");
  app.add_option("--results-dir", cfg.results_dir, "Also append text and records here");
  app.add_option("--seed", cfg.seed, "64-bit seed; drawn and reported when omitted");

  auto *gen = app.add_subcommand("gen", "Write a random r-graph");
  gen->add_option("--n", cfg.n, "Vertices")->required();
  gen->add_option("--r", cfg.r, "Uniformity")->required();
  gen->add_option("--p", cfg.p, "Edge probability");
  gen->add_option("--edges", cfg.edges, "Exact edge count");

  auto *dec = app.add_subcommand("decompose", "Decompose into r-partite parts");
  dec->add_option("--in", cfg.in_path, "Input hypergraph")->required();
  dec->add_option("--s", cfg.s, "Block size")->required()->expected(1);

  auto *fc = app.add_subcommand("find-cycle", "Search for a loose cycle");
  fc->add_option("--in", cfg.in_path, "Input hypergraph")->required();
  fc->add_option("--ell", cfg.ell, "Cycle length")->required();

  auto *count = app.add_subcommand("count", "Exact and sampled counts");
  count->require_subcommand(1);
  auto *c_exact = count->add_subcommand("colorings", "Cycle-free colorings, exhaustive");
  auto *c_mc = count->add_subcommand("colorings-mc", "Cycle-free colorings, Monte Carlo");
  auto *c_forb = count->add_subcommand("forb", "r-graphs on [n] without the cycle");
  auto *c_gr = count->add_subcommand("gr", "Colored (r-1)-graphs with cycle-free extension");
  for (auto *sub : {c_exact, c_mc}) {
    sub->add_option("--in", cfg.in_path, "Input (r-1)-graph")->required();
    sub->add_option("--ell", cfg.ell, "Cycle length")->required();
    sub->add_option("--n", cfg.n, "Color range [n] (default: input ground set)");
    sub->add_option("--work-bound", cfg.work_bound, "Maximum colorings to enumerate");
  }
  c_mc->add_option("--samples", cfg.samples, "Sample count")->check(CLI::PositiveNumber);
  for (auto *sub : {c_forb, c_gr}) {
    sub->add_option("--n", cfg.n, "Vertices")->required();
    sub->add_option("--r", cfg.r, "Uniformity")->required();
    sub->add_option("--ell", cfg.ell, "Cycle length")->required();
    sub->add_option("--work-bound", cfg.work_bound,
                    sub == c_forb ? "Maximum edge slots C(n,r)" : "Maximum colored graphs");
  }

  auto *probe = app.add_subcommand("probe-threshold", "Largest cycle-free subgraph of K_r(s)");
  probe->add_option("--r", cfg.r, "Uniformity")->required();
  probe->add_option("--ell", cfg.ell, "Cycle length")->required();
  probe->add_option("--s", cfg.s, "Class sizes (one report per value)")->required();
  probe->add_option("--effort", cfg.effort, "Local-search restarts")->check(CLI::PositiveNumber);

  auto *bound = app.add_subcommand("bound-report", "Evaluate the log g_r bound chain");
  bound->add_option("--n", cfg.big_n, "Vertices")->required();
  bound->add_option("--r", cfg.r, "Uniformity")->required();
  bound->add_option("--ell", cfg.ell, "Cycle length")->required();
  bound->add_option("--c-threshold", cfg.c_threshold, "Threshold constant for (r-1)-graphs (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return exit_precondition;
  }

  for (auto *sub : app.get_subcommands()) cfg.command = sub->get_name();
  for (auto *sub : count->get_subcommands()) cfg.count_kind = sub->get_name();

  try {
    if (cfg.command == "gen") return cmd_gen(cfg, out);
    if (cfg.command == "decompose") return cmd_decompose(cfg, out);
    if (cfg.command == "find-cycle") return cmd_find_cycle(cfg, out);
    if (cfg.command == "count") return cmd_count(cfg, out);
    if (cfg.command == "probe-threshold") return cmd_probe(cfg, out);
    return cmd_bound(cfg, out);
  } catch (const PreconditionError &e) {
    err << "precondition violated: " << e.what() << '\n';
    return exit_precondition;
  } catch (const WorkBoundError &e) {
    err << "work bound: " << e.what() << "; raise --work-bound to proceed\n";
    return exit_work_bound;
  } catch (const VerificationError &e) {
    err << "verification failed: " << e.what() << '\n';
    return exit_verification;
  } catch (const CaptureFailure &e) {
    err << "verification failed: capture family: " << e.what() << '\n';
    return exit_verification;
  }
}

} // namespace loose
