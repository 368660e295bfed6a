#include "loose/reports.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "json.hpp"

namespace loose {

using nlohmann::json;

std::string format_double(long double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, static_cast<double>(x));
  return std::string(buf, res.ptr);
}

namespace {

json number_or_text(long double x) {
  if (std::isfinite(x)) return static_cast<double>(x);
  return format_double(x);
}

const char *method_name(CountMethod m) {
  return m == CountMethod::exhaustive ? "exhaustive" : "monte-carlo";
}

void row(std::ostream &out, const std::string &key, const std::string &value) {
  out << "  " << std::left << std::setw(22) << key << value << '\n';
}

} // namespace

void print_table(std::ostream &out, const CountReport &rep) {
  out << "count " << rep.quantity << '\n';
  row(out, "n", std::to_string(rep.n));
  row(out, "r", std::to_string(rep.r));
  row(out, "ell", std::to_string(rep.length));
  if (rep.seed) row(out, "seed", std::to_string(*rep.seed));
  row(out, "method", method_name(rep.method));
  if (rep.exact_count) row(out, "exact_count", to_string(*rep.exact_count));
  if (rep.mc_estimate) {
    const auto &e = *rep.mc_estimate;
    row(out, "mc_estimate", format_double(e.mean) + " +- " + format_double(e.standard_error));
    row(out, "samples", std::to_string(e.samples) + " (" + std::to_string(e.free_samples) +
                            " cycle-free)");
  }
  row(out, "bound_value", to_string(rep.bound_value));
  row(out, "bound", rep.bound_description);
  if (rep.max_free_edges) row(out, "max_free_edges", std::to_string(*rep.max_free_edges));
  if (!rep.note.empty()) row(out, "note", rep.note);
}

std::string to_record(const CountReport &rep) {
  json j;
  j["kind"] = "count";
  j["quantity"] = rep.quantity;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["ell"] = rep.length;
  if (rep.seed) j["seed"] = *rep.seed;
  j["method"] = method_name(rep.method);
  if (rep.exact_count) j["exact_count"] = to_string(*rep.exact_count);
  if (rep.mc_estimate) {
    const auto &e = *rep.mc_estimate;
    j["mc_estimate"] = {{"mean", number_or_text(e.mean)},
                        {"standard_error", number_or_text(e.standard_error)},
                        {"samples", e.samples},
                        {"free_samples", e.free_samples}};
  }
  j["bound_value"] = to_string(rep.bound_value);
  j["bound"] = rep.bound_description;
  if (rep.max_free_edges) j["max_free_edges"] = *rep.max_free_edges;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j.dump();
}

void print_table(std::ostream &out, const ThresholdReport &rep) {
  out << "probe-threshold\n";
  row(out, "r", std::to_string(rep.r));
  row(out, "ell", std::to_string(rep.length));
  row(out, "s", std::to_string(rep.s));
  row(out, "mode", rep.exact ? "exact" : "local search (lower bound)");
  if (!rep.exact) {
    row(out, "seed", std::to_string(rep.seed));
    row(out, "effort", std::to_string(rep.effort));
  }
  row(out, "max_edges", std::to_string(rep.max_edges));
  row(out, "ratio", format_double(rep.ratio));
}

std::string to_record(const ThresholdReport &rep) {
  json j;
  j["kind"] = "threshold";
  j["r"] = rep.r;
  j["ell"] = rep.length;
  j["s"] = rep.s;
  j["mode"] = rep.exact ? "exact" : "heuristic";
  if (!rep.exact) {
    j["seed"] = rep.seed;
    j["effort"] = rep.effort;
  }
  j["max_edges"] = rep.max_edges;
  j["ratio"] = rep.ratio;
  return j.dump();
}

void print_table(std::ostream &out, const BoundReport &rep) {
  out << "bound-report\n";
  row(out, "n", std::to_string(rep.n));
  row(out, "r", std::to_string(rep.r));
  row(out, "ell", std::to_string(rep.length));
  row(out, "s", std::to_string(rep.s));
  row(out, "c_threshold", format_double(rep.c_threshold));
  row(out, "c_color = c_threshold + r", format_double(rep.c_color));
  row(out, "c_family = c(r-1)", format_double(rep.c_family));
  row(out, "log n", format_double(rep.log_n));
  row(out, "log log n", format_double(rep.loglog_n));
  row(out, "t (decomposition)", format_double(rep.t_decomposition));
  row(out, "t bound", format_double(rep.t_bound));
  row(out, "t s^(r-2)", format_double(rep.ts));
  row(out, "t s^(r-2) bound", format_double(rep.ts_bound));
  row(out, "log colorings", format_double(rep.coloring_log));
  row(out, "log colorings bound", format_double(rep.coloring_log_bound));
  row(out, "line 1", format_double(rep.l1));
  row(out, "line 2", format_double(rep.l2));
  row(out, "line 3", format_double(rep.l3));
  row(out, "envelope", format_double(rep.l4));
  out << "steps\n";
  for (const auto &st : rep.steps)
    out << "  [" << (st.holds ? "holds" : "FAILS") << "] " << st.name << "   ("
        << format_double(st.lhs) << ' ' << st.relation << ' ' << format_double(st.rhs) << ")\n";
  out << (rep.regime_reached ? "asymptotic regime reached\n" : "asymptotic regime not reached\n");
}

std::string to_record(const BoundReport &rep) {
  json j;
  j["kind"] = "bound";
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["ell"] = rep.length;
  j["s"] = rep.s;
  j["c_threshold"] = rep.c_threshold;
  j["c_color"] = static_cast<double>(rep.c_color);
  j["c_family"] = static_cast<double>(rep.c_family);
  j["log_n"] = number_or_text(rep.log_n);
  j["loglog_n"] = number_or_text(rep.loglog_n);
  j["t_decomposition"] = number_or_text(rep.t_decomposition);
  j["t_bound"] = number_or_text(rep.t_bound);
  j["ts"] = number_or_text(rep.ts);
  j["ts_bound"] = number_or_text(rep.ts_bound);
  j["coloring_log"] = number_or_text(rep.coloring_log);
  j["coloring_log_bound"] = number_or_text(rep.coloring_log_bound);
  j["lines"] = {number_or_text(rep.l1), number_or_text(rep.l2), number_or_text(rep.l3),
                number_or_text(rep.l4)};
  json steps = json::array();
  for (const auto &st : rep.steps)
    steps.push_back({{"name", st.name},
                     {"relation", st.relation},
                     {"lhs", number_or_text(st.lhs)},
                     {"rhs", number_or_text(st.rhs)},
                     {"holds", st.holds}});
  j["steps"] = steps;
  j["regime_reached"] = rep.regime_reached;
  return j.dump();
}

void print_table(std::ostream &out, const Decomposition &d, const DecompositionSummary &sum) {
  out << "decompose\n";
  row(out, "n", std::to_string(d.n));
  row(out, "r", std::to_string(d.r));
  row(out, "s", std::to_string(sum.s));
  row(out, "seed", std::to_string(sum.seed));
  row(out, "partitions", std::to_string(sum.family_size) + " (rounds " +
                             std::to_string(d.family.rounds) +
                             (d.family.exhaustive ? ", all r-sets" : ", edges only") + ")");
  row(out, "t", std::to_string(sum.t));
  row(out, "t bound", format_double(sum.t_bound) + (sum.within_bound ? " (ok)" : " (EXCEEDED)"));
  row(out, "verification", sum.verified ? "passed" : "FAILED: " + sum.violation);
}

std::string to_record(const Decomposition &d, const DecompositionSummary &sum) {
  json j;
  j["kind"] = "decomposition";
  j["n"] = d.n;
  j["r"] = d.r;
  j["s"] = sum.s;
  j["seed"] = sum.seed;
  j["family_size"] = sum.family_size;
  j["rounds"] = d.family.rounds;
  j["exhaustive_capture"] = d.family.exhaustive;
  j["t"] = sum.t;
  j["t_bound"] = sum.t_bound;
  j["within_bound"] = sum.within_bound;
  j["verified"] = sum.verified;
  if (!sum.violation.empty()) j["violation"] = sum.violation;
  return j.dump();
}

} // namespace loose
