#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace loose {

// One displayed relation "lhs <= rhs" or "lhs = rhs", evaluated numerically.
struct BoundStep {
  std::string name;
  std::string relation; // "<=" or "="
  long double lhs = 0;
  long double rhs = 0;
  bool holds = false;
};

// Numeric evaluation of the chain bounding log2 g_r(n, length), with
// s = floor((log2 n)^2) and the decomposition applied to (r-1)-graphs.
// All logarithms are base 2.
struct BoundReport {
  std::int64_t n = 0;
  int r = 0;
  int length = 0;
  double c_threshold = 0; // threshold constant for (r-1)-graphs; unknown, supplied
  long double c_color = 0; // c_threshold + r, the color-set constant
  long double c_family = 0; // c(r - 1), the capture-family constant, in long double
  long double log_n = 0;
  long double loglog_n = 0;
  std::int64_t s = 0;
  long double n_pow = 0;          // n^(r-1), the edge-count cap for G_0
  long double t_decomposition = 0;        // (n/s)^(r-1) ceil(c_family log n)
  long double t_bound = 0;        // 2 c_family (n/s)^(r-1) log n
  long double ts = 0;             // t_bound s^(r-2)
  long double ts_bound = 0;       // 3 c_family n^(r-1) / log n
  long double coloring_log = 0;   // log of n^(c_color t s^(r-2)) (c_color s^(r-2))^(n^(r-1))
  long double coloring_log_bound = 0; // same with t s^(r-2) replaced by ts_bound
  long double l1 = 0; // log(2^(n^(r-1)) * coloring bound)
  long double l2 = 0; // (3 c_color c_family + 1) N + (log c_color + (r-2) log s) N
  long double l3 = 0; // (3 c_color c_family + 1) N + (log c_color + 2 (r-2) loglog n) N
  long double l4 = 0; // 2 r N loglog n
  std::vector<BoundStep> steps;
  bool regime_reached = false; // l3 <= l4
};

// Throws PreconditionError for r < 3, length < 3, n with s < 1, or when s
// violates 1 <= s <= (1 - 1/(r-1)) n. c_threshold defaults to 0 in the CLI, the most
// favourable value of the unknown constant.
BoundReport bound_report(std::int64_t n, int r, int length, double c_threshold = 0.0);

} // namespace loose
