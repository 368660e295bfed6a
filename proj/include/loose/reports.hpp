#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "loose/bound_report.hpp"
#include "loose/counting.hpp"
#include "loose/decomposition.hpp"
#include "loose/threshold.hpp"

namespace loose {

// Human-readable tables.
void print_table(std::ostream &out, const CountReport &report);
void print_table(std::ostream &out, const ThresholdReport &report);
void print_table(std::ostream &out, const BoundReport &report);

// One JSON object per parameter point, without a trailing newline.
std::string to_record(const CountReport &report);
std::string to_record(const ThresholdReport &report);
std::string to_record(const BoundReport &report);

struct DecompositionSummary {
  std::size_t t = 0;
  int s = 0;
  std::uint64_t seed = 0;
  std::size_t family_size = 0;
  double t_bound = 0;      // (n/s)^r * family_size
  bool within_bound = false;
  bool verified = false;
  std::string violation;
};

void print_table(std::ostream &out, const Decomposition &d, const DecompositionSummary &summary);
std::string to_record(const Decomposition &d, const DecompositionSummary &summary);

// Shortest decimal that round-trips, "inf"/"nan" spelled out.
std::string format_double(long double x);

} // namespace loose
