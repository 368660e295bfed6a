#include "loose/bound_report.hpp"

#include <bit>
#include <cmath>

#include "loose/errors.hpp"

namespace loose {

namespace {

long double exact_log2(std::int64_t n) {
  const auto u = static_cast<std::uint64_t>(n);
  if (std::has_single_bit(u)) return static_cast<long double>(std::countr_zero(u));
  return std::log2(static_cast<long double>(n));
}

// floor(L^2) for L = log2 n, exact when n is a power of two.
std::int64_t squared_log_floor(std::int64_t n, long double L) {
  const auto u = static_cast<std::uint64_t>(n);
  if (std::has_single_bit(u)) {
    const std::int64_t k = std::countr_zero(u);
    return k * k;
  }
  return static_cast<std::int64_t>(std::floor(L * L));
}

long double powl_int(long double x, int k) {
  long double out = 1;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

} // namespace

BoundReport bound_report(std::int64_t n, int r, int length, double c_threshold) {
  if (r < 3) throw PreconditionError("bound report needs r >= 3");
  if (length < 3) throw PreconditionError("cycle length must be >= 3");
  if (c_threshold < 0) throw PreconditionError("c_threshold must be non-negative");
  if (n < 2) throw PreconditionError("n too small: s = floor((log2 n)^2) must be >= 1");

  BoundReport rep;
  rep.n = n;
  rep.r = r;
  rep.length = length;
  rep.c_threshold = c_threshold;
  rep.c_color = c_threshold + r;
  {
    long double capture = 1;
    for (int i = 1; i <= r - 1; ++i) capture *= static_cast<long double>(i) / (r - 1);
    rep.c_family = -static_cast<long double>(r - 1) / std::log2(1 - capture);
  }
  rep.log_n = exact_log2(n);
  rep.loglog_n = std::log2(rep.log_n);
  rep.s = squared_log_floor(n, rep.log_n);
  if (rep.s < 1) throw PreconditionError("n too small: s = floor((log2 n)^2) must be >= 1");
  // Block size for (r-1)-partitions: s (r-1) <= (r-2) n.
  if (static_cast<long double>(rep.s) * (r - 1) > static_cast<long double>(n) * (r - 2))
    throw PreconditionError("n too small: block size s = " + std::to_string(rep.s) +
                            " violates 1 <= s <= (1 - 1/(r-1)) n");

  const long double N = powl_int(static_cast<long double>(n), r - 1);
  const long double L = rep.log_n;
  const long double LL = rep.loglog_n;
  const long double S = static_cast<long double>(rep.s);
  const long double c_color = rep.c_color;
  const long double c_family = rep.c_family;
  const long double ratio_pow = powl_int(static_cast<long double>(n) / S, r - 1);
  const long double s_pow = powl_int(S, r - 2);

  rep.n_pow = N;
  rep.t_decomposition = ratio_pow * std::ceil(c_family * L);
  rep.t_bound = 2 * c_family * ratio_pow * L;
  rep.ts = rep.t_bound * s_pow;
  rep.ts_bound = 3 * c_family * N / L;
  const long double per_edge = std::log2(c_color * s_pow);
  rep.coloring_log = c_color * rep.ts * L + N * per_edge;
  rep.coloring_log_bound = 3 * c_color * c_family * N + N * per_edge;
  rep.l1 = N + rep.coloring_log_bound;
  rep.l2 = (3 * c_color * c_family + 1) * N + (std::log2(c_color) + (r - 2) * std::log2(S)) * N;
  rep.l3 = (3 * c_color * c_family + 1) * N + (std::log2(c_color) + 2 * (r - 2) * LL) * N;
  rep.l4 = 2 * r * N * LL;

  auto le = [&](std::string name, long double a, long double b) {
    rep.steps.push_back({std::move(name), "<=", a, b, a <= b});
  };
  le("t from decomposition <= 2 c_family (n/s)^(r-1) log n", rep.t_decomposition, rep.t_bound);
  le("t s^(r-2) <= 3 c_family n^(r-1) / log n", rep.ts, rep.ts_bound);
  le("coloring bound: c_color t s^(r-2) log n + N log(c_color s^(r-2)) <= 3 c_color c_family N + N log(c_color s^(r-2))",
     rep.coloring_log, rep.coloring_log_bound);
  // The first line and its expansion are the same number; report equality
  // up to rounding.
  {
    const long double scale = std::fmax(std::fabs(rep.l1), std::fabs(rep.l2));
    rep.steps.push_back({"log(2^N * coloring bound) = (3 c_color c_family + 1) N + (log c_color + (r-2) log s) N",
                         "=", rep.l1, rep.l2,
                         std::fabs(rep.l1 - rep.l2) <= scale * 1e-15L});
  }
  // log s <= 2 log log n is exactly s <= (log n)^2, true by the choice of s.
  rep.steps.push_back({"(r-2) log s <= 2 (r-2) log log n", "<=",
                       (r - 2) * std::log2(S), 2 * (r - 2) * LL,
                       S <= L * L});
  le("(3 c_color c_family + 1) N + (log c_color + 2 (r-2) log log n) N <= 2 r N log log n", rep.l3, rep.l4);
  rep.regime_reached = rep.steps.back().holds;
  return rep;
}

} // namespace loose
