#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace loose {

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient.
BigInt binomial(int n, int k);

// Binomial coefficient in 64 bits; saturates at UINT64_MAX.
std::uint64_t binomial_u64(int n, int k);

BigInt pow_big(const BigInt &base, std::uint64_t exponent);

std::string to_string(const BigInt &x);

// Calls fn(span) for every k-subset of {1..n} in lexicographic order.
// The callback may return false to stop early; returns false if stopped.
template <typename Fn>
bool for_each_combination(int n, int k, Fn &&fn) {
  if (k < 0 || k > n) return true;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    if (!fn(std::span<const int>(c))) return false;
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return true;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

} // namespace loose
