#include "loose/combinatorics.hpp"

#include <limits>

namespace loose {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

std::uint64_t binomial_u64(int n, int k) {
  const BigInt b = binomial(n, k);
  if (b > std::numeric_limits<std::uint64_t>::max())
    return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(b);
}

BigInt pow_big(const BigInt &base, std::uint64_t exponent) {
  BigInt result = 1, b = base;
  while (exponent) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::string to_string(const BigInt &x) { return x.str(); }

} // namespace loose
