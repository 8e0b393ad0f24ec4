#include "regdet/bounds.hpp"

#include <cmath>
#include <numbers>

#include "regdet/error.hpp"
#include "regdet/unary.hpp"

namespace regdet {

BigInt pow2(std::size_t exponent) {
  BigInt r = 1;
  r <<= exponent;
  return r;
}

BigInt ceil_sqrt(const BigInt& x) {
  if (x <= 0) return 0;
  BigInt r = boost::multiprecision::sqrt(x);
  if (r * r < x) ++r;
  return r;
}

BigInt half_exponent_bound(std::size_t n) {
  // 2^(n/2+1) = sqrt(2^(n+2)).
  if (n % 2 == 0) return pow2(n / 2 + 1);
  return ceil_sqrt(pow2(n + 2));
}

BigInt symbol_accounting_bound(const SymbolPartition& partition) {
  BigInt total = 2;
  for (std::size_t size : partition.sorted_sizes) total += pow2(size) - 1;
  return total;
}

BigInt first_method_bound(const SymbolPartition& partition, std::size_t n) {
  if (!partition.remembers_last_symbol) {
    throw InputError("first_method_bound requires an NFA that remembers the last symbol");
  }
  return std::max(half_exponent_bound(n), pow2(partition.n1 + 1));
}

BigInt second_method_bound(std::size_t n, std::size_t n1, const LandauFunction& landau) {
  if (n1 > n) throw InputError("second_method_bound requires n1 <= n");
  return (pow2(n - n1) + 1) * (landau(n1) + tail_allowance(n1));
}

BigInt second_method_bound(std::size_t n, std::size_t n1) {
  return second_method_bound(n, n1, [](std::size_t m) { return BigInt(landau(m).value); });
}

double upper_asymptotic(std::size_t n) {
  const double x = static_cast<double>(n);
  if (n < 2) return std::exp2(x / 2);
  const double c = std::numbers::log2e / (2 * std::numbers::sqrt2);
  return std::exp2(x / 2 + c * std::sqrt(x * std::log(x)));
}

double lower_asymptotic(std::size_t n) {
  const double x = static_cast<double>(n);
  if (n < 2) return std::exp2(x / 2);
  return std::exp2(x / 2 + std::numbers::sqrt2 * std::sqrt(x / std::log(x)));
}

double landau_asymptotic(std::size_t n) {
  const double x = static_cast<double>(n);
  if (n < 2) return 1.0;
  return std::exp(std::sqrt(x * std::log(x)));
}

}  // namespace regdet
