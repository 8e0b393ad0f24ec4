#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "regdet/nfa.hpp"

namespace regdet {

using BigInt = boost::multiprecision::cpp_int;

BigInt pow2(std::size_t exponent);

/// Smallest r with r*r >= x.
BigInt ceil_sqrt(const BigInt& x);

/// ⌈2^(n/2 + 1)⌉, exact for odd n as well.
BigInt half_exponent_bound(std::size_t n);

/// Reachable-subset count allowed by the per-symbol accounting for an NFA
/// that remembers the last symbol: the initial subset, the nonempty subsets
/// of each Q_a, and the empty subset, i.e. 1 + Σ (2^|Q_a| - 1) + 1.
BigInt symbol_accounting_bound(const SymbolPartition& partition);

/// First counting method: ⌈max(2^(n/2+1), 2^(n1+1))⌉ for an n-state NFA.
/// Throws InputError when the partition is not pairwise disjoint.
BigInt first_method_bound(const SymbolPartition& partition, std::size_t n);

/// Explicit stand-in for the O(m^2) tail term: ℓ_max(m) = m^2.
inline std::size_t tail_allowance(std::size_t m) { return m * m; }
inline constexpr std::string_view kTailAllowanceLabel = "l_max(m)=m^2";

using LandauFunction = std::function<BigInt(std::size_t)>;

/// Second counting method: (2^(n-n1) + 1) * (g(n1) + ℓ_max(n1)).
BigInt second_method_bound(std::size_t n, std::size_t n1, const LandauFunction& landau);
/// Same, with the exact Landau function from unary.hpp.
BigInt second_method_bound(std::size_t n, std::size_t n1);

// Closed-form exponents with every o(1) term set to 0. Context only; these
// never take part in a comparison.

/// 2^(n/2 + (log2 e / (2√2)) √(n ln n))
double upper_asymptotic(std::size_t n);
/// 2^(n/2 + √2 √(n / ln n))
double lower_asymptotic(std::size_t n);
/// e^(√(n ln n))
double landau_asymptotic(std::size_t n);

}  // namespace regdet
