#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "regdet/nfa.hpp"

namespace regdet {

/// Largest argument accepted by landau().
inline constexpr std::size_t kLandauCap = 200;

struct LandauValue {
  std::uint64_t value = 1;
  /// A maximizing multiset (prime powers, ascending) with sum <= n.
  std::vector<std::uint64_t> parts;
};

/// Landau's function g(n) = max lcm(p_1..p_k) over p_1 + ... + p_k <= n,
/// with g(0) = 1. Dynamic programming over primes: each prime contributes
/// one power or nothing. Throws InputError for n > kLandauCap.
LandauValue landau(std::size_t n);

/// g(0..max_n), computed once.
const std::vector<LandauValue>& landau_table(std::size_t max_n = kLandauCap);

/// Orbit of a start subset under the subset-image map of one symbol.
struct UnaryProfile {
  std::size_t states = 0;  // NFA state count
  std::size_t tail = 0;    // ℓ: S_{ℓ + period} = S_ℓ, minimal
  std::size_t period = 1;  // minimal
  std::size_t reachable_subsets = 1;  // ℓ + period
};

UnaryProfile unary_orbit(const Nfa& nfa, std::span<const StateId> start, Symbol symbol = 0);

/// gcd of cycle lengths for every strongly connected component that has a
/// cycle and is reachable from `start` using `symbol` edges.
std::vector<std::uint64_t> component_periods(const Nfa& nfa, std::span<const StateId> start,
                                             Symbol symbol = 0);

struct UnaryLemmaReport {
  UnaryProfile profile;
  /// m: states reachable from `start` (start included).
  std::size_t reachable_states = 0;
  std::uint64_t landau_bound = 1;  // g(m)
  bool period_within_landau = false;
  /// Soft check: ℓ > ℓ_max(m).
  bool tail_exceeds_allowance = false;
  /// lcm of component_periods(); the eventual period must divide it.
  std::uint64_t structural_period = 1;
  bool period_divides_structure = false;

  bool ok() const { return period_within_landau && period_divides_structure; }
};

UnaryLemmaReport verify_unary_lemma(const Nfa& nfa, std::span<const StateId> start, Symbol symbol = 0);

}  // namespace regdet
