#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "regdet/bounds.hpp"
#include "regdet/dfa.hpp"
#include "regdet/nfa.hpp"
#include "regdet/regex.hpp"

namespace regdet {

/// Cycle lengths π_1..π_k of a lower-bound witness: pairwise coprime, each at
/// least 3, π_1 = 3.
class WitnessSpec {
 public:
  /// Throws InputError when the cycle lengths violate the constraints.
  explicit WitnessSpec(std::vector<unsigned> cycles);

  const std::vector<unsigned>& cycles() const noexcept { return cycles_; }
  std::size_t k() const noexcept { return cycles_.size(); }
  std::size_t cycle_sum() const noexcept;
  /// Alphabetic width of the witness expression: 2Σπ_i - 2k + 2.
  std::size_t regex_size() const noexcept { return 2 * cycle_sum() - 2 * k() + 2; }
  /// States of the witness NFA: 2Σπ_i - 2k + 1.
  std::size_t nfa_states() const noexcept { return regex_size() - 1; }
  /// Π (2^π_i - 2).
  BigInt lower_bound() const;

  /// "3,5,7".
  std::string to_string() const;
  friend bool operator==(const WitnessSpec&, const WitnessSpec&) = default;

 private:
  std::vector<unsigned> cycles_;
};

/// The witness alphabet {a, b}; a is symbol 0, b is symbol 1.
Alphabet witness_alphabet();

/// (a(β_π1 | ... | β_πk)b)* with β_π = (a((b|ε)a)^(π-2)a)*.
Regex witness_regex(const WitnessSpec& spec);
/// Textual form of witness_regex(), using the {m} repetition sugar.
std::string witness_regex_text(const WitnessSpec& spec);

/// State layout of the witness NFA: q̂ = 0, then for each cycle i (0-based)
/// the states q_{i,0..π_i-1} followed by r_{i,1..π_i-2}.
StateId witness_hat_state();
StateId witness_cycle_state(const WitnessSpec& spec, std::size_t i, std::size_t j);
StateId witness_side_state(const WitnessSpec& spec, std::size_t i, std::size_t j);

/// NFA with a-cycles of lengths π_i entered together from q̂, b-detours
/// r_{i,j} and b-exits from q_{i,0} back to q̂, which is the only accepting
/// state. States carry labels "q̂", "q<i>.<j>", "r<i>.<j>" (1-based i).
Nfa witness_nfa(const WitnessSpec& spec);

/// The first k-1 odd primes and the largest prime p >= p_k such that the
/// witness size stays within `budget`, k maximal. With k = 1 the single
/// cycle stays 3. Throws InputError for budgets below 6.
WitnessSpec select_primes(std::size_t budget);

/// Π(2^π_i - 2) against ½·2^(Σπ_i).
struct LowerBound {
  BigInt product;
  BigInt half_power;
  bool half_product_holds = false;
};

LowerBound lower_bound(const WitnessSpec& spec);
/// Same comparison for any list of distinct integers >= 3.
LowerBound half_product_check(std::span<const unsigned> distinct_cycles);

/// Residues d_i modulo π_i and the least ℓ >= 0 realizing all of them.
struct ShiftVector {
  std::vector<unsigned> residues;
  BigInt length;
};

/// Chinese remaindering. Throws InputError for non-coprime moduli or
/// residues out of range.
ShiftVector solve_shift(std::span<const unsigned> moduli, std::span<const unsigned> residues);

/// a^ℓ for the shift realizing `residues` on the spec's cycles.
Word shift_word(const WitnessSpec& spec, std::span<const unsigned> residues);

struct CertifyOptions {
  std::size_t max_subsets = std::size_t{1} << 20;
  /// Bound on word length for the regex / NFA / built-NFA agreement check.
  std::size_t max_len = 8;
};

enum class CertificationStatus { Certified, BelowLowerBound, LanguageMismatch, BudgetExceeded };

std::string_view to_string(CertificationStatus status);

struct Certification {
  explicit Certification(WitnessSpec s) : spec(std::move(s)) {}

  WitnessSpec spec;
  CertificationStatus status = CertificationStatus::BudgetExceeded;
  std::size_t regex_width = 0;
  std::size_t built_nfa_states = 0;    // build_nfa(witness_regex)
  std::size_t witness_nfa_states = 0;  // witness_nfa
  std::size_t n1 = 0;                  // of witness_nfa
  std::size_t reachable_subsets = 0;   // determinize(witness_nfa)
  std::size_t minimal_states = 0;
  BigInt lower_bound;
  bool bounded_agreement = false;  // matches / witness NFA / built NFA, |w| <= max_len
  bool dfa_equivalent = false;     // exact, regex-derived vs NFA-derived
};

/// Builds both automata, checks they agree, determinizes, minimizes and
/// compares the minimal size against the lower bound. Never throws on budget
/// overflow: the record is returned with status BudgetExceeded.
Certification certify(const WitnessSpec& spec, const CertifyOptions& options = {});

}  // namespace regdet
