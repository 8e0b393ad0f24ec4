#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regdet/bounds.hpp"
#include "regdet/dfa.hpp"
#include "regdet/nfa.hpp"
#include "regdet/regex.hpp"
#include "regdet/witness.hpp"

namespace regdet {

/// One CSV row comparing measured automaton sizes against the counting bounds.
struct BoundReport {
  std::string kind;   // "regex", "witness" or "random"
  std::string label;  // expression text or cycle list
  std::size_t n = 0;  // size parameter the asymptotic columns are evaluated at
  std::size_t regex_width = 0;
  std::size_t nfa_states = 0;  // of the NFA the subsets are counted on
  std::size_t n1 = 0;
  bool remembers_last_symbol = false;
  std::optional<std::size_t> reachable_subsets;
  std::optional<std::size_t> minimal_states;
  BigInt first_bound;
  BigInt second_bound;
  std::optional<BigInt> lower_bound;  // witness rows
  double upper_asymptotic = 0;
  double lower_asymptotic = 0;
  double landau_asymptotic = 0;
  std::string status = "ok";
};

std::string csv_header();
std::string to_csv_row(const BoundReport& report);

/// minimal <= reachable <= min(first, second) for NFAs that remember the
/// last symbol. Throws InvariantViolation with a diagnostic otherwise.
void check_chain(const BoundReport& report);

struct PipelineOptions {
  std::size_t max_subsets = std::size_t{1} << 20;
};

struct PipelineResult {
  Nfa nfa;
  Dfa dfa;
  SubsetStats stats;
  Dfa minimal;
  BoundReport report;
};

/// parse -> build_nfa -> determinize -> minimize, filling the report.
/// Throws BudgetExceeded.
PipelineResult run_pipeline(const Regex& e, const Alphabet& alphabet, const PipelineOptions& options = {});

/// Report for a certified witness.
BoundReport witness_report(const Certification& c, std::size_t n);

struct SweepOptions {
  std::size_t n_min = 6;
  std::size_t n_max = 14;
  std::uint64_t seed = 1;
  std::size_t random_per_n = 2;
  std::size_t max_subsets = std::size_t{1} << 20;
  std::size_t max_len = 8;
};

inline constexpr std::size_t kSweepMaxN = 200;

/// Rows in increasing n: a witness row for each n >= 6 (select_primes then
/// certify) followed by random-regex rows of width n over {a, b}. Output is
/// a pure function of the options. Throws InvariantViolation on a broken
/// chain inequality.
std::vector<BoundReport> sweep(const SweepOptions& options);
std::string sweep_csv(const SweepOptions& options);

}  // namespace regdet
