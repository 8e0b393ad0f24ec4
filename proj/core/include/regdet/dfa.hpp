#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "regdet/alphabet.hpp"
#include "regdet/nfa.hpp"

namespace regdet {

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

/// Deterministic automaton with a total transition function once built.
///
/// When produced by determinize(), every state also records the NFA subset
/// it stands for.
class Dfa {
 public:
  Dfa(Alphabet alphabet, std::size_t state_count, StateId initial = 0);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  std::size_t state_count() const noexcept { return accepting_.size(); }
  StateId initial() const noexcept { return initial_; }

  StateId next(StateId q, Symbol a) const { return delta_[q * alphabet_.size() + a]; }
  void set_next(StateId q, Symbol a, StateId to);
  bool is_accepting(StateId q) const { return accepting_[q] != 0; }
  void set_accepting(StateId q, bool on);
  std::vector<StateId> accepting_states() const;

  /// No transition is missing.
  bool is_total() const;
  bool accepts(const Word& word) const;

  bool has_subsets() const noexcept { return !subsets_.empty(); }
  const std::vector<StateId>& subset(StateId q) const { return subsets_.at(q); }
  const std::vector<std::vector<StateId>>& subsets() const noexcept { return subsets_; }
  void set_subsets(std::vector<std::vector<StateId>> subsets);

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  Alphabet alphabet_;
  StateId initial_;
  std::vector<StateId> delta_;  // [state * |Σ| + symbol]
  std::vector<char> accepting_;
  std::vector<std::vector<StateId>> subsets_;
};

/// Accounting of the reachable subsets of an NFA, split by the symbol sets
/// Q_a they fall into.
struct SubsetStats {
  /// Number of reachable subsets (DFA states), the empty one included.
  std::size_t total = 0;
  /// inside_symbol[a] = reachable subsets, other than the initial one, that
  /// are nonempty and contained in Q_a.
  std::vector<std::size_t> inside_symbol;
  /// Nonempty non-initial reachable subsets inside no single Q_a. Always 0
  /// when the NFA remembers the last symbol.
  std::size_t unclassified = 0;
  /// The empty subset is reachable and is not the initial subset.
  bool empty_reachable = false;
  /// Some transition leads back to the initial subset.
  bool initial_reentered = false;

  /// 1 + Σ inside_symbol + unclassified + [empty_reachable]; equals total.
  std::size_t accounted() const;
};

struct DeterminizeOptions {
  /// Largest number of subsets explored before giving up.
  std::size_t max_subsets = std::size_t{1} << 20;
};

struct Determinization {
  Dfa dfa;
  SubsetStats stats;
};

/// Breadth-first subset construction from the initial set. DFA state ids are
/// discovery order, exploring symbols in alphabet order; the empty subset
/// appears as an ordinary non-accepting sink when reachable.
/// Throws BudgetExceeded past options.max_subsets.
Determinization determinize(const Nfa& nfa, const DeterminizeOptions& options = {});

/// Drops states unreachable from the initial set, keeping relative order.
Nfa trim(const Nfa& nfa);

/// Minimal DFA (Hopcroft partition refinement) with states numbered in BFS
/// order from the initial state. Requires a total transition function.
Dfa minimize(const Dfa& dfa);

/// Shortest word accepted by exactly one of the automata, or nullopt when the
/// languages coincide.
std::optional<Word> find_separating_word(const Dfa& a, const Dfa& b);

inline bool equivalent(const Dfa& a, const Dfa& b) { return !find_separating_word(a, b).has_value(); }

}  // namespace regdet
