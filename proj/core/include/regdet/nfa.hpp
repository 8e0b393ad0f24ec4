#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regdet/alphabet.hpp"
#include "regdet/regex.hpp"

namespace regdet {

/// Nondeterministic automaton without ε-transitions.
///
/// Transition targets are kept as sorted, duplicate-free lists per
/// (state, symbol), and so are the initial and accepting sets; two NFAs built
/// the same way compare equal.
class Nfa {
 public:
  Nfa(Alphabet alphabet, std::size_t state_count);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t transition_count() const noexcept;

  void add_transition(StateId from, Symbol symbol, StateId to);
  void add_initial(StateId q);
  void add_accepting(StateId q);

  const std::vector<StateId>& targets(StateId q, Symbol symbol) const {
    return delta_[q * alphabet_.size() + symbol];
  }
  const std::vector<StateId>& initial() const noexcept { return initial_; }
  const std::vector<StateId>& accepting() const noexcept { return accepting_; }
  bool is_initial(StateId q) const;
  bool is_accepting(StateId q) const;

  /// Optional human-readable state names (the witness family uses them).
  void set_label(StateId q, std::string label);
  bool has_labels() const noexcept { return !labels_.empty(); }
  /// The label, or the decimal id when none was set.
  std::string label(StateId q) const;

  /// Image of a sorted state set under one symbol, sorted.
  std::vector<StateId> step(std::span<const StateId> states, Symbol symbol) const;
  bool accepts(const Word& word) const;

  friend bool operator==(const Nfa& a, const Nfa& b);

 private:
  void check_state(StateId q) const;

  Alphabet alphabet_;
  std::size_t state_count_;
  std::vector<std::vector<StateId>> delta_;  // [state * |Σ| + symbol]
  std::vector<StateId> initial_;
  std::vector<StateId> accepting_;
  std::vector<std::string> labels_;
};

/// The sets Q_a of states entered by each symbol.
struct SymbolPartition {
  /// entered_by[a] = union of δ(q, a) over all q, sorted.
  std::vector<std::vector<StateId>> entered_by;
  /// |Q_a| over all symbols, largest first (n_1 >= n_2 >= ...).
  std::vector<std::size_t> sorted_sizes;
  /// n_1 = max_a |Q_a|.
  std::size_t n1 = 0;
  /// True iff the Q_a are pairwise disjoint.
  bool remembers_last_symbol = false;
};

SymbolPartition symbol_partition(const Nfa& nfa);

/// True iff some transition leads into q.
bool has_incoming(const Nfa& nfa, StateId q);

/// Builds an NFA with width(e) + 1 states that remembers the last symbol and
/// has a single initial state (id 0) that no transition re-enters.
///
/// The construction is inductive: a symbol gives two states joined by one
/// transition; ∅ one state and nothing else; ε one accepting state. A union
/// glues the two initial states together. A concatenation drops the right
/// operand's initial state and replays its outgoing transitions from every
/// accepting state of the left operand. A star replays the initial state's
/// outgoing transitions from every accepting state and makes the initial
/// state accepting. State ids follow a left-to-right traversal.
Nfa build_nfa(const Regex& e, const Alphabet& alphabet);

/// Shortest word of length <= max_len accepted by exactly one of the two
/// automata, found by breadth-first simulation of both subset runs.
std::optional<Word> bounded_difference(const Nfa& a, const Nfa& b, std::size_t max_len);

/// True iff both automata accept the same words of length <= max_len.
inline bool bounded_language_equal(const Nfa& a, const Nfa& b, std::size_t max_len) {
  return !bounded_difference(a, b, max_len).has_value();
}

}  // namespace regdet
