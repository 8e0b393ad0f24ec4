#include "regdet/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "regdet/error.hpp"

namespace regdet {

namespace {

void insert_sorted(std::vector<StateId>& v, StateId q) {
  auto it = std::lower_bound(v.begin(), v.end(), q);
  if (it == v.end() || *it != q) v.insert(it, q);
}

bool contains_sorted(const std::vector<StateId>& v, StateId q) {
  return std::binary_search(v.begin(), v.end(), q);
}

}  // namespace

Nfa::Nfa(Alphabet alphabet, std::size_t state_count)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      delta_(state_count * alphabet_.size()) {
  if (state_count == 0) throw InputError("an NFA needs at least one state");
}

std::size_t Nfa::transition_count() const noexcept {
  std::size_t n = 0;
  for (const auto& t : delta_) n += t.size();
  return n;
}

void Nfa::check_state(StateId q) const {
  if (q >= state_count_) {
    throw InputError("state " + std::to_string(q) + " out of range (" +
                     std::to_string(state_count_) + " states)");
  }
}

void Nfa::add_transition(StateId from, Symbol symbol, StateId to) {
  check_state(from);
  check_state(to);
  if (symbol >= alphabet_.size()) throw InputError("symbol index out of range");
  insert_sorted(delta_[from * alphabet_.size() + symbol], to);
}

void Nfa::add_initial(StateId q) {
  check_state(q);
  insert_sorted(initial_, q);
}

void Nfa::add_accepting(StateId q) {
  check_state(q);
  insert_sorted(accepting_, q);
}

bool Nfa::is_initial(StateId q) const { return contains_sorted(initial_, q); }
bool Nfa::is_accepting(StateId q) const { return contains_sorted(accepting_, q); }

void Nfa::set_label(StateId q, std::string label) {
  check_state(q);
  if (labels_.empty()) labels_.resize(state_count_);
  labels_[q] = std::move(label);
}

std::string Nfa::label(StateId q) const {
  if (q < labels_.size() && !labels_[q].empty()) return labels_[q];
  return std::to_string(q);
}

std::vector<StateId> Nfa::step(std::span<const StateId> states, Symbol symbol) const {
  std::vector<char> mark(state_count_, 0);
  for (StateId q : states) {
    for (StateId t : targets(q, symbol)) mark[t] = 1;
  }
  std::vector<StateId> out;
  for (StateId q = 0; q < state_count_; ++q) {
    if (mark[q]) out.push_back(q);
  }
  return out;
}

bool Nfa::accepts(const Word& word) const {
  std::vector<StateId> current = initial_;
  for (Symbol s : word) {
    current = step(current, s);
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(), [&](StateId q) { return is_accepting(q); });
}

bool operator==(const Nfa& a, const Nfa& b) {
  return a.alphabet_ == b.alphabet_ && a.state_count_ == b.state_count_ && a.delta_ == b.delta_ &&
         a.initial_ == b.initial_ && a.accepting_ == b.accepting_;
}

SymbolPartition symbol_partition(const Nfa& nfa) {
  const std::size_t k = nfa.alphabet_size();
  SymbolPartition p;
  p.entered_by.resize(k);
  std::vector<int> owner(nfa.state_count(), -1);
  p.remembers_last_symbol = true;
  for (Symbol a = 0; a < k; ++a) {
    std::vector<char> mark(nfa.state_count(), 0);
    for (StateId q = 0; q < nfa.state_count(); ++q) {
      for (StateId t : nfa.targets(q, a)) mark[t] = 1;
    }
    for (StateId q = 0; q < nfa.state_count(); ++q) {
      if (!mark[q]) continue;
      p.entered_by[a].push_back(q);
      if (owner[q] >= 0) p.remembers_last_symbol = false;
      owner[q] = static_cast<int>(a);
    }
    p.sorted_sizes.push_back(p.entered_by[a].size());
  }
  std::sort(p.sorted_sizes.begin(), p.sorted_sizes.end(), std::greater<>());
  p.n1 = p.sorted_sizes.empty() ? 0 : p.sorted_sizes.front();
  return p;
}

bool has_incoming(const Nfa& nfa, StateId q) {
  for (StateId p = 0; p < nfa.state_count(); ++p) {
    for (Symbol a = 0; a < nfa.alphabet_size(); ++a) {
      if (contains_sorted(nfa.targets(p, a), q)) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Regex -> NFA

namespace {

struct Edge {
  StateId from;
  Symbol symbol;
  StateId to;
};

// Automaton under construction. State 0 is the initial state and is never
// the target of an edge.
struct Fragment {
  std::size_t states = 1;
  std::vector<Edge> edges;
  std::vector<char> accepting;  // per state
};

Fragment build(const Regex& e) {
  switch (e.kind()) {
    case Regex::Kind::Symbol:
      return Fragment{2, {Edge{0, e.symbol_index(), 1}}, {0, 1}};
    case Regex::Kind::EmptySet:
      return Fragment{1, {}, {0}};
    case Regex::Kind::Epsilon:
      return Fragment{1, {}, {1}};
    case Regex::Kind::Union: {
      Fragment l = build(e.left());
      Fragment r = build(e.right());
      // Right states other than its initial one are appended after the left.
      const auto shift = [&](StateId q) { return q == 0 ? StateId{0} : static_cast<StateId>(l.states + q - 1); };
      Fragment out;
      out.states = l.states + r.states - 1;
      out.edges = std::move(l.edges);
      for (const Edge& t : r.edges) out.edges.push_back({shift(t.from), t.symbol, shift(t.to)});
      out.accepting = std::move(l.accepting);
      out.accepting.resize(out.states, 0);
      for (StateId q = 0; q < r.states; ++q) {
        if (r.accepting[q]) out.accepting[shift(q)] = 1;
      }
      return out;
    }
    case Regex::Kind::Concat: {
      Fragment l = build(e.left());
      Fragment r = build(e.right());
      const auto shift = [&](StateId q) { return static_cast<StateId>(l.states + q - 1); };
      Fragment out;
      out.states = l.states + r.states - 1;
      out.edges = l.edges;
      for (const Edge& t : r.edges) {
        if (t.from == 0) {
          for (StateId f = 0; f < l.states; ++f) {
            if (l.accepting[f]) out.edges.push_back({f, t.symbol, shift(t.to)});
          }
        } else {
          out.edges.push_back({shift(t.from), t.symbol, shift(t.to)});
        }
      }
      out.accepting.assign(out.states, 0);
      // The right initial state accepting means ε ∈ L(right).
      if (r.accepting[0]) {
        for (StateId q = 0; q < l.states; ++q) out.accepting[q] = l.accepting[q];
      }
      for (StateId q = 1; q < r.states; ++q) {
        if (r.accepting[q]) out.accepting[shift(q)] = 1;
      }
      return out;
    }
    case Regex::Kind::Star: {
      Fragment f = build(e.inner());
      std::vector<Edge> from_initial;
      for (const Edge& t : f.edges) {
        if (t.from == 0) from_initial.push_back(t);
      }
      for (StateId q = 0; q < f.states; ++q) {
        if (!f.accepting[q]) continue;
        for (const Edge& t : from_initial) f.edges.push_back({q, t.symbol, t.to});
      }
      f.accepting[0] = 1;
      return f;
    }
  }
  return {};
}

}  // namespace

Nfa build_nfa(const Regex& e, const Alphabet& alphabet) {
  const Fragment f = build(e);
  Nfa nfa(alphabet, f.states);
  nfa.add_initial(0);
  for (const Edge& t : f.edges) nfa.add_transition(t.from, t.symbol, t.to);
  for (StateId q = 0; q < f.states; ++q) {
    if (f.accepting[q]) nfa.add_accepting(q);
  }
  return nfa;
}

// ---------------------------------------------------------------------------

std::optional<Word> bounded_difference(const Nfa& a, const Nfa& b, std::size_t max_len) {
  if (!(a.alphabet() == b.alphabet())) throw InputError("automata have different alphabets");
  using Pair = std::pair<std::vector<StateId>, std::vector<StateId>>;
  const auto accepting = [](const Nfa& m, const std::vector<StateId>& s) {
    return std::any_of(s.begin(), s.end(), [&](StateId q) { return m.is_accepting(q); });
  };
  std::map<Pair, std::size_t> seen;
  std::deque<std::pair<Pair, Word>> queue;
  Pair start{a.initial(), b.initial()};
  seen.emplace(start, 0);
  queue.emplace_back(std::move(start), Word{});
  while (!queue.empty()) {
    auto [pair, word] = std::move(queue.front());
    queue.pop_front();
    if (accepting(a, pair.first) != accepting(b, pair.second)) return word;
    if (word.size() == max_len) continue;
    for (Symbol s = 0; s < a.alphabet_size(); ++s) {
      Pair next{a.step(pair.first, s), b.step(pair.second, s)};
      if (seen.contains(next)) continue;
      seen.emplace(next, word.size() + 1);
      Word w = word;
      w.push_back(s);
      queue.emplace_back(std::move(next), std::move(w));
    }
  }
  return std::nullopt;
}

}  // namespace regdet
