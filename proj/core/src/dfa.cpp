#include "regdet/dfa.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "regdet/error.hpp"

namespace regdet {

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, StateId initial)
    : alphabet_(std::move(alphabet)),
      initial_(initial),
      delta_(state_count * alphabet_.size(), kNoState),
      accepting_(state_count, 0) {
  if (state_count == 0) throw InputError("a DFA needs at least one state");
  if (initial >= state_count) throw InputError("initial state out of range");
}

void Dfa::set_next(StateId q, Symbol a, StateId to) {
  if (q >= state_count() || to >= state_count() || a >= alphabet_size()) {
    throw InputError("DFA transition out of range");
  }
  delta_[q * alphabet_.size() + a] = to;
}

void Dfa::set_accepting(StateId q, bool on) { accepting_.at(q) = on ? 1 : 0; }

std::vector<StateId> Dfa::accepting_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < state_count(); ++q) {
    if (accepting_[q]) out.push_back(q);
  }
  return out;
}

bool Dfa::is_total() const {
  return std::find(delta_.begin(), delta_.end(), kNoState) == delta_.end();
}

bool Dfa::accepts(const Word& word) const {
  StateId q = initial_;
  for (Symbol a : word) q = next(q, a);
  return is_accepting(q);
}

void Dfa::set_subsets(std::vector<std::vector<StateId>> subsets) {
  if (subsets.size() != state_count()) throw InputError("back-map size mismatch");
  subsets_ = std::move(subsets);
}

std::size_t SubsetStats::accounted() const {
  return 1 + std::accumulate(inside_symbol.begin(), inside_symbol.end(), std::size_t{0}) +
         unclassified + (empty_reachable ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Subset construction

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (std::uint64_t w : b) {
      h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

Bits to_bits(std::span<const StateId> states, std::size_t words) {
  Bits b(words, 0);
  for (StateId q : states) b[q / 64] |= std::uint64_t{1} << (q % 64);
  return b;
}

std::vector<StateId> to_ids(const Bits& b) {
  std::vector<StateId> out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::uint64_t w = b[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<StateId>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

bool none(const Bits& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t w) { return w == 0; });
}

bool intersects(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

}  // namespace

Determinization determinize(const Nfa& nfa, const DeterminizeOptions& options) {
  const std::size_t n = nfa.state_count();
  const std::size_t k = nfa.alphabet_size();
  const std::size_t words = (n + 63) / 64;

  std::vector<Bits> image(n * k);  // δ(q, a) as bits
  for (StateId q = 0; q < n; ++q) {
    for (Symbol a = 0; a < k; ++a) image[q * k + a] = to_bits(nfa.targets(q, a), words);
  }
  const Bits accepting = to_bits(nfa.accepting(), words);
  const SymbolPartition partition = symbol_partition(nfa);
  std::vector<Bits> entered(k);
  for (Symbol a = 0; a < k; ++a) entered[a] = to_bits(partition.entered_by[a], words);

  std::unordered_map<Bits, StateId, BitsHash> index;
  std::vector<Bits> subsets;
  std::vector<StateId> delta;

  const auto intern = [&](Bits b) -> StateId {
    auto [it, fresh] = index.try_emplace(b, static_cast<StateId>(subsets.size()));
    if (fresh) {
      if (subsets.size() >= options.max_subsets) {
        throw BudgetExceeded("subset construction", options.max_subsets);
      }
      subsets.push_back(std::move(b));
    }
    return it->second;
  };

  intern(to_bits(nfa.initial(), words));
  Bits next(words);
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (Symbol a = 0; a < k; ++a) {
      std::fill(next.begin(), next.end(), 0);
      const Bits& current = subsets[s];
      for (std::size_t i = 0; i < words; ++i) {
        for (std::uint64_t w = current[i]; w != 0; w &= w - 1) {
          const std::size_t q = i * 64 + std::countr_zero(w);
          const Bits& img = image[q * k + a];
          for (std::size_t j = 0; j < words; ++j) next[j] |= img[j];
        }
      }
      delta.push_back(intern(next));
    }
  }

  Determinization result{Dfa(nfa.alphabet(), subsets.size()), SubsetStats{}};
  Dfa& dfa = result.dfa;
  SubsetStats& stats = result.stats;
  std::vector<std::vector<StateId>> back_map;
  back_map.reserve(subsets.size());
  stats.total = subsets.size();
  stats.inside_symbol.assign(k, 0);
  for (StateId s = 0; s < subsets.size(); ++s) {
    for (Symbol a = 0; a < k; ++a) {
      const StateId t = delta[s * k + a];
      dfa.set_next(s, a, t);
      if (t == 0) stats.initial_reentered = true;
    }
    dfa.set_accepting(s, intersects(subsets[s], accepting));
    back_map.push_back(to_ids(subsets[s]));
    if (s == 0) continue;
    if (none(subsets[s])) {
      stats.empty_reachable = true;
      continue;
    }
    bool placed = false;
    for (Symbol a = 0; a < k && !placed; ++a) {
      if (subset_of(subsets[s], entered[a])) {
        ++stats.inside_symbol[a];
        placed = true;
      }
    }
    if (!placed) ++stats.unclassified;
  }
  dfa.set_subsets(std::move(back_map));
  return result;
}

Nfa trim(const Nfa& nfa) {
  std::vector<char> seen(nfa.state_count(), 0);
  std::deque<StateId> queue(nfa.initial().begin(), nfa.initial().end());
  for (StateId q : nfa.initial()) seen[q] = 1;
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < nfa.alphabet_size(); ++a) {
      for (StateId t : nfa.targets(q, a)) {
        if (!seen[t]) {
          seen[t] = 1;
          queue.push_back(t);
        }
      }
    }
  }
  std::vector<StateId> renumber(nfa.state_count(), kNoState);
  StateId count = 0;
  for (StateId q = 0; q < nfa.state_count(); ++q) {
    if (seen[q]) renumber[q] = count++;
  }
  // An NFA with no initial state keeps one dead state.
  if (count == 0) return Nfa(nfa.alphabet(), 1);
  Nfa out(nfa.alphabet(), count);
  for (StateId q = 0; q < nfa.state_count(); ++q) {
    if (!seen[q]) continue;
    const StateId r = renumber[q];
    if (nfa.is_initial(q)) out.add_initial(r);
    if (nfa.is_accepting(q)) out.add_accepting(r);
    if (nfa.has_labels()) out.set_label(r, nfa.label(q));
    for (Symbol a = 0; a < nfa.alphabet_size(); ++a) {
      for (StateId t : nfa.targets(q, a)) out.add_transition(r, a, renumber[t]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minimization

namespace {

// Refinable partition over 0..n-1 with a marked prefix in every block.
class Partition {
 public:
  explicit Partition(std::size_t n) : elems_(n), loc_(n), block_(n, 0) {
    std::iota(elems_.begin(), elems_.end(), StateId{0});
    std::iota(loc_.begin(), loc_.end(), std::size_t{0});
    if (n > 0) {
      first_.push_back(0);
      mid_.push_back(0);
      end_.push_back(n);
    }
  }

  std::size_t blocks() const { return first_.size(); }
  std::size_t block_of(StateId q) const { return block_[q]; }
  std::size_t size(std::size_t b) const { return end_[b] - first_[b]; }
  std::span<const StateId> members(std::size_t b) const {
    return {elems_.data() + first_[b], end_[b] - first_[b]};
  }

  // Returns true when q's block had no marks yet.
  bool mark(StateId q) {
    const std::size_t b = block_[q];
    const std::size_t at = loc_[q];
    if (at < mid_[b]) return false;
    const bool fresh = mid_[b] == first_[b];
    swap_positions(at, mid_[b]);
    ++mid_[b];
    return fresh;
  }

  // Splits off the marked part of b as a new block; returns its index, or
  // nothing if b was entirely marked (marks are cleared either way).
  std::optional<std::size_t> split(std::size_t b) {
    if (mid_[b] == end_[b]) {
      mid_[b] = first_[b];
      return std::nullopt;
    }
    const std::size_t nb = first_.size();
    first_.push_back(first_[b]);
    end_.push_back(mid_[b]);
    mid_.push_back(first_[b]);
    first_[b] = mid_[b];
    for (std::size_t i = first_[nb]; i < end_[nb]; ++i) block_[elems_[i]] = nb;
    return nb;
  }

 private:
  void swap_positions(std::size_t i, std::size_t j) {
    std::swap(elems_[i], elems_[j]);
    loc_[elems_[i]] = i;
    loc_[elems_[j]] = j;
  }

  std::vector<StateId> elems_;
  std::vector<std::size_t> loc_;
  std::vector<std::size_t> block_;
  std::vector<std::size_t> first_, mid_, end_;
};

}  // namespace

Dfa minimize(const Dfa& dfa) {
  if (!dfa.is_total()) throw InputError("minimize requires a total transition function");
  const std::size_t k = dfa.alphabet_size();

  // Restrict to reachable states.
  std::vector<StateId> id(dfa.state_count(), kNoState);
  std::vector<StateId> order{dfa.initial()};
  id[dfa.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      const StateId t = dfa.next(order[i], a);
      if (id[t] == kNoState) {
        id[t] = static_cast<StateId>(order.size());
        order.push_back(t);
      }
    }
  }
  const std::size_t n = order.size();
  std::vector<StateId> delta(n * k);
  for (StateId q = 0; q < n; ++q) {
    for (Symbol a = 0; a < k; ++a) delta[q * k + a] = id[dfa.next(order[q], a)];
  }

  // Predecessor lists per symbol, CSR layout.
  std::vector<std::size_t> pred_start(k * n + 1, 0);
  for (StateId q = 0; q < n; ++q) {
    for (Symbol a = 0; a < k; ++a) ++pred_start[a * n + delta[q * k + a] + 1];
  }
  std::partial_sum(pred_start.begin(), pred_start.end(), pred_start.begin());
  std::vector<StateId> preds(n * k);
  {
    std::vector<std::size_t> fill(pred_start.begin(), pred_start.end() - 1);
    for (StateId q = 0; q < n; ++q) {
      for (Symbol a = 0; a < k; ++a) preds[fill[a * n + delta[q * k + a]]++] = q;
    }
  }

  Partition part(n);
  std::vector<std::pair<std::size_t, Symbol>> work;
  std::vector<char> in_work;
  const auto push = [&](std::size_t b, Symbol a) {
    if (in_work.size() < (b + 1) * k) in_work.resize((b + 1) * k, 0);
    if (!in_work[b * k + a]) {
      in_work[b * k + a] = 1;
      work.emplace_back(b, a);
    }
  };
  const auto queued = [&](std::size_t b, Symbol a) {
    return b * k + a < in_work.size() && in_work[b * k + a];
  };

  for (StateId q = 0; q < n; ++q) {
    if (dfa.is_accepting(order[q])) part.mark(q);
  }
  if (auto acc = part.split(0)) {
    const std::size_t smaller = part.size(*acc) <= part.size(0) ? *acc : 0;
    for (Symbol a = 0; a < k; ++a) push(smaller, a);
  }

  std::vector<StateId> incoming;
  std::vector<std::size_t> touched;
  while (!work.empty()) {
    const auto [b, a] = work.back();
    work.pop_back();
    in_work[b * k + a] = 0;

    incoming.clear();
    for (StateId t : part.members(b)) {
      for (std::size_t i = pred_start[a * n + t]; i < pred_start[a * n + t + 1]; ++i) {
        incoming.push_back(preds[i]);
      }
    }
    touched.clear();
    for (StateId p : incoming) {
      if (part.mark(p)) touched.push_back(part.block_of(p));
    }
    for (std::size_t c : touched) {
      const auto d = part.split(c);
      if (!d) continue;
      for (Symbol s = 0; s < k; ++s) {
        if (queued(c, s)) {
          push(*d, s);
        } else {
          push(part.size(*d) <= part.size(c) ? *d : c, s);
        }
      }
    }
  }

  // Quotient automaton, numbered by BFS from the initial block.
  std::vector<StateId> block_id(part.blocks(), kNoState);
  std::vector<StateId> reps;
  block_id[part.block_of(0)] = 0;
  reps.push_back(0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      const std::size_t tb = part.block_of(delta[reps[i] * k + a]);
      if (block_id[tb] == kNoState) {
        block_id[tb] = static_cast<StateId>(reps.size());
        reps.push_back(delta[reps[i] * k + a]);
      }
    }
  }
  Dfa out(dfa.alphabet(), reps.size(), 0);
  for (StateId s = 0; s < reps.size(); ++s) {
    out.set_accepting(s, dfa.is_accepting(order[reps[s]]));
    for (Symbol a = 0; a < k; ++a) {
      out.set_next(s, a, block_id[part.block_of(delta[reps[s] * k + a])]);
    }
  }
  return out;
}

std::optional<Word> find_separating_word(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) throw InputError("automata have different alphabets");
  const std::size_t k = a.alphabet_size();
  struct Entry {
    StateId p, q;
    std::size_t parent;
    Symbol via;
  };
  std::vector<Entry> nodes{{a.initial(), b.initial(), 0, 0}};
  std::unordered_map<std::uint64_t, std::size_t> seen;
  const auto key = [](StateId p, StateId q) { return (std::uint64_t{p} << 32) | q; };
  seen.emplace(key(a.initial(), b.initial()), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto [p, q, parent, via] = nodes[i];
    if (a.is_accepting(p) != b.is_accepting(q)) {
      Word w;
      for (std::size_t j = i; j != 0; j = nodes[j].parent) w.push_back(nodes[j].via);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Symbol s = 0; s < k; ++s) {
      const StateId np = a.next(p, s);
      const StateId nq = b.next(q, s);
      if (seen.try_emplace(key(np, nq), nodes.size()).second) nodes.push_back({np, nq, i, s});
    }
  }
  return std::nullopt;
}

}  // namespace regdet
