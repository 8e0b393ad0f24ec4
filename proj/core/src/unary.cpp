#include "regdet/unary.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include <boost/math/special_functions/prime.hpp>

#include "regdet/bounds.hpp"
#include "regdet/error.hpp"

namespace regdet {

namespace {

std::vector<LandauValue> compute_landau(std::size_t max_n) {
  std::vector<std::uint64_t> primes;
  for (unsigned i = 0; boost::math::prime(i) <= max_n; ++i) primes.push_back(boost::math::prime(i));

  // best[s]: largest product of powers of distinct primes seen so far with
  // exponent sum <= s. choice[i][s]: power of primes[i] used at budget s.
  std::vector<std::uint64_t> best(max_n + 1, 1);
  std::vector<std::vector<std::uint64_t>> choice(primes.size(), std::vector<std::uint64_t>(max_n + 1, 0));
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::vector<std::uint64_t> next = best;
    for (std::size_t s = 0; s <= max_n; ++s) {
      for (std::uint64_t q = primes[i]; q <= s; q *= primes[i]) {
        const std::uint64_t candidate = best[s - q] * q;
        if (candidate > next[s]) {
          next[s] = candidate;
          choice[i][s] = q;
        }
      }
    }
    best = std::move(next);
  }

  std::vector<LandauValue> table(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    LandauValue& v = table[n];
    v.value = best[n];
    std::size_t budget = n;
    for (std::size_t i = primes.size(); i-- > 0;) {
      const std::uint64_t q = choice[i][budget];
      if (q != 0) {
        v.parts.push_back(q);
        budget -= q;
      }
    }
    if (v.parts.empty() && n > 0) v.parts.push_back(1);
    std::sort(v.parts.begin(), v.parts.end());
  }
  return table;
}

std::vector<char> reachable_from(const Nfa& nfa, std::span<const StateId> start, Symbol symbol) {
  std::vector<char> seen(nfa.state_count(), 0);
  std::vector<StateId> stack(start.begin(), start.end());
  for (StateId q : start) seen[q] = 1;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (StateId t : nfa.targets(q, symbol)) {
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace

const std::vector<LandauValue>& landau_table(std::size_t max_n) {
  static const std::vector<LandauValue> table = compute_landau(kLandauCap);
  if (max_n > kLandauCap) {
    throw InputError("landau: n = " + std::to_string(max_n) + " exceeds the cap of " +
                     std::to_string(kLandauCap));
  }
  return table;
}

LandauValue landau(std::size_t n) { return landau_table(n)[n]; }

UnaryProfile unary_orbit(const Nfa& nfa, std::span<const StateId> start, Symbol symbol) {
  std::vector<StateId> current(start.begin(), start.end());
  std::sort(current.begin(), current.end());
  current.erase(std::unique(current.begin(), current.end()), current.end());
  std::map<std::vector<StateId>, std::size_t> first_seen;
  for (std::size_t t = 0;; ++t) {
    auto [it, fresh] = first_seen.emplace(current, t);
    if (!fresh) {
      UnaryProfile p;
      p.states = nfa.state_count();
      p.tail = it->second;
      p.period = t - it->second;
      p.reachable_subsets = t;
      return p;
    }
    current = nfa.step(current, symbol);
  }
}

std::vector<std::uint64_t> component_periods(const Nfa& nfa, std::span<const StateId> start,
                                             Symbol symbol) {
  const std::size_t n = nfa.state_count();
  const std::vector<char> live = reachable_from(nfa, start, symbol);

  // Tarjan's algorithm restricted to live states.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<StateId> stack;
  int counter = 0;
  int components = 0;
  std::function<void(StateId)> connect = [&](StateId v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (StateId w : nfa.targets(v, symbol)) {
      if (index[w] < 0) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      StateId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = components;
      } while (w != v);
      ++components;
    }
  };
  for (StateId q = 0; q < n; ++q) {
    if (live[q] && index[q] < 0) connect(q);
  }

  // Depth from a root of each component; every internal edge u -> v closes a
  // cycle whose length is congruent to depth(u) + 1 - depth(v).
  std::vector<long> depth(n, -1);
  std::vector<std::uint64_t> gcds(components, 0);
  for (StateId root = 0; root < n; ++root) {
    if (!live[root] || depth[root] >= 0) continue;
    depth[root] = 0;
    std::vector<StateId> order{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
      const StateId u = order[i];
      for (StateId v : nfa.targets(u, symbol)) {
        if (comp[v] != comp[u]) continue;
        if (depth[v] < 0) {
          depth[v] = depth[u] + 1;
          order.push_back(v);
        }
      }
    }
  }
  for (StateId u = 0; u < n; ++u) {
    if (!live[u]) continue;
    for (StateId v : nfa.targets(u, symbol)) {
      if (comp[v] != comp[u]) continue;
      const long len = depth[u] + 1 - depth[v];
      gcds[comp[u]] = std::gcd(gcds[comp[u]], static_cast<std::uint64_t>(len < 0 ? -len : len));
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t g : gcds) {
    if (g != 0) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

UnaryLemmaReport verify_unary_lemma(const Nfa& nfa, std::span<const StateId> start, Symbol symbol) {
  UnaryLemmaReport r;
  r.profile = unary_orbit(nfa, start, symbol);
  const std::vector<char> live = reachable_from(nfa, start, symbol);
  r.reachable_states = static_cast<std::size_t>(std::count(live.begin(), live.end(), 1));
  r.landau_bound = landau(r.reachable_states).value;
  r.period_within_landau = r.profile.period <= r.landau_bound;
  r.tail_exceeds_allowance = r.profile.tail > tail_allowance(r.reachable_states);
  for (std::uint64_t p : component_periods(nfa, start, symbol)) {
    r.structural_period = std::lcm(r.structural_period, p);
  }
  r.period_divides_structure = r.structural_period % r.profile.period == 0;
  return r;
}

}  // namespace regdet
