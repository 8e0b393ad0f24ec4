#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "regdet/error.hpp"
#include "regdet/unary.hpp"

using namespace regdet;

namespace {

const Alphabet unary = Alphabet::parse("a");

Nfa cycle(std::size_t len) {
  Nfa nfa(unary, len);
  nfa.add_initial(0);
  for (StateId q = 0; q < len; ++q) nfa.add_transition(q, 0, StateId((q + 1) % len));
  return nfa;
}

// 0 -> 1 -> {2-cycle, 3-cycle}
Nfa tail_and_two_cycles() {
  Nfa nfa(unary, 7);
  nfa.add_initial(0);
  nfa.add_transition(0, 0, 1);
  nfa.add_transition(1, 0, 2);
  nfa.add_transition(1, 0, 4);
  nfa.add_transition(2, 0, 3);
  nfa.add_transition(3, 0, 2);
  nfa.add_transition(4, 0, 5);
  nfa.add_transition(5, 0, 6);
  nfa.add_transition(6, 0, 4);
  return nfa;
}

std::uint64_t lcm_all(const std::vector<std::uint64_t>& xs) {
  std::uint64_t l = 1;
  for (auto x : xs) l = std::lcm(l, x);
  return l;
}

}  // namespace

TEST_CASE("landau values") {
  CHECK(landau(0).value == 1);
  CHECK(landau(1).value == 1);
  CHECK(landau(5).value == 6);
  CHECK(landau(5).parts == std::vector<std::uint64_t>{2, 3});
  CHECK(landau(7).value == 12);
  CHECK(landau(7).parts == std::vector<std::uint64_t>{3, 4});
  CHECK(landau(8).value == 15);
  CHECK(landau(12).value == 60);
  CHECK(landau(20).value == 420);
  CHECK_THROWS_AS(landau(kLandauCap + 1), InputError);
}

TEST_CASE("landau matches brute force and its witness") {
  for (unsigned n = 0; n <= 30; ++n) {
    const LandauValue v = landau(n);
    CHECK(v.value == oracle::landau_brute_force(n));
    std::uint64_t sum = 0;
    CHECK(lcm_all(v.parts) == v.value);
    for (auto p : v.parts) sum += p;
    CHECK(sum <= n);
  }
  for (std::size_t n = 1; n <= 4; ++n) CHECK(landau(n).value == n);
  const auto& table = landau_table();
  for (std::size_t n = 1; n < table.size(); ++n) CHECK(table[n].value >= table[n - 1].value);
}

TEST_CASE("orbit of a plain cycle") {
  const StateId start[] = {0};
  const UnaryProfile p = unary_orbit(cycle(5), start);
  CHECK(p.tail == 0);
  CHECK(p.period == 5);
  CHECK(p.reachable_subsets == 5);
}

TEST_CASE("orbit with a tail feeding two cycles") {
  const Nfa nfa = tail_and_two_cycles();
  const StateId start[] = {0};
  const UnaryProfile p = unary_orbit(nfa, start);
  CHECK(p.tail == 2);
  CHECK(p.period == 6);
  CHECK(p.reachable_subsets == 8);

  const UnaryLemmaReport r = verify_unary_lemma(nfa, start);
  CHECK(r.reachable_states == 7);
  CHECK(r.landau_bound == 12);
  CHECK(r.structural_period == 6);
  CHECK(r.ok());
  CHECK_FALSE(r.tail_exceeds_allowance);
  CHECK(component_periods(nfa, start) == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("self-loop and dead ends") {
  Nfa loop(unary, 1);
  loop.add_initial(0);
  loop.add_transition(0, 0, 0);
  const StateId start[] = {0};
  const UnaryLemmaReport r = verify_unary_lemma(loop, start);
  CHECK(r.profile.period == 1);
  CHECK(r.landau_bound == 1);
  CHECK(r.ok());

  Nfa dead(unary, 2);
  dead.add_initial(0);
  dead.add_transition(0, 0, 1);
  const UnaryProfile p = unary_orbit(dead, start);
  CHECK(p.tail == 2);  // {0}, {1}, then ∅ forever
  CHECK(p.period == 1);
  CHECK(component_periods(dead, start).empty());
}

TEST_CASE("random unary NFAs") {
  std::mt19937_64 rng(1234);
  std::size_t long_tails = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t m = 1 + rng() % 12;
    const Nfa nfa = oracle::random_unary_nfa(rng, m, 0.05 + 0.05 * double(rng() % 6));
    const StateId start[] = {0};
    const UnaryLemmaReport r = verify_unary_lemma(nfa, start);
    const auto orbit = oracle::unary_orbit_by_history(nfa, {0});
    REQUIRE(r.profile.reachable_subsets == orbit.distinct);
    REQUIRE(r.profile.tail == orbit.cycle_start);
    CHECK(r.profile.tail + r.profile.period == r.profile.reachable_subsets);
    CHECK(r.profile.period <= landau(r.reachable_states).value);
    CHECK(r.structural_period % r.profile.period == 0);
    CHECK(r.ok());
    long_tails += r.tail_exceeds_allowance;
  }
  CHECK(long_tails == 0);
}
