#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "regdet/dfa.hpp"
#include "regdet/error.hpp"
#include "regdet/witness.hpp"

using namespace regdet;

TEST_CASE("spec validation and derived sizes") {
  CHECK_THROWS_AS(WitnessSpec({}), InputError);
  CHECK_THROWS_AS(WitnessSpec({5}), InputError);
  CHECK_THROWS_AS(WitnessSpec({3, 9}), InputError);
  CHECK_THROWS_AS(WitnessSpec({3, 2}), InputError);
  CHECK_NOTHROW(WitnessSpec({3, 4, 5}));

  const WitnessSpec s35({3, 5});
  CHECK(s35.regex_size() == 14);
  CHECK(s35.nfa_states() == 13);
  CHECK(s35.lower_bound() == 180);
  CHECK(s35.to_string() == "3,5");
  CHECK(WitnessSpec({3}).regex_size() == 6);
  CHECK(WitnessSpec({3, 5, 7}).regex_size() == 26);
  CHECK(WitnessSpec({3, 5, 7}).lower_bound() == 22680);
  CHECK(WitnessSpec({3}).lower_bound() == 6);
}

TEST_CASE("witness expression") {
  for (auto cycles : {std::vector<unsigned>{3}, {3, 5}, {3, 5, 7}, {3, 4, 5}}) {
    const WitnessSpec spec(cycles);
    CHECK(witness_regex(spec).width() == spec.regex_size());
    CHECK(parse(witness_regex_text(spec), witness_alphabet()) == witness_regex(spec));
  }
  CHECK(witness_regex_text(WitnessSpec({3, 5})) == "(a((a((b|ε)a){1}a)*|(a((b|ε)a){3}a)*)b)*");
  CHECK(parse("(a((b|ε)a){1}a)*", witness_alphabet()).width() == 4);
}

TEST_CASE("witness NFA layout") {
  const WitnessSpec spec({3, 5});
  const Nfa nfa = witness_nfa(spec);
  CHECK(nfa.state_count() == 13);
  CHECK(nfa.initial() == std::vector<StateId>{witness_hat_state()});
  CHECK(nfa.accepting() == std::vector<StateId>{witness_hat_state()});
  CHECK(nfa.label(witness_hat_state()) == "q̂");
  CHECK(nfa.label(witness_cycle_state(spec, 1, 4)) == "q2.4");
  CHECK(nfa.label(witness_side_state(spec, 0, 1)) == "r1.1");
  CHECK(witness_cycle_state(spec, 1, 0) == 5);

  CHECK(nfa.targets(0, 0) == std::vector<StateId>{witness_cycle_state(spec, 0, 0), witness_cycle_state(spec, 1, 0)});
  CHECK(nfa.targets(witness_cycle_state(spec, 1, 4), 0) == std::vector<StateId>{witness_cycle_state(spec, 1, 0)});
  CHECK(nfa.targets(witness_cycle_state(spec, 0, 0), 1) == std::vector<StateId>{0});
  CHECK(nfa.targets(witness_cycle_state(spec, 1, 2), 1) == std::vector<StateId>{witness_side_state(spec, 1, 2)});
  CHECK(nfa.targets(witness_side_state(spec, 1, 2), 0) == std::vector<StateId>{witness_cycle_state(spec, 1, 3)});

  for (auto cycles : {std::vector<unsigned>{3}, {3, 7}, {3, 5, 7}, {3, 5, 11}}) {
    const WitnessSpec s(cycles);
    const Nfa n = witness_nfa(s);
    CHECK(n.state_count() == s.nfa_states());
    CHECK(symbol_partition(n).remembers_last_symbol);
  }
}

TEST_CASE("prime selection") {
  CHECK(select_primes(6) == WitnessSpec({3}));
  CHECK(select_primes(13) == WitnessSpec({3}));
  CHECK(select_primes(14) == WitnessSpec({3, 5}));
  CHECK(select_primes(26) == WitnessSpec({3, 5, 7}));
  CHECK(select_primes(30) == WitnessSpec({3, 5, 7}));
  CHECK(select_primes(34) == WitnessSpec({3, 5, 11}));
  CHECK_THROWS_AS(select_primes(5), InputError);
  for (std::size_t n = 6; n <= 120; ++n) {
    const WitnessSpec s = select_primes(n);
    CHECK(s.regex_size() <= n);
    // k is maximal: the next odd prime after the first k would not fit.
    std::vector<unsigned> odd_primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<unsigned> prefix(odd_primes.begin(), odd_primes.begin() + std::ptrdiff_t(s.k() + 1));
    CHECK(WitnessSpec(prefix).regex_size() > n);
  }
}

TEST_CASE("lower bound and half-product inequality") {
  const LowerBound lb = lower_bound(WitnessSpec({3, 5}));
  CHECK(lb.product == 180);
  CHECK(lb.half_power == 128);
  CHECK(lb.half_product_holds);
  const LowerBound lb3 = lower_bound(WitnessSpec({3, 5, 7}));
  CHECK(lb3.product == 22680);
  CHECK(lb3.half_power == 16384);

  const unsigned big[] = {3, 4, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  CHECK(half_product_check(big).half_product_holds);
  const unsigned dup[] = {3, 3};
  CHECK_THROWS_AS(half_product_check(dup), InputError);
}

TEST_CASE("shift vectors") {
  const unsigned mod[] = {3, 5};
  auto length = [&](unsigned d1, unsigned d2) {
    const unsigned r[] = {d1, d2};
    return solve_shift(mod, r).length;
  };
  CHECK(length(0, 0) == 0);
  CHECK(length(1, 2) == 7);
  CHECK(length(2, 4) == 14);
  for (unsigned d1 = 0; d1 < 3; ++d1) {
    for (unsigned d2 = 0; d2 < 5; ++d2) {
      const BigInt l = length(d1, d2);
      CHECK(l < 15);
      CHECK(l % 3 == d1);
      CHECK(l % 5 == d2);
    }
  }
  const unsigned bad_mod[] = {4, 6};
  const unsigned r[] = {0, 0};
  CHECK_THROWS_AS(solve_shift(bad_mod, r), InputError);
  const unsigned out_of_range[] = {3, 0};
  CHECK_THROWS_AS(solve_shift(mod, out_of_range), InputError);
}

TEST_CASE("shift words rotate every cycle independently") {
  const WitnessSpec spec({3, 5});
  const Nfa nfa = witness_nfa(spec);
  const unsigned residues[] = {2, 1};
  const Word w = shift_word(spec, residues);
  CHECK(w.size() == 11);
  std::vector<StateId> s{witness_cycle_state(spec, 0, 0), witness_cycle_state(spec, 1, 0)};
  for (Symbol a : w) s = nfa.step(s, a);
  CHECK(s == std::vector<StateId>{witness_cycle_state(spec, 0, 2), witness_cycle_state(spec, 1, 1)});
}

TEST_CASE("every split subset of the two cycles is reachable") {
  const WitnessSpec spec({3, 5});
  const Determinization d = determinize(witness_nfa(spec));
  const std::set<std::vector<StateId>> reached(d.dfa.subsets().begin(), d.dfa.subsets().end());
  std::size_t found = 0;
  for (unsigned m1 = 1; m1 < (1u << 3) - 1; ++m1) {
    for (unsigned m2 = 1; m2 < (1u << 5) - 1; ++m2) {
      std::vector<StateId> s;
      for (unsigned j = 0; j < 3; ++j) {
        if (m1 >> j & 1) s.push_back(witness_cycle_state(spec, 0, j));
      }
      for (unsigned j = 0; j < 5; ++j) {
        if (m2 >> j & 1) s.push_back(witness_cycle_state(spec, 1, j));
      }
      found += reached.count(s);
    }
  }
  CHECK(found == 180);
}

TEST_CASE("certification goldens") {
  const Certification c1 = certify(WitnessSpec({3}));
  CHECK(c1.status == CertificationStatus::Certified);
  CHECK(c1.minimal_states == 6);
  CHECK(c1.regex_width == 6);

  const Certification c35 = certify(WitnessSpec({3, 5}));
  CHECK(c35.status == CertificationStatus::Certified);
  CHECK(c35.regex_width == 14);
  CHECK(c35.built_nfa_states == 15);
  CHECK(c35.witness_nfa_states == 13);
  CHECK(c35.n1 == 8);
  CHECK(c35.reachable_subsets == 235);
  CHECK(c35.minimal_states == 235);
  CHECK(c35.minimal_states >= 180);
  CHECK(c35.bounded_agreement);
  CHECK(c35.dfa_equivalent);

  CHECK(certify(WitnessSpec({3, 7})).minimal_states == 985);

  const Certification capped = certify(WitnessSpec({3, 5}), {50, 6});
  CHECK(capped.status == CertificationStatus::BudgetExceeded);
  CHECK(to_string(capped.status) == "budget_exceeded");
}
