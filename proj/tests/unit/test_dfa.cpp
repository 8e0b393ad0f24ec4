#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "regdet/dfa.hpp"
#include "regdet/error.hpp"
#include "regdet/random_regex.hpp"
#include "regdet/witness.hpp"

using namespace regdet;

namespace {

const Alphabet ab = Alphabet::parse("ab");

// image(δ_DFA(S, a)) = ∪_{q ∈ S} δ_NFA(q, a) for every state and symbol.
bool back_map_commutes(const Dfa& dfa, const Nfa& nfa) {
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
      if (dfa.subset(dfa.next(q, a)) != nfa.step(dfa.subset(q), a)) return false;
    }
  }
  return true;
}

bool bounded_agree(const Dfa& a, const Dfa& b, std::size_t max_len) {
  for (const Word& w : enumerate_words(a.alphabet(), max_len)) {
    if (a.accepts(w) != b.accepts(w)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("determinize a single symbol") {
  const Alphabet a_only = Alphabet::parse("a");
  const Determinization d = determinize(build_nfa(parse("a", a_only), a_only));
  CHECK(d.dfa.state_count() == 3);
  CHECK(d.dfa.subsets() == std::vector<std::vector<StateId>>{{0}, {1}, {}});
  CHECK(d.dfa.is_total());
  CHECK(d.stats.total == 3);
  CHECK(d.stats.inside_symbol == std::vector<std::size_t>{1});
  CHECK(d.stats.empty_reachable);
  CHECK_FALSE(d.stats.initial_reentered);
  CHECK(d.stats.accounted() == 3);
}

TEST_CASE("witness subsets stay inside one symbol class") {
  const Nfa nfa = witness_nfa(WitnessSpec({3, 5}));
  const SymbolPartition p = symbol_partition(nfa);
  const Determinization d = determinize(nfa);
  CHECK(d.stats.unclassified == 0);
  for (StateId q = 0; q < d.dfa.state_count(); ++q) {
    const auto& s = d.dfa.subset(q);
    if (q == d.dfa.initial() || s.empty()) continue;
    bool inside = false;
    for (const auto& cls : p.entered_by) {
      inside |= std::includes(cls.begin(), cls.end(), s.begin(), s.end());
    }
    CHECK(inside);
  }
  CHECK(d.stats.total == 235);
  CHECK(back_map_commutes(d.dfa, nfa));
}

TEST_CASE("budget cap") {
  const Nfa nfa = witness_nfa(WitnessSpec({3, 5}));
  CHECK_THROWS_AS(determinize(nfa, {100}), BudgetExceeded);
  CHECK_NOTHROW(determinize(nfa, {235}));
}

TEST_CASE("minimize small cases") {
  Dfa twins(ab, 2);
  for (StateId q = 0; q < 2; ++q) {
    twins.set_accepting(q, true);
    twins.set_next(q, 0, 1 - q);
    twins.set_next(q, 1, q);
  }
  const Dfa m = minimize(twins);
  CHECK(m.state_count() == 1);
  CHECK(m.is_accepting(0));
  CHECK(equivalent(twins, m));

  Dfa partial(ab, 1);
  CHECK_THROWS_AS(minimize(partial), InputError);
}

TEST_CASE("separating words") {
  const Dfa a = determinize(build_nfa(parse("a", ab), ab)).dfa;
  const Dfa b = determinize(build_nfa(parse("b", ab), ab)).dfa;
  const auto w = find_separating_word(a, b);
  REQUIRE(w.has_value());
  CHECK(w->size() == 1);
  CHECK(a.accepts(*w) != b.accepts(*w));

  const Dfa long_a = determinize(build_nfa(parse("aaaa*", ab), ab)).dfa;
  const Dfa long_b = determinize(build_nfa(parse("aaa*", ab), ab)).dfa;
  CHECK(find_separating_word(long_a, long_b) == Word{0, 0});
  CHECK(equivalent(a, minimize(a)));
}

TEST_CASE("regex- and NFA-derived witness automata are equivalent") {
  const WitnessSpec spec({3, 5});
  const Dfa from_regex = minimize(determinize(build_nfa(witness_regex(spec), ab)).dfa);
  const Dfa from_nfa = minimize(determinize(witness_nfa(spec)).dfa);
  CHECK(equivalent(from_regex, from_nfa));
  CHECK(from_regex == from_nfa);
  CHECK(from_nfa.state_count() == 235);
  CHECK(from_nfa.state_count() >= 180);
}

TEST_CASE("trim drops unreachable states") {
  const Nfa nfa = build_nfa(parse("∅ab", ab), ab);
  const Nfa t = trim(nfa);
  CHECK(t.state_count() == 1);
  CHECK(determinize(t).stats.total == determinize(nfa).stats.total);
}

TEST_CASE("random NFAs: determinize and minimize against oracles") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 9;
    const Nfa nfa = oracle::random_last_symbol_nfa(rng, n, 1 + rng() % 3, 0.25);
    const Determinization d = determinize(nfa);
    REQUIRE(d.stats.total == oracle::reachable_subsets(nfa));
    CHECK(d.stats.accounted() == d.stats.total);
    CHECK(d.stats.unclassified == 0);
    CHECK(back_map_commutes(d.dfa, nfa));

    const Dfa m = minimize(d.dfa);
    CHECK(m.state_count() == oracle::table_filling_classes(d.dfa));
    CHECK(minimize(m) == m);
    CHECK(equivalent(m, d.dfa));
    CHECK(bounded_agree(m, d.dfa, 6));
    for (const Word& w : enumerate_words(nfa.alphabet(), 6)) REQUIRE(d.dfa.accepts(w) == nfa.accepts(w));
  }
}

TEST_CASE("random expressions: three-way agreement and idempotent minimization") {
  std::mt19937_64 rng(3);
  const auto words = enumerate_words(ab, 8);
  for (int i = 0; i < 150; ++i) {
    const Regex e = random_regex(rng, 2, draw(rng, 13));
    INFO(to_string(e, ab));
    const Nfa nfa = build_nfa(e, ab);
    const Determinization d = determinize(nfa);
    CHECK(d.stats.total == oracle::reachable_subsets(nfa));
    CHECK_FALSE(d.stats.initial_reentered);
    const Dfa m = minimize(d.dfa);
    CHECK(minimize(m) == m);
    for (const Word& w : words) {
      const bool expected = matches(e, w);
      REQUIRE(nfa.accepts(w) == expected);
      REQUIRE(d.dfa.accepts(w) == expected);
      REQUIRE(m.accepts(w) == expected);
    }
  }
}
