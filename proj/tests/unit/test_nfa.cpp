#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "regdet/error.hpp"
#include "regdet/nfa.hpp"
#include "regdet/random_regex.hpp"
#include "regdet/witness.hpp"

using namespace regdet;

namespace {

const Alphabet ab = Alphabet::parse("ab");
constexpr const char* kAlpha35 = "(a((a((b|ε)a){1}a)*|(a((b|ε)a){3}a)*)b)*";

}  // namespace

TEST_CASE("symbol and empty-set base cases") {
  const Nfa a = build_nfa(parse("a", ab), ab);
  CHECK(a.state_count() == 2);
  CHECK(a.targets(0, 0) == std::vector<StateId>{1});
  CHECK(a.targets(0, 1).empty());
  CHECK(a.initial() == std::vector<StateId>{0});
  CHECK(a.accepting() == std::vector<StateId>{1});
  CHECK(a.transition_count() == 1);

  const Nfa empty = build_nfa(Regex::empty_set(), ab);
  CHECK(empty.state_count() == 1);
  CHECK(empty.transition_count() == 0);
  CHECK(empty.accepting().empty());

  const Nfa eps = build_nfa(Regex::epsilon(), ab);
  CHECK(eps.state_count() == 1);
  CHECK(eps.accepting() == std::vector<StateId>{0});
}

TEST_CASE("composite cases") {
  SECTION("union merges initial states") {
    const Nfa u = build_nfa(parse("a|b", ab), ab);
    CHECK(u.state_count() == 3);
    CHECK(u.targets(0, 0) == std::vector<StateId>{1});
    CHECK(u.targets(0, 1) == std::vector<StateId>{2});
    CHECK(u.accepting() == std::vector<StateId>{1, 2});
  }
  SECTION("concatenation replays the right initial transitions") {
    const Nfa c = build_nfa(parse("ab", ab), ab);
    CHECK(c.state_count() == 3);
    CHECK(c.targets(1, 1) == std::vector<StateId>{2});
    CHECK(c.accepting() == std::vector<StateId>{2});

    const Nfa n = build_nfa(parse("ab*", ab), ab);
    CHECK(n.accepting() == std::vector<StateId>{1, 2});
  }
  SECTION("star loops back from accepting states") {
    const Nfa s = build_nfa(parse("(ab)*", ab), ab);
    CHECK(s.state_count() == 3);
    CHECK(s.targets(2, 0) == std::vector<StateId>{1});
    CHECK(s.accepting() == std::vector<StateId>{0, 2});
  }
  SECTION("concatenation with an empty left side leaves the right part unreachable") {
    const Nfa d = build_nfa(parse("∅ab", ab), ab);
    CHECK(d.state_count() == 3);
    CHECK(d.transition_count() == 1);
    CHECK_FALSE(d.accepts(ab.word("ab")));
  }
}

TEST_CASE("symbol partition") {
  const SymbolPartition p = symbol_partition(build_nfa(parse("a", ab), ab));
  CHECK(p.entered_by[0] == std::vector<StateId>{1});
  CHECK(p.entered_by[1].empty());
  CHECK(p.n1 == 1);
  CHECK(p.remembers_last_symbol);

  Nfa mixed(ab, 2);
  mixed.add_initial(0);
  mixed.add_transition(0, 0, 1);
  mixed.add_transition(0, 1, 1);
  CHECK_FALSE(symbol_partition(mixed).remembers_last_symbol);

  const SymbolPartition w = symbol_partition(witness_nfa(WitnessSpec({3, 5})));
  CHECK(w.entered_by[0].size() == 8);
  CHECK(w.entered_by[1].size() == 5);
  CHECK(w.sorted_sizes == std::vector<std::size_t>{8, 5});
  CHECK(w.n1 == 8);
  CHECK(w.remembers_last_symbol);
}

TEST_CASE("witness expression and witness NFA agree on bounded words") {
  const Nfa built = build_nfa(parse(kAlpha35, ab), ab);
  CHECK(built.state_count() == 15);
  CHECK(bounded_language_equal(built, witness_nfa(WitnessSpec({3, 5})), 10));

  const auto diff = bounded_difference(build_nfa(parse("a", ab), ab), build_nfa(parse("b", ab), ab), 1);
  REQUIRE(diff.has_value());
  CHECK(diff->size() == 1);
  CHECK_FALSE(bounded_language_equal(build_nfa(parse("a", ab), ab), build_nfa(parse("b", ab), ab), 1));
}

TEST_CASE("construction is reproducible") {
  const Regex e = parse("(a|b)*a(b|ε)", ab);
  CHECK(build_nfa(e, ab) == build_nfa(parse("(a|b)*a(b|ε)", ab), ab));
}

TEST_CASE("random corpus: size, last-symbol and initial-state properties") {
  std::mt19937_64 rng(7);
  const auto words = enumerate_words(ab, 8);
  for (int i = 0; i < 300; ++i) {
    const Regex e = random_regex(rng, 2, draw(rng, 13));
    INFO(to_string(e, ab));
    const Nfa nfa = build_nfa(e, ab);
    REQUIRE(nfa.state_count() == e.width() + 1);
    REQUIRE(nfa.initial() == std::vector<StateId>{0});
    CHECK_FALSE(has_incoming(nfa, 0));

    const SymbolPartition p = symbol_partition(nfa);
    CHECK(p.remembers_last_symbol);
    for (Symbol a = 0; a < 2; ++a) {
      std::set<StateId> expect;
      for (StateId q = 0; q < nfa.state_count(); ++q) {
        for (StateId t : nfa.targets(q, a)) expect.insert(t);
      }
      CHECK(p.entered_by[a] == std::vector<StateId>(expect.begin(), expect.end()));
    }
    for (const Word& w : words) REQUIRE(nfa.accepts(w) == matches(e, w));
  }
}

TEST_CASE("nfa validation") {
  Nfa nfa(ab, 2);
  CHECK_THROWS_AS(nfa.add_transition(0, 0, 2), InputError);
  CHECK_THROWS_AS(nfa.add_transition(0, 2, 1), InputError);
  CHECK_THROWS_AS(nfa.add_initial(5), InputError);
  nfa.add_transition(0, 0, 1);
  nfa.add_transition(0, 0, 1);
  CHECK(nfa.transition_count() == 1);
  CHECK(nfa.label(1) == "1");
  nfa.set_label(1, "x");
  CHECK(nfa.label(1) == "x");
}
