#pragma once

#include <string>
#include <string_view>

#include "regdet/dfa.hpp"
#include "regdet/nfa.hpp"

namespace regdet {

// Text format, one item per line, '#' starts a comment line:
//
//   nfa <states> <symbol>...      (or "dfa" for deterministic automata)
//   <q> <symbol> <q'>             one line per transition
//   initial <q>...
//   accepting <q>...
//
// DFA output also lists the NFA subset behind every state as comment lines
// "# <state> : {<q>,...}", using the source NFA's labels when given.

std::string write_nfa(const Nfa& nfa);
std::string write_dfa(const Dfa& dfa, const Nfa* source = nullptr);

/// Reads either header kind into an NFA. Throws InputError.
Nfa read_nfa(std::string_view text);
/// Requires a "dfa" header, one initial state and a total transition function.
Dfa read_dfa(std::string_view text);

std::string nfa_to_dot(const Nfa& nfa, std::string_view name = "nfa");
std::string dfa_to_dot(const Dfa& dfa, const Nfa* source = nullptr, std::string_view name = "dfa");

}  // namespace regdet
