#include "regdet/automaton_io.hpp"

#include <charconv>
#include <sstream>
#include <tuple>
#include <vector>

#include "regdet/error.hpp"

namespace regdet {

namespace {

void write_header(std::ostringstream& out, std::string_view kind, std::size_t states,
                  const Alphabet& alphabet) {
  out << kind << ' ' << states;
  for (const auto& name : alphabet.names()) out << ' ' << name;
  out << '\n';
}

void write_list(std::ostringstream& out, std::string_view key, const std::vector<StateId>& states) {
  out << key;
  for (StateId q : states) out << ' ' << q;
  out << '\n';
}

std::string subset_text(const std::vector<StateId>& subset, const Nfa* source) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ',';
    out += source ? source->label(subset[i]) : std::to_string(subset[i]);
  }
  return out + "}";
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

struct Parsed {
  std::string kind;
  std::size_t states = 0;
  std::vector<std::string> symbols;
  std::vector<std::tuple<StateId, Symbol, StateId>> transitions;
  std::vector<StateId> initial;
  std::vector<StateId> accepting;
};

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw InputError("automaton text, line " + std::to_string(line) + ": " + what);
}

StateId parse_state(const std::string& token, std::size_t states, std::size_t line) {
  StateId q = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), q);
  if (ec != std::errc{} || ptr != token.data() + token.size()) bad_line(line, "bad state '" + token + "'");
  if (q >= states) bad_line(line, "state " + token + " out of range");
  return q;
}

Parsed parse_text(std::string_view text) {
  Parsed p;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(raw);
    std::vector<std::string> tok;
    for (std::string t; line >> t;) tok.push_back(t);
    if (tok.empty() || tok.front().starts_with('#')) continue;

    if (!have_header) {
      if ((tok[0] != "nfa" && tok[0] != "dfa") || tok.size() < 3) {
        bad_line(line_no, "expected header 'nfa|dfa <states> <symbols...>'");
      }
      p.kind = tok[0];
      std::size_t n = 0;
      const auto [ptr, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), n);
      if (ec != std::errc{} || ptr != tok[1].data() + tok[1].size() || n == 0) {
        bad_line(line_no, "bad state count");
      }
      p.states = n;
      p.symbols.assign(tok.begin() + 2, tok.end());
      have_header = true;
      continue;
    }
    if (tok[0] == "initial" || tok[0] == "accepting") {
      auto& target = tok[0] == "initial" ? p.initial : p.accepting;
      for (std::size_t i = 1; i < tok.size(); ++i) target.push_back(parse_state(tok[i], p.states, line_no));
      continue;
    }
    if (tok.size() != 3) bad_line(line_no, "expected '<q> <symbol> <q'>'");
    Symbol sym = 0;
    while (sym < p.symbols.size() && p.symbols[sym] != tok[1]) ++sym;
    if (sym == p.symbols.size()) bad_line(line_no, "unknown symbol '" + tok[1] + "'");
    p.transitions.emplace_back(parse_state(tok[0], p.states, line_no), sym,
                               parse_state(tok[2], p.states, line_no));
  }
  if (!have_header) throw InputError("automaton text: missing header");
  return p;
}

}  // namespace

std::string write_nfa(const Nfa& nfa) {
  std::ostringstream out;
  write_header(out, "nfa", nfa.state_count(), nfa.alphabet());
  if (nfa.has_labels()) {
    for (StateId q = 0; q < nfa.state_count(); ++q) out << "# state " << q << ' ' << nfa.label(q) << '\n';
  }
  for (StateId q = 0; q < nfa.state_count(); ++q) {
    for (Symbol a = 0; a < nfa.alphabet_size(); ++a) {
      for (StateId t : nfa.targets(q, a)) out << q << ' ' << nfa.alphabet().name(a) << ' ' << t << '\n';
    }
  }
  write_list(out, "initial", nfa.initial());
  write_list(out, "accepting", nfa.accepting());
  return out.str();
}

std::string write_dfa(const Dfa& dfa, const Nfa* source) {
  std::ostringstream out;
  write_header(out, "dfa", dfa.state_count(), dfa.alphabet());
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
      out << q << ' ' << dfa.alphabet().name(a) << ' ' << dfa.next(q, a) << '\n';
    }
  }
  write_list(out, "initial", {dfa.initial()});
  write_list(out, "accepting", dfa.accepting_states());
  if (dfa.has_subsets()) {
    for (StateId q = 0; q < dfa.state_count(); ++q) {
      out << "# " << q << " : " << subset_text(dfa.subset(q), source) << '\n';
    }
  }
  return out.str();
}

Nfa read_nfa(std::string_view text) {
  const Parsed p = parse_text(text);
  Nfa nfa(Alphabet(p.symbols), p.states);
  for (const auto& [from, sym, to] : p.transitions) nfa.add_transition(from, sym, to);
  for (StateId q : p.initial) nfa.add_initial(q);
  for (StateId q : p.accepting) nfa.add_accepting(q);
  return nfa;
}

Dfa read_dfa(std::string_view text) {
  const Parsed p = parse_text(text);
  if (p.kind != "dfa") throw InputError("automaton text: expected a 'dfa' header");
  if (p.initial.size() != 1) throw InputError("automaton text: a DFA needs exactly one initial state");
  Dfa dfa(Alphabet(p.symbols), p.states, p.initial.front());
  for (const auto& [from, sym, to] : p.transitions) {
    if (dfa.next(from, sym) != kNoState && dfa.next(from, sym) != to) {
      throw InputError("automaton text: DFA state " + std::to_string(from) + " has two '" +
                       p.symbols[sym] + "' transitions");
    }
    dfa.set_next(from, sym, to);
  }
  for (StateId q : p.accepting) dfa.set_accepting(q, true);
  if (!dfa.is_total()) throw InputError("automaton text: DFA transition function is not total");
  return dfa;
}

std::string nfa_to_dot(const Nfa& nfa, std::string_view name) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (StateId q = 0; q < nfa.state_count(); ++q) {
    out << "  " << q << " [label=\"" << dot_escape(nfa.label(q)) << '"';
    if (nfa.is_accepting(q)) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (StateId q : nfa.initial()) {
    out << "  start" << q << " [shape=point, style=invis];\n  start" << q << " -> " << q << ";\n";
  }
  for (StateId q = 0; q < nfa.state_count(); ++q) {
    for (Symbol a = 0; a < nfa.alphabet_size(); ++a) {
      for (StateId t : nfa.targets(q, a)) {
        out << "  " << q << " -> " << t << " [label=\"" << dot_escape(nfa.alphabet().name(a)) << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string dfa_to_dot(const Dfa& dfa, const Nfa* source, std::string_view name) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    const std::string label = dfa.has_subsets() ? subset_text(dfa.subset(q), source) : std::to_string(q);
    out << "  " << q << " [label=\"" << dot_escape(label) << '"';
    if (dfa.is_accepting(q)) out << ", shape=doublecircle";
    out << "];\n";
  }
  out << "  start [shape=point, style=invis];\n  start -> " << dfa.initial() << ";\n";
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
      out << "  " << q << " -> " << dfa.next(q, a) << " [label=\"" << dot_escape(dfa.alphabet().name(a))
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace regdet
