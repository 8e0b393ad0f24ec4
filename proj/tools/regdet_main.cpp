// regdet: regular expression -> NFA -> DFA pipeline and state-count bounds.
//
// Exit codes: 0 success, 2 input error, 3 subset budget exceeded,
// 4 invariant violation (including a failed witness certification).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "regdet/automaton_io.hpp"
#include "regdet/dfa.hpp"
#include "regdet/error.hpp"
#include "regdet/nfa.hpp"
#include "regdet/regex.hpp"
#include "regdet/report.hpp"
#include "regdet/unary.hpp"
#include "regdet/witness.hpp"

namespace {

using namespace regdet;

constexpr int kInputError = 2;
constexpr int kBudgetExceeded = 3;
constexpr int kInvariantViolation = 4;

struct Common {
  std::string alphabet = "ab";
  std::size_t max_subsets = std::size_t{1} << 20;
  std::size_t max_len = 8;
  bool dot = false;
  std::string output;  // automaton destination, "-" or empty = stdout
  std::string csv;     // report destination
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool is_dfa_text(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  for (std::string line; std::getline(in, line);) {
    std::istringstream l(line);
    if (!(l >> tok) || tok.starts_with('#')) continue;
    return tok == "dfa";
  }
  return false;
}

std::string report_csv(const BoundReport& r) { return csv_header() + "\n" + to_csv_row(r) + "\n"; }

// Source for nfa/dfa/minimize: a regex argument or an automaton file.
struct Source {
  std::string regex;
  std::string input;
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("regex", src.regex, "Regular expression");
  cmd->add_option("-i,--input", src.input, "Automaton file instead of a regex");
}

void add_common(CLI::App* cmd, Common& c, bool automaton_output) {
  cmd->add_option("--alphabet", c.alphabet, "Alphabet, e.g. 'ab' or 'a,b'")->capture_default_str();
  cmd->add_option("--max-subsets", c.max_subsets, "Subset construction cap")->capture_default_str();
  if (automaton_output) {
    cmd->add_flag("--dot", c.dot, "Emit Graphviz DOT instead of the text format");
    cmd->add_option("-o,--output", c.output, "Write the automaton here instead of stdout");
    cmd->add_option("--csv", c.csv, "Write the bound report here (default stdout)");
  }
}

void require_one_source(const Source& src) {
  if (src.regex.empty() == src.input.empty()) {
    throw InputError("give either a regex or --input FILE");
  }
}

int cmd_parse(const Source& src, const Common& c) {
  const Alphabet sigma = Alphabet::parse(c.alphabet);
  const Regex e = parse(src.regex, sigma);
  std::cout << "expression: " << to_string(e, sigma) << "\n"
            << "width: " << e.width() << "\n"
            << "nullable: " << (e.nullable() ? "true" : "false") << "\n";
  return 0;
}

int cmd_nfa(const Source& src, const Common& c) {
  const Alphabet sigma = Alphabet::parse(c.alphabet);
  const Regex e = parse(src.regex, sigma);
  const Nfa nfa = build_nfa(e, sigma);
  emit(c.dot ? nfa_to_dot(nfa) : write_nfa(nfa), c.output);
  return 0;
}

int cmd_determinize(const Source& src, const Common& c, bool minimal) {
  require_one_source(src);
  if (!src.regex.empty()) {
    const Alphabet sigma = Alphabet::parse(c.alphabet);
    const PipelineResult result = run_pipeline(parse(src.regex, sigma), sigma, {c.max_subsets});
    check_chain(result.report);
    if (minimal) {
      emit(c.dot ? dfa_to_dot(result.minimal) : write_dfa(result.minimal), c.output);
    } else {
      emit(c.dot ? dfa_to_dot(result.dfa, &result.nfa) : write_dfa(result.dfa), c.output);
    }
    emit(report_csv(result.report), c.csv);
    return 0;
  }

  const std::string text = slurp(src.input);
  if (is_dfa_text(text)) {
    if (!minimal) throw InputError("input is already a DFA");
    const Dfa out = minimize(read_dfa(text));
    emit(c.dot ? dfa_to_dot(out) : write_dfa(out), c.output);
    return 0;
  }
  const Nfa nfa = read_nfa(text);
  const Determinization det = determinize(nfa, {c.max_subsets});
  if (minimal) {
    const Dfa out = minimize(det.dfa);
    emit(c.dot ? dfa_to_dot(out) : write_dfa(out), c.output);
  } else {
    emit(c.dot ? dfa_to_dot(det.dfa, &nfa) : write_dfa(det.dfa, &nfa), c.output);
  }
  return 0;
}

struct WitnessArgs {
  std::optional<std::size_t> budget;
  std::vector<unsigned> cycles;
  bool certify = false;
  std::string out_dir;
};

int cmd_witness(const WitnessArgs& w, const Common& c) {
  if (w.budget.has_value() == !w.cycles.empty()) throw InputError("give exactly one of --budget or --cycles");
  const WitnessSpec spec = w.budget ? select_primes(*w.budget) : WitnessSpec(w.cycles);
  const LowerBound lb = lower_bound(spec);

  std::cout << "cycles: " << spec.to_string() << "\n"
            << "k: " << spec.k() << "\n"
            << "regex_size: " << spec.regex_size() << "\n"
            << "nfa_states: " << spec.nfa_states() << "\n"
            << "lower_bound: " << lb.product << "\n"
            << "half_power: " << lb.half_power << "\n"
            << "regex: " << witness_regex_text(spec) << "\n";

  if (!w.out_dir.empty()) {
    std::filesystem::create_directories(w.out_dir);
    const std::filesystem::path dir(w.out_dir);
    const Nfa nfa = witness_nfa(spec);
    emit(witness_regex_text(spec) + "\n", (dir / "witness.regex").string());
    emit(write_nfa(nfa), (dir / "witness.nfa").string());
    if (c.dot) emit(nfa_to_dot(nfa, "A_" + spec.to_string()), (dir / "witness.dot").string());
  }
  if (!w.certify) return 0;

  const Certification cert = certify(spec, {c.max_subsets, c.max_len});
  const BoundReport row = witness_report(cert, w.budget.value_or(spec.regex_size()));
  emit(report_csv(row), c.csv);
  switch (cert.status) {
    case CertificationStatus::Certified:
      check_chain(row);
      return 0;
    case CertificationStatus::BudgetExceeded:
      std::cerr << "regdet: certification skipped, subset budget " << c.max_subsets << " exceeded\n";
      return kBudgetExceeded;
    default:
      std::cerr << "regdet: certification failed: " << to_string(cert.status) << "\n";
      return kInvariantViolation;
  }
}

int cmd_landau(std::size_t n, bool range) {
  std::cout << "n,g,witness\n";
  for (std::size_t m = range ? 0 : n; m <= n; ++m) {
    const LandauValue v = landau(m);
    std::cout << m << ',' << v.value << ',';
    for (std::size_t i = 0; i < v.parts.size(); ++i) std::cout << (i ? " " : "") << v.parts[i];
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular expressions to DFAs: construction, determinization and state-count bounds"};
  app.require_subcommand(1);

  Common common;
  Source source;

  auto* parse_cmd = app.add_subcommand("parse", "Parse an expression, print canonical form and width");
  parse_cmd->add_option("regex", source.regex, "Regular expression")->required();
  parse_cmd->add_option("--alphabet", common.alphabet, "Alphabet, e.g. 'ab' or 'a,b'")->capture_default_str();

  auto* nfa_cmd = app.add_subcommand("nfa", "Build the last-symbol NFA (width + 1 states)");
  nfa_cmd->add_option("regex", source.regex, "Regular expression")->required();
  add_common(nfa_cmd, common, true);

  auto* dfa_cmd = app.add_subcommand("dfa", "Subset construction (reachable subsets only)");
  add_source(dfa_cmd, source);
  add_common(dfa_cmd, common, true);

  auto* min_cmd = app.add_subcommand("minimize", "Full pipeline down to the minimal DFA");
  add_source(min_cmd, source);
  add_common(min_cmd, common, true);

  WitnessArgs witness;
  auto* wit_cmd = app.add_subcommand("witness", "Lower-bound witness family");
  auto* budget_opt = wit_cmd->add_option("--budget", witness.budget, "Size budget n; primes are selected");
  wit_cmd->add_option("--cycles", witness.cycles, "Explicit cycle lengths, e.g. 3,5,7")
      ->delimiter(',')
      ->excludes(budget_opt);
  wit_cmd->add_flag("--certify", witness.certify, "Determinize, minimize and check the lower bound");
  wit_cmd->add_option("--out-dir", witness.out_dir, "Write witness.regex / witness.nfa (/ witness.dot)");
  wit_cmd->add_flag("--dot", common.dot, "Also write witness.dot into --out-dir");
  wit_cmd->add_option("--csv", common.csv, "Certification row destination (default stdout)");
  wit_cmd->add_option("--max-subsets", common.max_subsets, "Subset construction cap")->capture_default_str();
  wit_cmd->add_option("--max-len", common.max_len, "Word length for agreement checks")->capture_default_str();

  std::size_t landau_n = 0;
  bool landau_range = false;
  auto* landau_cmd = app.add_subcommand("landau", "Landau's function g(n) with a maximizing multiset");
  landau_cmd->add_option("n", landau_n, "Argument (<= 200)")->required();
  landau_cmd->add_flag("--range", landau_range, "Print every m in 0..n");

  SweepOptions sweep_opts;
  std::string sweep_csv_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Bound report over a range of sizes");
  sweep_cmd->add_option("n_min", sweep_opts.n_min, "Smallest size")->required();
  sweep_cmd->add_option("n_max", sweep_opts.n_max, "Largest size")->required();
  sweep_cmd->add_option("--seed", sweep_opts.seed, "Random corpus seed")->capture_default_str();
  sweep_cmd->add_option("--per-n", sweep_opts.random_per_n, "Random expressions per size")->capture_default_str();
  sweep_cmd->add_option("--max-subsets", sweep_opts.max_subsets, "Subset construction cap")->capture_default_str();
  sweep_cmd->add_option("--max-len", sweep_opts.max_len, "Word length for agreement checks")->capture_default_str();
  sweep_cmd->add_option("--csv", sweep_csv_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*parse_cmd) return cmd_parse(source, common);
    if (*nfa_cmd) return cmd_nfa(source, common);
    if (*dfa_cmd) return cmd_determinize(source, common, false);
    if (*min_cmd) return cmd_determinize(source, common, true);
    if (*wit_cmd) return cmd_witness(witness, common);
    if (*landau_cmd) return cmd_landau(landau_n, landau_range);
    if (*sweep_cmd) {
      if (sweep_opts.n_min > sweep_opts.n_max) throw InputError("n_min must not exceed n_max");
      emit(sweep_csv(sweep_opts), sweep_csv_path);
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "regdet: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "regdet: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvariantViolation& e) {
    std::cerr << "regdet: invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "regdet: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
