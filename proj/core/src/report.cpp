#include "regdet/report.hpp"

#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "regdet/error.hpp"
#include "regdet/random_regex.hpp"

namespace regdet {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

template <class T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "";
  std::ostringstream out;
  out << *v;
  return out.str();
}

void fill_bounds(BoundReport& r, const SymbolPartition& partition) {
  r.n1 = partition.n1;
  r.remembers_last_symbol = partition.remembers_last_symbol;
  if (r.remembers_last_symbol) r.first_bound = first_method_bound(partition, r.nfa_states);
  r.second_bound = second_method_bound(r.nfa_states, r.n1);
  r.upper_asymptotic = upper_asymptotic(r.n);
  r.lower_asymptotic = lower_asymptotic(r.n);
  r.landau_asymptotic = landau_asymptotic(r.n);
}

}  // namespace

std::string csv_header() {
  return "kind,label,n,regex_width,nfa_states,n1,remembers_last_symbol,reachable_subsets,"
         "minimal_states,first_method_bound,second_method_bound,tail_allowance,lower_bound,"
         "upper_asymptotic_o1_0,lower_asymptotic_o1_0,landau_asymptotic_o1_0,status";
}

std::string to_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << r.kind << ',' << quote(r.label) << ',' << r.n << ',' << r.regex_width << ',' << r.nfa_states << ','
      << r.n1 << ',' << (r.remembers_last_symbol ? 1 : 0) << ',' << opt(r.reachable_subsets) << ','
      << opt(r.minimal_states) << ',' << r.first_bound << ',' << r.second_bound << ','
      << kTailAllowanceLabel << ',' << opt(r.lower_bound) << ',' << sci(r.upper_asymptotic) << ','
      << sci(r.lower_asymptotic) << ',' << sci(r.landau_asymptotic) << ',' << r.status;
  return out.str();
}

void check_chain(const BoundReport& r) {
  if (!r.remembers_last_symbol || !r.reachable_subsets) return;
  const std::size_t reachable = *r.reachable_subsets;
  const auto fail = [&](const std::string& what) {
    throw InvariantViolation(r.kind + " row '" + r.label + "': " + what);
  };
  if (r.minimal_states && *r.minimal_states > reachable) {
    fail("minimal DFA (" + std::to_string(*r.minimal_states) + ") larger than reachable subsets (" +
         std::to_string(reachable) + ")");
  }
  if (BigInt(reachable) > r.first_bound) {
    fail("reachable subsets " + std::to_string(reachable) + " exceed the first-method bound " +
         r.first_bound.str());
  }
  if (BigInt(reachable) > r.second_bound) {
    fail("reachable subsets " + std::to_string(reachable) + " exceed the second-method bound " +
         r.second_bound.str() + " (" + std::string(kTailAllowanceLabel) + ")");
  }
}

PipelineResult run_pipeline(const Regex& e, const Alphabet& alphabet, const PipelineOptions& options) {
  Nfa nfa = build_nfa(e, alphabet);
  Determinization det = determinize(nfa, DeterminizeOptions{options.max_subsets});
  Dfa minimal = minimize(det.dfa);

  BoundReport r;
  r.kind = "regex";
  r.label = to_string(e, alphabet);
  r.n = e.width();
  r.regex_width = e.width();
  r.nfa_states = nfa.state_count();
  r.reachable_subsets = det.stats.total;
  r.minimal_states = minimal.state_count();
  fill_bounds(r, symbol_partition(nfa));
  return PipelineResult{std::move(nfa), std::move(det.dfa), std::move(det.stats), std::move(minimal),
                        std::move(r)};
}

BoundReport witness_report(const Certification& c, std::size_t n) {
  BoundReport r;
  r.kind = "witness";
  r.label = c.spec.to_string();
  r.n = n;
  r.regex_width = c.regex_width;
  r.nfa_states = c.witness_nfa_states;
  r.lower_bound = c.lower_bound;
  fill_bounds(r, symbol_partition(witness_nfa(c.spec)));
  if (c.status != CertificationStatus::BudgetExceeded) {
    r.reachable_subsets = c.reachable_subsets;
    r.minimal_states = c.minimal_states;
  }
  r.status = std::string(to_string(c.status));
  return r;
}

std::vector<BoundReport> sweep(const SweepOptions& options) {
  if (options.n_max > kSweepMaxN) {
    throw InputError("sweep: n_max exceeds the cap of " + std::to_string(kSweepMaxN));
  }
  const Alphabet sigma = witness_alphabet();
  std::map<std::string, Certification> certified;
  std::vector<BoundReport> rows;
  for (std::size_t n = options.n_min; n <= options.n_max; ++n) {
    if (n >= 6) {
      const WitnessSpec spec = select_primes(n);
      auto it = certified.find(spec.to_string());
      if (it == certified.end()) {
        it = certified.emplace(spec.to_string(), certify(spec, {options.max_subsets, options.max_len})).first;
      }
      BoundReport r = witness_report(it->second, n);
      check_chain(r);
      rows.push_back(std::move(r));
    }
    std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ull + n);
    for (std::size_t i = 0; i < options.random_per_n; ++i) {
      const Regex e = random_regex(rng, sigma.size(), n);
      BoundReport r;
      try {
        r = run_pipeline(e, sigma, {options.max_subsets}).report;
      } catch (const BudgetExceeded&) {
        const Nfa nfa = build_nfa(e, sigma);
        r.label = to_string(e, sigma);
        r.n = n;
        r.regex_width = e.width();
        r.nfa_states = nfa.state_count();
        fill_bounds(r, symbol_partition(nfa));
        r.status = "budget_exceeded";
      }
      r.kind = "random";
      check_chain(r);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::string sweep_csv(const SweepOptions& options) {
  std::string out = csv_header() + "\n";
  for (const BoundReport& r : sweep(options)) out += to_csv_row(r) + "\n";
  return out;
}

}  // namespace regdet
