#include "regdet/witness.hpp"

#include <numeric>
#include <optional>

#include <boost/math/special_functions/prime.hpp>

#include "regdet/error.hpp"

namespace regdet {

namespace {

constexpr Symbol kA = 0;
constexpr Symbol kB = 1;

bool is_prime(std::size_t x) {
  if (x < 2) return false;
  for (std::size_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

// i-th odd prime, 1-based: 3, 5, 7, 11, ...
unsigned odd_prime(std::size_t i) { return boost::math::prime(static_cast<unsigned>(i)); }

std::size_t offset_of(const WitnessSpec& spec, std::size_t i) {
  std::size_t offset = 1;
  for (std::size_t c = 0; c < i; ++c) offset += 2 * spec.cycles()[c] - 2;
  return offset;
}

// Inverse of a modulo m, or -1 when gcd(a, m) != 1.
long long inverse_mod(long long a, long long m) {
  long long old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    const long long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return -1;
  return ((old_s % m) + m) % m;
}

}  // namespace

WitnessSpec::WitnessSpec(std::vector<unsigned> cycles) : cycles_(std::move(cycles)) {
  if (cycles_.empty()) throw InputError("a witness needs at least one cycle");
  if (cycles_.front() != 3) throw InputError("the first cycle length must be 3");
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (cycles_[i] < 3) throw InputError("cycle lengths must be at least 3");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(cycles_[i], cycles_[j]) != 1) {
        throw InputError("cycle lengths " + std::to_string(cycles_[j]) + " and " +
                         std::to_string(cycles_[i]) + " are not coprime");
      }
    }
  }
}

std::size_t WitnessSpec::cycle_sum() const noexcept {
  return std::accumulate(cycles_.begin(), cycles_.end(), std::size_t{0});
}

BigInt WitnessSpec::lower_bound() const {
  BigInt product = 1;
  for (unsigned p : cycles_) product *= pow2(p) - 2;
  return product;
}

std::string WitnessSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cycles_[i]);
  }
  return out;
}

Alphabet witness_alphabet() { return Alphabet({"a", "b"}); }

Regex witness_regex(const WitnessSpec& spec) {
  const Regex a = Regex::symbol(kA);
  const Regex b = Regex::symbol(kB);
  const Regex step = Regex::concat(Regex::alt(b, Regex::epsilon()), a);
  std::optional<Regex> choice;
  for (unsigned pi : spec.cycles()) {
    Regex beta = Regex::star(Regex::concat(Regex::concat(a, Regex::repeat(step, pi - 2)), a));
    choice = choice ? Regex::alt(*choice, beta) : beta;
  }
  return Regex::star(Regex::concat(Regex::concat(a, *choice), b));
}

std::string witness_regex_text(const WitnessSpec& spec) {
  std::string body;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    if (i) body += '|';
    body += "(a((b|ε)a){" + std::to_string(spec.cycles()[i] - 2) + "}a)*";
  }
  return "(a(" + body + ")b)*";
}

StateId witness_hat_state() { return 0; }

StateId witness_cycle_state(const WitnessSpec& spec, std::size_t i, std::size_t j) {
  return static_cast<StateId>(offset_of(spec, i) + j);
}

StateId witness_side_state(const WitnessSpec& spec, std::size_t i, std::size_t j) {
  return static_cast<StateId>(offset_of(spec, i) + spec.cycles()[i] + j - 1);
}

Nfa witness_nfa(const WitnessSpec& spec) {
  Nfa nfa(witness_alphabet(), spec.nfa_states());
  const StateId hat = witness_hat_state();
  nfa.add_initial(hat);
  nfa.add_accepting(hat);
  nfa.set_label(hat, "q̂");
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const unsigned pi = spec.cycles()[i];
    const std::string tag = std::to_string(i + 1) + ".";
    for (unsigned j = 0; j < pi; ++j) {
      const StateId q = witness_cycle_state(spec, i, j);
      nfa.set_label(q, "q" + tag + std::to_string(j));
      nfa.add_transition(q, kA, witness_cycle_state(spec, i, (j + 1) % pi));
    }
    nfa.add_transition(hat, kA, witness_cycle_state(spec, i, 0));
    nfa.add_transition(witness_cycle_state(spec, i, 0), kB, hat);
    for (unsigned j = 1; j + 1 < pi; ++j) {
      const StateId r = witness_side_state(spec, i, j);
      nfa.set_label(r, "r" + tag + std::to_string(j));
      nfa.add_transition(witness_cycle_state(spec, i, j), kB, r);
      nfa.add_transition(r, kA, witness_cycle_state(spec, i, j + 1));
    }
  }
  return nfa;
}

WitnessSpec select_primes(std::size_t budget) {
  if (budget < 6) throw InputError("witness budget must be at least 6");
  const auto size_of = [](std::size_t sum, std::size_t k) { return 2 * sum - 2 * k + 2; };

  // Largest k such that the first k odd primes fit.
  std::size_t k = 1;
  std::size_t sum = odd_prime(1);
  while (size_of(sum + odd_prime(k + 1), k + 1) <= budget) {
    sum += odd_prime(k + 1);
    ++k;
  }

  for (; k >= 2; --k) {
    std::vector<unsigned> cycles;
    std::size_t prefix = 0;
    for (std::size_t i = 1; i < k; ++i) {
      cycles.push_back(odd_prime(i));
      prefix += odd_prime(i);
    }
    // 2*prefix + 2p - 2k + 2 <= budget
    const std::size_t fixed = 2 * prefix + 2;
    if (fixed + 2 * odd_prime(k) > budget + 2 * k) continue;
    for (std::size_t p = (budget + 2 * k - fixed) / 2; p >= odd_prime(k); --p) {
      if (is_prime(p)) {
        cycles.push_back(static_cast<unsigned>(p));
        return WitnessSpec(std::move(cycles));
      }
    }
  }
  return WitnessSpec({3});
}

LowerBound half_product_check(std::span<const unsigned> cycles) {
  LowerBound r;
  r.product = 1;
  std::size_t sum = 0;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i] < 3) throw InputError("cycle lengths must be at least 3");
    for (std::size_t j = 0; j < i; ++j) {
      if (cycles[i] == cycles[j]) throw InputError("cycle lengths must be distinct");
    }
    r.product *= pow2(cycles[i]) - 2;
    sum += cycles[i];
  }
  r.half_power = pow2(sum) / 2;
  r.half_product_holds = r.product >= r.half_power;
  return r;
}

LowerBound lower_bound(const WitnessSpec& spec) { return half_product_check(spec.cycles()); }

ShiftVector solve_shift(std::span<const unsigned> moduli, std::span<const unsigned> residues) {
  if (moduli.size() != residues.size()) throw InputError("one residue per modulus is required");
  BigInt x = 0;
  BigInt modulus = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const long long m = moduli[i];
    if (m < 1) throw InputError("moduli must be positive");
    if (residues[i] >= moduli[i]) throw InputError("residue out of range");
    // x + modulus * t ≡ d (mod m)
    const long long mod_m = static_cast<long long>(modulus % m);
    const long long inv = inverse_mod(mod_m, m);
    if (inv < 0) throw InputError("moduli are not pairwise coprime");
    const long long x_m = static_cast<long long>(x % m);
    const long long t = (((static_cast<long long>(residues[i]) - x_m) % m + m) % m) * inv % m;
    x += modulus * t;
    modulus *= m;
  }
  return ShiftVector{std::vector<unsigned>(residues.begin(), residues.end()), x};
}

Word shift_word(const WitnessSpec& spec, std::span<const unsigned> residues) {
  const ShiftVector shift = solve_shift(spec.cycles(), residues);
  constexpr std::size_t kMaxShift = std::size_t{1} << 24;
  if (shift.length > kMaxShift) throw InputError("shift length too large to materialize");
  return Word(static_cast<std::size_t>(shift.length), kA);
}

std::string_view to_string(CertificationStatus status) {
  switch (status) {
    case CertificationStatus::Certified: return "certified";
    case CertificationStatus::BelowLowerBound: return "below_lower_bound";
    case CertificationStatus::LanguageMismatch: return "language_mismatch";
    case CertificationStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

Certification certify(const WitnessSpec& spec, const CertifyOptions& options) {
  Certification c(spec);
  const Alphabet sigma = witness_alphabet();
  const Regex regex = witness_regex(spec);
  const Nfa built = build_nfa(regex, sigma);
  const Nfa nfa = witness_nfa(spec);
  c.regex_width = regex.width();
  c.built_nfa_states = built.state_count();
  c.witness_nfa_states = nfa.state_count();
  c.n1 = symbol_partition(nfa).n1;
  c.lower_bound = spec.lower_bound();

  c.bounded_agreement = true;
  WordEnumerator words(sigma.size(), options.max_len);
  for (Word w; c.bounded_agreement && words.next(w);) {
    const bool expected = matches(regex, w);
    c.bounded_agreement = nfa.accepts(w) == expected && built.accepts(w) == expected;
  }

  try {
    const DeterminizeOptions budget{options.max_subsets};
    const Determinization from_nfa = determinize(nfa, budget);
    c.reachable_subsets = from_nfa.stats.total;
    const Dfa minimal = minimize(from_nfa.dfa);
    c.minimal_states = minimal.state_count();
    const Dfa from_regex = minimize(determinize(built, budget).dfa);
    c.dfa_equivalent = equivalent(minimal, from_regex);
  } catch (const BudgetExceeded&) {
    c.status = CertificationStatus::BudgetExceeded;
    return c;
  }

  if (!c.bounded_agreement || !c.dfa_equivalent) {
    c.status = CertificationStatus::LanguageMismatch;
  } else if (c.minimal_states < c.lower_bound) {
    c.status = CertificationStatus::BelowLowerBound;
  } else {
    c.status = CertificationStatus::Certified;
  }
  return c;
}

}  // namespace regdet
