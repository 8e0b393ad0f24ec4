#include "regdet/alphabet.hpp"

#include <algorithm>
#include <array>

#include "regdet/error.hpp"

namespace regdet {

namespace {

constexpr std::array<std::string_view, 11> kReserved = {
    "|", "*", "(", ")", "{", "}", "0", "#", ",", "ε", "∅"};

std::size_t code_point_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;  // stray continuation byte; treated as its own unit
}

void check_name(const std::string& name) {
  if (split_code_points(name).size() != 1) {
    throw InputError("symbol name '" + name + "' must be a single character");
  }
  const auto c = static_cast<unsigned char>(name.front());
  if (name.size() == 1 && (c <= 0x20 || c == 0x7F)) {
    throw InputError("symbol names must be printable, non-space characters");
  }
  if (std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end()) {
    throw InputError("'" + name + "' is reserved and cannot be a symbol name");
  }
}

}  // namespace

std::vector<std::string> split_code_points(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    const std::size_t len =
        std::min(code_point_length(static_cast<unsigned char>(text[i])), text.size() - i);
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InputError("alphabet must contain at least one symbol");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    check_name(names_[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[j] == names_[i]) throw InputError("duplicate symbol '" + names_[i] + "'");
    }
  }
}

Alphabet Alphabet::parse(std::string_view spec) {
  std::vector<std::string> names;
  if (spec.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= spec.size()) {
      const std::size_t comma = std::min(spec.find(',', start), spec.size());
      names.emplace_back(spec.substr(start, comma - start));
      start = comma + 1;
    }
  } else {
    names = split_code_points(spec);
  }
  return Alphabet(std::move(names));
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

std::string Alphabet::format(const Word& word) const {
  std::string out;
  for (Symbol s : word) out += name(s);
  return out;
}

Word Alphabet::word(std::string_view text) const {
  Word out;
  for (const auto& cp : split_code_points(text)) {
    auto s = find(cp);
    if (!s) throw InputError("unknown symbol '" + cp + "'");
    out.push_back(*s);
  }
  return out;
}

}  // namespace regdet
