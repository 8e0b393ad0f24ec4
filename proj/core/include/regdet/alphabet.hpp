#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace regdet {

using Symbol = std::uint32_t;
using StateId = std::uint32_t;
using Word = std::vector<Symbol>;

/// Ordered set of symbol names. Symbol i is the i-th name.
///
/// Each name is a single printable code point (UTF-8) that is not one of the
/// regex metacharacters `| * ( ) { } 0`, `ε`, `∅` or `#`.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  /// Accepts "a,b,c" or the compact form "abc".
  static Alphabet parse(std::string_view spec);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Symbol> find(std::string_view name) const;

  /// Renders a word by concatenating symbol names; the empty word is "".
  std::string format(const Word& word) const;
  /// Inverse of format(); throws InputError on unknown symbols.
  Word word(std::string_view text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Splits UTF-8 text into code points.
std::vector<std::string> split_code_points(std::string_view text);

}  // namespace regdet
