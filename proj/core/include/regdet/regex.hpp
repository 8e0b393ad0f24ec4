#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regdet/alphabet.hpp"

namespace regdet {

/// Immutable regular expression tree.
///
/// Nodes are shared: copying a Regex is cheap and subtrees produced by
/// repetition sugar point to the same node. Alphabetic width and
/// nullability are computed once at construction.
class Regex {
 public:
  enum class Kind { Symbol, EmptySet, Epsilon, Concat, Union, Star };

  static Regex symbol(Symbol s);
  static Regex empty_set();
  static Regex epsilon();
  static Regex concat(Regex left, Regex right);
  static Regex alt(Regex left, Regex right);
  static Regex star(Regex inner);
  /// m-fold left-associated concatenation; repeat(e, 0) is ε.
  static Regex repeat(const Regex& e, std::size_t m);

  Kind kind() const noexcept { return node_->kind; }
  Symbol symbol_index() const noexcept { return node_->symbol; }
  /// Children; valid only for Concat/Union (left, right) and Star (inner).
  Regex left() const { return Regex(node_->left); }
  Regex right() const { return Regex(node_->right); }
  Regex inner() const { return Regex(node_->left); }

  /// Number of alphabet-symbol occurrences.
  std::size_t width() const noexcept { return node_->width; }
  /// True iff the empty word is in the language.
  bool nullable() const noexcept { return node_->nullable; }

  /// Identity of the shared node, usable as a memoization key.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Regex& a, const Regex& b);

 private:
  struct Node {
    Kind kind;
    Symbol symbol = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t width = 0;
    bool nullable = false;
  };

  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses the textual syntax.
///
///   alt     := concat ('|' concat)*
///   concat  := postfix postfix*
///   postfix := atom ('*' | '{' digits '}')*
///   atom    := symbol | 'ε' | '()' | '∅' | '0' | '(' alt ')'
///
/// Whitespace is ignored. Concatenation and union associate to the left.
/// Throws ParseError.
Regex parse(std::string_view text, const Alphabet& alphabet);

/// Largest m accepted in `e{m}`.
inline constexpr std::size_t kMaxRepetition = 4096;

/// Fully parenthesized form that parse() reads back to an equal tree
/// (up to the expansion of repetition sugar).
std::string to_string(const Regex& e, const Alphabet& alphabet);

inline std::size_t width(const Regex& e) { return e.width(); }

/// Membership by dynamic programming over spans of `word`. Does not build
/// any automaton.
bool matches(const Regex& e, const Word& word);

/// Structural equality (same tree shape and symbols).
bool operator==(const Regex& a, const Regex& b);

/// All words of length 0..max_len in length-then-lexicographic order.
class WordEnumerator {
 public:
  WordEnumerator(std::size_t alphabet_size, std::size_t max_len);

  /// Writes the next word into `out`; returns false when exhausted.
  bool next(Word& out);

 private:
  std::size_t alphabet_size_;
  std::size_t max_len_;
  Word current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len);

}  // namespace regdet
