#include "regdet/regex.hpp"

#include <charconv>
#include <unordered_map>

#include "regdet/error.hpp"

namespace regdet {

Regex Regex::symbol(Symbol s) {
  return Regex(std::make_shared<const Node>(Node{Kind::Symbol, s, nullptr, nullptr, 1, false}));
}

Regex Regex::empty_set() {
  return Regex(std::make_shared<const Node>(Node{Kind::EmptySet, 0, nullptr, nullptr, 0, false}));
}

Regex Regex::epsilon() {
  return Regex(std::make_shared<const Node>(Node{Kind::Epsilon, 0, nullptr, nullptr, 0, true}));
}

Regex Regex::concat(Regex left, Regex right) {
  const std::size_t w = left.width() + right.width();
  const bool n = left.nullable() && right.nullable();
  return Regex(std::make_shared<const Node>(
      Node{Kind::Concat, 0, std::move(left.node_), std::move(right.node_), w, n}));
}

Regex Regex::alt(Regex left, Regex right) {
  const std::size_t w = left.width() + right.width();
  const bool n = left.nullable() || right.nullable();
  return Regex(std::make_shared<const Node>(
      Node{Kind::Union, 0, std::move(left.node_), std::move(right.node_), w, n}));
}

Regex Regex::star(Regex inner) {
  const std::size_t w = inner.width();
  return Regex(std::make_shared<const Node>(Node{Kind::Star, 0, std::move(inner.node_), nullptr, w, true}));
}

Regex Regex::repeat(const Regex& e, std::size_t m) {
  if (m == 0) return epsilon();
  Regex out = e;
  for (std::size_t i = 1; i < m; ++i) out = concat(out, e);
  return out;
}

bool operator==(const Regex& a, const Regex& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Regex::Kind::Symbol:
      return a.symbol_index() == b.symbol_index();
    case Regex::Kind::EmptySet:
    case Regex::Kind::Epsilon:
      return true;
    case Regex::Kind::Star:
      return a.inner() == b.inner();
    case Regex::Kind::Concat:
    case Regex::Kind::Union:
      return a.width() == b.width() && a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Regex run() {
    skip_space();
    if (at_end()) fail(ParseError::Kind::Syntax, "empty expression");
    Regex e = parse_alt();
    skip_space();
    if (!at_end()) {
      if (peek() == ")") fail(ParseError::Kind::Syntax, "unbalanced ')'");
      fail(ParseError::Kind::Syntax, "unexpected '" + std::string(peek()) + "'");
    }
    return e;
  }

 private:
  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(ParseError::Kind kind, const std::string& msg) const {
    throw ParseError(kind, pos_, msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  // Current code point (empty at end of input).
  std::string_view peek() const {
    if (at_end()) return {};
    const auto lead = static_cast<unsigned char>(text_[pos_]);
    std::size_t len = 1;
    if ((lead >> 5) == 0x6) len = 2;
    else if ((lead >> 4) == 0xE) len = 3;
    else if ((lead >> 3) == 0x1E) len = 4;
    return text_.substr(pos_, std::min(len, text_.size() - pos_));
  }

  void advance() { pos_ += peek().size(); }

  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                         text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool starts_atom() {
    skip_space();
    if (at_end()) return false;
    const auto c = peek();
    return c != "|" && c != ")" && c != "*" && c != "{" && c != "}";
  }

  Regex parse_alt() {
    Regex e = parse_concat();
    skip_space();
    while (!at_end() && peek() == "|") {
      advance();
      e = Regex::alt(std::move(e), parse_concat());
      skip_space();
    }
    return e;
  }

  Regex parse_concat() {
    if (!starts_atom()) {
      if (at_end()) fail(ParseError::Kind::Syntax, "expected an expression");
      fail(ParseError::Kind::Syntax, "expected an expression before '" + std::string(peek()) + "'");
    }
    Regex e = parse_postfix();
    while (starts_atom()) e = Regex::concat(std::move(e), parse_postfix());
    return e;
  }

  Regex parse_postfix() {
    Regex e = parse_atom();
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() == "*") {
        advance();
        e = Regex::star(std::move(e));
      } else if (peek() == "{") {
        e = Regex::repeat(e, parse_count());
      } else {
        break;
      }
    }
    return e;
  }

  std::size_t parse_count() {
    const std::size_t open = pos_;
    advance();  // '{'
    const std::size_t digits_begin = pos_;
    while (!at_end() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == digits_begin) {
      fail(ParseError::Kind::BadRepetition, "repetition count must be a non-negative integer");
    }
    std::size_t m = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + digits_begin, text_.data() + pos_, m);
    if (ec != std::errc{} || m > kMaxRepetition) {
      pos_ = digits_begin;
      fail(ParseError::Kind::BadRepetition,
           "repetition count exceeds " + std::to_string(kMaxRepetition));
    }
    if (at_end() || text_[pos_] != '}') {
      fail(ParseError::Kind::BadRepetition, "unterminated repetition opened at " + std::to_string(open));
    }
    ++pos_;
    return m;
  }

  Regex parse_atom() {
    skip_space();
    const auto c = peek();
    if (c == "(") {
      advance();
      skip_space();
      if (!at_end() && peek() == ")") {
        advance();
        return Regex::epsilon();
      }
      Regex e = parse_alt();
      skip_space();
      if (at_end() || peek() != ")") fail(ParseError::Kind::Syntax, "expected ')'");
      advance();
      return e;
    }
    if (c == "ε") {
      advance();
      return Regex::epsilon();
    }
    if (c == "∅" || c == "0") {
      advance();
      return Regex::empty_set();
    }
    if (auto s = alphabet_.find(c)) {
      advance();
      return Regex::symbol(*s);
    }
    fail(ParseError::Kind::UnknownSymbol, "unknown symbol '" + std::string(c) + "'");
  }
};

void print(const Regex& e, const Alphabet& alphabet, std::string& out) {
  switch (e.kind()) {
    case Regex::Kind::Symbol:
      out += alphabet.name(e.symbol_index());
      return;
    case Regex::Kind::EmptySet:
      out += "∅";
      return;
    case Regex::Kind::Epsilon:
      out += "ε";
      return;
    case Regex::Kind::Concat:
      out += '(';
      print(e.left(), alphabet, out);
      print(e.right(), alphabet, out);
      out += ')';
      return;
    case Regex::Kind::Union:
      out += '(';
      print(e.left(), alphabet, out);
      out += '|';
      print(e.right(), alphabet, out);
      out += ')';
      return;
    case Regex::Kind::Star:
      out += '(';
      print(e.inner(), alphabet, out);
      out += "*)";
      return;
  }
}

// Span table: cell (i, j) with i <= j says whether word[i, j) is in L(e).
class SpanMatcher {
 public:
  explicit SpanMatcher(const Word& word) : word_(word), n_(word.size() + 1) {}

  const std::vector<char>& table(const Regex& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    std::vector<char> t(n_ * n_, 0);
    const std::size_t len = word_.size();
    switch (e.kind()) {
      case Regex::Kind::Symbol:
        for (std::size_t i = 0; i < len; ++i) at(t, i, i + 1) = word_[i] == e.symbol_index();
        break;
      case Regex::Kind::EmptySet:
        break;
      case Regex::Kind::Epsilon:
        for (std::size_t i = 0; i <= len; ++i) at(t, i, i) = 1;
        break;
      case Regex::Kind::Union: {
        const auto& l = table(e.left());
        const auto& r = table(e.right());
        for (std::size_t k = 0; k < t.size(); ++k) t[k] = l[k] || r[k];
        break;
      }
      case Regex::Kind::Concat: {
        const auto& l = table(e.left());
        const auto& r = table(e.right());
        for (std::size_t i = 0; i <= len; ++i) {
          for (std::size_t j = i; j <= len; ++j) {
            bool hit = false;
            for (std::size_t k = i; k <= j && !hit; ++k) hit = get(l, i, k) && get(r, k, j);
            at(t, i, j) = hit;
          }
        }
        break;
      }
      case Regex::Kind::Star: {
        const auto& in = table(e.inner());
        // Least fixed point: a nonempty first factor followed by a star span.
        for (std::size_t j = 0; j <= len; ++j) {
          at(t, j, j) = 1;
          for (std::size_t i = j; i-- > 0;) {
            bool hit = false;
            for (std::size_t k = i + 1; k <= j && !hit; ++k) hit = get(in, i, k) && get(t, k, j);
            at(t, i, j) = hit;
          }
        }
        break;
      }
    }
    return memo_.emplace(e.id(), std::move(t)).first->second;
  }

  bool whole(const Regex& e) { return get(table(e), 0, word_.size()); }

 private:
  char& at(std::vector<char>& t, std::size_t i, std::size_t j) const { return t[i * n_ + j]; }
  char get(const std::vector<char>& t, std::size_t i, std::size_t j) const { return t[i * n_ + j]; }

  const Word& word_;
  std::size_t n_;
  std::unordered_map<const void*, std::vector<char>> memo_;
};

}  // namespace

Regex parse(std::string_view text, const Alphabet& alphabet) { return Parser(text, alphabet).run(); }

std::string to_string(const Regex& e, const Alphabet& alphabet) {
  std::string out;
  print(e, alphabet, out);
  return out;
}

bool matches(const Regex& e, const Word& word) {
  SpanMatcher m(word);
  return m.whole(e);
}

// ---------------------------------------------------------------------------

WordEnumerator::WordEnumerator(std::size_t alphabet_size, std::size_t max_len)
    : alphabet_size_(alphabet_size), max_len_(max_len) {}

bool WordEnumerator::next(Word& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    current_.clear();
    out = current_;
    return true;
  }
  if (alphabet_size_ == 0) {
    done_ = true;
    return false;
  }
  // Odometer increment; on overflow move to the next length.
  std::size_t i = current_.size();
  while (i > 0 && current_[i - 1] + 1 == alphabet_size_) {
    current_[i - 1] = 0;
    --i;
  }
  if (i == 0) {
    if (current_.size() == max_len_) {
      done_ = true;
      return false;
    }
    current_.assign(current_.size() + 1, 0);
  } else {
    ++current_[i - 1];
  }
  out = current_;
  return true;
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out;
  WordEnumerator it(alphabet.size(), max_len);
  Word w;
  while (it.next(w)) out.push_back(w);
  return out;
}

}  // namespace regdet
