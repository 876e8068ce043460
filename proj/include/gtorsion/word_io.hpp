#pragma once

// Text form of words.
//
//   word   = "1" | term { ws term } ;
//   term   = atom [ "^" int ] ;
//   atom   = ident | "(" word ")" | "[" word "," word "]" ;
//   ident  = letter { letter | digit | "_" } ;
//   int    = ["-"] digit { digit } ;
//
// Juxtaposition is multiplication, [u,v] = u^-1 v^-1 u v. Formatting collects
// maximal powers, separates terms by single spaces and prints "1" for the
// identity, so that parse_word(format_word(w)) == w.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtorsion/error.hpp"
#include "gtorsion/word.hpp"

namespace gtorsion {

namespace detail {

class WordParser {
 public:
  // With alphabet == nullptr every well-formed identifier is accepted and
  // recorded in `seen`.
  WordParser(std::string_view text, Alphabet const* alphabet)
      : text_(text), alphabet_(alphabet) {}

  Word parse() {
    skip_ws();
    if (at_end()) {
      fail("empty input; write 1 for the identity");
    }
    Word w = sequence();
    skip_ws();
    if (!at_end()) {
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    return w;
  }

  Alphabet const& seen() const noexcept { return seen_; }

 private:
  Word sequence() {
    Word w;
    bool any = false;
    for (;;) {
      skip_ws();
      if (at_end() || peek() == ')' || peek() == ']' || peek() == ',') {
        break;
      }
      w *= term();
      any = true;
    }
    if (!any) {
      fail("expected a word");
    }
    return w;
  }

  Word term() {
    Word a = atom();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      a = a.pow(integer());
    }
    return a;
  }

  Word atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = sequence();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = sequence();
      expect(',');
      Word v = sequence();
      expect(']');
      return commutator(u, v);
    }
    if (c == '1' && (pos_ + 1 == text_.size() || !is_digit(text_[pos_ + 1]))) {
      ++pos_;
      return Word();
    }
    return identifier();
  }

  Word identifier() {
    std::size_t start = pos_;
    while (!at_end() && (is_alpha(peek()) || is_digit(peek()) || peek() == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      fail(std::string("expected an identifier, found '") + text_[pos_] + "'");
    }
    std::string name(text_.substr(start, pos_ - start));
    if (!Generator::valid_name(name)) {
      pos_ = start;
      fail("identifier '" + name + "' must start with a letter");
    }
    Generator g(name);
    if (alphabet_ != nullptr && !alphabet_->contains(g)) {
      pos_ = start;
      fail("unknown generator '" + name + "'");
    }
    seen_.insert(g);
    return Word::of(g);
  }

  long integer() {
    std::size_t start = pos_;
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (at_end() || !is_digit(peek())) {
      fail("expected an integer exponent");
    }
    long value = 0;
    while (!at_end() && is_digit(peek())) {
      if (value > (std::numeric_limits<int>::max() - (peek() - '0')) / 10) {
        pos_ = start;
        fail("exponent out of range");
      }
      value = value * 10 + (peek() - '0');
      ++pos_;
    }
    return negative ? -value : value;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n'
                         || peek() == '\r')) {
      ++pos_;
    }
  }

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return text_[pos_]; }

  [[noreturn]] void fail(std::string const& msg) const {
    throw ParseError(msg, pos_);
  }

  static bool is_alpha(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  }
  static bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

  std::string_view text_;
  Alphabet const* alphabet_;
  Alphabet seen_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Word parse_word(std::string_view text,
                       std::optional<Alphabet> const& alphabet = std::nullopt) {
  detail::WordParser p(text, alphabet ? &*alphabet : nullptr);
  return p.parse();
}

inline std::string format_word(Word const& w) {
  if (w.is_identity()) {
    return "1";
  }
  std::string out;
  auto const& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) {
      ++j;
    }
    long power = static_cast<long>(j - i) * ls[i].sign();
    if (!out.empty()) {
      out += ' ';
    }
    out += ls[i].gen().name();
    if (power != 1) {
      out += '^' + std::to_string(power);
    }
    i = j;
  }
  return out;
}

}  // namespace gtorsion
