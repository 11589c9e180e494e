#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "ctxalg/error.hpp"
#include "ctxalg/formula.hpp"

namespace ctxalg {

namespace detail {

// Recursive-descent parser for the formula grammar
//
//   or_expr  := and_expr ('|' and_expr)*
//   and_expr := not_expr ('&' not_expr)*
//   not_expr := '~' not_expr | primary
//   primary  := 'true' | 'false' | IDENT | '(' or_expr ')'
//
// '&' and '|' are left-associative; whitespace is insignificant.
class FormulaParser {
public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_or();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "end of input");
    return f;
  }

private:
  Formula parse_or() {
    Formula f = parse_and();
    while (peek() == '|') {
      ++pos_;
      f = Formula::disjunction(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_not();
    while (peek() == '&') {
      ++pos_;
      f = Formula::conjunction(f, parse_not());
    }
    return f;
  }

  Formula parse_not() {
    if (peek() == '~') {
      ++pos_;
      return Formula::negation(parse_not());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Formula f = parse_or();
      if (peek() != ')') throw ParseError(pos_, "')'");
      ++pos_;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_')
          ++pos_;
        else
          break;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "true") return Formula::top();
      if (name == "false") return Formula::bot();
      return Formula::atom(std::move(name));
    }
    throw ParseError(pos_, "a formula");
  }

  // Skips whitespace and returns the next character, or '\0' at the end.
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses formula text. Throws ParseError with the byte offset of the first
/// unusable character and the token that was expected there.
inline Formula parse_formula(std::string_view text) {
  return detail::FormulaParser(text).parse();
}

}  // namespace ctxalg
