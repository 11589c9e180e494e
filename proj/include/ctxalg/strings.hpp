#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ctxalg/error.hpp"

namespace ctxalg {

using Symbol = std::string;

/// A string over a symbol alphabet; the empty vector is the empty string ε.
/// In text form a Str is written as space-separated symbols, ε as "".
using Str = std::vector<Symbol>;

/// The pair of strings surrounding an occurrence.
struct Context {
  Str left;
  Str right;

  auto operator<=>(const Context&) const = default;
};

inline Str parse_str(const std::string& text) {
  Str out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline std::string to_string(const Str& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ' ';
    out += x[i];
  }
  return out;
}

inline Str concat(const Str& x, const Str& y) {
  Str out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

/// Length-then-lexicographic order, the enumeration order of the library.
inline bool length_lex_less(const Str& a, const Str& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// A symbol is any nonempty whitespace-free token, so boundary markers such
/// as <bos> are usable alongside plain identifiers.
inline bool is_valid_symbol(const Symbol& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

/// A declared finite symbol set with its declaration order.
class Alphabet {
public:
  explicit Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (const auto& s : symbols_) {
      if (!is_valid_symbol(s)) throw InputError("invalid symbol '" + s + "'");
      if (!lookup_.insert(s).second) throw InputError("duplicate symbol '" + s + "'");
    }
  }

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  bool contains(const Symbol& s) const { return lookup_.count(s) != 0; }

  bool contains(const Str& x) const {
    return std::all_of(x.begin(), x.end(), [this](const Symbol& s) { return contains(s); });
  }

  void require(const Str& x) const {
    for (const auto& s : x)
      if (!contains(s)) throw InputError("symbol '" + s + "' is not in the alphabet");
  }

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
  std::vector<Symbol> symbols_;
  std::set<Symbol> lookup_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<Symbol> symbols) {
  return std::make_shared<const Alphabet>(std::move(symbols));
}

namespace detail {

inline void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return;
  if (a && b && *a == *b) return;
  throw InputError("operands use different alphabets");
}

}  // namespace detail

}  // namespace ctxalg
