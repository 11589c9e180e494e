#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ctxalg/algebra.hpp"
#include "ctxalg/diag_operator.hpp"
#include "ctxalg/error.hpp"
#include "ctxalg/language.hpp"
#include "ctxalg/strings.hpp"
#include "ctxalg/universe.hpp"

namespace ctxalg {

/// The table ρ from meaningful aspect strings to formulas, together with
/// the aspect alphabet S and the universe the formulas live over.
struct Interpretation {
  AlphabetPtr aspects;
  std::map<Str, Formula> delta;
  UniversePtr universe;

  Interpretation(AlphabetPtr aspects_in, std::map<Str, Formula> delta_in, UniversePtr universe_in)
      : aspects(std::move(aspects_in)), delta(std::move(delta_in)), universe(std::move(universe_in)) {
    if (!aspects || !universe) throw InputError("interpretation requires aspects and a universe");
    for (const auto& [x, f] : delta) {
      aspects->require(x);
      detail::require_known_atoms(f, universe->atoms());
    }
  }
};

/// Word vectors over the aspect space: word → sparse weights ψ(word).
class Lexicon {
public:
  explicit Lexicon(std::map<std::string, std::map<std::string, double>> words,
                   double prune_tol = kZeroTol)
      : words_(std::move(words)) {
    for (auto& [word, weights] : words_) {
      if (word.empty()) throw InputError("empty word in lexicon");
      for (auto it = weights.begin(); it != weights.end();) {
        if (std::abs(it->second) <= prune_tol)
          it = weights.erase(it);
        else {
          if (it->second < 0.0) nonnegative_ = false;
          ++it;
        }
      }
    }
  }

  const std::map<std::string, std::map<std::string, double>>& words() const { return words_; }
  bool nonnegative() const { return nonnegative_; }

  const std::map<std::string, double>& weights(const std::string& word) const {
    auto it = words_.find(word);
    if (it == words_.end()) throw InputError("unknown word '" + word + "'");
    return it->second;
  }

private:
  std::map<std::string, std::map<std::string, double>> words_;
  bool nonnegative_ = true;
};

/// Sentences of the object language with their logical interpretations.
struct GammaSpec {
  std::map<Str, Formula> sentences;
  /// Optional boundary markers every sentence must start and end with.
  std::optional<std::pair<Symbol, Symbol>> boundaries;
};

/// Pairs (x, y) from Γ where x is a contiguous substring of y. A nonempty
/// result means the order embedding is not guaranteed.
inline std::vector<std::pair<Str, Str>> substring_violations(const GammaSpec& gamma) {
  std::vector<std::pair<Str, Str>> out;
  for (const auto& [x, fx] : gamma.sentences)
    for (const auto& [y, fy] : gamma.sentences) {
      if (x == y || x.size() > y.size()) continue;
      for (std::size_t i = 0; i + x.size() <= y.size(); ++i)
        if (std::equal(x.begin(), x.end(), y.begin() + i)) {
          out.emplace_back(x, y);
          break;
        }
    }
  return out;
}

namespace detail {

template <class Key>
LanguagePtr<OperatorSpace> projection_language(const std::map<Key, Formula>& table,
                                               AlphabetPtr alphabet,
                                               const UniversePtr& universe) {
  std::map<Str, DiagOperator> entries;
  for (const auto& [x, f] : table) {
    DiagOperator p = projection_of(f, universe);
    if (p.is_zero()) continue;  // the otherwise-branch of L is already zero
    entries.emplace(x, std::move(p));
  }
  return make_language(OperatorSpace(universe), std::move(alphabet), std::move(entries));
}

}  // namespace detail

/// The operator-valued language over aspect strings: L(x) = P_{ρ(x)} for
/// x in Δ and zero elsewhere.
inline LanguagePtr<OperatorSpace> build_aspect_language(const Interpretation& interp) {
  return detail::projection_language(interp.delta, interp.aspects, interp.universe);
}

/// The operator-valued language over object-language sentences: L(x) =
/// P_{ρ(x)} for x in Γ. Returns the language plus any substring-freeness
/// violations found (violations degrade the order embedding but are not
/// fatal).
struct GammaLanguage {
  LanguagePtr<OperatorSpace> language;
  std::vector<std::pair<Str, Str>> violations;
};

inline GammaLanguage build_gamma_language(const GammaSpec& gamma, const UniversePtr& universe) {
  std::vector<Symbol> symbols;
  std::set<Symbol> seen;
  for (const auto& [x, f] : gamma.sentences) {
    detail::require_known_atoms(f, universe->atoms());
    for (const Symbol& s : x)
      if (seen.insert(s).second) symbols.push_back(s);
  }
  if (gamma.boundaries) {
    const auto& [open, close] = *gamma.boundaries;
    for (const auto& [x, f] : gamma.sentences)
      if (x.size() < 2 || x.front() != open || x.back() != close)
        throw InputError("sentence '" + to_string(x) + "' is not bounded by '" + open +
                         "' and '" + close + "'");
  }
  GammaLanguage out;
  out.language =
      detail::projection_language(gamma.sentences, make_alphabet(std::move(symbols)), universe);
  out.violations = substring_violations(gamma);
  return out;
}

/// ã = Σ_s ψ(a)_s · ŝ over the single-aspect strings.
inline AlgebraElement<OperatorSpace> word_vector(const std::string& word, const Lexicon& lexicon,
                                                 const LanguagePtr<OperatorSpace>& language) {
  std::map<Str, double> coeffs;
  for (const auto& [aspect, weight] : lexicon.weights(word)) {
    if (!language->alphabet().contains(aspect))
      throw InputError("aspect '" + aspect + "' of word '" + word +
                       "' is not in the language alphabet");
    coeffs.emplace(Str{aspect}, weight);
  }
  return AlgebraElement<OperatorSpace>(language, std::move(coeffs));
}

/// x̃ = x̃_1 · x̃_2 ··· x̃_n, a left fold of the algebra product over the
/// word vectors.
inline AlgebraElement<OperatorSpace> sentence_vector(const std::vector<std::string>& words,
                                                     const Lexicon& lexicon,
                                                     const LanguagePtr<OperatorSpace>& language) {
  if (words.empty()) throw InputError("sentence must contain at least one word");
  AlgebraElement<OperatorSpace> acc = word_vector(words.front(), lexicon, language);
  for (std::size_t i = 1; i < words.size(); ++i)
    acc = multiply(acc, word_vector(words[i], lexicon, language));
  return acc;
}

/// The (ε, ε) component of an element's context function; the zero operator
/// when that context carries nothing.
inline DiagOperator sentence_operator(const AlgebraElement<OperatorSpace>& element) {
  return element.context_function().at(Context{});
}

/// Words, aspects and atoms live in disjoint namespaces; overlaps are
/// configuration errors.
inline void check_namespaces(const Universe& universe, const Interpretation& interp,
                             const Lexicon& lexicon) {
  std::set<std::string> atoms(universe.atoms().begin(), universe.atoms().end());
  std::set<std::string> aspects(interp.aspects->symbols().begin(),
                                interp.aspects->symbols().end());
  for (const auto& a : aspects)
    if (atoms.count(a)) throw InputError("name '" + a + "' is both an atom and an aspect");
  for (const auto& [word, weights] : lexicon.words()) {
    if (atoms.count(word)) throw InputError("name '" + word + "' is both an atom and a word");
    if (aspects.count(word)) throw InputError("name '" + word + "' is both an aspect and a word");
  }
}

}  // namespace ctxalg
