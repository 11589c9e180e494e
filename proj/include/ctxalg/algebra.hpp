#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <utility>

#include "ctxalg/context_function.hpp"
#include "ctxalg/language.hpp"
#include "ctxalg/strings.hpp"
#include "ctxalg/tolerances.hpp"

namespace ctxalg {

namespace detail {

/// Σ coeffs[x] · x̂ evaluated directly from the language.
template <class Space>
ContextFunction<Space> combination_function(const GeneralLanguage<Space>& language,
                                            const std::map<Str, double>& coeffs,
                                            double prune_tol) {
  using W = typename Space::value_type;
  const Space& space = language.space();
  std::map<Context, W> acc;
  for (const auto& [x, coeff] : coeffs) {
    const ContextFunction<Space> hat = context_vector(language, x);
    for (const auto& [c, w] : hat.support()) {
      auto it = acc.find(c);
      if (it == acc.end())
        acc.emplace(c, space.scale(coeff, w));
      else
        it->second = space.add(it->second, space.scale(coeff, w));
    }
  }
  return ContextFunction<Space>(space, language.alphabet_ptr(), std::move(acc), prune_tol);
}

}  // namespace detail

/// A finite real combination Σ α_x x̂ of context vectors, kept as the formal
/// coefficient map together with its context function. The function is
/// computed once at construction and never mutated.
template <class Space>
class AlgebraElement {
public:
  AlgebraElement(LanguagePtr<Space> language, std::map<Str, double> coeffs,
                 double prune_tol = kZeroTol)
      : language_(std::move(language)),
        context_(language_->space(), language_->alphabet_ptr()) {
    if (!language_) throw InputError("algebra element requires a language");
    for (auto& [x, coeff] : coeffs) {
      language_->alphabet().require(x);
      if (std::abs(coeff) <= prune_tol) continue;
      coeffs_.emplace(x, coeff);
    }
    context_ = detail::combination_function(*language_, coeffs_, prune_tol);
  }

  const LanguagePtr<Space>& language() const { return language_; }
  const std::map<Str, double>& coeffs() const { return coeffs_; }
  const ContextFunction<Space>& context_function() const { return context_; }

  double coeff(const Str& x) const {
    auto it = coeffs_.find(x);
    return it == coeffs_.end() ? 0.0 : it->second;
  }

private:
  LanguagePtr<Space> language_;
  std::map<Str, double> coeffs_;
  ContextFunction<Space> context_;
};

namespace detail {

template <class Space>
void require_same_language(const AlgebraElement<Space>& a, const AlgebraElement<Space>& b) {
  if (a.language() == b.language()) return;
  require_compatible_space(a.language()->space(), b.language()->space());
  require_same_alphabet(a.language()->alphabet_ptr(), b.language()->alphabet_ptr());
  const auto& ea = a.language()->entries();
  const auto& eb = b.language()->entries();
  if (ea.size() != eb.size())
    throw InputError("elements come from different languages");
  for (auto ita = ea.begin(), itb = eb.begin(); ita != ea.end(); ++ita, ++itb)
    if (ita->first != itb->first)
      throw InputError("elements come from different languages");
}

}  // namespace detail

template <class Space>
AlgebraElement<Space> make_element(const LanguagePtr<Space>& language,
                                   std::map<Str, double> coeffs) {
  return AlgebraElement<Space>(language, std::move(coeffs));
}

/// x̂ as an element of the algebra.
template <class Space>
AlgebraElement<Space> element_from_string(const LanguagePtr<Space>& language, const Str& x) {
  return AlgebraElement<Space>(language, {{x, 1.0}});
}

/// The unity ε̂.
template <class Space>
AlgebraElement<Space> unity(const LanguagePtr<Space>& language) {
  return element_from_string(language, Str{});
}

/// Multiplication inherited from concatenation, extended bilinearly over
/// the formal coefficients: coeffs(ab)[z] = Σ_{xy=z} coeffs(a)[x]·coeffs(b)[y].
/// Concatenations with identically zero context vectors are dropped.
template <class Space>
AlgebraElement<Space> multiply(const AlgebraElement<Space>& a, const AlgebraElement<Space>& b,
                               double prune_tol = kZeroTol) {
  detail::require_same_language(a, b);
  const GeneralLanguage<Space>& language = *a.language();
  std::map<Str, double> acc;
  for (const auto& [x, ax] : a.coeffs())
    for (const auto& [y, by] : b.coeffs()) {
      Str z = concat(x, y);
      // Anything longer than every support string has a zero vector.
      if (z.size() > language.max_support_length()) continue;
      acc[z] += ax * by;
    }
  for (auto it = acc.begin(); it != acc.end();)
    if (std::abs(it->second) <= prune_tol || context_vector(language, it->first).empty())
      it = acc.erase(it);
    else
      ++it;
  return AlgebraElement<Space>(a.language(), std::move(acc), prune_tol);
}

template <class Space>
AlgebraElement<Space> operator*(const AlgebraElement<Space>& a, const AlgebraElement<Space>& b) {
  return multiply(a, b);
}

template <class Space>
AlgebraElement<Space> add_elements(const AlgebraElement<Space>& a, const AlgebraElement<Space>& b,
                                   double prune_tol = kZeroTol) {
  detail::require_same_language(a, b);
  std::map<Str, double> acc = a.coeffs();
  for (const auto& [y, by] : b.coeffs()) acc[y] += by;
  return AlgebraElement<Space>(a.language(), std::move(acc), prune_tol);
}

template <class Space>
AlgebraElement<Space> scale_element(double k, const AlgebraElement<Space>& a,
                                    double prune_tol = kZeroTol) {
  std::map<Str, double> acc = a.coeffs();
  for (auto& [x, coeff] : acc) coeff *= k;
  return AlgebraElement<Space>(a.language(), std::move(acc), prune_tol);
}

}  // namespace ctxalg
