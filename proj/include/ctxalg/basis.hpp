#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ctxalg/algebra.hpp"
#include "ctxalg/context_function.hpp"
#include "ctxalg/error.hpp"
#include "ctxalg/language.hpp"
#include "ctxalg/tolerances.hpp"

namespace ctxalg {

namespace detail {

/// Coordinates are indexed by (context, coefficient-space component).
using FlatKey = std::pair<Context, std::size_t>;
using SparseRow = std::map<FlatKey, double>;

template <class Space>
SparseRow flatten(const ContextFunction<Space>& f) {
  SparseRow row;
  const Space& space = f.space();
  for (const auto& [c, w] : f.support())
    for (std::size_t comp = 0; comp < space.component_count(); ++comp) {
      double v = space.component(w, comp);
      if (v != 0.0) row[{c, comp}] = v;
    }
  return row;
}

inline double row_max_abs(const SparseRow& row) {
  double m = 0.0;
  for (const auto& [k, v] : row) m = std::max(m, std::abs(v));
  return m;
}

inline void axpy(SparseRow& row, double k, const SparseRow& other) {
  for (const auto& [key, v] : other) {
    double& slot = row[key];
    slot += k * v;
    if (slot == 0.0) row.erase(key);
  }
}

}  // namespace detail

/// A string basis of the generated algebra: strings whose context vectors
/// are linearly independent and span every enumerated context vector.
/// Holds the row-echelon form needed to expand arbitrary vectors.
template <class Space>
class StringBasis {
public:
  StringBasis(LanguagePtr<Space> language, double pivot_rel_tol)
      : language_(std::move(language)), pivot_rel_tol_(pivot_rel_tol) {}

  const LanguagePtr<Space>& language() const { return language_; }
  const std::vector<Str>& strings() const { return strings_; }
  std::size_t dimension() const { return strings_.size(); }

  /// Reduces the candidate's vector against the rows collected so far and
  /// keeps the string iff a significant pivot survives.
  bool try_add(const Str& candidate) {
    detail::SparseRow row = detail::flatten(context_vector(*language_, candidate));
    const double original_scale = detail::row_max_abs(row);
    if (original_scale == 0.0) return false;

    std::vector<double> reduction(strings_.size());
    for (std::size_t k = 0; k < echelon_.size(); ++k) {
      auto it = row.find(pivots_[k]);
      if (it == row.end()) continue;
      const double c = it->second;
      detail::axpy(row, -c, echelon_[k]);
      row.erase(pivots_[k]);
      for (std::size_t i = 0; i < strings_.size(); ++i) reduction[i] += c * combo_[k][i];
    }

    // Pivot selection: largest-magnitude surviving entry.
    detail::FlatKey pivot{};
    double pivot_value = 0.0;
    for (const auto& [key, v] : row)
      if (std::abs(v) > std::abs(pivot_value)) {
        pivot = key;
        pivot_value = v;
      }
    if (std::abs(pivot_value) <= pivot_rel_tol_ * original_scale) return false;

    detail::SparseRow normalized;
    for (const auto& [key, v] : row) normalized[key] = v / pivot_value;
    std::vector<double> combo_row(strings_.size() + 1);
    for (std::size_t i = 0; i < strings_.size(); ++i) combo_row[i] = -reduction[i] / pivot_value;
    combo_row[strings_.size()] = 1.0 / pivot_value;

    for (auto& existing : combo_) existing.push_back(0.0);
    strings_.push_back(candidate);
    echelon_.push_back(std::move(normalized));
    pivots_.push_back(pivot);
    combo_.push_back(std::move(combo_row));
    return true;
  }

  /// Coefficients α with v = Σ α_i · (basis string i)^. Throws NotInSpanError
  /// when the residual exceeds the tolerance.
  std::vector<double> expand(const ContextFunction<Space>& v,
                             double residual_tol = kResidualTol) const {
    detail::require_compatible_space(v.space(), language_->space());
    detail::require_same_alphabet(v.alphabet_ptr(), language_->alphabet_ptr());
    detail::SparseRow row = detail::flatten(v);
    std::vector<double> echelon_coords(strings_.size(), 0.0);
    for (std::size_t k = 0; k < echelon_.size(); ++k) {
      auto it = row.find(pivots_[k]);
      if (it == row.end()) continue;
      const double c = it->second;
      echelon_coords[k] = c;
      detail::axpy(row, -c, echelon_[k]);
      row.erase(pivots_[k]);
    }
    const double residual = detail::row_max_abs(row);
    if (residual > residual_tol) throw NotInSpanError(residual);

    std::vector<double> alpha(strings_.size(), 0.0);
    for (std::size_t k = 0; k < echelon_.size(); ++k)
      for (std::size_t i = 0; i < strings_.size(); ++i)
        alpha[i] += echelon_coords[k] * combo_[k][i];
    return alpha;
  }

private:
  LanguagePtr<Space> language_;
  double pivot_rel_tol_;
  std::vector<Str> strings_;
  std::vector<detail::SparseRow> echelon_;    // echelon_[k] has pivot pivots_[k], value 1
  std::vector<detail::FlatKey> pivots_;
  std::vector<std::vector<double>> combo_;    // echelon_[k] = Σ_i combo_[k][i] · flat(strings_[i]^)
};

/// Greedy basis extraction: walks `order` and keeps each string whose
/// context vector falls outside the span collected so far. `order` must be
/// a permutation of enumerate_nonzero_strings(language).
template <class Space>
StringBasis<Space> string_basis(const LanguagePtr<Space>& language,
                                const std::vector<Str>& order,
                                double pivot_rel_tol = kPivotRelTol) {
  {
    std::vector<Str> expected = enumerate_nonzero_strings(*language);
    std::vector<Str> given = order;
    std::sort(given.begin(), given.end(), length_lex_less);
    if (given != expected)
      throw InputError("order must be a permutation of the enumerated nonzero strings");
  }
  StringBasis<Space> basis(language, pivot_rel_tol);
  for (const Str& s : order) basis.try_add(s);
  return basis;
}

/// Basis over the default length-then-lexicographic enumeration order.
template <class Space>
StringBasis<Space> string_basis(const LanguagePtr<Space>& language,
                                double pivot_rel_tol = kPivotRelTol) {
  return string_basis(language, enumerate_nonzero_strings(*language), pivot_rel_tol);
}

template <class Space>
std::vector<double> expand_in_basis(const ContextFunction<Space>& v,
                                    const StringBasis<Space>& basis,
                                    double residual_tol = kResidualTol) {
  return basis.expand(v, residual_tol);
}

}  // namespace ctxalg
