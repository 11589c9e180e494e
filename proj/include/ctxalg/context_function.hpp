#pragma once

#include <map>
#include <set>
#include <utility>

#include "ctxalg/language.hpp"
#include "ctxalg/strings.hpp"
#include "ctxalg/tolerances.hpp"

namespace ctxalg {

/// A finite-support function from contexts (y, z) into a coefficient space.
/// Absent contexts are zero; stored values are nonzero.
template <class Space>
class ContextFunction {
public:
  using W = typename Space::value_type;

  ContextFunction(Space space, AlphabetPtr alphabet)
      : space_(std::move(space)), alphabet_(std::move(alphabet)) {}

  ContextFunction(Space space, AlphabetPtr alphabet, std::map<Context, W> values,
                  double prune_tol = kZeroTol)
      : space_(std::move(space)), alphabet_(std::move(alphabet)) {
    for (auto& [c, w] : values) {
      if (space_.is_zero(w, prune_tol)) continue;
      values_.emplace(c, std::move(w));
    }
  }

  const Space& space() const { return space_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const std::map<Context, W>& support() const { return values_; }
  bool empty() const { return values_.empty(); }

  W at(const Context& c) const {
    auto it = values_.find(c);
    return it == values_.end() ? space_.zero() : it->second;
  }

private:
  Space space_;
  AlphabetPtr alphabet_;
  std::map<Context, W> values_;
};

namespace detail {

template <class Space>
void require_same_function_space(const ContextFunction<Space>& a,
                                 const ContextFunction<Space>& b) {
  require_compatible_space(a.space(), b.space());
  require_same_alphabet(a.alphabet_ptr(), b.alphabet_ptr());
}

template <class Space>
std::set<Context> support_union(const ContextFunction<Space>& a,
                                const ContextFunction<Space>& b) {
  std::set<Context> keys;
  for (const auto& [c, w] : a.support()) keys.insert(c);
  for (const auto& [c, w] : b.support()) keys.insert(c);
  return keys;
}

}  // namespace detail

template <class Space>
ContextFunction<Space> cf_add(const ContextFunction<Space>& a, const ContextFunction<Space>& b,
                              double prune_tol = kZeroTol) {
  detail::require_same_function_space(a, b);
  std::map<Context, typename Space::value_type> out;
  for (const Context& c : detail::support_union(a, b))
    out.emplace(c, a.space().add(a.at(c), b.at(c)));
  return ContextFunction<Space>(a.space(), a.alphabet_ptr(), std::move(out), prune_tol);
}

template <class Space>
ContextFunction<Space> cf_scale(double k, const ContextFunction<Space>& a,
                                double prune_tol = kZeroTol) {
  std::map<Context, typename Space::value_type> out;
  for (const auto& [c, w] : a.support()) out.emplace(c, a.space().scale(k, w));
  return ContextFunction<Space>(a.space(), a.alphabet_ptr(), std::move(out), prune_tol);
}

template <class Space>
ContextFunction<Space> cf_sub(const ContextFunction<Space>& a, const ContextFunction<Space>& b,
                              double prune_tol = kZeroTol) {
  return cf_add(a, cf_scale(-1.0, b, 0.0), prune_tol);
}

/// Pointwise order over the union of supports, with the coefficient
/// space's own order at each context.
template <class Space>
bool cf_leq(const ContextFunction<Space>& a, const ContextFunction<Space>& b) {
  detail::require_same_function_space(a, b);
  for (const Context& c : detail::support_union(a, b))
    if (!a.space().leq(a.at(c), b.at(c))) return false;
  return true;
}

template <class Space>
ContextFunction<Space> cf_meet(const ContextFunction<Space>& a, const ContextFunction<Space>& b,
                               double prune_tol = kZeroTol) {
  detail::require_same_function_space(a, b);
  std::map<Context, typename Space::value_type> out;
  for (const Context& c : detail::support_union(a, b))
    out.emplace(c, a.space().meet(a.at(c), b.at(c)));
  return ContextFunction<Space>(a.space(), a.alphabet_ptr(), std::move(out), prune_tol);
}

template <class Space>
ContextFunction<Space> cf_join(const ContextFunction<Space>& a, const ContextFunction<Space>& b,
                               double prune_tol = kZeroTol) {
  detail::require_same_function_space(a, b);
  std::map<Context, typename Space::value_type> out;
  for (const Context& c : detail::support_union(a, b))
    out.emplace(c, a.space().join(a.at(c), b.at(c)));
  return ContextFunction<Space>(a.space(), a.alphabet_ptr(), std::move(out), prune_tol);
}

/// Max over contexts of the coefficient space's max-abs. Zero for the
/// empty function.
template <class Space>
double cf_max_abs_diff(const ContextFunction<Space>& a, const ContextFunction<Space>& b) {
  detail::require_same_function_space(a, b);
  double m = 0.0;
  for (const Context& c : detail::support_union(a, b)) {
    const auto diff = a.space().add(a.at(c), a.space().scale(-1.0, b.at(c)));
    m = std::max(m, a.space().max_abs(diff));
  }
  return m;
}

template <class Space>
bool cf_approx_equal(const ContextFunction<Space>& a, const ContextFunction<Space>& b,
                     double tol) {
  return cf_max_abs_diff(a, b) <= tol;
}

/// The context vector x̂ of a string: (y, z) ↦ L(y x z). One entry per
/// factorization point, so overlapping occurrences each contribute.
template <class Space>
ContextFunction<Space> context_vector(const GeneralLanguage<Space>& language, const Str& x) {
  language.alphabet().require(x);
  std::map<Context, typename Space::value_type> out;
  for (const auto& [s, w] : language.entries()) {
    if (x.size() > s.size()) continue;
    for (std::size_t i = 0; i + x.size() <= s.size(); ++i) {
      if (!std::equal(x.begin(), x.end(), s.begin() + i)) continue;
      out.emplace(Context{Str(s.begin(), s.begin() + i), Str(s.begin() + i + x.size(), s.end())},
                  w);
    }
  }
  return ContextFunction<Space>(language.space(), language.alphabet_ptr(), std::move(out));
}

}  // namespace ctxalg
