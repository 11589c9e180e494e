#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ctxalg/diag_operator.hpp"
#include "ctxalg/error.hpp"
#include "ctxalg/strings.hpp"
#include "ctxalg/tolerances.hpp"

namespace ctxalg {

/// Coefficient space of real-valued languages. The order is the usual one;
/// meet and join are min and max.
struct ScalarSpace {
  using value_type = double;

  double zero() const { return 0.0; }
  bool is_zero(double v, double tol = kZeroTol) const { return std::abs(v) <= tol; }
  double add(double a, double b) const { return a + b; }
  double scale(double k, double a) const { return k * a; }
  bool leq(double a, double b) const { return a <= b; }
  double meet(double a, double b) const { return std::min(a, b); }
  double join(double a, double b) const { return std::max(a, b); }
  double max_abs(double a) const { return std::abs(a); }

  std::size_t component_count() const { return 1; }
  double component(double v, std::size_t) const { return v; }

  bool compatible(const ScalarSpace&) const { return true; }
  std::string describe() const { return "scalar"; }
};

/// Coefficient space of diagonal operators over a fixed universe. Order and
/// lattice operations are entry-wise in the member basis.
struct OperatorSpace {
  using value_type = DiagOperator;

  UniversePtr universe;

  explicit OperatorSpace(UniversePtr u) : universe(std::move(u)) {
    if (!universe) throw InputError("operator space requires a universe");
  }

  DiagOperator zero() const { return DiagOperator::zero(universe); }
  bool is_zero(const DiagOperator& v, double tol = kZeroTol) const { return v.is_zero(tol); }
  DiagOperator add(const DiagOperator& a, const DiagOperator& b) const { return a + b; }
  DiagOperator scale(double k, const DiagOperator& a) const { return ctxalg::scale(k, a); }
  bool leq(const DiagOperator& a, const DiagOperator& b) const { return ctxalg::leq(a, b); }
  DiagOperator meet(const DiagOperator& a, const DiagOperator& b) const {
    return ctxalg::meet(a, b);
  }
  DiagOperator join(const DiagOperator& a, const DiagOperator& b) const {
    return ctxalg::join(a, b);
  }
  double max_abs(const DiagOperator& a) const { return a.max_abs(); }

  std::size_t component_count() const { return universe->size(); }
  double component(const DiagOperator& v, std::size_t i) const { return v[i]; }

  bool compatible(const OperatorSpace& other) const {
    return universe->hash() == other.universe->hash();
  }
  std::string describe() const { return "operator[" + universe->hash_hex() + "]"; }
};

namespace detail {

template <class Space>
void require_compatible_space(const Space& a, const Space& b) {
  if (!a.compatible(b)) throw InputError("operands use different coefficient spaces");
}

}  // namespace detail

/// A finite-support function from strings over an alphabet into a
/// coefficient space: the entries absent from the map are zero.
template <class Space>
class GeneralLanguage {
public:
  using W = typename Space::value_type;

  GeneralLanguage(Space space, AlphabetPtr alphabet, std::map<Str, W> entries,
                  double prune_tol = kZeroTol)
      : space_(std::move(space)), alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw InputError("language requires an alphabet");
    for (auto& [s, w] : entries) {
      alphabet_->require(s);
      if (space_.is_zero(w, prune_tol)) continue;
      max_support_length_ = std::max(max_support_length_, s.size());
      entries_.emplace(s, std::move(w));
    }
  }

  const Space& space() const { return space_; }
  const Alphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const std::map<Str, W>& entries() const { return entries_; }
  std::size_t max_support_length() const { return max_support_length_; }

  W value(const Str& s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? space_.zero() : it->second;
  }

private:
  Space space_;
  AlphabetPtr alphabet_;
  std::map<Str, W> entries_;
  std::size_t max_support_length_ = 0;
};

using ScalarLanguage = GeneralLanguage<ScalarSpace>;
using OperatorLanguage = GeneralLanguage<OperatorSpace>;

template <class Space>
using LanguagePtr = std::shared_ptr<const GeneralLanguage<Space>>;

template <class Space>
LanguagePtr<Space> make_language(Space space, AlphabetPtr alphabet,
                                 std::map<Str, typename Space::value_type> entries,
                                 double prune_tol = kZeroTol) {
  return std::make_shared<const GeneralLanguage<Space>>(std::move(space), std::move(alphabet),
                                                        std::move(entries), prune_tol);
}

/// All distinct factors (contiguous substrings, ε included) of the support
/// strings, in length-then-lexicographic order. These are exactly the
/// strings with nonzero context vectors; an empty language yields nothing,
/// not even ε.
template <class Space>
std::vector<Str> enumerate_nonzero_strings(const GeneralLanguage<Space>& language) {
  std::set<Str> factors;
  for (const auto& [s, w] : language.entries())
    for (std::size_t i = 0; i <= s.size(); ++i)
      for (std::size_t len = 0; len + i <= s.size(); ++len)
        factors.insert(Str(s.begin() + i, s.begin() + i + len));
  std::vector<Str> out(factors.begin(), factors.end());
  std::sort(out.begin(), out.end(), length_lex_less);
  return out;
}

}  // namespace ctxalg
