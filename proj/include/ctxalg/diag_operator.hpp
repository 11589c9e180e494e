#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ctxalg/error.hpp"
#include "ctxalg/tolerances.hpp"
#include "ctxalg/universe.hpp"

namespace ctxalg {

/// An operator on the span of the member basis vectors {e_l}, stored by its
/// diagonal. The projections P_u are diagonal in this basis, and so is the
/// whole commutative algebra they generate with the identity, so a diagonal
/// is a complete representation for everything built here.
class DiagOperator {
public:
  DiagOperator(UniversePtr universe, std::vector<double> diag)
      : universe_(std::move(universe)), diag_(std::move(diag)) {
    if (!universe_) throw InputError("operator requires a universe");
    if (diag_.size() != universe_->size())
      throw InputError("diagonal length " + std::to_string(diag_.size()) +
                       " does not match universe size " + std::to_string(universe_->size()));
  }

  static DiagOperator zero(const UniversePtr& universe) {
    return DiagOperator(universe, std::vector<double>(universe->size(), 0.0));
  }

  static DiagOperator identity(const UniversePtr& universe) {
    return DiagOperator(universe, std::vector<double>(universe->size(), 1.0));
  }

  const UniversePtr& universe() const { return universe_; }
  const std::vector<double>& diag() const { return diag_; }
  double operator[](std::size_t i) const { return diag_[i]; }
  std::size_t dim() const { return diag_.size(); }

  /// Projections are exactly the 0/1 diagonals.
  bool is_projection() const {
    for (double d : diag_)
      if (d != 0.0 && d != 1.0) return false;
    return true;
  }

  bool is_zero(double tol = kZeroTol) const {
    for (double d : diag_)
      if (std::abs(d) > tol) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (double d : diag_) m = std::max(m, std::abs(d));
    return m;
  }

private:
  UniversePtr universe_;
  std::vector<double> diag_;
};

namespace detail {

inline void require_same_universe(const DiagOperator& a, const DiagOperator& b) {
  if (a.universe() == b.universe()) return;
  if (a.universe()->hash() == b.universe()->hash()) return;
  throw InputError("operators live over different universes");
}

template <class Fn>
DiagOperator zip(const DiagOperator& a, const DiagOperator& b, Fn&& fn) {
  require_same_universe(a, b);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fn(a[i], b[i]);
  return DiagOperator(a.universe(), std::move(out));
}

}  // namespace detail

/// P_u: the projection onto the members that entail u.
inline DiagOperator projection_of(const Formula& u, const UniversePtr& universe) {
  std::vector<double> diag(universe->size(), 0.0);
  for (std::size_t i : universe->down_set(u)) diag[i] = 1.0;
  return DiagOperator(universe, std::move(diag));
}

/// Operator composition. Diagonal operators commute, so this is the
/// entry-wise product.
inline DiagOperator operator*(const DiagOperator& a, const DiagOperator& b) {
  return detail::zip(a, b, [](double x, double y) { return x * y; });
}

inline DiagOperator operator+(const DiagOperator& a, const DiagOperator& b) {
  return detail::zip(a, b, [](double x, double y) { return x + y; });
}

inline DiagOperator operator-(const DiagOperator& a, const DiagOperator& b) {
  return detail::zip(a, b, [](double x, double y) { return x - y; });
}

inline DiagOperator scale(double k, const DiagOperator& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = k * a[i];
  return DiagOperator(a.universe(), std::move(out));
}

/// Lattice operations, entry-wise in the distinguished member basis.
inline DiagOperator meet(const DiagOperator& a, const DiagOperator& b) {
  return detail::zip(a, b, [](double x, double y) { return std::min(x, y); });
}

inline DiagOperator join(const DiagOperator& a, const DiagOperator& b) {
  return detail::zip(a, b, [](double x, double y) { return std::max(x, y); });
}

/// Entry-wise order. For projections this coincides with the usual
/// projection order P ≤ Q iff PQ = QP = P.
inline bool leq(const DiagOperator& a, const DiagOperator& b) {
  detail::require_same_universe(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

inline bool approx_equal(const DiagOperator& a, const DiagOperator& b,
                         double tol = kOpEqualTol) {
  detail::require_same_universe(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

/// Indices where the two diagonals differ by more than tol.
inline std::vector<std::size_t> defect_indices(const DiagOperator& a, const DiagOperator& b,
                                               double tol = kOpEqualTol) {
  detail::require_same_universe(a, b);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (std::abs(a[i] - b[i]) > tol) out.push_back(i);
  return out;
}

/// Where the classical projection identities hold on a finite universe.
/// The conjunction and truth identities are exact theorems; the negation
/// and disjunction identities can fail at members that decide neither side,
/// so those are measured and reported rather than assumed.
struct IdentityReport {
  bool conj_exact = true;  ///< P_{u&v} == P_u P_v for every tested pair
  bool top_exact = true;   ///< P_true == identity
  /// Keyed by formula rendering: indices where P_{~u} and 1 - P_u + P_false differ.
  std::map<std::string, std::vector<std::size_t>> neg_defects;
  /// Keyed by the rendered pair: indices where P_{u|v} and P_u + P_v - P_u P_v differ.
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> disj_defects;
};

inline IdentityReport check_identities(const UniversePtr& universe,
                                       const std::vector<std::pair<Formula, Formula>>& pairs) {
  IdentityReport report;
  const DiagOperator one = DiagOperator::identity(universe);
  const DiagOperator p_bot = projection_of(Formula::bot(), universe);

  report.top_exact = projection_of(Formula::top(), universe).diag() == one.diag();

  std::vector<Formula> singles;
  std::set<std::string> seen;
  for (const auto& [u, v] : pairs) {
    for (const Formula& f : {u, v})
      if (seen.insert(to_string(f)).second) singles.push_back(f);

    const DiagOperator pu = projection_of(u, universe);
    const DiagOperator pv = projection_of(v, universe);
    if (projection_of(Formula::conjunction(u, v), universe).diag() != (pu * pv).diag())
      report.conj_exact = false;
    report.disj_defects[{to_string(u), to_string(v)}] =
        defect_indices(projection_of(Formula::disjunction(u, v), universe), pu + pv - pu * pv);
  }

  for (const Formula& u : singles) {
    const DiagOperator pu = projection_of(u, universe);
    report.neg_defects[to_string(u)] =
        defect_indices(projection_of(Formula::negation(u), universe), one - pu + p_bot);
  }
  return report;
}

}  // namespace ctxalg
