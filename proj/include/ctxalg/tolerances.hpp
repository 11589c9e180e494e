#pragma once

namespace ctxalg {

/// Numeric thresholds used across the library. All value magnitudes in this
/// domain are O(1), so absolute tolerances are meaningful. Functions that
/// depend on one of these accept it as a parameter with these defaults.
inline constexpr double kZeroTol = 1e-12;      ///< prune threshold for stored values
inline constexpr double kOpEqualTol = 1e-12;   ///< operator equality for arithmetic combinations
inline constexpr double kPivotRelTol = 1e-9;   ///< pivot threshold, relative to a row's max-abs entry
inline constexpr double kResidualTol = 1e-8;   ///< max-abs residual allowed by expand_in_basis

}  // namespace ctxalg
