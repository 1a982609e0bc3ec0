#pragma once

namespace gscon {

/// Numeric slack used by all validity checks. The constructions are exact in
/// exact arithmetic; these constants are the floating-point allowances.
struct Tolerances {
  double unitarity = 1e-10;    // ||U U^dag - I||_max
  double hermiticity = 1e-12;  // ||A - A^dag||_max
  double comparison = 1e-9;    // generic numeric comparisons
  double state_norm = 1e-10;   // | ||psi||_2 - 1 |
  double idempotent = 1e-10;   // ||P^2 - P||_max
};

inline constexpr Tolerances kTol{};

}  // namespace gscon
