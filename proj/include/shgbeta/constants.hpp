#pragma once

#include <numbers>

namespace shgbeta {

/// Physical constants of the active unit system.
///
/// All internal computation runs in Hartree atomic units: hbar = 1,
/// 4*pi*eps0 = 1, and c = 1/alpha.
struct Constants {
  double hbar;
  double c;
  double eps0;
  double four_pi_eps0;
};

inline constexpr Constants atomic_units{
    1.0,
    137.035999084,  // inverse fine-structure constant, CODATA 2018
    1.0 / (4.0 * std::numbers::pi),
    1.0,
};

// Input-unit conversion factors (CODATA 2018).
inline constexpr double hartree_per_ev = 1.0 / 27.211386245988;
// 1 D = 1e-21/c_SI C m = 3.33564095198152e-30 C m; e*a0 = 8.4783536255e-30 C m.
inline constexpr double au_per_debye = 3.33564095198152e-30 / 8.4783536255e-30;

}  // namespace shgbeta
