#pragma once

#include <array>
#include <complex>

#include "shgbeta/model.hpp"

namespace shgbeta {

/// How phenomenological linewidths enter the energy denominators.
/// constant_sign adds +i*Gamma_r to every factor of level r regardless of
/// whether the factor is resonant; sign_alternating flips the sign on
/// anti-resonant factors (negative photon multiple).
enum class DampingConvention { none, constant_sign, sign_alternating };

/// The 27 complex Cartesian components of beta(-2w; w, w) in atomic units,
/// plus the evaluation metadata.
struct BetaTensor {
  std::array<std::complex<double>, 27> components{};
  double omega = 0.0;
  Representation representation = Representation::standard;
  DampingConvention damping = DampingConvention::none;
  bool symmetrized = false;

  std::complex<double>& at(int i, int j, int k) {
    return components[9 * i + 3 * j + k];
  }
  const std::complex<double>& at(int i, int j, int k) const {
    return components[9 * i + 3 * j + k];
  }
};

/// One energy denominator factor: -E_level + multiple*omega, with the
/// imaginary damping part set by the convention. Throws SingularityError if
/// the resulting value is within 1e-12 hartree of zero.
std::complex<double> denominator(const MolecularModel& m, int level,
                                 int multiple, double omega,
                                 DampingConvention convention);

/// Sum of all state-sequence terms of the model's representation, each a
/// triple dipole product over a product of two denominators. Accumulation is
/// compensated and runs in the deterministic term order.
BetaTensor evaluate_beta(const MolecularModel& m, double omega,
                         DampingConvention convention = DampingConvention::none);

/// Average the two input-photon slots: b_i(jk) = (b_ijk + b_ikj)/2.
BetaTensor symmetrize(const BetaTensor& b);

/// max over components of |a-b| / max(|a|, |b|, 1e-300).
double max_component_rel_diff(const BetaTensor& a, const BetaTensor& b);

/// Side-by-side evaluation of both representations on the same input.
struct EquivalenceReport {
  double omega;
  BetaTensor beta_standard;
  BetaTensor beta_fluctuation;
  double max_rel_diff_symmetrized;
  double max_rel_diff_raw;
};

/// Requires a standard-representation model; evaluates it as-is and after
/// the fluctuation transform, and reports component-wise differences for the
/// raw and slot-symmetrized tensors separately.
EquivalenceReport equivalence_report(
    const MolecularModel& m, double omega,
    DampingConvention convention = DampingConvention::none);

}  // namespace shgbeta
