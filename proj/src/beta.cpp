#include "shgbeta/beta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shgbeta/diagrams.hpp"
#include "shgbeta/errors.hpp"
#include "shgbeta/kahan.hpp"

namespace shgbeta {

namespace {

constexpr double kResonanceTol = 1e-12;  // hartree

}  // namespace

std::complex<double> denominator(const MolecularModel& m, int level,
                                 int multiple, double omega,
                                 DampingConvention convention) {
  if (level < 0 || static_cast<std::size_t>(level) >= m.levels())
    throw ValidationError("denominator: level index out of range");
  if (multiple != 2 && multiple != 1 && multiple != -1 && multiple != -2)
    throw ValidationError("denominator: multiple must be one of {-2,-1,+1,+2}");

  // E~_0r = -E_r, energies being stored relative to the ground state.
  const double base = -m.energy(level) + multiple * omega;
  double damp = 0.0;
  switch (convention) {
    case DampingConvention::none:
      break;
    case DampingConvention::constant_sign:
      damp = m.width(level);
      break;
    case DampingConvention::sign_alternating:
      damp = (multiple > 0) ? m.width(level) : -m.width(level);
      break;
  }
  const std::complex<double> value(base, damp);
  if (std::abs(value) < kResonanceTol)
    throw SingularityError(
        "resonance singularity: level " + std::to_string(level) +
            ", photon multiple " + std::to_string(multiple) +
            " gives |denominator| < 1e-12 hartree",
        level, multiple);
  return value;
}

BetaTensor evaluate_beta(const MolecularModel& m, double omega,
                         DampingConvention convention) {
  if (!(omega > 0.0))
    throw ValidationError("evaluate_beta: omega must be positive");

  std::array<CompensatedComplexSum, 27> acc;
  for (const Term& t : enumerate_terms(m)) {
    const std::complex<double> denom =
        denominator(m, t.denominators[0].level, t.denominators[0].multiple,
                    omega, convention) *
        denominator(m, t.denominators[1].level, t.denominators[1].multiple,
                    omega, convention);
    const Vec3& f0 = m.mu(0, t.r);
    const Vec3& f1 = m.mu(t.r, t.s);
    const Vec3& f2 = m.mu(t.s, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const int idx[3] = {i, j, k};
          const double numer = f0[idx[t.pattern[0]]] * f1[idx[t.pattern[1]]] *
                               f2[idx[t.pattern[2]]];
          acc[9 * i + 3 * j + k].add(numer / denom);
        }
  }

  BetaTensor b;
  for (int c = 0; c < 27; ++c) b.components[c] = acc[c].value();
  b.omega = omega;
  b.representation = m.representation();
  b.damping = convention;
  b.symmetrized = false;
  return b;
}

BetaTensor symmetrize(const BetaTensor& b) {
  if (b.symmetrized)
    throw ValidationError("symmetrize: tensor is already symmetrized");
  BetaTensor out = b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out.at(i, j, k) = 0.5 * (b.at(i, j, k) + b.at(i, k, j));
  out.symmetrized = true;
  return out;
}

double max_component_rel_diff(const BetaTensor& a, const BetaTensor& b) {
  double worst = 0.0;
  for (int c = 0; c < 27; ++c) {
    const double d = std::abs(a.components[c] - b.components[c]);
    const double scale = std::max(
        {std::abs(a.components[c]), std::abs(b.components[c]), 1e-300});
    worst = std::max(worst, d / scale);
  }
  return worst;
}

EquivalenceReport equivalence_report(const MolecularModel& m, double omega,
                                     DampingConvention convention) {
  if (m.representation() != Representation::standard)
    throw ValidationError(
        "equivalence_report: input model must be in the standard "
        "representation");
  EquivalenceReport rep;
  rep.omega = omega;
  rep.beta_standard = evaluate_beta(m, omega, convention);
  rep.beta_fluctuation = evaluate_beta(to_fluctuation(m), omega, convention);
  rep.max_rel_diff_raw =
      max_component_rel_diff(rep.beta_standard, rep.beta_fluctuation);
  rep.max_rel_diff_symmetrized = max_component_rel_diff(
      symmetrize(rep.beta_standard), symmetrize(rep.beta_fluctuation));
  return rep;
}

}  // namespace shgbeta
