#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shgbeta/geometry.hpp"

namespace shgbeta {

enum class Representation { standard, fluctuation };

enum class EnergyUnit { hartree, ev };
enum class DipoleUnit { au, debye };

/// Molecular level data: energies relative to the ground state, damping
/// widths, and the full real symmetric dipole-moment matrix (transition
/// moments off the diagonal, permanent moments on it). Values are stored in
/// atomic units. Immutable after construction; transformations return copies.
class MolecularModel {
 public:
  /// Validates all class invariants; throws ValidationError on violation.
  MolecularModel(std::string label, std::vector<double> energies,
                 std::vector<double> widths, std::vector<Vec3> dipoles,
                 Representation representation = Representation::standard);

  const std::string& label() const { return label_; }
  std::size_t levels() const { return energies_.size(); }
  double energy(std::size_t r) const { return energies_.at(r); }
  double width(std::size_t r) const { return widths_.at(r); }
  const std::vector<double>& energies() const { return energies_; }
  const std::vector<double>& widths() const { return widths_; }
  Representation representation() const { return representation_; }

  /// Dipole moment vector mu_rs. Row-major storage, r*L + s.
  const Vec3& mu(std::size_t r, std::size_t s) const {
    return dipoles_.at(r * levels() + s);
  }
  const std::vector<Vec3>& dipoles() const { return dipoles_; }

 private:
  std::string label_;
  std::vector<double> energies_;
  std::vector<double> widths_;
  std::vector<Vec3> dipoles_;
  Representation representation_;
};

/// Parse and validate a molecule document (JSON text, schema in README),
/// converting declared units to atomic units. The result is always in the
/// standard representation.
MolecularModel load_model(const std::string& json_text);
MolecularModel load_model_file(const std::string& path);

/// Serialize back to the molecule document schema in the requested units.
/// indent < 0 gives compact single-line output.
std::string serialize_model(const MolecularModel& m,
                            EnergyUnit energy_unit = EnergyUnit::hartree,
                            DipoleUnit dipole_unit = DipoleUnit::au,
                            int indent = -1);

/// Shift every diagonal moment by -mu_00 so the ground-state permanent dipole
/// vanishes; off-diagonal moments, energies and widths are unchanged.
MolecularModel to_fluctuation(const MolecularModel& m);

/// Apply a proper rotation to every dipole vector.
MolecularModel rotate_model(const MolecularModel& m, const Mat3& rotation);

}  // namespace shgbeta
