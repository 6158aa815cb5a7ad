#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shgbeta/geometry.hpp"
#include "shgbeta/model.hpp"

namespace shgbeta {

/// Overall sign of both static-environment terms. as_printed keeps the
/// leading minus of the transformed-Hamiltonian correction; classical flips
/// it to the textbook static dipole-dipole energy sign.
enum class SignConvention { as_printed, classical };

struct AssemblyEntry {
  Vec3 position;  // bohr
  MolecularModel model;
};

/// Positioned polar molecules. All pairwise separations must be at least the
/// cutoff (> 0) and every member model must be in the standard
/// representation; violations throw ValidationError.
class Assembly {
 public:
  Assembly(std::vector<AssemblyEntry> entries, double cutoff);

  std::size_t size() const { return entries_.size(); }
  const AssemblyEntry& entry(std::size_t i) const { return entries_.at(i); }
  const std::vector<AssemblyEntry>& entries() const { return entries_; }
  double cutoff() const { return cutoff_; }

 private:
  std::vector<AssemblyEntry> entries_;
  double cutoff_;
};

/// [mu1.mu2 - 3(mu1.Rhat)(Rhat.mu2)] / (4 pi eps0 |Rvec|^3).
/// Throws ValidationError when |Rvec| < cutoff.
double pair_orientation_factor(const Vec3& mu1, const Vec3& mu2,
                               const Vec3& rvec, double cutoff = 1e-6);

/// Ground-state scalar shifts and optional per-molecule perturbation
/// matrices in each molecule's level basis (row-major L x L).
struct EnvironmentShift {
  std::vector<double> per_molecule_scalar;
  double total_scalar = 0.0;
  std::vector<std::vector<double>> per_molecule_matrix;
};

/// Scalar part only: per_molecule_scalar[X] = -(1/2) sum_{X' != X} of the
/// ground-dipole pair factor; total is the sum over sites (each unordered
/// pair counted exactly once).
EnvironmentShift ground_state_shift(
    const Assembly& a, SignConvention convention = SignConvention::as_printed);

/// Level-basis perturbation of site X from the ground dipoles around it,
/// built on the fluctuation moments: element (l,j) =
/// -sum_{X' != X} pair factor with mu2 = fluctuation mu_lj of X. Row-major.
std::vector<double> perturbation_matrix(
    const Assembly& a, std::size_t site,
    SignConvention convention = SignConvention::as_printed);

/// Scalars plus all per-site matrices in one pass.
EnvironmentShift environment_shift(
    const Assembly& a, SignConvention convention = SignConvention::as_printed);

/// Extension: fold the diagonal of the site's perturbation matrix into its
/// level energies (first-order correction) and return the shifted model.
MolecularModel apply_first_order_shift(
    const Assembly& a, std::size_t site,
    SignConvention convention = SignConvention::as_printed);

/// Parse an assembly document (JSON array of {"position", "molecule"}).
/// "molecule" may be an inline molecule object or a path relative to the
/// assembly file. Positions are in bohr.
Assembly load_assembly_file(const std::string& path, double cutoff);

}  // namespace shgbeta
