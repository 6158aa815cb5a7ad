#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "shgbeta/beta.hpp"
#include "shgbeta/geometry.hpp"

namespace shgbeta {

using Polarization = std::array<std::complex<double>, 3>;

/// One radiation mode: wavevector, complex unit polarization transverse to
/// it, and the quantization volume.
class PhotonMode {
 public:
  /// Throws ValidationError unless |k| > 0, V > 0, |e| = 1 within 1e-12 and
  /// e.k = 0 within 1e-12*|k|.
  PhotonMode(const Vec3& wavevector, const Polarization& polarization,
             double volume);

  const Vec3& wavevector() const { return k_; }
  double wavenumber() const { return knorm_; }
  const Polarization& polarization() const { return pol_; }
  double volume() const { return volume_; }

 private:
  Vec3 k_;
  double knorm_;
  Polarization pol_;
  double volume_;
};

/// Fundamental and harmonic modes plus the initial photon occupation of the
/// fundamental. Requires |k'| = 2|k| within 1e-12 relative and n >= 0.
class SHGConfig {
 public:
  SHGConfig(PhotonMode fundamental, PhotonMode harmonic, long n);

  const PhotonMode& fundamental() const { return fundamental_; }
  const PhotonMode& harmonic() const { return harmonic_; }
  long occupation() const { return n_; }

 private:
  PhotonMode fundamental_;
  PhotonMode harmonic_;
  long n_;
};

/// Per-mode field scale (hbar*c*|k| / (2*eps0*V))^{1/2}.
double mode_normalization(const PhotonMode& mode);

/// -i (hbar*c/(2*eps0*V))^{3/2} (k^2 k')^{1/2} sqrt(n(n-1)).
std::complex<double> shg_prefactor(const SHGConfig& cfg);

/// Full single-center amplitude: prefactor times the radiation-tensor
/// contraction conj(e'_i) e_j e_k b_ijk. The tensor must have been evaluated
/// at omega = c|k| of the fundamental (1e-12 relative), else ValidationError.
std::complex<double> contract_amplitude(const SHGConfig& cfg,
                                        const BetaTensor& b);

/// Free-field energy sum over modes: (n + 1/2) hbar c |k| each.
double mode_energy(const std::vector<std::pair<PhotonMode, long>>& occupations);

}  // namespace shgbeta
