#include "shgbeta/radiation.hpp"

#include <cmath>
#include <utility>

#include "shgbeta/constants.hpp"
#include "shgbeta/errors.hpp"

namespace shgbeta {

namespace {

constexpr double kGeomTol = 1e-12;

}  // namespace

PhotonMode::PhotonMode(const Vec3& wavevector, const Polarization& polarization,
                       double volume)
    : k_(wavevector), knorm_(norm(wavevector)), pol_(polarization),
      volume_(volume) {
  if (!(knorm_ > 0.0)) throw ValidationError("photon mode: |k| must be > 0");
  if (!(volume_ > 0.0))
    throw ValidationError("photon mode: quantization volume must be > 0");
  double norm2 = 0.0;
  std::complex<double> along_k = 0.0;
  for (int a = 0; a < 3; ++a) {
    norm2 += std::norm(pol_[a]);
    along_k += pol_[a] * k_[a];
  }
  if (std::abs(norm2 - 1.0) > kGeomTol)
    throw ValidationError("photon mode: polarization must have unit norm");
  if (std::abs(along_k) > kGeomTol * knorm_)
    throw ValidationError("photon mode: polarization must be transverse to k");
}

SHGConfig::SHGConfig(PhotonMode fundamental, PhotonMode harmonic, long n)
    : fundamental_(std::move(fundamental)), harmonic_(std::move(harmonic)),
      n_(n) {
  const double k = fundamental_.wavenumber();
  const double kp = harmonic_.wavenumber();
  if (std::abs(kp - 2.0 * k) > kGeomTol * 2.0 * k)
    throw ValidationError("shg config: harmonic |k'| must equal 2|k|");
  if (n_ < 0) throw ValidationError("shg config: occupation must be >= 0");
}

double mode_normalization(const PhotonMode& mode) {
  const Constants& au = atomic_units;
  return std::sqrt(au.hbar * au.c * mode.wavenumber() /
                   (2.0 * au.eps0 * mode.volume()));
}

std::complex<double> shg_prefactor(const SHGConfig& cfg) {
  const Constants& au = atomic_units;
  const double k = cfg.fundamental().wavenumber();
  const double kp = cfg.harmonic().wavenumber();
  const double vol = cfg.fundamental().volume();
  const double n = static_cast<double>(cfg.occupation());
  const double field = std::pow(au.hbar * au.c / (2.0 * au.eps0 * vol), 1.5);
  const double modes = std::sqrt(k * k * kp);
  const double occupation = std::sqrt(n * (n - 1.0));
  return std::complex<double>(0.0, -1.0) * field * modes * occupation;
}

std::complex<double> contract_amplitude(const SHGConfig& cfg,
                                        const BetaTensor& b) {
  const Constants& au = atomic_units;
  const double omega_cfg = au.c * cfg.fundamental().wavenumber();
  if (std::abs(b.omega - omega_cfg) >
      1e-12 * std::max(std::abs(b.omega), omega_cfg))
    throw ValidationError(
        "contract_amplitude: tensor frequency does not match c|k| of the "
        "fundamental mode");

  const Polarization& ein = cfg.fundamental().polarization();
  const Polarization& eout = cfg.harmonic().polarization();
  std::complex<double> contraction = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        contraction += std::conj(eout[i]) * ein[j] * ein[k] * b.at(i, j, k);
  return shg_prefactor(cfg) * contraction;
}

double mode_energy(
    const std::vector<std::pair<PhotonMode, long>>& occupations) {
  const Constants& au = atomic_units;
  double total = 0.0;
  for (const auto& [mode, n] : occupations) {
    if (n < 0) throw ValidationError("mode_energy: occupation must be >= 0");
    total += (static_cast<double>(n) + 0.5) * au.hbar * au.c *
             mode.wavenumber();
  }
  return total;
}

}  // namespace shgbeta
