#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "shgbeta/constants.hpp"
#include "shgbeta/errors.hpp"
#include "shgbeta/radiation.hpp"
#include "test_support.hpp"

using namespace shgbeta;

namespace {

const Polarization kX{1.0, 0.0, 0.0};
const Polarization kY{0.0, 1.0, 0.0};

PhotonMode mode_z(double k, double volume, const Polarization& pol = kX) {
  return PhotonMode({0.0, 0.0, k}, pol, volume);
}

SHGConfig config(double k, double volume, long n, const Polarization& in = kX,
                 const Polarization& out = kX) {
  return SHGConfig(mode_z(k, volume, in), mode_z(2.0 * k, volume, out), n);
}

}  // namespace

TEST_CASE("mode validation") {
  CHECK_THROWS_AS(PhotonMode({0, 0, 0}, kX, 1.0), ValidationError);
  CHECK_THROWS_AS(mode_z(1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(mode_z(1.0, -2.0), ValidationError);
  CHECK_THROWS_AS(PhotonMode({0, 0, 1}, Polarization{2.0, 0.0, 0.0}, 1.0),
                  ValidationError);  // not unit norm
  CHECK_THROWS_AS(PhotonMode({0, 0, 1}, Polarization{0.0, 0.0, 1.0}, 1.0),
                  ValidationError);  // longitudinal
  // circular polarization transverse to z is fine
  const double s = 1.0 / std::sqrt(2.0);
  CHECK_NOTHROW(PhotonMode({0, 0, 1},
                           Polarization{std::complex<double>(s, 0.0),
                                        std::complex<double>(0.0, s), 0.0},
                           1.0));
}

TEST_CASE("shg config validation") {
  CHECK_THROWS_AS(SHGConfig(mode_z(1.0, 1.0), mode_z(3.0, 1.0), 2),
                  ValidationError);
  CHECK_THROWS_AS(config(1.0, 1.0, -1), ValidationError);
  CHECK_NOTHROW(config(1.0, 1.0, 0));
}

TEST_CASE("mode normalization value and scalings") {
  const double two_pi = 2.0 * 3.14159265358979323846;
  const double expected =
      std::sqrt(atomic_units.c * 1.0 / (2.0 * atomic_units.eps0 * two_pi));
  CHECK(mode_normalization(mode_z(1.0, two_pi)) ==
        doctest::Approx(expected).epsilon(1e-15));

  const double base = mode_normalization(mode_z(1.0, 1.0));
  CHECK(mode_normalization(mode_z(1.0, 2.0)) ==
        doctest::Approx(base / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(mode_normalization(mode_z(2.0, 1.0)) ==
        doctest::Approx(base * std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("prefactor occupation bookkeeping") {
  CHECK(std::abs(shg_prefactor(config(0.001, 1e6, 1))) == 0.0);
  CHECK(std::abs(shg_prefactor(config(0.001, 1e6, 0))) == 0.0);

  const auto p2 = shg_prefactor(config(0.001, 1e6, 2));
  const auto p3 = shg_prefactor(config(0.001, 1e6, 3));
  CHECK(std::abs(p3) / std::abs(p2) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  // leading -i: purely imaginary, negative imaginary part
  CHECK(p2.real() == 0.0);
  CHECK(p2.imag() < 0.0);

  // volume scaling V^{-3/2}
  const auto pv = shg_prefactor(config(0.001, 2e6, 2));
  CHECK(std::abs(pv) / std::abs(p2) ==
        doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-12));
}

TEST_CASE("amplitude contraction") {
  const double k = 0.1 / atomic_units.c;
  BetaTensor b;
  b.omega = atomic_units.c * mode_z(k, 1e6).wavenumber();
  b.at(0, 0, 0) = 135.0;

  SUBCASE("single surviving component") {
    const SHGConfig cfg = config(k, 1e6, 2);
    const auto amp = contract_amplitude(cfg, b);
    const auto expect = shg_prefactor(cfg) * 135.0;
    CHECK(std::abs(amp - expect) <= 1e-12 * std::abs(expect));
  }

  SUBCASE("orthogonal harmonic polarization kills the signal") {
    const SHGConfig cfg = config(k, 1e6, 2, kX, kY);
    CHECK(std::abs(contract_amplitude(cfg, b)) == 0.0);
  }

  SUBCASE("frequency mismatch is rejected") {
    BetaTensor wrong = b;
    wrong.omega = 1.25 * b.omega;
    CHECK_THROWS_AS(contract_amplitude(config(k, 1e6, 2), wrong),
                    ValidationError);
  }
}

TEST_CASE("amplitude scales as V^{-3/2} and sqrt(n(n-1))") {
  const double k = 0.08 / atomic_units.c;
  BetaTensor b;
  b.omega = atomic_units.c * mode_z(k, 1.0).wavenumber();
  b.at(0, 0, 0) = 12.5;
  b.at(0, 1, 1) = -3.0;

  const double a_base = std::abs(contract_amplitude(config(k, 1e6, 2), b));
  const double a_bigv = std::abs(contract_amplitude(config(k, 4e6, 2), b));
  CHECK(a_bigv / a_base == doctest::Approx(std::pow(4.0, -1.5)).epsilon(1e-12));

  const double a_n5 = std::abs(contract_amplitude(config(k, 1e6, 5), b));
  CHECK(a_n5 / a_base ==
        doctest::Approx(std::sqrt(20.0 / 2.0)).epsilon(1e-12));
}

TEST_CASE("contraction is invariant under jk-symmetrization") {
  std::mt19937_64 rng(8844);
  const double k = 0.05 / atomic_units.c;
  const double s = 1.0 / std::sqrt(2.0);
  const Polarization circ{std::complex<double>(s, 0.0),
                          std::complex<double>(0.0, s), 0.0};
  for (int trial = 0; trial < 50; ++trial) {
    BetaTensor b;
    b.omega = atomic_units.c * mode_z(k, 1e6).wavenumber();
    for (auto& c : b.components)
      c = {testsupport::uniform(rng, -3.0, 3.0),
           testsupport::uniform(rng, -3.0, 3.0)};
    const SHGConfig cfg = config(k, 1e6, 5, circ, kY);
    const auto raw = contract_amplitude(cfg, b);
    const auto sym = contract_amplitude(cfg, symmetrize(b));
    CHECK(std::abs(raw - sym) <= 1e-12 * std::max(1.0, std::abs(raw)));
  }
}

TEST_CASE("mode energies") {
  CHECK(mode_energy({}) == 0.0);

  const PhotonMode m = mode_z(0.25, 1.0);
  CHECK(mode_energy({{m, 0}}) ==
        doctest::Approx(0.5 * atomic_units.c * 0.25).epsilon(1e-15));

  SUBCASE("elastic bookkeeping: 2 hbar c k equals hbar c k'") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 20; ++trial) {
      const double k = testsupport::uniform(rng, 1e-4, 2.0);
      const PhotonMode fund = mode_z(k, 1.0);
      const PhotonMode harm = mode_z(2.0 * k, 1.0);
      const double quantum_f = atomic_units.c * fund.wavenumber();
      const double quantum_h = atomic_units.c * harm.wavenumber();
      CHECK(2.0 * quantum_f == quantum_h);  // bit-exact

      const long n = 2 + static_cast<long>(rng() % 7);
      const double initial = mode_energy({{fund, n}, {harm, 0}});
      const double final_state = mode_energy({{fund, n - 2}, {harm, 1}});
      CHECK(std::abs(initial - final_state) <= 1e-12 * initial);
    }
  }

  CHECK_THROWS_AS(mode_energy({{m, -1}}), ValidationError);
}
