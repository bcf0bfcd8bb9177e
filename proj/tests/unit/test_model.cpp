#include "dipolariton/errors.hpp"
#include "dipolariton/model.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dipolariton;
using namespace dipolariton::units;

namespace {

SystemParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SystemParams p;
  p.omega_c = meV(1000.0 + 500.0 * u(rng));
  p.delta_ix_dx = meV(-50.0 + 100.0 * u(rng));
  p.delta_c_dx = meV(-20.0 + 40.0 * u(rng));
  p.d = nm(5.0 + 20.0 * u(rng));
  p.tunneling = meV(2.0 * u(rng));
  p.coupling = meV(0.5 * u(rng));
  p.kappa = meV(0.2 * u(rng));
  p.gamma_dx = meV(0.01 * u(rng));
  p.gamma_ix = meV(0.001 * u(rng));
  return p;
}

}  // namespace

TEST_CASE("all couplings off gives the bare diagonal") {
  SystemParams p = reference_params();
  p.coupling = meV(0.0);
  p.tunneling = meV(0.0);
  const RungMatrix h = build_hermitian(p, 1, kV_per_cm(0.0));
  CHECK(h.hermitian);
  CHECK(h.entries[kIX][kIX].real() == doctest::Approx(1320.7 - 8.625 - 10.7).epsilon(1e-15));
  CHECK(h.entries[kDX][kDX].real() == doctest::Approx(1320.7 - 10.7).epsilon(1e-15));
  CHECK(h.entries[kPhoton][kPhoton].real() == 1320.7);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(h.entries[i][j] == cplx(0.0));
}

TEST_CASE("reference parameters at zero field") {
  const SystemParams p = reference_params();
  const RungMatrix h = build_hermitian(p, 1, kV_per_cm(0.0));
  CHECK(h.entries[kDX][kPhoton].real() == p.coupling.value());
  CHECK(h.entries[kIX][kDX].real() == -0.414);
  CHECK(h.entries[kDX][kIX].real() == -0.414);
  CHECK(h.entries[kIX][kPhoton] == cplx(0.0));
  CHECK(h.entries[kPhoton][kIX] == cplx(0.0));
}

TEST_CASE("light-matter coupling scales as sqrt(n)") {
  const SystemParams p = reference_params();
  const RungMatrix h4 = build_hermitian(p, 4, kV_per_cm(1.0));
  CHECK(h4.entries[kDX][kPhoton].real() == 2.0 * p.coupling.value());
  const RungMatrix e4 = build_effective(p, 4, kV_per_cm(1.0));
  CHECK(e4.entries[kPhoton][kDX].real() == 2.0 * p.coupling.value());
}

TEST_CASE("invalid rung and parameters are rejected") {
  SystemParams p = reference_params();
  CHECK_THROWS_AS(build_hermitian(p, 0, kV_per_cm(0.0)), InvalidParameter);
  CHECK_THROWS_AS(build_effective(p, -1, kV_per_cm(0.0)), InvalidParameter);
  p.tunneling = meV(-0.1);
  CHECK_THROWS_AS(build_hermitian(p, 1, kV_per_cm(0.0)), InvalidParameter);
  p = reference_params();
  p.d = nm(0.0);
  CHECK_THROWS_AS(p.validate(), InvalidParameter);
  p = reference_params();
  p.kappa = meV(-1e-9);
  CHECK_THROWS_AS(p.validate(), InvalidParameter);
}

TEST_CASE("effective Hamiltonian loss placement") {
  SystemParams p = reference_params();
  SUBCASE("rung 1 with only cavity loss") {
    p.gamma_dx = meV(0.0);
    p.coupling = meV(0.0);
    p.tunneling = meV(0.0);
    const RungMatrix h = build_effective(p, 1, kV_per_cm(0.0));
    CHECK_FALSE(h.hermitian);
    CHECK(h.entries[kIX][kIX].imag() == 0.0);
    CHECK(h.entries[kDX][kDX].imag() == 0.0);
    CHECK(h.entries[kPhoton][kPhoton].imag() == -0.5 * p.kappa.value());
  }
  SUBCASE("rung 1 with reference losses") {
    const RungMatrix h = build_effective(p, 1, kV_per_cm(0.0));
    CHECK(h.entries[kDX][kDX].imag() == doctest::Approx(-2.0678338483020017e-4).epsilon(1e-13));
    CHECK(h.entries[kPhoton][kPhoton].imag() == doctest::Approx(-0.03308534157283203).epsilon(1e-13));
    CHECK(h.entries[kIX][kIX].imag() == 0.0);
  }
  SUBCASE("rung 2") {
    p.gamma_dx = meV(0.0);
    const RungMatrix h = build_effective(p, 2, kV_per_cm(0.0));
    CHECK(h.entries[kIX][kIX].imag() == -0.5 * p.kappa.value());
    CHECK(h.entries[kDX][kDX].imag() == -0.5 * p.kappa.value());
    CHECK(h.entries[kPhoton][kPhoton].imag() == -p.kappa.value());
  }
}

TEST_CASE("property: builders agree up to the interdot sign") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> field(-60.0, 60.0);
  std::uniform_int_distribution<int> rung(1, 6);
  for (int i = 0; i < 500; ++i) {
    const SystemParams p = random_params(rng);
    const int n = rung(rng);
    const Field f = kV_per_cm(field(rng));
    const RungMatrix h = build_hermitian(p, n, f);
    const RungMatrix e = build_effective(p, n, f);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        const bool interdot = (r == kIX && c == kDX) || (r == kDX && c == kIX);
        const double expected = interdot ? -h.entries[r][c].real() : h.entries[r][c].real();
        CHECK(e.entries[r][c].real() == expected);
        if (r != c) CHECK(e.entries[r][c].imag() == 0.0);
        CHECK(h.entries[r][c] == std::conj(h.entries[c][r]));
      }
    CHECK(h.entries[kIX][kPhoton] == cplx(0.0));
    CHECK(e.entries[kPhoton][kIX] == cplx(0.0));

    // Trace in closed form.
    const cplx tr = e.entries[0][0] + e.entries[1][1] + e.entries[2][2];
    const double re = 3.0 * n * p.omega_c.value() + p.delta_ix_dx.value() - 2.0 * p.delta_c_dx.value() -
                      bias_to_energy(f, p.d).value();
    const double im = -0.5 * (2.0 * (n - 1) * p.kappa.value() + n * p.kappa.value() + p.gamma_dx.value() +
                              p.gamma_ix.value());
    CHECK(tr.real() == doctest::Approx(re).epsilon(1e-14));
    CHECK(tr.imag() == doctest::Approx(im).epsilon(1e-13));
    CHECK(total_loss(p, n).value() == doctest::Approx(-2.0 * im).epsilon(1e-13));
  }
}

TEST_CASE("property: IX level is affine in the field with slope -e d") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> field(-40.0, 40.0);
  for (int i = 0; i < 200; ++i) {
    const SystemParams p = random_params(rng);
    const double f0 = field(rng);
    const double h = 0.25;
    const double a = build_hermitian(p, 1, kV_per_cm(f0 - h)).entries[kIX][kIX].real();
    const double b = build_hermitian(p, 1, kV_per_cm(f0 + h)).entries[kIX][kIX].real();
    const double slope = (b - a) / (2.0 * h);
    CHECK(slope == doctest::Approx(-0.1 * p.d.value()).epsilon(1e-11));
  }
}

TEST_CASE("property: field slope is exact once the cavity offset is removed") {
  // With omega_c ~ 1300 meV in the entry the difference quotient is limited
  // by its ulp; at omega_c = 0 the slope resolves to 1e-14.
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> field(-40.0, 40.0);
  for (int i = 0; i < 200; ++i) {
    SystemParams p = random_params(rng);
    p.omega_c = meV(0.0);
    p.delta_c_dx = meV(0.0);
    const double f0 = field(rng);
    const double h = 8.0;
    const double a = build_hermitian(p, 1, kV_per_cm(f0 - h)).entries[kIX][kIX].real();
    const double b = build_hermitian(p, 1, kV_per_cm(f0 + h)).entries[kIX][kIX].real();
    CHECK((b - a) / (2.0 * h) == doctest::Approx(-0.1 * p.d.value()).epsilon(1e-14));
  }
}

TEST_CASE("equal detunings give exactly equal diagonal entries") {
  SystemParams p = reference_params();
  p.delta_c_dx = meV(0.0);
  const RungMatrix h = build_hermitian(p, 1, kV_per_cm(-5.75));
  CHECK(h.entries[kIX][kIX] == h.entries[kDX][kDX]);
  CHECK(h.entries[kDX][kDX] == h.entries[kPhoton][kPhoton]);
}
