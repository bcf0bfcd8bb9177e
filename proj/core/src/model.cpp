#include "dipolariton/model.hpp"

#include "dipolariton/errors.hpp"

#include <cmath>
#include <string>

namespace dipolariton {

namespace {

void require_non_negative(Energy e, const char* name) {
  if (!(e.value() >= 0.0) || !std::isfinite(e.value())) {
    throw InvalidParameter(std::string(name) + " must be finite and non-negative, got " +
                           std::to_string(e.value()) + " meV");
  }
}

void require_rung(int n) {
  if (n < 1) throw InvalidParameter("rung index must be >= 1, got " + std::to_string(n));
}

// Real parts shared by both builders. The IX detuning is formed before adding
// omega_C n so that equal diagonal entries compare exactly equal.
Matrix3c real_part(const SystemParams& p, int n, Field f, double j_sign) {
  require_rung(n);
  p.validate();
  const double wn = p.omega_c.value() * n;
  const double bias = units::bias_to_energy(f, p.d).value();
  const double ix_detuning = (p.delta_ix_dx.value() - bias) - p.delta_c_dx.value();
  const double jc = p.coupling.value() * std::sqrt(static_cast<double>(n));
  const double half_j = j_sign * 0.5 * p.tunneling.value();

  Matrix3c h{};
  h[kIX][kIX] = wn + ix_detuning;
  h[kDX][kDX] = wn - p.delta_c_dx.value();
  h[kPhoton][kPhoton] = wn;
  h[kIX][kDX] = h[kDX][kIX] = half_j;
  h[kDX][kPhoton] = h[kPhoton][kDX] = jc;
  return h;
}

}  // namespace

void SystemParams::validate() const {
  if (!std::isfinite(omega_c.value()) || !std::isfinite(delta_ix_dx.value()) ||
      !std::isfinite(delta_c_dx.value())) {
    throw InvalidParameter("level energies must be finite");
  }
  if (!(d.value() > 0.0) || !std::isfinite(d.value())) {
    throw InvalidParameter("interdot distance must be positive, got " + std::to_string(d.value()) + " nm");
  }
  require_non_negative(tunneling, "J");
  require_non_negative(coupling, "g");
  require_non_negative(kappa, "kappa");
  require_non_negative(gamma_dx, "gamma_dx");
  require_non_negative(gamma_ix, "gamma_ix");
}

SystemParams reference_params() {
  using namespace units;
  return SystemParams{
      .omega_c = meV(1320.7),
      .delta_ix_dx = meV(-8.625),
      .delta_c_dx = meV(10.7),
      .d = nm(15.0),
      .tunneling = meV(0.828),
      .coupling = angular_ghz_to_energy(16.0),
      .kappa = angular_ghz_to_energy(16.0),
      .gamma_dx = angular_ghz_to_energy(0.1),
      .gamma_ix = meV(0.0),
  };
}

RungMatrix build_hermitian(const SystemParams& p, int n, Field f) {
  return RungMatrix{n, real_part(p, n, f, -1.0), true};
}

RungMatrix build_effective(const SystemParams& p, int n, Field f) {
  Matrix3c h = real_part(p, n, f, +1.0);
  const double k = p.kappa.value();
  h[kIX][kIX] -= cplx(0.0, 0.5 * ((n - 1) * k + p.gamma_ix.value()));
  h[kDX][kDX] -= cplx(0.0, 0.5 * ((n - 1) * k + p.gamma_dx.value()));
  h[kPhoton][kPhoton] -= cplx(0.0, 0.5 * (n * k));
  return RungMatrix{n, h, false};
}

Energy total_loss(const SystemParams& p, int n) {
  return p.kappa * static_cast<double>(2 * (n - 1) + n) + p.gamma_dx + p.gamma_ix;
}

}  // namespace dipolariton
