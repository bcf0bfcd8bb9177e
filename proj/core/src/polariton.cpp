#include "dipolariton/polariton.hpp"

#include "dipolariton/errors.hpp"

#include <cmath>
#include <sstream>

namespace dipolariton {

PolaritonBranch hopfield(Branch label, const EigenPair& e) {
  return PolaritonBranch{label, e.value, e.vector[kIX], e.vector[kDX], e.vector[kPhoton]};
}

Fractions fractions(const PolaritonBranch& b) {
  return {std::norm(b.c_ix), std::norm(b.c_dx), std::norm(b.c_g)};
}

double bpd(const PolaritonBranch& b) { return std::abs(b.c_g) * std::abs(b.c_dx); }

Length edm(const PolaritonBranch& b, Length d) {
  if (!(d.value() > 0.0)) throw InvalidParameter("edm: interdot distance must be positive");
  return d * std::abs(b.c_ix);
}

Rate decay_rate(const EigenPair& e, double matrix_norm) {
  const double im = e.value.imag();
  if (im > 1e-12 * matrix_norm) {
    std::ostringstream os;
    os << "eigenvalue " << e.value << " has positive imaginary part (gain) in a dissipative model";
    throw ModelViolation(os.str());
  }
  const double gamma_energy = im < 0.0 ? -2.0 * im : 0.0;
  return units::energy_to_rate(Energy(gamma_energy));
}

Time lifetime(Rate gamma) {
  if (units::to_ghz(gamma) < kDarkRate_GHz) return units::rate_to_lifetime(Rate(0.0));
  return units::rate_to_lifetime(gamma);
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::ConventionalPolariton: return "conventional";
    case Regime::DarkDipolariton: return "dark_dipolariton";
    case Regime::BrightDipolariton: return "bright_dipolariton";
    case Regime::Unclassified: return "unclassified";
  }
  return "unclassified";
}

RegimeThresholds RegimeThresholds::defaults_for(Length d) {
  return RegimeThresholds{0.3, 0.05, d * 0.5, d * 0.1};
}

void RegimeThresholds::validate(Length d) const {
  if (!(bpd_low > 0.0 && bpd_low < bpd_high && bpd_high < 0.5)) {
    throw InvalidParameter("regime thresholds need 0 < bpd_low < bpd_high < 0.5");
  }
  if (!(edm_low.value() > 0.0 && edm_low < edm_high && edm_high < d)) {
    throw InvalidParameter("regime thresholds need 0 < edm_low < edm_high < d");
  }
}

Observables observables(const PolaritonBranch& b, Length d, Rate gamma) {
  return Observables{fractions(b), bpd(b), edm(b, d), gamma, lifetime(gamma)};
}

Regime classify_regime(const Observables& obs, const RegimeThresholds& t, Length d) {
  t.validate(d);
  if (obs.bpd >= t.bpd_high && obs.edm <= t.edm_low) return Regime::ConventionalPolariton;
  if (obs.bpd <= t.bpd_low && obs.edm >= t.edm_high) return Regime::DarkDipolariton;
  if (obs.bpd > t.bpd_low && obs.edm > t.edm_low) return Regime::BrightDipolariton;
  return Regime::Unclassified;
}

}  // namespace dipolariton
