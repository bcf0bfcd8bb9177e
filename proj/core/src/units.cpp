#include "dipolariton/units.hpp"

#include "dipolariton/errors.hpp"

#include <cmath>
#include <string>

namespace dipolariton::units {

Energy angular_ghz_to_energy(double cyclic_ghz) {
  if (!(cyclic_ghz >= 0.0)) {
    throw DimensionError("angular frequency must be non-negative, got " + std::to_string(cyclic_ghz) +
                         " (2 pi GHz)");
  }
  return Energy(kHbar_meV_s * (kTwoPi * cyclic_ghz * 1e9));
}

double energy_to_angular_ghz(Energy e) { return e.value() / kHbar_meV_s / 1e9 / kTwoPi; }

Energy rate_to_energy(Rate r) { return Energy(r.value() * kHbar_meV_ps); }

Rate energy_to_rate(Energy e) { return Rate(e.value() / kHbar_meV_ps); }

Energy bias_to_energy(Field f, Length d) {
  if (!(d.value() > 0.0)) {
    throw InvalidParameter("interdot distance must be positive, got " + std::to_string(d.value()) + " nm");
  }
  return Energy(kBias_meV_per_nm_kVcm * d.value() * f.value());
}

Field energy_to_bias(Energy e, Length d) {
  if (!(d.value() > 0.0)) {
    throw InvalidParameter("interdot distance must be positive, got " + std::to_string(d.value()) + " nm");
  }
  return Field(e.value() / (kBias_meV_per_nm_kVcm * d.value()));
}

Time rate_to_lifetime(Rate r) {
  if (!(r.value() > 0.0)) return Time(std::numeric_limits<double>::infinity());
  return Time(1.0 / r.value());
}

}  // namespace dipolariton::units
