#pragma once

#include "dipolariton/spectral.hpp"
#include "dipolariton/units.hpp"

#include <array>
#include <string_view>

namespace dipolariton {

/// Eigenstate expanded over the bare rung basis:
/// |alpha> = c_g |n, g> + c_dx |n-1, DX> + c_ix |n-1, IX>.
struct PolaritonBranch {
  Branch label = Branch::LP;
  cplx energy;
  cplx c_ix;
  cplx c_dx;
  cplx c_g;
};

/// |C|^2 per basis state, in basis order (IX, DX, photon).
using Fractions = std::array<double, 3>;

PolaritonBranch hopfield(Branch label, const EigenPair& e);
Fractions fractions(const PolaritonBranch& b);

/// Bright polariton degree |c_g c_dx|.
double bpd(const PolaritonBranch& b);

/// Exciton dipole moment d |c_ix|. Throws InvalidParameter for d <= 0.
Length edm(const PolaritonBranch& b, Length d);

/// Population decay rate Gamma = -2 Im(lambda).
///
/// `matrix_norm` is ||H||_F of the matrix `e` came from; Im(lambda) above
/// 1e-12 * matrix_norm is gain and raises ModelViolation.
Rate decay_rate(const EigenPair& e, double matrix_norm);

/// Rates below this are reported as an infinite lifetime.
inline constexpr double kDarkRate_GHz = 1e-6;

/// tau = 1/Gamma, infinite below kDarkRate_GHz.
Time lifetime(Rate gamma);

enum class Regime { ConventionalPolariton, DarkDipolariton, BrightDipolariton, Unclassified };

std::string_view regime_name(Regime r);

/// Cut-offs for the regime classifier. They are heuristics, not model output.
struct RegimeThresholds {
  double bpd_high = 0.3;
  double bpd_low = 0.05;
  Length edm_high;
  Length edm_low;

  /// bpd_high = 0.3, bpd_low = 0.05, edm_high = d/2, edm_low = d/10.
  static RegimeThresholds defaults_for(Length d);

  /// Requires 0 < bpd_low < bpd_high < 0.5 and 0 < edm_low < edm_high < d.
  void validate(Length d) const;

  friend bool operator==(const RegimeThresholds&, const RegimeThresholds&) = default;
};

struct Observables {
  Fractions fractions{};
  double bpd = 0.0;
  Length edm;
  Rate gamma;
  Time tau;
};

Observables observables(const PolaritonBranch& b, Length d, Rate gamma);

/// Regime (I) conventional: bpd >= bpd_high and edm <= edm_low.
/// Regime (II) dark dipolariton: bpd <= bpd_low and edm >= edm_high.
/// Regime (III) bright dipolariton: bpd > bpd_low and edm > edm_low, when
/// neither of the above holds. Everything else is Unclassified.
Regime classify_regime(const Observables& obs, const RegimeThresholds& t, Length d);

}  // namespace dipolariton
