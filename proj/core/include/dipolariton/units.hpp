#pragma once

#include <compare>
#include <limits>

namespace dipolariton {

enum class Dimension { Energy, Field, Length, Rate, Time, Dimensionless };

/// A real number tagged at compile time with a physical dimension.
///
/// Each dimension has one canonical unit in which `value()` is expressed:
///   Energy meV, Field kV/cm, Length nm, Rate 1/ps, Time ps.
/// Mixing dimensions in `+`/`-` does not compile.
template <Dimension D>
class Quantity {
 public:
  static constexpr Dimension dimension = D;

  constexpr Quantity() = default;
  constexpr explicit Quantity(double canonical_value) : value_(canonical_value) {}

  constexpr double value() const { return value_; }

  constexpr Quantity operator-() const { return Quantity(-value_); }
  constexpr Quantity& operator+=(Quantity o) { value_ += o.value_; return *this; }
  constexpr Quantity& operator-=(Quantity o) { value_ -= o.value_; return *this; }
  constexpr Quantity& operator*=(double s) { value_ *= s; return *this; }
  constexpr Quantity& operator/=(double s) { value_ /= s; return *this; }

  friend constexpr Quantity operator+(Quantity a, Quantity b) { return Quantity(a.value_ + b.value_); }
  friend constexpr Quantity operator-(Quantity a, Quantity b) { return Quantity(a.value_ - b.value_); }
  friend constexpr Quantity operator*(Quantity a, double s) { return Quantity(a.value_ * s); }
  friend constexpr Quantity operator*(double s, Quantity a) { return Quantity(s * a.value_); }
  friend constexpr Quantity operator/(Quantity a, double s) { return Quantity(a.value_ / s); }
  friend constexpr double operator/(Quantity a, Quantity b) { return a.value_ / b.value_; }

  friend constexpr auto operator<=>(Quantity, Quantity) = default;
  friend constexpr bool operator==(Quantity, Quantity) = default;

 private:
  double value_ = 0.0;
};

using Energy = Quantity<Dimension::Energy>;
using Field = Quantity<Dimension::Field>;
using Length = Quantity<Dimension::Length>;
using Rate = Quantity<Dimension::Rate>;
using Time = Quantity<Dimension::Time>;

namespace units {

// CODATA 2018. hbar = 6.582119569e-16 eV s (exact-derived from h and e).
inline constexpr double kHbar_meV_s = 6.582119569e-13;
inline constexpr double kHbar_meV_ps = 6.582119569e-1;
// e = 1.602176634e-19 C (exact). With d in nm and F in kV/cm,
// e*d*F = e * 1e-9 m * 1e5 V/m = 1e-4 eV = 0.1 meV per (nm kV/cm).
inline constexpr double kElementaryCharge_C = 1.602176634e-19;
inline constexpr double kBias_meV_per_nm_kVcm = 0.1;
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

constexpr Energy meV(double v) { return Energy(v); }
constexpr Energy ueV(double v) { return Energy(v * 1e-3); }
constexpr Field kV_per_cm(double v) { return Field(v); }
constexpr Length nm(double v) { return Length(v); }
constexpr Rate per_ps(double v) { return Rate(v); }
constexpr Rate per_s(double v) { return Rate(v * 1e-12); }
/// Rate given in units of 1e9 s^-1 (angular, not divided by 2 pi).
constexpr Rate ghz(double v) { return Rate(v * 1e-3); }
constexpr Time ps(double v) { return Time(v); }

constexpr double to_per_s(Rate r) { return r.value() * 1e12; }
constexpr double to_ghz(Rate r) { return r.value() * 1e3; }

/// hbar * (2 pi * cyclic_ghz * 1e9 rad/s), in meV. The argument is the number
/// quoted in front of "2 pi GHz". Throws DimensionError for negative input.
Energy angular_ghz_to_energy(double cyclic_ghz);

/// Inverse of angular_ghz_to_energy.
double energy_to_angular_ghz(Energy e);

/// E = hbar * Gamma.
Energy rate_to_energy(Rate r);

/// Gamma = E / hbar.
Rate energy_to_rate(Energy e);

/// e * d * F. Throws InvalidParameter when d <= 0.
Energy bias_to_energy(Field f, Length d);

/// Field whose bias energy over `d` equals `e`. Throws InvalidParameter when d <= 0.
Field energy_to_bias(Energy e, Length d);

/// tau = 1 / Gamma. Non-positive rates map to an infinite lifetime.
Time rate_to_lifetime(Rate r);

inline bool is_infinite(Time t) { return t.value() == std::numeric_limits<double>::infinity(); }

}  // namespace units
}  // namespace dipolariton
