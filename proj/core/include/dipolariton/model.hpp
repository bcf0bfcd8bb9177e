#pragma once

#include "dipolariton/linalg.hpp"
#include "dipolariton/units.hpp"

#include <cstddef>

namespace dipolariton {

/// Rung basis order: |n-1, IX>, |n-1, DX>, |n, g>.
enum BasisState : std::size_t { kIX = 0, kDX = 1, kPhoton = 2 };

/// Device constants of the dot-molecule / cavity system. Rates are stored
/// already converted to energies through hbar.
struct SystemParams {
  Energy omega_c;      // cavity mode
  Energy delta_ix_dx;  // omega_IX - omega_DX
  Energy delta_c_dx;   // omega_C - omega_DX
  Length d;            // interdot distance
  Energy tunneling;    // J
  Energy coupling;     // g
  Energy kappa;        // cavity photon escape
  Energy gamma_dx;     // direct-exciton recombination
  Energy gamma_ix;     // indirect-exciton recombination

  /// Throws InvalidParameter if any domain constraint is violated.
  void validate() const;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Parameter set of the reference device: omega_C = 1320.7 meV,
/// Delta_c,dx = 10.7 meV, d = 15 nm, J = 0.828 meV, g = kappa = 2pi 16 GHz,
/// gamma_DX = 2pi 0.1 GHz, gamma_IX = 0. Delta_ix,dx = -8.625 meV places the
/// tunneling resonance at -5.75 kV/cm.
SystemParams reference_params();

struct RungMatrix {
  int n = 1;
  Matrix3c entries{};
  bool hermitian = false;
};

/// Hermitian rung Hamiltonian. Interdot coupling enters as -J/2.
RungMatrix build_hermitian(const SystemParams& p, int n, Field f);

/// Non-Hermitian effective rung Hamiltonian. Interdot coupling enters as +J/2;
/// exciton rows lose (i/2)[(n-1) kappa + gamma], the photon row (i/2) n kappa.
RungMatrix build_effective(const SystemParams& p, int n, Field f);

/// Sum of the loss rates appearing on the diagonal of build_effective (as energies):
/// (2(n-1) + n) kappa + gamma_DX + gamma_IX.
Energy total_loss(const SystemParams& p, int n);

}  // namespace dipolariton
