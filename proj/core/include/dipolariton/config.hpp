#pragma once

#include "dipolariton/model.hpp"
#include "dipolariton/polariton.hpp"
#include "dipolariton/sweep.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace dipolariton {

std::string_view version();

/// Everything a run needs. Loaded from a line-oriented "key = value" file.
///
/// Numeric keys carry a unit suffix checked against the dimension of the
/// quantity they set:
///   energies  _meV, _ueV, _2pi_GHz   (omega_c, delta_ix_dx, delta_c_dx, J, g,
///                                     kappa, gamma_dx, gamma_ix)
///   lengths   _nm                    (d, edm_high, edm_low)
///   fields    _kVcm                  (F_start, F_end)
/// Unitless keys: steps, n, bpd_high, bpd_low, labeling, mode, output.
struct Config {
  SystemParams params;
  SweepSpec sweep;
  HamiltonianKind kind = HamiltonianKind::Effective;
  RegimeThresholds thresholds;
  std::optional<std::string> output;

  friend bool operator==(const Config&, const Config&) = default;
};

/// Reference device, 801-point sweep over F* +- 20 kV/cm, effective Hamiltonian.
Config default_config();

/// Parses config text. Throws ConfigError (with line number where one applies)
/// on syntax errors, unknown or duplicate keys, missing or mismatched unit
/// suffixes, missing required keys and out-of-domain values.
Config parse_config(std::string_view text);

/// Reads and parses a config file. Throws ConfigError, including for I/O errors.
Config load_config(const std::filesystem::path& path);

/// Canonical "key = value" text of `c`; parse_config(echo_config(c)) == c.
std::string echo_config(const Config& c);

}  // namespace dipolariton
