#pragma once

#include "dipolariton/model.hpp"
#include "dipolariton/polariton.hpp"
#include "dipolariton/spectral.hpp"

#include <array>
#include <functional>
#include <string_view>
#include <vector>

namespace dipolariton {

enum class Labeling { EnergyOrdered, Tracked, Both };
enum class HamiltonianKind { Hermitian, Effective };

std::string_view labeling_name(Labeling l);
std::string_view hamiltonian_name(HamiltonianKind k);

struct SweepSpec {
  Field f_start;
  Field f_end;
  int steps = 801;
  int n = 1;
  Labeling labeling = Labeling::Both;

  /// Requires steps >= 2, f_start != f_end, n >= 1.
  void validate() const;

  /// Grid point i: f_start + i * (f_end - f_start) / (steps - 1), with the
  /// last point pinned to f_end.
  Field at(int i) const;

  /// [F* - half_width, F* + half_width] around the closed-form resonance.
  static SweepSpec around_resonance(const SystemParams& p, int n = 1, Field half_width = Field(20.0),
                                    int steps = 801);

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct BranchRecord {
  Branch label = Branch::LP;
  cplx energy;
  Observables obs;
  Regime regime = Regime::Unclassified;
};

struct SweepRow {
  Field field;
  std::array<BranchRecord, 3> ordered;
  /// Filled when labeling is Tracked or Both; seeded by energy order at f_start.
  std::array<BranchRecord, 3> tracked;
  bool has_tracked = false;
  double overlap_total = 3.0;
  double overlap_min = 1.0;
  bool near_exceptional = false;
  double max_residual = 0.0;
};

/// One row per grid point, in axis order. Eigendecompositions are spread over
/// `workers` threads; branch tracking runs afterwards in axis order, so the
/// result does not depend on the worker count. Throws SweepFailure carrying the
/// first failing field.
std::vector<SweepRow> run_sweep(const SystemParams& p, const SweepSpec& spec, HamiltonianKind kind,
                                const RegimeThresholds& thresholds, unsigned workers = 1);

/// Field where the IX and DX diagonal entries coincide: Delta_ix,dx / (e d).
Field resonance_field(const SystemParams& p);

struct ResonanceReport {
  Field closed_form;
  /// Minimum of the exciton-exciton gap with g = 0.
  Field numeric;
  Energy numeric_gap;
  bool numeric_at_boundary = false;
};

ResonanceReport find_resonance(const SystemParams& p, int n = 1);

enum class BranchPair { LowerMiddle, MiddleUpper };

struct GapResult {
  Field field;
  Energy gap;
  /// The coarse scan found its minimum on the window edge; the result is
  /// the edge value, not an interior anticrossing.
  bool at_boundary = false;
};

/// Minimizes Re(E_upper) - Re(E_lower) of two adjacent energy-ordered branches
/// over [lo, hi]: coarse scan on `samples` points, then golden-section search
/// in the bracketing interval. Requires samples >= 3.
GapResult min_gap(const SystemParams& p, int n, BranchPair pair, Field lo, Field hi, int samples = 64,
                  HamiltonianKind kind = HamiltonianKind::Hermitian);

struct ScalarMinimum {
  double x = 0.0;
  double fx = 0.0;
  bool at_boundary = false;
};

/// Scan-then-golden-section minimization of a 1-D function on [lo, hi].
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                      int samples = 64, double rel_tol = 1e-13, int max_iter = 300);

}  // namespace dipolariton
