#include "dipolariton/sweep.hpp"

#include "dipolariton/errors.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

namespace dipolariton {

std::string_view labeling_name(Labeling l) {
  switch (l) {
    case Labeling::EnergyOrdered: return "energy";
    case Labeling::Tracked: return "tracked";
    case Labeling::Both: return "both";
  }
  return "both";
}

std::string_view hamiltonian_name(HamiltonianKind k) {
  return k == HamiltonianKind::Hermitian ? "hermitian" : "effective";
}

void SweepSpec::validate() const {
  if (steps < 2) throw InvalidParameter("sweep needs at least 2 steps");
  if (f_start == f_end) throw InvalidParameter("sweep start and end fields must differ");
  if (!std::isfinite(f_start.value()) || !std::isfinite(f_end.value()))
    throw InvalidParameter("sweep bounds must be finite");
  if (n < 1) throw InvalidParameter("rung index must be >= 1");
}

Field SweepSpec::at(int i) const {
  if (i == steps - 1) return f_end;
  const double step = (f_end.value() - f_start.value()) / (steps - 1);
  return Field(f_start.value() + i * step);
}

SweepSpec SweepSpec::around_resonance(const SystemParams& p, int n, Field half_width, int steps) {
  const Field center = resonance_field(p);
  return SweepSpec{center - half_width, center + half_width, steps, n, Labeling::Both};
}

namespace {

RungMatrix build(const SystemParams& p, int n, Field f, HamiltonianKind kind) {
  return kind == HamiltonianKind::Hermitian ? build_hermitian(p, n, f) : build_effective(p, n, f);
}

std::array<BranchRecord, 3> records(const BranchSet& set, const SystemParams& p, double norm,
                                    HamiltonianKind kind, const RegimeThresholds& thresholds) {
  std::array<BranchRecord, 3> out;
  for (Branch b : kBranches) {
    const EigenPair& e = set[b];
    const PolaritonBranch pb = hopfield(b, e);
    const Rate gamma = kind == HamiltonianKind::Effective ? decay_rate(e, norm) : Rate(0.0);
    BranchRecord& r = out[static_cast<int>(b)];
    r.label = b;
    r.energy = e.value;
    r.obs = observables(pb, p.d, gamma);
    r.regime = classify_regime(r.obs, thresholds, p.d);
  }
  return out;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SystemParams& p, const SweepSpec& spec, HamiltonianKind kind,
                                const RegimeThresholds& thresholds, unsigned workers) {
  p.validate();
  spec.validate();
  thresholds.validate(p.d);

  const auto count = static_cast<std::size_t>(spec.steps);
  std::vector<std::optional<EigenDecomposition>> eig(count);
  std::vector<std::exception_ptr> failures(count);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        eig[i] = eig3(build(p, spec.n, spec.at(static_cast<int>(i)), kind));
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(count));
  if (workers == 1) {
    work(0, count);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t begin = 0; begin < count; begin += chunk)
      pool.emplace_back(work, begin, std::min(count, begin + chunk));
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (!failures[i]) continue;
    const double f = spec.at(static_cast<int>(i)).value();
    std::ostringstream where;
    where << std::setprecision(12) << " at F = " << f << " kV/cm";
    try {
      std::rethrow_exception(failures[i]);
    } catch (const NumericalFailure& e) {
      throw SweepFailure(std::string(e.what()) + where.str(), f,
                         e.best_residual());
    } catch (const Error& e) {
      throw SweepFailure(std::string(e.what()) + where.str(), f,
                         std::numeric_limits<double>::infinity());
    }
  }

  const bool track = spec.labeling != Labeling::EnergyOrdered;
  std::vector<SweepRow> rows(count);
  BranchSet previous;
  for (std::size_t i = 0; i < count; ++i) {
    const EigenDecomposition& e = *eig[i];
    SweepRow& row = rows[i];
    row.field = spec.at(static_cast<int>(i));
    row.near_exceptional = e.near_exceptional;
    for (const auto& pair : e.pairs) row.max_residual = std::max(row.max_residual, pair.residual);

    const BranchSet ordered = energy_ordered(e);
    row.ordered = records(ordered, p, e.frobenius_norm, kind, thresholds);
    if (track) {
      const BranchSet tracked = i == 0 ? ordered : track_branches(previous, e.pairs);
      row.tracked = records(tracked, p, e.frobenius_norm, kind, thresholds);
      row.has_tracked = true;
      row.overlap_total = tracked.total_overlap;
      row.overlap_min = tracked.min_overlap;
      previous = tracked;
    }
  }
  return rows;
}

Field resonance_field(const SystemParams& p) { return units::energy_to_bias(p.delta_ix_dx, p.d); }

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                      int samples, double rel_tol, int max_iter) {
  if (samples < 3) throw InvalidParameter("golden-section search needs at least 3 samples");
  if (!(lo < hi)) throw InvalidParameter("golden-section search needs lo < hi");

  const double h = (hi - lo) / (samples - 1);
  int best = 0;
  double best_f = f(lo);
  for (int i = 1; i < samples; ++i) {
    const double x = i == samples - 1 ? hi : lo + i * h;
    const double fx = f(x);
    if (fx < best_f) {
      best_f = fx;
      best = i;
    }
  }
  if (best == 0 || best == samples - 1) return {best == 0 ? lo : hi, best_f, true};

  double a = lo + (best - 1) * h;
  double b = lo + (best + 1) * h;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > rel_tol * std::max(1.0, std::abs(c) + std::abs(d)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  ScalarMinimum out{fc < fd ? c : d, std::min(fc, fd), false};
  if (best_f < out.fx) out = {lo + best * h, best_f, false};
  return out;
}

GapResult min_gap(const SystemParams& p, int n, BranchPair pair, Field lo, Field hi, int samples,
                  HamiltonianKind kind) {
  p.validate();
  const int lower = pair == BranchPair::LowerMiddle ? 0 : 1;
  auto gap = [&](double f) {
    const EigenDecomposition e = eig3(build(p, n, Field(f), kind));
    return e.pairs[lower + 1].value.real() - e.pairs[lower].value.real();
  };
  const ScalarMinimum m = golden_section_minimize(gap, lo.value(), hi.value(), samples);
  return GapResult{Field(m.x), Energy(m.fx), m.at_boundary};
}

ResonanceReport find_resonance(const SystemParams& p, int n) {
  p.validate();
  if (n < 1) throw InvalidParameter("rung index must be >= 1");
  ResonanceReport report;
  report.closed_form = resonance_field(p);

  SystemParams uncoupled = p;
  uncoupled.coupling = Energy(0.0);
  // With g = 0 the photon is a pure basis state; the gap of interest is the
  // one between the two remaining exciton-like eigenvalues.
  auto exciton_gap = [&](double f) {
    const EigenDecomposition e = eig3(build_hermitian(uncoupled, n, Field(f)));
    int photon = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(e.pairs[i].vector[kPhoton]) > std::abs(e.pairs[photon].vector[kPhoton])) photon = i;
    std::array<double, 2> levels{};
    int k = 0;
    for (int i = 0; i < 3; ++i)
      if (i != photon) levels[k++] = e.pairs[i].value.real();
    return std::abs(levels[1] - levels[0]);
  };
  const double tunneling_width = units::energy_to_bias(p.tunneling, p.d).value();
  const double half = std::max(1.0, 20.0 * tunneling_width);
  const double center = report.closed_form.value();
  const ScalarMinimum m = golden_section_minimize(exciton_gap, center - half, center + half, 41);
  report.numeric = Field(m.x);
  report.numeric_gap = Energy(m.fx);
  report.numeric_at_boundary = m.at_boundary;
  return report;
}

}  // namespace dipolariton
