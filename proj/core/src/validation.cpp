#include "dipolariton/validation.hpp"

#include "dipolariton/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dipolariton {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

template <class Fn>
CheckResult run_check(std::string name, Fn&& fn) {
  CheckResult r{std::move(name), false, {}};
  try {
    auto [ok, detail] = fn();
    r.passed = ok;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_invariant_checks(const Config& config) {
  const SystemParams& p = config.params;
  const SweepSpec& spec = config.sweep;
  std::vector<CheckResult> out;

  out.push_back(run_check("hopfield normalization and column sums", [&] {
    const auto rows = run_sweep(p, spec, HamiltonianKind::Hermitian, config.thresholds);
    double worst_row = 0.0, worst_col = 0.0;
    for (const auto& row : rows) {
      std::array<double, 3> col{};
      for (const auto& r : row.ordered) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) {
          s += r.obs.fractions[k];
          col[k] += r.obs.fractions[k];
        }
        worst_row = std::max(worst_row, std::abs(s - 1.0));
      }
      for (double c : col) worst_col = std::max(worst_col, std::abs(c - 1.0));
    }
    return std::pair{worst_row <= 1e-12 && worst_col <= 1e-10,
                     "max |sum f - 1| = " + fmt(worst_row) + ", max |column - 1| = " + fmt(worst_col)};
  }));

  out.push_back(run_check("decay-rate trace rule", [&] {
    const auto rows = run_sweep(p, spec, HamiltonianKind::Effective, config.thresholds);
    const double expected = units::energy_to_rate(total_loss(p, spec.n)).value();
    double worst = 0.0;
    for (const auto& row : rows) {
      double sum = 0.0;
      for (const auto& r : row.ordered) sum += r.obs.gamma.value();
      worst = std::max(worst, expected > 0 ? std::abs(sum - expected) / expected : std::abs(sum));
    }
    return std::pair{worst <= 1e-10, "max relative deviation = " + fmt(worst)};
  }));

  out.push_back(run_check("coupling-sign gauge equivalence", [&] {
    SystemParams lossless = p;
    lossless.kappa = lossless.gamma_dx = lossless.gamma_ix = Energy(0.0);
    double worst = 0.0;
    for (int i = 0; i < spec.steps; i += std::max(1, spec.steps / 50)) {
      const Field f = spec.at(i);
      const auto a = eig3(build_hermitian(lossless, spec.n, f));
      const auto b = eig3(build_effective(lossless, spec.n, f));
      for (int k = 0; k < 3; ++k) {
        worst = std::max(worst, std::abs(a.pairs[k].value - b.pairs[k].value) / a.frobenius_norm);
        for (int c = 0; c < 3; ++c)
          worst = std::max(worst, std::abs(std::abs(a.pairs[k].vector[c]) - std::abs(b.pairs[k].vector[c])));
      }
    }
    return std::pair{worst <= 1e-12, "max deviation = " + fmt(worst)};
  }));

  out.push_back(run_check("Jaynes-Cummings splitting 2 g sqrt(n)", [&] {
    SystemParams jc = p;
    jc.tunneling = Energy(0.0);
    jc.delta_c_dx = Energy(0.0);
    // IX pushed far below the doublet.
    const Field far = resonance_field(jc) + units::energy_to_bias(Energy(100.0), jc.d);
    const auto e = eig3(build_hermitian(jc, spec.n, far));
    const double split = e.pairs[2].value.real() - e.pairs[1].value.real();
    const double expected = 2.0 * jc.coupling.value() * std::sqrt(static_cast<double>(spec.n));
    const double rel = expected > 0 ? std::abs(split - expected) / expected : std::abs(split);
    return std::pair{rel <= 1e-10, "splitting " + fmt(split) + " meV, expected " + fmt(expected)};
  }));

  out.push_back(run_check("tunneling resonance and gap", [&] {
    const ResonanceReport r = find_resonance(p, spec.n);
    const double gap_rel = p.tunneling.value() > 0
                               ? std::abs(r.numeric_gap.value() - p.tunneling.value()) / p.tunneling.value()
                               : r.numeric_gap.value();
    const double df = std::abs(r.numeric.value() - r.closed_form.value());
    return std::pair{!r.numeric_at_boundary && gap_rel <= 1e-8 && df <= 1e-4,
                     "F* = " + fmt(r.closed_form.value()) + " kV/cm, numeric " + fmt(r.numeric.value()) +
                         ", gap " + fmt(r.numeric_gap.value()) + " meV"};
  }));

  out.push_back(run_check("observable bounds", [&] {
    const auto rows = run_sweep(p, spec, config.kind, config.thresholds);
    bool ok = true;
    for (const auto& row : rows)
      for (const auto& r : row.ordered)
        ok = ok && r.obs.bpd <= 0.5 + 1e-15 && r.obs.edm <= p.d * (1.0 + 1e-15) && r.obs.gamma.value() >= 0.0;
    return std::pair{ok, ok ? std::string("0 <= bpd <= 0.5, 0 <= edm <= d, gamma >= 0") : std::string("violated")};
  }));

  return out;
}

}  // namespace dipolariton
