#include "dipolariton/validation.hpp"

#include <doctest.h>

#include <random>

using namespace dipolariton;
using namespace dipolariton::units;

namespace {

void require_all_pass(const Config& c) {
  const auto results = run_invariant_checks(c);
  CHECK(results.size() == 6);
  for (const CheckResult& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
    CHECK_FALSE(r.detail.empty());
  }
}

}  // namespace

TEST_CASE("default configuration passes every invariant") { require_all_pass(default_config()); }

TEST_CASE("Hermitian mode and higher rungs pass") {
  Config c = default_config();
  c.kind = HamiltonianKind::Hermitian;
  c.sweep.steps = 101;
  require_all_pass(c);
  c.kind = HamiltonianKind::Effective;
  c.sweep.n = 3;
  require_all_pass(c);
}

TEST_CASE("random devices pass") {
  std::mt19937_64 rng(0x5eed0007);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int draw = 0; draw < 10; ++draw) {
    Config c = default_config();
    c.params.delta_ix_dx = meV(-40.0 + 80.0 * u(rng));
    c.params.delta_c_dx = meV(-15.0 + 30.0 * u(rng));
    c.params.d = nm(8.0 + 15.0 * u(rng));
    c.params.tunneling = meV(0.1 + 1.5 * u(rng));
    c.params.coupling = meV(0.02 + 0.3 * u(rng));
    c.params.kappa = meV(0.1 * u(rng));
    c.params.gamma_dx = meV(0.01 * u(rng));
    c.params.gamma_ix = meV(0.001 * u(rng));
    c.sweep = SweepSpec::around_resonance(c.params, 1 + draw % 3, kV_per_cm(20.0), 101);
    c.thresholds = RegimeThresholds::defaults_for(c.params.d);
    require_all_pass(c);
  }
}
