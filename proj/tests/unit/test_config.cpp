#include "dipolariton/config.hpp"
#include "dipolariton/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

using namespace dipolariton;
using namespace dipolariton::units;

namespace {

const std::string kMinimal =
    "omega_c_meV = 1320.7\n"
    "delta_ix_dx_meV = -8.625\n"
    "delta_c_dx_meV = 10.7\n"
    "d_nm = 15\n"
    "J_meV = 0.828\n"
    "g_2pi_GHz = 16\n";

std::string replace_line(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

int error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("shipped default file matches the built-in defaults") {
  const Config c = load_config(DIPOLARITON_DEFAULT_CONFIG);
  const Config d = default_config();
  CHECK(c == d);
  CHECK(c.params.omega_c.value() == 1320.7);
  CHECK(c.params.delta_c_dx.value() == 10.7);
  CHECK(c.params.d.value() == 15.0);
  CHECK(c.params.tunneling.value() == 0.828);
  CHECK(c.params.coupling.value() == doctest::Approx(0.06617068314566406).epsilon(1e-15));
  CHECK(c.params.kappa.value() == doctest::Approx(0.06617068314566406).epsilon(1e-15));
  CHECK(c.params.gamma_dx.value() == doctest::Approx(4.1356676966040033e-4).epsilon(1e-15));
  CHECK(c.params.gamma_ix.value() == 0.0);
  CHECK(c.sweep.f_start.value() == -25.75);
  CHECK(c.sweep.f_end.value() == 14.25);
  CHECK(c.sweep.steps == 801);
  CHECK(c.kind == HamiltonianKind::Effective);
  CHECK_FALSE(c.output.has_value());
}

TEST_CASE("optional keys take their defaults") {
  const Config c = parse_config(kMinimal);
  CHECK(c.params.kappa.value() == 0.0);
  CHECK(c.params.gamma_dx.value() == 0.0);
  CHECK(c.sweep == SweepSpec::around_resonance(c.params));
  CHECK(c.thresholds == RegimeThresholds::defaults_for(c.params.d));
  CHECK(c.sweep.labeling == Labeling::Both);
}

TEST_CASE("negative tunneling is rejected") {
  CHECK_THROWS_AS(parse_config(replace_line(kMinimal, "J_meV = 0.828", "J_meV = -1")), ConfigError);
}

TEST_CASE("coupling given in meV or as angular frequency agree") {
  const Config a = parse_config(kMinimal);
  const Config b = parse_config(replace_line(kMinimal, "g_2pi_GHz = 16", "g_meV = 0.0662"));
  const RungMatrix ha = build_effective(a.params, 1, kV_per_cm(-5.75));
  const RungMatrix hb = build_effective(b.params, 1, kV_per_cm(-5.75));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double x = std::abs(ha.entries[i][j]), y = std::abs(hb.entries[i][j]);
      if (x == 0.0) {
        CHECK(y == 0.0);
        continue;
      }
      // Three significant figures.
      CHECK(std::abs(x - y) / x < 5e-3);
    }
  CHECK(std::abs(a.params.coupling.value() - b.params.coupling.value()) / a.params.coupling.value() < 5e-3);
}

TEST_CASE("micro-eV suffix") {
  const Config c = parse_config(replace_line(kMinimal, "J_meV = 0.828", "J_ueV = 828"));
  CHECK(c.params.tunneling.value() == doctest::Approx(0.828).epsilon(1e-15));
}

TEST_CASE("errors carry line numbers") {
  CHECK(error_line(kMinimal + "colour_meV = 3\n") == 7);
  CHECK(error_line(kMinimal + "kappa = 3\n") == 7);
  CHECK(error_line(kMinimal + "kappa_nm = 3\n") == 7);
  CHECK(error_line(kMinimal + "kappa_kVcm = 3\n") == 7);
  CHECK(error_line(kMinimal + "steps_meV = 3\n") == 7);
  CHECK(error_line(kMinimal + "\n# comment\nJ_ueV = 800\n") == 9);
  CHECK(error_line(kMinimal + "steps = many\n") == 7);
  CHECK(error_line(kMinimal + "steps = 2.5\n") == 7);
  CHECK(error_line(kMinimal + "d_nm = 1.5x\n") == 7);
  CHECK(error_line(kMinimal + "just words\n") == 7);
  CHECK(error_line(kMinimal + "labeling = sideways\n") == 7);
  CHECK(error_line(kMinimal + "mode = lossy\n") == 7);
  CHECK(error_line("omega_c_meV = 1320.7\n = 3\n") == 2);
  CHECK(error_line("omega_c_meV =\n") == 1);
}

TEST_CASE("missing required keys and half-open windows") {
  CHECK_THROWS_WITH_AS(parse_config(replace_line(kMinimal, "d_nm = 15\n", "")), "missing required key 'd'",
                       ConfigError);
  CHECK_THROWS_AS(parse_config(replace_line(kMinimal, "g_2pi_GHz = 16\n", "")), ConfigError);
  CHECK_THROWS_AS(parse_config(kMinimal + "F_start_kVcm = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(kMinimal + "F_start_kVcm = 0\nF_end_kVcm = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(kMinimal + "steps = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(kMinimal + "edm_high_nm = 20\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(kMinimal + "bpd_low = 0.6\n"), ConfigError);
}

TEST_CASE("load errors name the file") {
  const auto dir = std::filesystem::temp_directory_path() / "dipolariton_config_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "bad.cfg";
  {
    std::ofstream out(path);
    out << kMinimal << "kappa_meV = 1\nkappa_meV = 2\n";
  }
  try {
    load_config(path);
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 8);
    CHECK(std::string(e.what()) == path.string() + ": line 8: 'kappa' already set on line 7");
  }
  CHECK_THROWS_AS(load_config(dir / "absent.cfg"), ConfigError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("echo round trip") {
  CHECK(parse_config(echo_config(default_config())) == default_config());
  std::mt19937_64 rng(0x5eed0006);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int draw = 0; draw < 200; ++draw) {
    Config c = default_config();
    c.params.omega_c = meV(1000.0 + 500.0 * u(rng));
    c.params.delta_ix_dx = meV(-50.0 + 100.0 * u(rng));
    c.params.delta_c_dx = meV(-20.0 + 40.0 * u(rng));
    c.params.d = nm(5.0 + 20.0 * u(rng));
    c.params.tunneling = meV(2.0 * u(rng));
    c.params.coupling = angular_ghz_to_energy(40.0 * u(rng));
    c.params.kappa = angular_ghz_to_energy(40.0 * u(rng));
    c.params.gamma_dx = angular_ghz_to_energy(u(rng));
    c.params.gamma_ix = meV(1e-5 * u(rng));
    c.sweep.f_start = kV_per_cm(-50.0 * u(rng));
    c.sweep.f_end = kV_per_cm(1.0 + 50.0 * u(rng));
    c.sweep.steps = 2 + draw;
    c.sweep.n = 1 + draw % 5;
    c.sweep.labeling = static_cast<Labeling>(draw % 3);
    c.kind = draw % 2 ? HamiltonianKind::Hermitian : HamiltonianKind::Effective;
    c.thresholds = RegimeThresholds::defaults_for(c.params.d);
    c.thresholds.bpd_high = 0.2 + 0.2 * u(rng);
    if (draw % 4 == 0) c.output = "out_" + std::to_string(draw) + ".csv";
    const std::string text = echo_config(c);
    CHECK(parse_config(text) == c);
    CHECK(echo_config(parse_config(text)) == text);
  }
}

TEST_CASE("version string") { CHECK(!version().empty()); }
