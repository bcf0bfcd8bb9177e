// dipolariton: sweeps, resonance search and diagnostics for a double quantum
// dot coupled to a single cavity mode.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 numerical failure.

#include "dipolariton/config.hpp"
#include "dipolariton/csv.hpp"
#include "dipolariton/errors.hpp"
#include "dipolariton/spectral.hpp"
#include "dipolariton/sweep.hpp"
#include "dipolariton/validation.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <thread>

namespace dp = dipolariton;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

dp::Config resolve_config(const std::string& path) {
  return path.empty() ? dp::default_config() : dp::load_config(path);
}

std::optional<dp::Labeling> parse_labeling(const std::string& s) {
  if (s == "energy") return dp::Labeling::EnergyOrdered;
  if (s == "tracked") return dp::Labeling::Tracked;
  if (s == "both") return dp::Labeling::Both;
  return std::nullopt;
}

void print_matrix(std::ostream& os, const dp::Matrix3c& m) {
  static constexpr const char* kNames[] = {"IX", "DX", "C "};
  for (int i = 0; i < 3; ++i) {
    os << "  " << kNames[i] << " |";
    for (int j = 0; j < 3; ++j)
      os << ' ' << std::setw(14) << m[i][j].real() << (m[i][j].imag() < 0 ? " - " : " + ") << std::setw(11)
         << std::abs(m[i][j].imag()) << "i";
    os << '\n';
  }
}

int run_eigen(const dp::Config& config, double field, bool hermitian) {
  const dp::Field f = dp::units::kV_per_cm(field);
  const dp::RungMatrix h = hermitian ? dp::build_hermitian(config.params, config.sweep.n, f)
                                     : dp::build_effective(config.params, config.sweep.n, f);
  const dp::EigenDecomposition e = dp::eig3(h);
  const dp::BranchSet set = dp::energy_ordered(e);

  std::cout << std::setprecision(10);
  std::cout << "F = " << field << " kV/cm, n = " << h.n << ", " << (hermitian ? "hermitian" : "effective")
            << " rung matrix (meV), basis (IX, DX, C):\n";
  print_matrix(std::cout, h.entries);
  std::cout << "||H||_F = " << e.frobenius_norm << " meV, max eigenvector overlap = " << e.max_overlap
            << (e.near_exceptional ? " (near exceptional point)" : "") << '\n';
  for (dp::Branch b : dp::kBranches) {
    const dp::EigenPair& pair = set[b];
    const dp::PolaritonBranch pb = dp::hopfield(b, pair);
    const dp::Rate gamma = hermitian ? dp::Rate(0.0) : dp::decay_rate(pair, e.frobenius_norm);
    const dp::Observables obs = dp::observables(pb, config.params.d, gamma);
    const dp::Regime regime = dp::classify_regime(obs, config.thresholds, config.params.d);
    std::cout << dp::branch_name(b) << ": E = " << pair.value.real() << " meV, Im E = " << pair.value.imag()
              << " meV, residual = " << pair.residual << '\n'
              << "    C_IX = " << pb.c_ix << ", C_DX = " << pb.c_dx << ", C_g = " << pb.c_g << '\n'
              << "    |C|^2 = (" << obs.fractions[0] << ", " << obs.fractions[1] << ", " << obs.fractions[2]
              << "), BPD = " << obs.bpd << ", EDM = " << obs.edm.value() << " nm\n"
              << "    Gamma = " << dp::units::to_ghz(obs.gamma) << " GHz, tau = " << dp::format_real(obs.tau.value())
              << " ps, regime = " << dp::regime_name(regime) << '\n';
  }
  return kExitOk;
}

int run_resonance(const dp::Config& config) {
  const dp::ResonanceReport r = dp::find_resonance(config.params, config.sweep.n);
  std::cout << std::setprecision(12);
  std::cout << "closed_form_F_kVcm = " << r.closed_form.value() << '\n'
            << "numeric_F_kVcm = " << r.numeric.value() << '\n'
            << "numeric_gap_meV = " << r.numeric_gap.value() << '\n';
  if (r.numeric_at_boundary) std::cout << "warning: numeric minimum on the search-window boundary\n";
  return kExitOk;
}

int run_validate(const dp::Config& config) {
  const auto results = dp::run_invariant_checks(config);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polariton spectrum, mixing and lifetimes of a double quantum dot in a microcavity"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dp::version()));

  std::string config_path;
  app.add_option("-c,--config", config_path, "Config file (default: built-in reference device)")
      ->check(CLI::ExistingFile);

  auto* sweep = app.add_subcommand("sweep", "Bias-field sweep written as CSV");
  std::string out_path;
  std::string out_dir;
  std::string labeling_flag;
  bool hermitian = false;
  bool effective = false;
  unsigned workers = 0;
  sweep->add_option("-o,--out", out_path, "Output CSV path (default: config 'output' or stdout)");
  sweep->add_option("--output-dir", out_dir, "Directory that relative output paths are resolved against");
  auto* herm_flag = sweep->add_flag("--hermitian", hermitian, "Use the Hermitian rung Hamiltonian");
  sweep->add_flag("--effective", effective, "Use the non-Hermitian effective Hamiltonian")->excludes(herm_flag);
  sweep->add_option("--labeling", labeling_flag, "Branch labels: energy, tracked or both")
      ->check(CLI::IsMember({"energy", "tracked", "both"}));
  sweep->add_option("-j,--workers", workers, "Worker threads (default: hardware concurrency)");

  auto* resonance = app.add_subcommand("resonance", "Closed-form and numeric tunneling resonance field");

  auto* eigen = app.add_subcommand("eigen", "Full diagnostic dump at one bias field");
  double eigen_field = 0.0;
  bool eigen_hermitian = false;
  eigen->add_option("-f,--f", eigen_field, "Bias field in kV/cm")->required();
  eigen->add_flag("--hermitian", eigen_hermitian, "Use the Hermitian rung Hamiltonian");

  auto* validate = app.add_subcommand("validate", "Run the built-in invariant checks");

  for (auto* sub : {sweep, resonance, eigen, validate})
    sub->add_option("-c,--config", config_path, "Config file")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    dp::Config config = resolve_config(config_path);

    if (*sweep) {
      if (hermitian) config.kind = dp::HamiltonianKind::Hermitian;
      if (effective) config.kind = dp::HamiltonianKind::Effective;
      if (!labeling_flag.empty()) config.sweep.labeling = *parse_labeling(labeling_flag);
      if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

      const auto rows = dp::run_sweep(config.params, config.sweep, config.kind, config.thresholds, workers);
      const dp::CsvMetadata meta{dp::echo_config(config), config.sweep.labeling, config.kind};

      std::string target = out_path.empty() ? config.output.value_or("") : out_path;
      if (target.empty() || target == "-") {
        dp::write_csv(std::cout, rows, meta);
      } else {
        fs::path path(target);
        if (!out_dir.empty() && path.is_relative()) path = fs::path(out_dir) / path;
        dp::emit_csv(rows, path, meta);
        std::cerr << "wrote " << rows.size() << " rows to " << path.string() << '\n';
      }
      return kExitOk;
    }
    if (*resonance) return run_resonance(config);
    if (*eigen) return run_eigen(config, eigen_field, eigen_hermitian);
    if (*validate) return run_validate(config);
  } catch (const dp::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const dp::ModelViolation& e) {
    std::cerr << "model violation: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const dp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
