#include "dipolariton/csv.hpp"

#include "dipolariton/config.hpp"
#include "dipolariton/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace dipolariton {

namespace {

constexpr std::array<std::string_view, 3> kFractionNames{"fIX", "fDX", "fC"};

void append_branch_columns(std::vector<std::string>& cols, std::string_view prefix) {
  auto add = [&](std::string_view stem, std::string_view unit) {
    for (Branch b : kBranches) {
      std::string name(prefix);
      name += stem;
      name += '_';
      name += branch_name(b);
      name += unit;
      cols.push_back(std::move(name));
    }
  };
  add("E", "_meV");
  add("ImE", "_meV");
  for (Branch b : kBranches)
    for (auto f : kFractionNames) cols.push_back(std::string(prefix) + std::string(f) + "_" + std::string(branch_name(b)));
  add("BPD", "");
  add("EDM", "_nm");
  add("Gamma", "_GHz");
  add("tau", "_ps");
  add("regime", "");
}

void append_branch_values(std::ostream& out, const std::array<BranchRecord, 3>& recs) {
  for (const auto& r : recs) out << ',' << format_real(r.energy.real());
  for (const auto& r : recs) out << ',' << format_real(r.energy.imag());
  for (const auto& r : recs)
    for (double f : r.obs.fractions) out << ',' << format_real(f);
  for (const auto& r : recs) out << ',' << format_real(r.obs.bpd);
  for (const auto& r : recs) out << ',' << format_real(r.obs.edm.value());
  for (const auto& r : recs) out << ',' << format_real(units::to_ghz(r.obs.gamma));
  for (const auto& r : recs) out << ',' << format_real(r.obs.tau.value());
  for (const auto& r : recs) out << ',' << regime_name(r.regime);
}

bool wants_ordered(Labeling l) { return l != Labeling::Tracked; }
bool wants_tracked(Labeling l) { return l != Labeling::EnergyOrdered; }

}  // namespace

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  if (v == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
  return std::string(buf.data(), r.ptr);
}

std::vector<std::string> csv_columns(Labeling labeling) {
  std::vector<std::string> cols{"F_kVcm"};
  if (wants_ordered(labeling)) append_branch_columns(cols, "");
  if (wants_tracked(labeling)) {
    append_branch_columns(cols, "trk_");
    cols.emplace_back("overlap_total");
    cols.emplace_back("overlap_min");
  }
  cols.emplace_back("near_exceptional");
  cols.emplace_back("residual_max");
  return cols;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, const CsvMetadata& meta) {
  if (rows.empty()) throw InvalidParameter("write_csv: no rows");

  out << "# dipolariton sweep\n"
      << "# version: " << version() << '\n'
      << "# hamiltonian: " << hamiltonian_name(meta.kind) << '\n'
      << "# labeling: " << labeling_name(meta.labeling) << '\n'
      << "# units: E meV, F kV/cm, EDM nm, Gamma 1e9 s^-1 (population decay rate), tau ps\n"
      << "# fractions: fIX = |C_0,IX|^2, fDX = |C_0,DX|^2, fC = |C_1,g|^2\n"
      << "# columns by figure: spectrum F,E_*; mixing F,f*_*; brightness/dipole F,BPD_*,EDM_*; "
         "decay F,Gamma_*,tau_*\n"
      << "# tracked columns (trk_*) follow eigenvector overlap from the first row\n"
      << "# config:\n";
  std::istringstream echo(meta.config_echo);
  for (std::string line; std::getline(echo, line);) out << "#   " << line << '\n';

  const auto cols = csv_columns(meta.labeling);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';

  for (const auto& row : rows) {
    out << format_real(row.field.value());
    if (wants_ordered(meta.labeling)) append_branch_values(out, row.ordered);
    if (wants_tracked(meta.labeling)) {
      if (!row.has_tracked) throw InvalidParameter("write_csv: tracked labels requested but not computed");
      append_branch_values(out, row.tracked);
      out << ',' << format_real(row.overlap_total) << ',' << format_real(row.overlap_min);
    }
    out << ',' << (row.near_exceptional ? 1 : 0) << ',' << format_real(row.max_residual) << '\n';
  }
}

std::string to_csv(const std::vector<SweepRow>& rows, const CsvMetadata& meta) {
  std::ostringstream os;
  write_csv(os, rows, meta);
  return os.str();
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path, const CsvMetadata& meta) {
  const std::string text = to_csv(rows, meta);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

}  // namespace dipolariton
