#pragma once

#include "dipolariton/sweep.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace dipolariton {

struct CsvMetadata {
  /// Output of echo_config, written as "# "-prefixed lines.
  std::string config_echo;
  Labeling labeling = Labeling::Both;
  HamiltonianKind kind = HamiltonianKind::Effective;
};

/// Real number with 12 significant digits; "inf" for infinities, never "-0".
std::string format_real(double v);

/// Column names, in output order, for a labeling policy.
std::vector<std::string> csv_columns(Labeling labeling);

/// Writes '#' metadata lines, the header and one line per row. Output is a pure
/// function of the arguments. Throws InvalidParameter for empty `rows`.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, const CsvMetadata& meta);

std::string to_csv(const std::vector<SweepRow>& rows, const CsvMetadata& meta);

/// Writes to `path`; I/O failures raise Error naming the path.
void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path, const CsvMetadata& meta);

}  // namespace dipolariton
