#include "dipolariton/config.hpp"

#include "dipolariton/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#ifndef DIPOLARITON_VERSION
#define DIPOLARITON_VERSION "0.0.0"
#endif

namespace dipolariton {

std::string_view version() { return DIPOLARITON_VERSION; }

namespace {

struct UnitSuffix {
  std::string_view name;
  Dimension dim;
};

// Longest first so that "_2pi_GHz" wins over any shorter tail.
constexpr std::array<UnitSuffix, 5> kSuffixes{{
    {"2pi_GHz", Dimension::Energy},
    {"kVcm", Dimension::Field},
    {"meV", Dimension::Energy},
    {"ueV", Dimension::Energy},
    {"nm", Dimension::Length},
}};

const std::map<std::string, Dimension, std::less<>>& dimensioned_keys() {
  static const std::map<std::string, Dimension, std::less<>> keys{
      {"omega_c", Dimension::Energy},  {"delta_ix_dx", Dimension::Energy}, {"delta_c_dx", Dimension::Energy},
      {"J", Dimension::Energy},        {"g", Dimension::Energy},           {"kappa", Dimension::Energy},
      {"gamma_dx", Dimension::Energy}, {"gamma_ix", Dimension::Energy},    {"d", Dimension::Length},
      {"edm_high", Dimension::Length}, {"edm_low", Dimension::Length},     {"F_start", Dimension::Field},
      {"F_end", Dimension::Field},
  };
  return keys;
}

constexpr std::array<std::string_view, 7> kPlainKeys{"steps", "n", "bpd_high", "bpd_low",
                                                     "labeling", "mode", "output"};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string value;
  std::string suffix;  // empty for unitless keys
  int line = 0;
};

double parse_real(const std::string& text, int line) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ConfigError("not a number: '" + text + "'", line);
  return v;
}

int parse_int(const std::string& text, int line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError("not an integer: '" + text + "'", line);
  return v;
}

// Splits "base_suffix" into base and suffix; resolves against the known keys.
std::pair<std::string, std::string> split_key(std::string_view key, int line) {
  for (const auto& s : kSuffixes) {
    if (key.size() > s.name.size() + 1 && key.ends_with(s.name) && key[key.size() - s.name.size() - 1] == '_') {
      std::string base(key.substr(0, key.size() - s.name.size() - 1));
      const auto it = dimensioned_keys().find(base);
      if (it == dimensioned_keys().end()) {
        if (std::find(kPlainKeys.begin(), kPlainKeys.end(), base) != kPlainKeys.end())
          throw ConfigError("key '" + base + "' takes no unit suffix", line);
        throw ConfigError("unknown key '" + std::string(key) + "'", line);
      }
      if (it->second != s.dim) {
        throw ConfigError("unit suffix '_" + std::string(s.name) + "' does not match the dimension of '" + base +
                              "'",
                          line);
      }
      return {base, std::string(s.name)};
    }
  }
  if (dimensioned_keys().contains(key))
    throw ConfigError("key '" + std::string(key) + "' is missing a unit suffix", line);
  if (std::find(kPlainKeys.begin(), kPlainKeys.end(), key) != kPlainKeys.end()) return {std::string(key), ""};
  throw ConfigError("unknown key '" + std::string(key) + "'", line);
}

Energy energy_value(const Entry& e) {
  const double v = parse_real(e.value, e.line);
  if (e.suffix == "meV") return units::meV(v);
  if (e.suffix == "ueV") return units::ueV(v);
  try {
    return units::angular_ghz_to_energy(v);
  } catch (const Error& err) {
    throw ConfigError(err.what(), e.line);
  }
}

Labeling parse_labeling(const Entry& e) {
  if (e.value == "energy") return Labeling::EnergyOrdered;
  if (e.value == "tracked") return Labeling::Tracked;
  if (e.value == "both") return Labeling::Both;
  throw ConfigError("labeling must be energy, tracked or both", e.line);
}

HamiltonianKind parse_mode(const Entry& e) {
  if (e.value == "effective") return HamiltonianKind::Effective;
  if (e.value == "hermitian") return HamiltonianKind::Hermitian;
  throw ConfigError("mode must be effective or hermitian", e.line);
}

std::string shortest(double v) {
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), r.ptr);
}

}  // namespace

Config default_config() {
  Config c;
  c.params = reference_params();
  c.sweep = SweepSpec::around_resonance(c.params);
  c.kind = HamiltonianKind::Effective;
  c.thresholds = RegimeThresholds::defaults_for(c.params.d);
  return c;
}

Config parse_config(std::string_view text) {
  std::map<std::string, Entry, std::less<>> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no);
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", line_no);
    if (value.empty()) throw ConfigError("empty value for '" + std::string(key) + "'", line_no);

    auto [base, suffix] = split_key(key, line_no);
    if (auto it = entries.find(base); it != entries.end()) {
      throw ConfigError("'" + base + "' already set on line " + std::to_string(it->second.line), line_no);
    }
    entries.emplace(base, Entry{std::string(value), suffix, line_no});
  }

  auto find = [&](std::string_view k) -> const Entry* {
    const auto it = entries.find(k);
    return it == entries.end() ? nullptr : &it->second;
  };
  auto required_energy = [&](std::string_view k) {
    const Entry* e = find(k);
    if (e == nullptr) throw ConfigError("missing required key '" + std::string(k) + "'", 0);
    return energy_value(*e);
  };
  auto optional_energy = [&](std::string_view k) { return find(k) ? energy_value(*find(k)) : Energy(0.0); };

  Config c;
  SystemParams& p = c.params;
  p.omega_c = required_energy("omega_c");
  p.delta_ix_dx = required_energy("delta_ix_dx");
  p.delta_c_dx = required_energy("delta_c_dx");
  p.tunneling = required_energy("J");
  p.coupling = required_energy("g");
  p.kappa = optional_energy("kappa");
  p.gamma_dx = optional_energy("gamma_dx");
  p.gamma_ix = optional_energy("gamma_ix");
  const Entry* d = find("d");
  if (d == nullptr) throw ConfigError("missing required key 'd'", 0);
  p.d = units::nm(parse_real(d->value, d->line));
  try {
    p.validate();
  } catch (const InvalidParameter& err) {
    throw ConfigError(err.what(), 0);
  }

  const int n = find("n") ? parse_int(find("n")->value, find("n")->line) : 1;
  const int steps = find("steps") ? parse_int(find("steps")->value, find("steps")->line) : 801;
  c.sweep = SweepSpec::around_resonance(p, n, Field(20.0), steps);
  const Entry* fs = find("F_start");
  const Entry* fe = find("F_end");
  if ((fs == nullptr) != (fe == nullptr)) throw ConfigError("F_start and F_end must be given together", 0);
  if (fs != nullptr) {
    c.sweep.f_start = units::kV_per_cm(parse_real(fs->value, fs->line));
    c.sweep.f_end = units::kV_per_cm(parse_real(fe->value, fe->line));
  }
  if (const Entry* e = find("labeling")) c.sweep.labeling = parse_labeling(*e);
  if (const Entry* e = find("mode")) c.kind = parse_mode(*e);
  try {
    c.sweep.validate();
  } catch (const InvalidParameter& err) {
    throw ConfigError(err.what(), 0);
  }

  c.thresholds = RegimeThresholds::defaults_for(p.d);
  if (const Entry* e = find("bpd_high")) c.thresholds.bpd_high = parse_real(e->value, e->line);
  if (const Entry* e = find("bpd_low")) c.thresholds.bpd_low = parse_real(e->value, e->line);
  if (const Entry* e = find("edm_high")) c.thresholds.edm_high = units::nm(parse_real(e->value, e->line));
  if (const Entry* e = find("edm_low")) c.thresholds.edm_low = units::nm(parse_real(e->value, e->line));
  try {
    c.thresholds.validate(p.d);
  } catch (const InvalidParameter& err) {
    throw ConfigError(err.what(), 0);
  }

  if (const Entry* e = find("output")) c.output = e->value;
  return c;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(e.reason(), e.line(), path.string());
  }
}

std::string echo_config(const Config& c) {
  const SystemParams& p = c.params;
  std::ostringstream os;
  os << "omega_c_meV = " << shortest(p.omega_c.value()) << '\n'
     << "delta_ix_dx_meV = " << shortest(p.delta_ix_dx.value()) << '\n'
     << "delta_c_dx_meV = " << shortest(p.delta_c_dx.value()) << '\n'
     << "d_nm = " << shortest(p.d.value()) << '\n'
     << "J_meV = " << shortest(p.tunneling.value()) << '\n'
     << "g_meV = " << shortest(p.coupling.value()) << '\n'
     << "kappa_meV = " << shortest(p.kappa.value()) << '\n'
     << "gamma_dx_meV = " << shortest(p.gamma_dx.value()) << '\n'
     << "gamma_ix_meV = " << shortest(p.gamma_ix.value()) << '\n'
     << "F_start_kVcm = " << shortest(c.sweep.f_start.value()) << '\n'
     << "F_end_kVcm = " << shortest(c.sweep.f_end.value()) << '\n'
     << "steps = " << c.sweep.steps << '\n'
     << "n = " << c.sweep.n << '\n'
     << "labeling = " << labeling_name(c.sweep.labeling) << '\n'
     << "mode = " << hamiltonian_name(c.kind) << '\n'
     << "bpd_high = " << shortest(c.thresholds.bpd_high) << '\n'
     << "bpd_low = " << shortest(c.thresholds.bpd_low) << '\n'
     << "edm_high_nm = " << shortest(c.thresholds.edm_high.value()) << '\n'
     << "edm_low_nm = " << shortest(c.thresholds.edm_low.value()) << '\n';
  if (c.output) os << "output = " << *c.output << '\n';
  return os.str();
}

}  // namespace dipolariton
