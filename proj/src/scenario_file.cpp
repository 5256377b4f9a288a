#include "jamsim/scenario_file.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

#include "jamsim/error.hpp"

namespace jamsim {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

double parse_real(std::string_view text, std::size_t line, std::string_view key) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::InvalidValue,
                at_line(line) + std::string(key) + " expects a number, got '" + std::string(text) + "'");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidValue, at_line(line) + std::string(key) + " must be finite");
  }
  return value;
}

template <typename Int>
Int parse_integer(std::string_view text, std::size_t line, std::string_view key) {
  Int value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::InvalidValue, at_line(line) + std::string(key) +
                                             " expects an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// MHz text is converted by shifting the decimal exponent, not by
// multiplying, so the Hz value is the correctly rounded decimal.
double parse_mhz_as_hz(std::string_view text, std::size_t line, std::string_view key) {
  std::string shifted(text);
  const auto e = shifted.find_first_of("eE");
  if (e == std::string::npos) {
    shifted += "e6";
  } else {
    const std::string exponent = shifted.substr(e + 1);
    int exp10 = 0;
    const auto [ptr, ec] = std::from_chars(exponent.data() + (exponent.starts_with('+') ? 1 : 0),
                                           exponent.data() + exponent.size(), exp10);
    if (ec != std::errc() || ptr != exponent.data() + exponent.size()) {
      throw Error(ErrorKind::InvalidValue,
                  at_line(line) + std::string(key) + " expects a number, got '" + std::string(text) + "'");
    }
    shifted = shifted.substr(0, e) + "e" + std::to_string(exp10 + 6);
  }
  return parse_real(shifted, line, key);
}

std::string format_hz_as_mhz(double hz) {
  const std::string plain = format_real(hz / 1e6);
  if (parse_mhz_as_hz(plain, 0, "freq_mhz") == hz) return plain;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", hz);
  std::string text(buf);
  const auto e = text.find('e');
  return text.substr(0, e) + "e" + std::to_string(std::stoi(text.substr(e + 1)) - 6);
}

}  // namespace

ScenarioFile parse_scenario_text(std::string_view text) {
  ScenarioFile file;
  std::string section;
  std::set<std::string> seen;  // section.key for single-valued keys
  bool tone_has_amplitude = false;
  bool tone_has_phase = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw Error(ErrorKind::ParseError, at_line(line_no) + "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "scenario" && section != "tones" && section != "sim" && section != "jammer" &&
          section != "trigger") {
        throw Error(ErrorKind::UnknownKey, at_line(line_no) + "unknown section [" + section + "]");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, at_line(line_no) + "expected 'key = value'");
    }
    if (section.empty()) {
      throw Error(ErrorKind::ParseError, at_line(line_no) + "key outside of any section");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw Error(ErrorKind::ParseError, at_line(line_no) + "empty key or value");
    }

    if (section == "tones") {
      auto& tones = file.scenario.tones;
      if (key == "freq_mhz") {
        tones.push_back({parse_mhz_as_hz(value, line_no, key), 2.0, 0.0});
        tone_has_amplitude = tone_has_phase = false;
      } else if (key == "amplitude_v" || key == "phase_rad") {
        if (tones.empty()) {
          throw Error(ErrorKind::ParseError, at_line(line_no) + key + " before any freq_mhz");
        }
        bool& already = key == "amplitude_v" ? tone_has_amplitude : tone_has_phase;
        if (already) throw Error(ErrorKind::ParseError, at_line(line_no) + "duplicate " + key + " for tone");
        already = true;
        const double v = parse_real(value, line_no, key);
        if (key == "amplitude_v") {
          if (v < 0.0) throw Error(ErrorKind::InvalidValue, at_line(line_no) + "amplitude_v must be >= 0");
          tones.back().amplitude = v;
        } else {
          tones.back().phase = v;
        }
      } else {
        throw Error(ErrorKind::UnknownKey, at_line(line_no) + "unknown key '" + key + "' in [tones]");
      }
      continue;
    }

    if (!seen.insert(section + "." + key).second) {
      throw Error(ErrorKind::ParseError, at_line(line_no) + "duplicate key '" + key + "'");
    }
    const auto unknown = [&] {
      return Error(ErrorKind::UnknownKey,
                   at_line(line_no) + "unknown key '" + key + "' in [" + section + "]");
    };

    if (section == "scenario") {
      if (key != "name") throw unknown();
      file.scenario.name = std::string(value);
    } else if (section == "sim") {
      if (key == "sample_rate_hz") {
        file.sample_rate_hz = parse_real(value, line_no, key);
      } else if (key == "n_samples") {
        file.n_samples = parse_integer<std::size_t>(value, line_no, key);
      } else if (key == "seed") {
        file.seed = parse_integer<std::uint64_t>(value, line_no, key);
      } else if (key == "filter_order") {
        file.filter_order = parse_integer<int>(value, line_no, key);
      } else {
        throw unknown();
      }
    } else if (section == "jammer") {
      if (key == "gain") {
        file.gain = parse_real(value, line_no, key);
      } else if (key == "gaussian_sigma_v") {
        file.gaussian_sigma_v = parse_real(value, line_no, key);
      } else if (key == "rayleigh_sigma_v") {
        file.rayleigh_sigma_v = parse_real(value, line_no, key);
      } else {
        throw unknown();
      }
    } else if (section == "trigger") {
      if (key == "threshold_v") {
        file.threshold_v = parse_real(value, line_no, key);
      } else if (key == "high_v") {
        file.high_v = parse_real(value, line_no, key);
      } else if (key == "envelope_window") {
        file.envelope_window = parse_integer<std::size_t>(value, line_no, key);
      } else {
        throw unknown();
      }
    }
  }
  return file;
}

ResolvedScenario resolve(const ScenarioFile& file, std::uint64_t fallback_seed) {
  PipelineConfig config = PipelineConfig::with_seed(file.seed.value_or(fallback_seed));
  if (file.sample_rate_hz) config.sample_rate = *file.sample_rate_hz;
  if (file.n_samples) config.n_samples = *file.n_samples;
  if (file.filter_order) config.filter_order = *file.filter_order;

  for (auto* jammer : {&config.jammer3, &config.jammer40}) {
    if (file.gain) jammer->gain = *file.gain;
    if (file.gaussian_sigma_v) jammer->noise.gaussian_sigma = *file.gaussian_sigma_v;
    if (file.rayleigh_sigma_v) jammer->noise.rayleigh_sigma = *file.rayleigh_sigma_v;
  }

  if (file.threshold_v) config.trigger.threshold = *file.threshold_v;
  if (file.high_v) config.trigger.high_level = *file.high_v;
  config.trigger.envelope_window = file.envelope_window
                                       ? *file.envelope_window
                                       : default_envelope_window(config.sample_rate);
  return {file.scenario, config};
}

ResolvedScenario parse_scenario_file(std::string_view text) {
  return resolve(parse_scenario_text(text));
}

std::string render_scenario_file(const Scenario& scenario, const PipelineConfig& config) {
  std::ostringstream out;
  out << "[scenario]\nname = " << scenario.name << "\n\n[tones]\n";
  for (const auto& tone : scenario.tones) {
    out << "freq_mhz = " << format_hz_as_mhz(tone.frequency) << "\n"
        << "amplitude_v = " << format_real(tone.amplitude) << "\n"
        << "phase_rad = " << format_real(tone.phase) << "\n";
  }
  out << "\n[sim]\n"
      << "sample_rate_hz = " << format_real(config.sample_rate) << "\n"
      << "n_samples = " << config.n_samples << "\n"
      << "seed = " << config.jammer3.noise.seed << "\n"
      << "filter_order = " << config.filter_order << "\n"
      << "\n[jammer]\n"
      << "gain = " << format_real(config.jammer3.gain) << "\n"
      << "gaussian_sigma_v = " << format_real(config.jammer3.noise.gaussian_sigma) << "\n"
      << "rayleigh_sigma_v = " << format_real(config.jammer3.noise.rayleigh_sigma) << "\n"
      << "\n[trigger]\n"
      << "threshold_v = " << format_real(config.trigger.threshold) << "\n"
      << "high_v = " << format_real(config.trigger.high_level) << "\n"
      << "envelope_window = " << config.trigger.envelope_window << "\n";
  return out.str();
}

}  // namespace jamsim
