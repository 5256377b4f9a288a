#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "jamsim/pipeline.hpp"

namespace jamsim {

// Scenario documents are INI-like:
//
//   # comment
//   [scenario]
//   name = input2
//   [tones]
//   freq_mhz = 1740      # each freq_mhz starts a new tone
//   amplitude_v = 2      # optional, applies to the latest tone
//   phase_rad = 0        # optional
//   [sim]      sample_rate_hz, n_samples, seed, filter_order
//   [jammer]   gain, gaussian_sigma_v, rayleigh_sigma_v
//   [trigger]  threshold_v, high_v, envelope_window
//
// Unset fields stay empty here and pick up defaults on resolve().
struct ScenarioFile {
  Scenario scenario{"custom", {}};

  std::optional<double> sample_rate_hz;
  std::optional<std::size_t> n_samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> filter_order;

  std::optional<double> gain;
  std::optional<double> gaussian_sigma_v;
  std::optional<double> rayleigh_sigma_v;

  std::optional<double> threshold_v;
  std::optional<double> high_v;
  std::optional<std::size_t> envelope_window;
};

ScenarioFile parse_scenario_text(std::string_view text);

struct ResolvedScenario {
  Scenario scenario;
  PipelineConfig config;
};

/// Applies defaults. `fallback_seed` is used when the document sets none.
/// An unset envelope window follows the resolved sample rate.
ResolvedScenario resolve(const ScenarioFile& file, std::uint64_t fallback_seed = kDefaultSeed);

/// parse + resolve with library defaults.
ResolvedScenario parse_scenario_file(std::string_view text);

/// Fully explicit document; parse_scenario_file() of the result
/// reproduces `scenario` and `config` exactly.
std::string render_scenario_file(const Scenario& scenario, const PipelineConfig& config);

}  // namespace jamsim
