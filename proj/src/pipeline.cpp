#include "jamsim/pipeline.hpp"

#include <cmath>
#include <string>

#include "jamsim/analysis.hpp"
#include "jamsim/error.hpp"

namespace jamsim {

PipelineConfig PipelineConfig::with_seed(std::uint64_t seed) {
  PipelineConfig config;
  config.jammer3.noise.seed = seed;
  config.jammer40.noise.seed = seed + 1;
  return config;
}

void PipelineConfig::validate() const {
  if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
    throw Error(ErrorKind::InvalidSampleRate, "sample rate must be positive");
  }
  if (n_samples == 0) throw Error(ErrorKind::InvalidConfig, "n_samples must be > 0");
  if (!(measure_skip_fraction >= 0.0) || !(measure_skip_fraction < 1.0)) {
    throw Error(ErrorKind::InvalidConfig, "measure_skip_fraction must be in [0, 1)");
  }
  trigger.validate();
  jammer3.validate();
  jammer40.validate();
}

const SignalBuffer& ScenarioReport::branch(const std::string& name) const {
  const auto it = branch_buffers.find(name);
  if (it == branch_buffers.end()) throw Error(ErrorKind::InvalidValue, "no branch named " + name);
  return it->second;
}

Pipeline::Pipeline(PipelineConfig config)
    : config_((config.validate(), std::move(config))),
      bank_(config_.sample_rate, config_.filter_order) {}

Pipeline build_pipeline(const PipelineConfig& config) { return Pipeline(config); }

SettledLevel settled_level(const GateLine& gate, double skip_fraction) {
  const auto skip = static_cast<std::size_t>(std::floor(skip_fraction * static_cast<double>(gate.size())));
  if (skip >= gate.size()) {
    throw Error(ErrorKind::EmptyMeasurementRegion, "gate has no samples after the skip region");
  }
  std::size_t high = 0;
  for (std::size_t i = skip; i < gate.size(); ++i) high += gate.is_high(i) ? 1 : 0;
  const std::size_t total = gate.size() - skip;
  // Ties resolve to the inactive level.
  return {2 * high > total ? gate.high_level() : 0.0, high == 0 || high == total};
}

ScenarioReport run_scenario(const Pipeline& pipeline, const Scenario& scenario) {
  const auto& config = pipeline.config();
  const auto& bank = pipeline.filters();

  SignalBuffer input = multi_tone(scenario.tones, config.sample_rate, config.n_samples);

  SignalBuffer band3_full = apply_filter(bank.filter(1), input);
  SignalBuffer band3_up = apply_filter(bank.filter(2), input);
  SignalBuffer band3_down = apply_filter(bank.filter(3), input);
  SignalBuffer band40 = apply_filter(bank.filter(4), input);

  SignalBuffer env1 = envelope(full_wave_rectify(band3_up), config.trigger.envelope_window);
  SignalBuffer env2 = envelope(full_wave_rectify(band40), config.trigger.envelope_window);
  GateLine gate1 = comparator(env1, config.trigger);
  GateLine gate2 = comparator(env2, config.trigger);

  SignalBuffer jammer1 = jam(band3_down, gate1, config.jammer3);
  SignalBuffer jammer2 = jam(band40, gate2, config.jammer40);

  ScenarioReport report;
  report.scenario = scenario.name;
  report.trigger1 = settled_level(gate1, config.measure_skip_fraction);
  report.trigger2 = settled_level(gate2, config.measure_skip_fraction);
  report.jammer1_rms = rms(jammer1, config.measure_skip_fraction);
  report.jammer2_rms = rms(jammer2, config.measure_skip_fraction);
  report.band3_jamming = report.trigger1.level == config.trigger.high_level;
  report.band40_jamming = report.trigger2.level == config.trigger.high_level;

  auto& b = report.branch_buffers;
  b.emplace("input", std::move(input));
  b.emplace("filter1", std::move(band3_full));
  b.emplace("filter2", std::move(band3_up));
  b.emplace("filter3", std::move(band3_down));
  b.emplace("filter4", std::move(band40));
  b.emplace("envelope1", std::move(env1));
  b.emplace("envelope2", std::move(env2));
  b.emplace("trigger1", gate1.to_signal());
  b.emplace("trigger2", gate2.to_signal());
  b.emplace("jammer1", std::move(jammer1));
  b.emplace("jammer2", std::move(jammer2));
  return report;
}

std::vector<Scenario> builtin_scenarios() {
  const auto tones = [](std::initializer_list<double> mhz) {
    std::vector<ToneSpec> out;
    for (const double f : mhz) out.push_back({f * 1e6, 2.0, 0.0});
    return out;
  };
  return {
      {"input1", tones({1200, 1500, 1600, 3000})},
      {"input2", tones({1200, 1740, 1850, 3000})},
      {"input3", tones({1200, 1300, 2340, 3000})},
      {"input4", tones({1740, 1850, 2340, 3000})},
  };
}

}  // namespace jamsim
