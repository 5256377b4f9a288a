#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "jamsim/filterbank.hpp"
#include "jamsim/jammer.hpp"
#include "jamsim/signal.hpp"
#include "jamsim/trigger.hpp"

namespace jamsim {

inline constexpr double kDefaultSampleRate = 10e9;
inline constexpr std::size_t kDefaultSamples = 4096;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct PipelineConfig {
  double sample_rate = kDefaultSampleRate;
  std::size_t n_samples = kDefaultSamples;
  int filter_order = kDefaultFilterOrder;
  TriggerConfig trigger{1.0, 5.0, default_envelope_window(kDefaultSampleRate)};
  JammerConfig jammer3{5.0, {1.0, 1.0, kDefaultSeed}};
  JammerConfig jammer40{5.0, {1.0, 1.0, kDefaultSeed + 1}};
  double measure_skip_fraction = 0.25;

  /// Defaults for a given run seed: jammer 1 draws from `seed`,
  /// jammer 2 from `seed + 1`.
  static PipelineConfig with_seed(std::uint64_t seed);

  void validate() const;
  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

struct Scenario {
  std::string name;
  std::vector<ToneSpec> tones;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Settled gate value over the measurement region. `stable` is false when
/// the gate changes level anywhere inside that region; `level` is then the
/// modal value.
struct SettledLevel {
  double level = 0.0;
  bool stable = true;
};

struct ScenarioReport {
  std::string scenario;
  SettledLevel trigger1;  // Band 3 uplink detector
  SettledLevel trigger2;  // Band 40 detector
  double jammer1_rms = 0.0;
  double jammer2_rms = 0.0;
  bool band3_jamming = false;
  bool band40_jamming = false;
  // input, filter1..4, envelope1/2, trigger1/2, jammer1/2
  std::map<std::string, SignalBuffer> branch_buffers;

  const SignalBuffer& branch(const std::string& name) const;
};

/// Detector wiring: filter 2 (B3 uplink) -> trigger 1; filter 3 (B3
/// downlink) -> jammer 1; filter 4 (B40, TDD) -> trigger 2 and jammer 2.
/// Filter 1 is evaluated and exported but feeds nothing.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config);

  const PipelineConfig& config() const noexcept { return config_; }
  const FilterBank& filters() const noexcept { return bank_; }

 private:
  PipelineConfig config_;
  FilterBank bank_;
};

Pipeline build_pipeline(const PipelineConfig& config);

ScenarioReport run_scenario(const Pipeline& pipeline, const Scenario& scenario);

SettledLevel settled_level(const GateLine& gate, double skip_fraction);

/// Tone sets of the four reference inputs, 2 V each.
std::vector<Scenario> builtin_scenarios();

}  // namespace jamsim
