#include "jamsim/trigger.hpp"

#include <cmath>
#include <deque>
#include <string>

#include "jamsim/error.hpp"

namespace jamsim {

void TriggerConfig::validate() const {
  if (!(threshold > 0.0) || !std::isfinite(threshold)) {
    throw Error(ErrorKind::InvalidConfig, "trigger threshold must be > 0");
  }
  if (!(high_level > threshold) || !std::isfinite(high_level)) {
    throw Error(ErrorKind::InvalidConfig, "trigger high level must exceed the threshold");
  }
  if (envelope_window < 1) {
    throw Error(ErrorKind::InvalidWindow, "envelope window must be >= 1");
  }
}

std::size_t default_envelope_window(double sample_rate) {
  if (!(sample_rate > 0.0)) {
    throw Error(ErrorKind::InvalidSampleRate, "sample rate must be positive");
  }
  return static_cast<std::size_t>(std::ceil(sample_rate / kLowestInBandHz));
}

GateLine::GateLine(std::vector<double> levels, double sample_rate, double high_level)
    : levels_(std::move(levels)), sample_rate_(sample_rate), high_level_(high_level) {
  for (const double v : levels_) {
    if (v != 0.0 && v != high_level_) {
      throw Error(ErrorKind::InvalidValue, "gate level " + std::to_string(v) +
                                               " is neither 0 nor " + std::to_string(high_level_));
    }
  }
}

SignalBuffer full_wave_rectify(const SignalBuffer& input) {
  std::vector<double> out(input.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(input[i]);
  return SignalBuffer(std::move(out), input.sample_rate());
}

SignalBuffer envelope(const SignalBuffer& input, std::size_t window) {
  if (window == 0) throw Error(ErrorKind::InvalidWindow, "envelope window must be >= 1");

  // Monotonic deque of candidate indices, values non-increasing front to back.
  std::vector<double> out(input.size());
  std::deque<std::size_t> candidates;
  for (std::size_t i = 0; i < input.size(); ++i) {
    while (!candidates.empty() && input[candidates.back()] <= input[i]) candidates.pop_back();
    candidates.push_back(i);
    if (candidates.front() + window <= i) candidates.pop_front();
    out[i] = input[candidates.front()];
  }
  return SignalBuffer(std::move(out), input.sample_rate());
}

GateLine comparator(const SignalBuffer& envelope, const TriggerConfig& config) {
  config.validate();
  std::vector<double> levels(envelope.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    levels[i] = envelope[i] > config.threshold ? config.high_level : 0.0;
  }
  return GateLine(std::move(levels), envelope.sample_rate(), config.high_level);
}

GateLine trigger_chain(const SignalBuffer& input, const TriggerConfig& config) {
  config.validate();
  return comparator(envelope(full_wave_rectify(input), config.envelope_window), config);
}

}  // namespace jamsim
