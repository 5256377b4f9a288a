#pragma once

#include <cstddef>
#include <vector>

#include "jamsim/signal.hpp"

namespace jamsim {

struct TriggerConfig {
  double threshold = 1.0;   // V, strict: envelope must exceed it
  double high_level = 5.0;  // V, the enabled gate level
  std::size_t envelope_window = 6;

  void validate() const;
  friend bool operator==(const TriggerConfig&, const TriggerConfig&) = default;
};

// Lowest frequency any detector passband admits.
inline constexpr double kLowestInBandHz = 1710e6;

/// One period of the lowest in-band frequency, rounded up to whole samples.
std::size_t default_envelope_window(double sample_rate);

/// Binary 0 / high_level enable line.
class GateLine {
 public:
  GateLine(std::vector<double> levels, double sample_rate, double high_level);

  std::span<const double> levels() const noexcept { return levels_; }
  double sample_rate() const noexcept { return sample_rate_; }
  double high_level() const noexcept { return high_level_; }
  std::size_t size() const noexcept { return levels_.size(); }
  double operator[](std::size_t i) const { return levels_[i]; }
  bool is_high(std::size_t i) const { return levels_[i] > 0.0; }

  SignalBuffer to_signal() const { return SignalBuffer(levels_, sample_rate_); }

 private:
  std::vector<double> levels_;
  double sample_rate_;
  double high_level_;
};

SignalBuffer full_wave_rectify(const SignalBuffer& input);

/// Trailing-window maximum; the window is truncated at the buffer start.
SignalBuffer envelope(const SignalBuffer& input, std::size_t window);

GateLine comparator(const SignalBuffer& envelope, const TriggerConfig& config);

/// rectify -> envelope -> comparator
GateLine trigger_chain(const SignalBuffer& input, const TriggerConfig& config);

}  // namespace jamsim
