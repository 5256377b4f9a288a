#pragma once

#include "jamsim/signal.hpp"
#include "jamsim/trigger.hpp"

namespace jamsim {

struct JammerConfig {
  double gain = 5.0;
  NoiseSpec noise{1.0, 1.0, 42};

  void validate() const;
  friend bool operator==(const JammerConfig&, const JammerConfig&) = default;
};

/// Gate-enabled gain + noise stage. Where the gate is high the output is
/// gain * signal + gaussian + rayleigh; elsewhere it is exactly 0.
/// Noise is drawn for the whole buffer regardless of the gate, so the
/// same seed lines up sample-for-sample across differently gated runs.
SignalBuffer jam(const SignalBuffer& signal, const GateLine& gate, const JammerConfig& config);

}  // namespace jamsim
