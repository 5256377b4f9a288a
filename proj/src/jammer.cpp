#include "jamsim/jammer.hpp"

#include <cmath>
#include <string>

#include "jamsim/error.hpp"

namespace jamsim {

void JammerConfig::validate() const {
  // Unity gain is accepted so the stage can be configured as a pass-through.
  if (!(gain >= 1.0) || !std::isfinite(gain)) {
    throw Error(ErrorKind::InvalidConfig, "jammer gain must be >= 1, got " + std::to_string(gain));
  }
  if (!(noise.gaussian_sigma >= 0.0) || !(noise.rayleigh_sigma >= 0.0) ||
      !std::isfinite(noise.gaussian_sigma) || !std::isfinite(noise.rayleigh_sigma)) {
    throw Error(ErrorKind::InvalidConfig, "noise sigmas must be finite and >= 0");
  }
}

SignalBuffer jam(const SignalBuffer& signal, const GateLine& gate, const JammerConfig& config) {
  config.validate();
  if (signal.size() != gate.size()) {
    throw Error(ErrorKind::LengthMismatch, "signal has " + std::to_string(signal.size()) +
                                               " samples, gate has " +
                                               std::to_string(gate.size()));
  }
  if (signal.sample_rate() != gate.sample_rate()) {
    throw Error(ErrorKind::SampleRateMismatch, "signal and gate sample rates differ");
  }

  const auto gaussian = gaussian_samples(config.noise.gaussian_sigma, config.noise.seed, signal.size());
  const auto rayleigh = rayleigh_samples(config.noise.rayleigh_sigma, config.noise.seed, signal.size());

  std::vector<double> out(signal.size(), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (gate.is_high(i)) out[i] = config.gain * signal[i] + gaussian[i] + rayleigh[i];
  }
  return SignalBuffer(std::move(out), signal.sample_rate());
}

}  // namespace jamsim
