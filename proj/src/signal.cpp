#include "jamsim/signal.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "jamsim/error.hpp"

namespace jamsim {
namespace {

constexpr std::uint64_t kGaussianStream = 1;
constexpr std::uint64_t kRayleighStream = 2;

// SplitMix64 finalizer; decorrelates (seed, stream) pairs before they
// seed the Mersenne Twister.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// std::mt19937_64 output is fixed by the standard, unlike the library
// distributions, so uniforms are derived by hand.
class NoiseStream {
 public:
  NoiseStream(std::uint64_t seed, std::uint64_t stream)
      : engine_(splitmix64(seed ^ splitmix64(stream))) {}

  // Uniform on (0, 1], safe for log().
  double open_unit() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }
  // Uniform on [0, 1).
  double half_open_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

void check_sample_rate(double sample_rate) {
  if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
    throw Error(ErrorKind::InvalidSampleRate,
                "sample rate must be positive and finite, got " + std::to_string(sample_rate));
  }
}

void check_compatible(const SignalBuffer& a, const SignalBuffer& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " samples");
  }
  if (a.sample_rate() != b.sample_rate()) {
    throw Error(ErrorKind::SampleRateMismatch,
                std::to_string(a.sample_rate()) + " vs " + std::to_string(b.sample_rate()) + " Hz");
  }
}

}  // namespace

SignalBuffer::SignalBuffer(std::vector<double> samples, double sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  check_sample_rate(sample_rate_);
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw Error(ErrorKind::NonFiniteSample, "sample " + std::to_string(i) + " is not finite");
    }
  }
}

SignalBuffer SignalBuffer::zeros(std::size_t n, double sample_rate) {
  return SignalBuffer(std::vector<double>(n, 0.0), sample_rate);
}

SignalBuffer multi_tone(std::span<const ToneSpec> tones, double sample_rate,
                        std::size_t n_samples) {
  check_sample_rate(sample_rate);
  for (const auto& tone : tones) {
    if (!(tone.frequency > 0.0) || !(tone.frequency < sample_rate / 2.0)) {
      throw Error(ErrorKind::FrequencyAboveNyquist,
                  "tone at " + std::to_string(tone.frequency) + " Hz is outside (0, " +
                      std::to_string(sample_rate / 2.0) + ") Hz");
    }
    if (!(tone.amplitude >= 0.0) || !std::isfinite(tone.amplitude) || !std::isfinite(tone.phase)) {
      throw Error(ErrorKind::InvalidValue, "tone amplitude must be finite and >= 0");
    }
  }

  std::vector<double> out(n_samples, 0.0);
  for (const auto& tone : tones) {
    const double cycles_per_sample = tone.frequency / sample_rate;
    for (std::size_t i = 0; i < n_samples; ++i) {
      // Reduce to a fractional cycle before scaling by 2 pi to keep the
      // argument small for long buffers.
      const double cycles = cycles_per_sample * static_cast<double>(i);
      const double frac = cycles - std::floor(cycles);
      out[i] += tone.amplitude * std::sin(2.0 * std::numbers::pi * frac + tone.phase);
    }
  }
  return SignalBuffer(std::move(out), sample_rate);
}

std::vector<double> gaussian_samples(double sigma, std::uint64_t seed, std::size_t n_samples) {
  std::vector<double> out(n_samples, 0.0);
  if (sigma == 0.0) return out;

  // Box-Muller, both outputs of each pair used.
  NoiseStream stream(seed, kGaussianStream);
  for (std::size_t i = 0; i < n_samples; i += 2) {
    const double radius = std::sqrt(-2.0 * std::log(stream.open_unit()));
    const double angle = 2.0 * std::numbers::pi * stream.half_open_unit();
    out[i] = sigma * radius * std::cos(angle);
    if (i + 1 < n_samples) out[i + 1] = sigma * radius * std::sin(angle);
  }
  return out;
}

std::vector<double> rayleigh_samples(double sigma, std::uint64_t seed, std::size_t n_samples) {
  std::vector<double> out(n_samples, 0.0);
  if (sigma == 0.0) return out;

  NoiseStream stream(seed, kRayleighStream);
  for (auto& v : out) v = sigma * std::sqrt(-2.0 * std::log(stream.open_unit()));
  return out;
}

SignalBuffer gaussian_noise(const NoiseSpec& spec, std::size_t n_samples, double sample_rate) {
  if (!(spec.gaussian_sigma >= 0.0) || !std::isfinite(spec.gaussian_sigma)) {
    throw Error(ErrorKind::InvalidValue, "gaussian_sigma must be finite and >= 0");
  }
  return SignalBuffer(gaussian_samples(spec.gaussian_sigma, spec.seed, n_samples), sample_rate);
}

SignalBuffer rayleigh_noise(const NoiseSpec& spec, std::size_t n_samples, double sample_rate) {
  if (!(spec.rayleigh_sigma >= 0.0) || !std::isfinite(spec.rayleigh_sigma)) {
    throw Error(ErrorKind::InvalidValue, "rayleigh_sigma must be finite and >= 0");
  }
  return SignalBuffer(rayleigh_samples(spec.rayleigh_sigma, spec.seed, n_samples), sample_rate);
}

SignalBuffer add(const SignalBuffer& a, const SignalBuffer& b) {
  check_compatible(a, b);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return SignalBuffer(std::move(out), a.sample_rate());
}

SignalBuffer scale(const SignalBuffer& a, double factor) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = factor * a[i];
  return SignalBuffer(std::move(out), a.sample_rate());
}

}  // namespace jamsim
