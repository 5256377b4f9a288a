#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jamsim {

/// Uniformly sampled real voltage sequence. Immutable once built; every
/// sample is finite and the sample rate is strictly positive.
class SignalBuffer {
 public:
  SignalBuffer(std::vector<double> samples, double sample_rate);

  static SignalBuffer zeros(std::size_t n, double sample_rate);

  std::span<const double> samples() const noexcept { return samples_; }
  double sample_rate() const noexcept { return sample_rate_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  double operator[](std::size_t i) const { return samples_[i]; }

  // Rvalue access lets pipeline stages move the storage instead of copying.
  std::vector<double> release() && { return std::move(samples_); }

  friend bool operator==(const SignalBuffer&, const SignalBuffer&) = default;

 private:
  std::vector<double> samples_;
  double sample_rate_;
};

struct ToneSpec {
  double frequency = 0.0;  // Hz
  double amplitude = 2.0;  // V
  double phase = 0.0;      // rad

  friend bool operator==(const ToneSpec&, const ToneSpec&) = default;
};

struct NoiseSpec {
  double gaussian_sigma = 0.0;  // V
  double rayleigh_sigma = 0.0;  // V
  std::uint64_t seed = 0;

  friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

/// Sum of sinusoids: samples[i] = sum_k a_k sin(2 pi f_k i / fs + phi_k).
SignalBuffer multi_tone(std::span<const ToneSpec> tones, double sample_rate,
                        std::size_t n_samples);

// Both noise generators are pure functions of (spec, n). They draw from
// separate streams derived from spec.seed, so one NoiseSpec yields
// independent Gaussian and Rayleigh sequences.
SignalBuffer gaussian_noise(const NoiseSpec& spec, std::size_t n_samples,
                            double sample_rate = 1.0);
SignalBuffer rayleigh_noise(const NoiseSpec& spec, std::size_t n_samples,
                            double sample_rate = 1.0);

std::vector<double> gaussian_samples(double sigma, std::uint64_t seed,
                                     std::size_t n_samples);
std::vector<double> rayleigh_samples(double sigma, std::uint64_t seed,
                                     std::size_t n_samples);

SignalBuffer add(const SignalBuffer& a, const SignalBuffer& b);
SignalBuffer scale(const SignalBuffer& a, double factor);

}  // namespace jamsim
