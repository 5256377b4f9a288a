#pragma once

// Reference computations that deliberately avoid the library's code paths.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace jamsim::oracle {

/// O(n^2) DFT magnitude-squared, one-sided and scaled so the bins sum to
/// the mean square of x.
inline std::vector<double> dft_bin_powers(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<long double>> twiddle(n);
  for (std::size_t m = 0; m < n; ++m) {
    const long double angle =
        -2.0L * std::numbers::pi_v<long double> * static_cast<long double>(m) / static_cast<long double>(n);
    twiddle[m] = {std::cos(angle), std::sin(angle)};
  }
  std::vector<double> out(n / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::complex<long double> acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<long double>(x[i]) * twiddle[(k * i) % n];
    const double mag2 = static_cast<double>(std::norm(acc));
    const bool unpaired = k == 0 || (n % 2 == 0 && k == n / 2);
    out[k] = (unpaired ? 1.0 : 2.0) * mag2 / (static_cast<double>(n) * static_cast<double>(n));
  }
  return out;
}

inline std::size_t argmax(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

inline double mean_square(const std::vector<double>& x) {
  long double acc = 0;
  for (const double v : x) acc += static_cast<long double>(v) * v;
  return static_cast<double>(acc / static_cast<long double>(x.size()));
}

/// Analog Butterworth bandpass magnitude (dB) evaluated at the bilinear
/// pre-warped image of f. The bilinear transform maps the analog
/// response onto the unit circle exactly, so a correctly designed
/// digital cascade must agree with this to rounding error.
inline double butterworth_bandpass_db(double f_hz, double low_hz, double high_hz, double fs,
                                      int order) {
  const auto warp = [fs](double f) { return 2.0 * fs * std::tan(std::numbers::pi * f / fs); };
  const double w = warp(f_hz);
  const double w_low = warp(low_hz);
  const double w_high = warp(high_hz);
  const double omega = (w * w - w_low * w_high) / (w * (w_high - w_low));
  const int n = order / 2;
  return -10.0 * std::log10(1.0 + std::pow(omega * omega, n));
}

/// Amplitude of a steady-state sinusoid measured by least-squares fit
/// of sin/cos at a known frequency over samples [start, end).
inline double fitted_amplitude(const std::vector<double>& x, double f_hz, double fs,
                               std::size_t start) {
  double ss = 0, cc = 0, sc = 0, xs = 0, xc = 0;
  for (std::size_t i = start; i < x.size(); ++i) {
    const double phase = 2.0 * std::numbers::pi * f_hz * static_cast<double>(i) / fs;
    const double s = std::sin(phase), c = std::cos(phase);
    ss += s * s; cc += c * c; sc += s * c; xs += x[i] * s; xc += x[i] * c;
  }
  const double det = ss * cc - sc * sc;
  const double a = (xs * cc - xc * sc) / det;
  const double b = (xc * ss - xs * sc) / det;
  return std::hypot(a, b);
}

}  // namespace jamsim::oracle
