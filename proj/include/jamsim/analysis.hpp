#pragma once

#include <vector>

#include "jamsim/signal.hpp"

namespace jamsim {

inline constexpr double kSpectrumFloorDb = -200.0;

enum class Window { Rectangular, Hann };

/// One-sided power spectrum. Bin k sits at k * fs / n; per-bin power is
/// scaled so that the bins sum to the mean square of the input.
struct Spectrum {
  std::vector<double> freqs;     // Hz
  std::vector<double> power_db;  // 10 log10(bin power), floored
  double resolution = 0.0;       // Hz
};

Spectrum power_spectrum(const SignalBuffer& input, Window window = Window::Rectangular);

/// Linear per-bin powers (V^2) behind power_spectrum, before the dB floor.
std::vector<double> bin_powers(const SignalBuffer& input, Window window = Window::Rectangular);

double rms(const SignalBuffer& input, double skip_fraction = 0.0);

struct Peak {
  double freq = 0.0;
  double power_db = 0.0;
};

/// Local maxima standing at least min_db_above_floor above the median bin.
std::vector<Peak> find_peaks(const Spectrum& spectrum, double min_db_above_floor);

}  // namespace jamsim
