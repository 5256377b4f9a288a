#pragma once

#include <array>
#include <span>
#include <vector>

#include "jamsim/signal.hpp"

namespace jamsim {

/// One bandpass row of the detector table. Band edges in MHz.
struct FilterSpec {
  int id = 0;
  double band_low_mhz = 0.0;
  double band_high_mhz = 0.0;
  double center_mhz = 0.0;

  friend bool operator==(const FilterSpec&, const FilterSpec&) = default;
};

// Detector passbands: 1 = whole Band 3, 2 = Band 3 uplink,
// 3 = Band 3 downlink, 4 = Band 40.
inline constexpr std::array<FilterSpec, 4> kDetectorFilters{{
    {1, 1710.0, 1880.0, 1795.0},
    {2, 1710.0, 1785.0, 1747.5},
    {3, 1805.0, 1880.0, 1842.5},
    {4, 2305.0, 2405.0, 2355.0},
}};

inline constexpr int kDefaultFilterOrder = 6;

/// Normalized second-order section, a0 == 1:
///   H(z) = (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2)
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;

  // Stability triangle: both poles strictly inside the unit circle.
  bool is_stable() const;
};

struct FilterStages {
  std::vector<Biquad> sections;
  double sample_rate = 0.0;
  FilterSpec spec;
};

struct ResponsePoint {
  double magnitude_db = 0.0;
  double phase_rad = 0.0;
};

// Lowest magnitude reported by frequency_response; exact transmission
// zeros (DC and Nyquist for a bandpass) land here instead of -inf.
inline constexpr double kResponseFloorDb = -300.0;

/// Butterworth bandpass of total order `order` (order/2 pole pairs),
/// bilinear transform with pre-warped band edges, normalized to unity
/// gain at the geometric band centre.
FilterStages design_bandpass(const FilterSpec& spec, double sample_rate,
                             int order = kDefaultFilterOrder);

std::vector<ResponsePoint> frequency_response(const FilterStages& stages,
                                              std::span<const double> freqs_hz);

/// Direct-form II transposed cascade with zero initial state.
SignalBuffer apply_filter(const FilterStages& stages, const SignalBuffer& input);

/// The four detector filters at a common sample rate and order.
class FilterBank {
 public:
  FilterBank(double sample_rate, int order = kDefaultFilterOrder);

  const FilterStages& filter(int id) const;
  std::span<const FilterStages> filters() const noexcept { return filters_; }
  double sample_rate() const noexcept { return sample_rate_; }

 private:
  double sample_rate_;
  std::vector<FilterStages> filters_;
};

}  // namespace jamsim
