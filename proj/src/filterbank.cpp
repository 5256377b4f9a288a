#include "jamsim/filterbank.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "jamsim/error.hpp"

namespace jamsim {
namespace {

using Complex = std::complex<double>;

constexpr double kMHz = 1e6;

Complex section_response(const Biquad& s, Complex z_inv) {
  const Complex z_inv2 = z_inv * z_inv;
  return (s.b0 + s.b1 * z_inv + s.b2 * z_inv2) / (1.0 + s.a1 * z_inv + s.a2 * z_inv2);
}

Complex cascade_response(std::span<const Biquad> sections, double freq_hz, double sample_rate) {
  const Complex z_inv = std::polar(1.0, -2.0 * std::numbers::pi * freq_hz / sample_rate);
  Complex h{1.0, 0.0};
  for (const auto& s : sections) h *= section_response(s, z_inv);
  return h;
}

Complex bilinear(Complex s, double sample_rate) {
  const double k = 2.0 * sample_rate;
  return (k + s) / (k - s);
}

void validate(const FilterSpec& spec, double sample_rate, int order) {
  if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
    throw Error(ErrorKind::InvalidSampleRate, "sample rate must be positive");
  }
  if (!(spec.band_low_mhz > 0.0) || !(spec.band_low_mhz < spec.band_high_mhz) ||
      !std::isfinite(spec.band_high_mhz)) {
    throw Error(ErrorKind::InvalidSpec, "filter " + std::to_string(spec.id) +
                                            ": need 0 < band_low < band_high, got " +
                                            std::to_string(spec.band_low_mhz) + ".." +
                                            std::to_string(spec.band_high_mhz) + " MHz");
  }
  if (!(spec.band_high_mhz * kMHz < sample_rate / 2.0)) {
    throw Error(ErrorKind::BandAboveNyquist,
                "filter " + std::to_string(spec.id) + " upper edge " +
                    std::to_string(spec.band_high_mhz) + " MHz is not below fs/2 = " +
                    std::to_string(sample_rate / 2.0 / kMHz) + " MHz");
  }
  if (order < 2 || order % 2 != 0) {
    throw Error(ErrorKind::InvalidOrder,
                "bandpass order must be even and >= 2, got " + std::to_string(order));
  }
}

}  // namespace

bool Biquad::is_stable() const {
  return std::abs(a2) < 1.0 && std::abs(a1) < 1.0 + a2;
}

FilterStages design_bandpass(const FilterSpec& spec, double sample_rate, int order) {
  validate(spec, sample_rate, order);

  const int proto_order = order / 2;
  const double k = 2.0 * sample_rate;
  const double w_low = k * std::tan(std::numbers::pi * spec.band_low_mhz * kMHz / sample_rate);
  const double w_high = k * std::tan(std::numbers::pi * spec.band_high_mhz * kMHz / sample_rate);
  const double w_center = std::sqrt(w_low * w_high);
  const double bandwidth = w_high - w_low;

  // Each lowpass prototype pole p maps to the bandpass pair
  //   s = p B/2 +- sqrt((p B/2)^2 - W0^2)
  // and then through the bilinear transform. Keep the upper-half-plane
  // member of every conjugate pair; real poles are paired up separately.
  std::vector<Complex> upper;
  std::vector<double> real_poles;
  for (int i = 0; i < proto_order; ++i) {
    const double theta = std::numbers::pi * (2.0 * i + proto_order + 1) / (2.0 * proto_order);
    const Complex proto = std::polar(1.0, theta);
    const Complex half = proto * (bandwidth / 2.0);
    const Complex root = std::sqrt(half * half - w_center * w_center);
    for (const Complex s : {half + root, half - root}) {
      const Complex z = bilinear(s, sample_rate);
      if (std::abs(z.imag()) <= 1e-12 * std::abs(z)) {
        real_poles.push_back(z.real());
      } else if (z.imag() > 0.0) {
        upper.push_back(z);
      }
    }
  }
  std::sort(upper.begin(), upper.end(),
            [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
  std::sort(real_poles.begin(), real_poles.end());

  FilterStages stages;
  stages.sample_rate = sample_rate;
  stages.spec = spec;
  for (const Complex p : upper) {
    stages.sections.push_back({1.0, 0.0, -1.0, -2.0 * p.real(), std::norm(p)});
  }
  for (std::size_t i = 0; i + 1 < real_poles.size(); i += 2) {
    const double r1 = real_poles[i];
    const double r2 = real_poles[i + 1];
    stages.sections.push_back({1.0, 0.0, -1.0, -(r1 + r2), r1 * r2});
  }
  if (real_poles.size() % 2 != 0 ||
      stages.sections.size() != static_cast<std::size_t>(proto_order)) {
    throw Error(ErrorKind::DesignUnstable, "pole pairing failed for filter " +
                                               std::to_string(spec.id));
  }

  // Unity gain per section at the digital image of the geometric centre.
  const double f_center = sample_rate / std::numbers::pi * std::atan(w_center / k);
  const Complex z_inv = std::polar(1.0, -2.0 * std::numbers::pi * f_center / sample_rate);
  for (auto& s : stages.sections) {
    const double g = 1.0 / std::abs(section_response(s, z_inv));
    s.b0 *= g;
    s.b1 *= g;
    s.b2 *= g;
    const bool finite = std::isfinite(s.b0) && std::isfinite(s.a1) && std::isfinite(s.a2);
    if (!finite || !s.is_stable()) {
      throw Error(ErrorKind::DesignUnstable,
                  "filter " + std::to_string(spec.id) + " produced a section outside the "
                  "stability triangle");
    }
  }
  return stages;
}

std::vector<ResponsePoint> frequency_response(const FilterStages& stages,
                                              std::span<const double> freqs_hz) {
  std::vector<ResponsePoint> out;
  out.reserve(freqs_hz.size());
  const double nyquist = stages.sample_rate / 2.0;
  for (const double f : freqs_hz) {
    if (!(f >= 0.0) || !(f <= nyquist)) {
      throw Error(ErrorKind::FrequencyAboveNyquist,
                  std::to_string(f) + " Hz is outside [0, " + std::to_string(nyquist) + "] Hz");
    }
    const Complex h = cascade_response(stages.sections, f, stages.sample_rate);
    const double mag = std::abs(h);
    const double db = mag > 0.0 ? std::max(20.0 * std::log10(mag), kResponseFloorDb)
                                : kResponseFloorDb;
    out.push_back({db, std::arg(h)});
  }
  return out;
}

SignalBuffer apply_filter(const FilterStages& stages, const SignalBuffer& input) {
  if (input.sample_rate() != stages.sample_rate) {
    throw Error(ErrorKind::SampleRateMismatch,
                "input at " + std::to_string(input.sample_rate()) + " Hz, filter designed for " +
                    std::to_string(stages.sample_rate) + " Hz");
  }
  const auto in = input.samples();
  std::vector<double> data(in.begin(), in.end());
  for (const auto& s : stages.sections) {
    double z1 = 0.0;
    double z2 = 0.0;
    for (double& v : data) {
      const double x = v;
      const double y = s.b0 * x + z1;
      z1 = s.b1 * x - s.a1 * y + z2;
      z2 = s.b2 * x - s.a2 * y;
      v = y;
    }
  }
  return SignalBuffer(std::move(data), input.sample_rate());
}

FilterBank::FilterBank(double sample_rate, int order) : sample_rate_(sample_rate) {
  filters_.reserve(kDetectorFilters.size());
  for (const auto& spec : kDetectorFilters) {
    filters_.push_back(design_bandpass(spec, sample_rate, order));
  }
}

const FilterStages& FilterBank::filter(int id) const {
  if (id < 1 || id > static_cast<int>(filters_.size())) {
    throw Error(ErrorKind::InvalidValue, "filter id must be 1..4, got " + std::to_string(id));
  }
  return filters_[static_cast<std::size_t>(id - 1)];
}

}  // namespace jamsim
