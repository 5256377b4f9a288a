#include "jamsim/analysis.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "jamsim/error.hpp"

namespace jamsim {
namespace {

struct FftwDeleter {
  void operator()(void* p) const { fftw_free(p); }
};
struct PlanDeleter {
  void operator()(fftw_plan p) const { fftw_destroy_plan(p); }
};

template <typename T>
std::unique_ptr<T[], FftwDeleter> fftw_buffer(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  if (p == nullptr) throw std::bad_alloc();
  return std::unique_ptr<T[], FftwDeleter>(p);
}

}  // namespace

std::vector<double> bin_powers(const SignalBuffer& input, Window window) {
  const std::size_t n = input.size();
  if (n < 2) {
    throw Error(ErrorKind::BufferTooShort,
                "power spectrum needs at least 2 samples, got " + std::to_string(n));
  }

  auto in = fftw_buffer<double>(n);
  auto out = fftw_buffer<fftw_complex>(n / 2 + 1);

  // Hann weights are normalized by their mean square so that a stationary
  // signal keeps its total power.
  double weight_power = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double w = 1.0;
    if (window == Window::Hann) {
      w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
    }
    weight_power += w * w;
    in[i] = w * input[i];
  }
  weight_power /= static_cast<double>(n);

  // FFTW planning is not thread-safe; ESTIMATE plans are cheap and keep
  // results independent of wisdom state.
  std::unique_ptr<fftw_plan_s, PlanDeleter> plan;
  {
    static std::mutex planner_mutex;
    std::lock_guard lock(planner_mutex);
    plan.reset(fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE));
  }
  fftw_execute(plan.get());

  const std::size_t bins = n / 2 + 1;
  const double norm = 1.0 / (static_cast<double>(n) * static_cast<double>(n) * weight_power);
  std::vector<double> power(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    const double mag2 = out[k][0] * out[k][0] + out[k][1] * out[k][1];
    // Interior bins fold in their negative-frequency mirror.
    const bool unpaired = k == 0 || (n % 2 == 0 && k == n / 2);
    power[k] = (unpaired ? 1.0 : 2.0) * mag2 * norm;
  }
  return power;
}

Spectrum power_spectrum(const SignalBuffer& input, Window window) {
  const auto power = bin_powers(input, window);
  Spectrum spectrum;
  spectrum.resolution = input.sample_rate() / static_cast<double>(input.size());
  spectrum.freqs.resize(power.size());
  spectrum.power_db.resize(power.size());
  for (std::size_t k = 0; k < power.size(); ++k) {
    spectrum.freqs[k] = static_cast<double>(k) * spectrum.resolution;
    spectrum.power_db[k] =
        power[k] > 0.0 ? std::max(10.0 * std::log10(power[k]), kSpectrumFloorDb) : kSpectrumFloorDb;
  }
  return spectrum;
}

double rms(const SignalBuffer& input, double skip_fraction) {
  if (!(skip_fraction >= 0.0) || !(skip_fraction < 1.0)) {
    throw Error(ErrorKind::InvalidValue, "skip fraction must be in [0, 1)");
  }
  const auto skip = static_cast<std::size_t>(std::floor(skip_fraction * static_cast<double>(input.size())));
  if (skip >= input.size()) {
    throw Error(ErrorKind::EmptyMeasurementRegion, "no samples left after skipping " +
                                                       std::to_string(skip));
  }
  double sum = 0.0;
  for (std::size_t i = skip; i < input.size(); ++i) sum += input[i] * input[i];
  return std::sqrt(sum / static_cast<double>(input.size() - skip));
}

std::vector<Peak> find_peaks(const Spectrum& spectrum, double min_db_above_floor) {
  const auto& p = spectrum.power_db;
  if (p.empty()) return {};

  std::vector<double> sorted(p);
  const auto mid = sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2);
  std::nth_element(sorted.begin(), mid, sorted.end());
  const double threshold = *mid + min_db_above_floor;

  std::vector<Peak> peaks;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const bool rises = k == 0 || p[k] > p[k - 1];
    const bool holds = k + 1 == p.size() || p[k] >= p[k + 1];
    if (rises && holds && p[k] > threshold) peaks.push_back({spectrum.freqs[k], p[k]});
  }
  return peaks;
}

}  // namespace jamsim
