#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "jamsim/analysis.hpp"
#include "jamsim/filterbank.hpp"
#include "jamsim/signal.hpp"

namespace jamsim {

// All CSV output: LF line endings, values as %.8e (9 significant digits).

/// Header `time_s,value_v`; row i is at t = i / fs.
void write_timeseries_csv(const SignalBuffer& buffer, const std::filesystem::path& path);

/// Header `freq_hz,power_db`.
void write_spectrum_csv(const Spectrum& spectrum, const std::filesystem::path& path);

/// Header `freq_hz,magnitude_db,phase_rad`.
void write_response_csv(std::span<const double> freqs_hz, std::span<const ResponsePoint> response,
                        const std::filesystem::path& path);

std::string format_csv_value(double v);

}  // namespace jamsim
