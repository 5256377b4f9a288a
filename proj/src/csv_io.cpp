#include "jamsim/csv_io.hpp"

#include <cstdio>
#include <fstream>

#include "jamsim/error.hpp"

namespace jamsim {
namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write to " + path.string() + " failed");
}

}  // namespace

std::string format_csv_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

void write_timeseries_csv(const SignalBuffer& buffer, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "time_s,value_v\n";
  const double fs = buffer.sample_rate();
  for (std::size_t i = 0; i < buffer.size(); ++i) {
    out << format_csv_value(static_cast<double>(i) / fs) << ',' << format_csv_value(buffer[i]) << '\n';
  }
  finish(out, path);
}

void write_spectrum_csv(const Spectrum& spectrum, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "freq_hz,power_db\n";
  for (std::size_t k = 0; k < spectrum.freqs.size(); ++k) {
    out << format_csv_value(spectrum.freqs[k]) << ',' << format_csv_value(spectrum.power_db[k]) << '\n';
  }
  finish(out, path);
}

void write_response_csv(std::span<const double> freqs_hz, std::span<const ResponsePoint> response,
                        const std::filesystem::path& path) {
  if (freqs_hz.size() != response.size()) {
    throw Error(ErrorKind::LengthMismatch, "frequency and response lists differ in length");
  }
  auto out = open_for_write(path);
  out << "freq_hz,magnitude_db,phase_rad\n";
  for (std::size_t k = 0; k < freqs_hz.size(); ++k) {
    out << format_csv_value(freqs_hz[k]) << ',' << format_csv_value(response[k].magnitude_db) << ','
        << format_csv_value(response[k].phase_rad) << '\n';
  }
  finish(out, path);
}

}  // namespace jamsim
