#include "jamsim/error.hpp"

namespace jamsim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSampleRate: return "InvalidSampleRate";
    case ErrorKind::FrequencyAboveNyquist: return "FrequencyAboveNyquist";
    case ErrorKind::NonFiniteSample: return "NonFiniteSample";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SampleRateMismatch: return "SampleRateMismatch";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::BandAboveNyquist: return "BandAboveNyquist";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::DesignUnstable: return "DesignUnstable";
    case ErrorKind::InvalidWindow: return "InvalidWindow";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::BufferTooShort: return "BufferTooShort";
    case ErrorKind::EmptyMeasurementRegion: return "EmptyMeasurementRegion";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::InvalidValue: return "InvalidValue";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace jamsim
