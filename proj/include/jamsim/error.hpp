#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jamsim {

enum class ErrorKind {
  InvalidSampleRate,
  FrequencyAboveNyquist,
  NonFiniteSample,
  LengthMismatch,
  SampleRateMismatch,
  InvalidSpec,
  BandAboveNyquist,
  InvalidOrder,
  DesignUnstable,
  InvalidWindow,
  InvalidConfig,
  BufferTooShort,
  EmptyMeasurementRegion,
  ParseError,
  UnknownKey,
  InvalidValue,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// All library failures surface as this exception; kind() lets callers
// (and tests) distinguish them without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace jamsim
