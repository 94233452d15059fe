#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagdesic {

enum class ErrorCode {
  DimensionMismatch,
  ModeMismatch,
  NotSkewHermitian,
  NotTangent,
  ExactSpectrumUnavailable,
  InvalidPartition,
  PartitionMismatch,
  InvalidRoot,
  DegenerateMultiplier,
  NotEquigeodesic,
  AllZeroSpectrum,
  InvalidArgument,
  NumericalFailure,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is stable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace flagdesic
