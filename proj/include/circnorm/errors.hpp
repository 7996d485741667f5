#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circnorm {

enum class ErrorKind {
  InvalidArgument,
  UnsupportedSequence,
  NegativeEntry,
  DimensionMismatch,
  PrecisionLoss,
  NoConvergence,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnsupportedSequence: return "UnsupportedSequence";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PrecisionLoss: return "PrecisionLoss";
    case ErrorKind::NoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

/// Every library failure is reported as an Error carrying its kind, so the
/// CLI can emit structured error records without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace circnorm
