#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace analog {

enum class ErrorKind {
  InvalidArgument,
  IncompatibleUnits,
  NonPositiveEnergy,
  NonPositiveWavenumber,
  HeightNotAboveEnergy,
  EmptyList,
  ZeroImpedance,
  PatternViolation,
  GeometryViolation,
  TangentPole,
  NoRootInBracket,
  IndeterminateRow,
  BranchAmbiguity,
  EmptySeries,
  MissingImpedance,
  NoCrossingInBand,
  MissingOptionLine,
  MalformedRow,
  NonMonotoneFrequency,
  ConfigError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every library failure is reported through this type; kind() names the
// module-level error so callers (and the CLI) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace analog
