#include "analog/errors.hpp"

#include <algorithm>
#include <cmath>

#include "analog/types.hpp"

namespace analog {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IncompatibleUnits: return "IncompatibleUnits";
    case ErrorKind::NonPositiveEnergy: return "NonPositiveEnergy";
    case ErrorKind::NonPositiveWavenumber: return "NonPositiveWavenumber";
    case ErrorKind::HeightNotAboveEnergy: return "HeightNotAboveEnergy";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::ZeroImpedance: return "ZeroImpedance";
    case ErrorKind::PatternViolation: return "PatternViolation";
    case ErrorKind::GeometryViolation: return "GeometryViolation";
    case ErrorKind::TangentPole: return "TangentPole";
    case ErrorKind::NoRootInBracket: return "NoRootInBracket";
    case ErrorKind::IndeterminateRow: return "IndeterminateRow";
    case ErrorKind::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorKind::EmptySeries: return "EmptySeries";
    case ErrorKind::MissingImpedance: return "MissingImpedance";
    case ErrorKind::NoCrossingInBand: return "NoCrossingInBand";
    case ErrorKind::MissingOptionLine: return "MissingOptionLine";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::NonMonotoneFrequency: return "NonMonotoneFrequency";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

double max_abs_diff(const TransferMatrix2& a, const TransferMatrix2& b) {
  return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12), std::abs(a.m21 - b.m21),
                   std::abs(a.m22 - b.m22)});
}

}  // namespace analog
