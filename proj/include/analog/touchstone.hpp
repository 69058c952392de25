#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "analog/nrw.hpp"
#include "analog/types.hpp"
#include "analog/units.hpp"

// Touchstone version 1, two-port, S-parameters only.
namespace analog::io {

enum class TouchstoneFormat { RI, MA, DB };

struct TouchstoneOptions {
  Unit frequency_unit = Unit::GHz;
  TouchstoneFormat format = TouchstoneFormat::MA;
  double reference_resistance = 50.0;  // read but unused (impedances are normalized)
};

struct TouchstoneRow {
  double frequency = 0.0;  // Hz
  Complex s11, s21, s12, s22;
};

struct TouchstoneDocument {
  TouchstoneOptions options;
  std::vector<TouchstoneRow> rows;
  std::vector<std::string> comments;  // text after '!', in file order
  std::vector<std::string> warnings;
};

/// MissingOptionLine, MalformedRow (with line number), NonMonotoneFrequency.
TouchstoneDocument parse_touchstone(std::string_view text);
TouchstoneDocument read_touchstone(const std::filesystem::path& path);

/// Writes comments, the option line, then rows in the document's format and
/// frequency unit with 17 significant digits.
std::string write_touchstone(const TouchstoneDocument& doc);

/// (f, s11, s21) rows for extraction; the slab is assumed reciprocal and
/// symmetric, so s12 and s22 are not used.
nrw::SParamSeries to_series(const TouchstoneDocument& doc, double thickness);

/// Symmetric reciprocal two-port document (s12 = s21, s22 = s11).
TouchstoneDocument from_series(const nrw::SParamSeries& series, TouchstoneOptions options = {});

std::string_view to_string(TouchstoneFormat format) noexcept;

}  // namespace analog::io
