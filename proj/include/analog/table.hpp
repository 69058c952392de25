#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace analog {

/// Column-oriented numeric result. Metadata is an ordered list of key/value
/// strings so that serialized output is byte-for-byte deterministic.
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;

  /// Index of a named column; InvalidArgument if absent.
  std::size_t column(std::string_view name) const;
  std::vector<double> column_values(std::string_view name) const;
  double at(std::size_t row, std::string_view name) const { return rows.at(row)[column(name)]; }
  const std::string* meta(std::string_view key) const;
};

}  // namespace analog
