#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace approach {

/// Checkpoint table of one simulation. Serialized as CSV with "# key=value"
/// metadata lines, one header line and one row per checkpoint; numbers use
/// 17 significant digits. `wall_seconds` is not serialized so that repeated
/// runs produce identical files.
struct RunRecord {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  double wall_seconds = 0.0;

  const std::string& get(const std::string& key) const;
  void set(const std::string& key, std::string value);
  int column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
  bool has_column(const std::string& name) const { return column_index(name) >= 0; }
};

/// Equal metadata, columns and rows (NaN equals NaN); wall-clock ignored.
bool same_content(const RunRecord& a, const RunRecord& b);

std::string to_csv(const RunRecord& record);
RunRecord parse_csv(std::string_view text);

/// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& contents);
RunRecord read_csv_file(const std::string& path);

}  // namespace approach
