#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace kglab {

// Fixed-format number rendering so that identical inputs give identical bytes.
std::string format_number(double v);

using CsvCell = std::variant<double, long long, std::string>;

// Writes '# key: value' metadata lines, then one header row, then data rows.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void meta(const std::string& key, const std::string& value);
  void meta(const std::string& key, double value);
  void columns(const std::vector<std::string>& names);
  void row(const std::vector<CsvCell>& cells);

 private:
  std::ostream& out_;
  std::size_t width_ = 0;
};

struct CsvTable {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  // Index of a column; throws ConfigError when missing.
  std::size_t column(const std::string& name) const;
  std::vector<double> numeric_column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

}  // namespace kglab
