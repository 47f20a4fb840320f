#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "skingame/analytics.hpp"
#include "skingame/estimation.hpp"

namespace skingame {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_format(const std::string& name);

// Ordered key/value report rendered as a two-column `field,value` CSV or a flat
// JSON object. Absent optionals render as an empty cell / null.
class Report {
 public:
  using Value = std::variant<std::string, double, long long, std::optional<double>>;

  Report& add(std::string field, Value value);

  void write(std::ostream& out, OutputFormat format) const;

 private:
  std::vector<std::pair<std::string, Value>> rows_;
};

// Fixed-precision renderings for report cells (12 digits) and grid cells (6).
std::string format_value(double v);
std::string format_grid_cell(double v);

// Grid CSV: header `r,<F1>,<F2>,...`, one row per r, 6 significant digits.
void write_grid(std::ostream& out, const MultiplierGrid& grid, OutputFormat format);

// Series CSV: a `value` header followed by one value per line.
ReturnSeries read_series_csv(const std::filesystem::path& path);
void write_series_csv(std::ostream& out, std::span<const double> values);

}  // namespace skingame
