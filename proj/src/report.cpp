#include "skingame/report.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "skingame/error.hpp"

namespace skingame {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  fail(ErrorKind::kValidation, fmt::format("unknown output format '{}'", name));
}

std::string format_value(double v) { return fmt::format("{:.12g}", v); }

std::string format_grid_cell(double v) { return fmt::format("{:.6g}", v); }

Report& Report::add(std::string field, Value value) {
  rows_.emplace_back(std::move(field), std::move(value));
  return *this;
}

void Report::write(std::ostream& out, OutputFormat format) const {
  if (format == OutputFormat::kCsv) {
    out << "field,value\n";
    for (const auto& [field, value] : rows_) {
      out << field << ',';
      std::visit(Overloaded{
                     [&](const std::string& s) { out << s; },
                     [&](double d) { out << format_value(d); },
                     [&](long long n) { out << n; },
                     [&](const std::optional<double>& d) {
                       if (d) out << format_value(*d);
                     },
                 },
                 value);
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [field, value] : rows_) {
    std::visit(Overloaded{
                   [&](const std::string& s) { j[field] = s; },
                   [&](double d) { j[field] = d; },
                   [&](long long n) { j[field] = n; },
                   [&](const std::optional<double>& d) {
                     j[field] = d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json();
                   },
               },
               value);
  }
  out << j.dump(2) << '\n';
}

void write_grid(std::ostream& out, const MultiplierGrid& grid, OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    out << 'r';
    for (const double f : grid.f_values) out << ',' << format_grid_cell(f);
    out << '\n';
    for (std::size_t row = 0; row < grid.r_values.size(); ++row) {
      out << format_grid_cell(grid.r_values[row]);
      for (const double v : grid.values[row]) out << ',' << format_grid_cell(v);
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json j;
  j["m_periods"] = grid.m_periods;
  j["f"] = grid.f_values;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t row = 0; row < grid.r_values.size(); ++row) {
    nlohmann::ordered_json entry;
    entry["r"] = grid.r_values[row];
    entry["values"] = grid.values[row];
    rows.push_back(std::move(entry));
  }
  j["rows"] = std::move(rows);
  out << j.dump(2) << '\n';
}

ReturnSeries read_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, fmt::format("cannot open series file '{}'", path.string()));
  std::string line;
  bool header_seen = false;
  std::vector<double> values;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (!header_seen) {
      require(line == "value",
              fmt::format("{}:{}: expected header 'value', got '{}'", path.string(),
                          line_no, line));
      header_seen = true;
      continue;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(line, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == line.size(),
            fmt::format("{}:{}: bad value '{}'", path.string(), line_no, line));
    values.push_back(v);
  }
  if (in.bad()) fail(ErrorKind::kIo, fmt::format("error reading '{}'", path.string()));
  if (values.empty()) {
    fail(ErrorKind::kEmptySeries, fmt::format("series file '{}' has no values", path.string()));
  }
  return ReturnSeries(std::move(values), path.filename().string());
}

void write_series_csv(std::ostream& out, std::span<const double> values) {
  out << "value\n";
  for (const double v : values) out << fmt::format("{:.17g}", v) << '\n';
}

}  // namespace skingame
