#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "skingame/report.hpp"
#include "testing.hpp"

namespace skingame {
namespace {

using testing::throws_kind;

constexpr const char* kDefaultGridCsv =
    "r,0.6,0.7,0.8,0.9\n"
    "0,1.49921,2.31551,3.7233,5.47428\n"
    "0.1,2.57492,4.80275,10.067,19.5907\n"
    "0.2,4.93337,12.0463,34.5516,86.5295\n"
    "0.3,11.0865,38.1498,147.574,445.587\n";

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("skingame_report_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p;
  }

 private:
  std::filesystem::path path_;
};

TEST(WriteGrid, DefaultCsvIsGolden) {
  std::ostringstream out;
  write_grid(out, table1_default(), OutputFormat::kCsv);
  EXPECT_EQ(out.str(), kDefaultGridCsv);
}

TEST(WriteGrid, JsonMirrorsCsv) {
  std::ostringstream out;
  const MultiplierGrid grid = table1_default();
  write_grid(out, grid, OutputFormat::kJson);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["m_periods"], 20);
  EXPECT_EQ(j["f"].size(), 4u);
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_EQ(j["rows"][3]["r"], 0.3);
  EXPECT_EQ(j["rows"][3]["values"][3].get<double>(), grid.values[3][3]);
}

TEST(Report, CsvAndJson) {
  Report r;
  r.add("name", std::string("x")).add("value", 0.1).add("count", 3LL).add(
      "missing", std::optional<double>{});
  std::ostringstream csv;
  r.write(csv, OutputFormat::kCsv);
  EXPECT_EQ(csv.str(), "field,value\nname,x\nvalue,0.1\ncount,3\nmissing,\n");
  std::ostringstream js;
  r.write(js, OutputFormat::kJson);
  const auto j = nlohmann::json::parse(js.str());
  EXPECT_EQ(j["name"], "x");
  EXPECT_EQ(j["value"], 0.1);
  EXPECT_EQ(j["count"], 3);
  EXPECT_TRUE(j["missing"].is_null());
}

TEST(ParseFormat, KnownAndUnknown) {
  EXPECT_EQ(parse_format("csv"), OutputFormat::kCsv);
  EXPECT_EQ(parse_format("json"), OutputFormat::kJson);
  EXPECT_TRUE(throws_kind([] { parse_format("xml"); }, ErrorKind::kValidation));
}

TEST(SeriesCsv, ReadsWhatItWrites) {
  TempDir dir;
  const std::vector<double> values{1.0, -3.25, 0.1, 1e-300, -7.0 / 3.0};
  std::ostringstream out;
  write_series_csv(out, values);
  const auto p = dir.write("s.csv", out.str());
  const ReturnSeries series = read_series_csv(p);
  EXPECT_EQ(series.values(), values);
  EXPECT_EQ(series.label(), "s.csv");
}

TEST(SeriesCsv, ToleratesBlankLinesAndCrlf) {
  TempDir dir;
  const auto p = dir.write("s.csv", "value\r\n1\r\n\r\n2\n");
  EXPECT_EQ(read_series_csv(p).values(), (std::vector<double>{1.0, 2.0}));
}

TEST(SeriesCsv, Errors) {
  TempDir dir;
  EXPECT_TRUE(throws_kind([&] { read_series_csv(dir.write("e.csv", "")); },
                          ErrorKind::kEmptySeries));
  EXPECT_TRUE(throws_kind([&] { read_series_csv(dir.write("h.csv", "value\n")); },
                          ErrorKind::kEmptySeries));
  EXPECT_TRUE(throws_kind([&] { read_series_csv(dir.write("b.csv", "price\n1\n")); },
                          ErrorKind::kValidation));
  EXPECT_TRUE(throws_kind([&] { read_series_csv(dir.write("n.csv", "value\n1\nabc\n")); },
                          ErrorKind::kValidation));
  EXPECT_TRUE(throws_kind([&] { read_series_csv(dir.write("i.csv", "value\ninf\n")); },
                          ErrorKind::kValidation));
  EXPECT_TRUE(throws_kind([] { read_series_csv("/nonexistent/dir/series.csv"); },
                          ErrorKind::kIo));
}

}  // namespace
}  // namespace skingame
