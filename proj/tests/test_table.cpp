#include <doctest.h>

#include <cstdio>

#include "apword/table.hpp"

using namespace apword;

TEST_CASE("csv from a range scan") {
  RangeOptions opts;
  opts.threads = 1;
  std::vector<TableRow> rows;
  for (auto const& r : scan_range(WordSource(make_tm(), 0), 15, opts)) {
    rows.push_back(to_row(r));
  }
  std::string const csv = to_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 16);
  CHECK(csv.rfind("d,length,start,letter,stable\n", 0) == 0);
  CHECK(csv.find("\n15,20,753,0,true\n") != std::string::npos);
  CHECK(to_csv(rows) == csv);
}

TEST_CASE("empty table is a header") {
  CHECK(to_csv({}) == "d,length,start,letter,stable\n");
  CHECK(parse_table_json(to_json({})).empty());
}

TEST_CASE("expectation columns") {
  std::vector<TableRow> rows{{3, 8, 45, 0, true, 8, true}, {4, 2, 0, 0, true, {}, {}}};
  CHECK(to_csv(rows)
        == "d,length,start,letter,stable,expected,pass\n3,8,45,0,true,8,true\n4,2,0,0,true,,\n");
}

TEST_CASE("json round trip") {
  std::vector<TableRow> rows{{3, 8, 45, 0, true, 8, true}, {5, 6, 9, 1, false, {}, {}}};
  std::string const     text = to_json(rows);
  CHECK(text.find("\"schema_version\": 1") != std::string::npos);
  CHECK(parse_table_json(text) == rows);
  std::string const path = "table_test.json";
  emit_table(rows, TableFormat::json, path);
  CHECK(load_table(path) == rows);
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_table_json(R"({"schema_version":2,"rows":[]})"), Error);
  CHECK_THROWS_AS(emit_table(rows, TableFormat::csv, "/nonexistent/dir/t.csv"), Error);
  CHECK(parse_table_format("csv") == TableFormat::csv);
  CHECK_THROWS_AS(parse_table_format("xml"), Error);
}
