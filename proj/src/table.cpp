#include "apword/table.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace apword {

  namespace {

    bool has_expectations(std::vector<TableRow> const& rows) {
      return std::any_of(rows.begin(), rows.end(),
                         [](TableRow const& r) { return r.expected.has_value(); });
    }

  }  // namespace

  TableFormat parse_table_format(std::string const& text) {
    if (text == "csv") {
      return TableFormat::csv;
    }
    if (text == "json") {
      return TableFormat::json;
    }
    throw Error("unknown table format \"" + text + "\"");
  }

  TableRow to_row(ScanReport const& r) {
    return {r.d, r.a_lower, r.witness.start, r.witness.letter, r.stable, {}, {}};
  }

  std::string to_csv(std::vector<TableRow> const& rows) {
    bool const         extra = has_expectations(rows);
    std::ostringstream out;
    out << "d,length,start,letter,stable";
    if (extra) {
      out << ",expected,pass";
    }
    out << '\n';
    for (auto const& r : rows) {
      out << r.d << ',' << r.length << ',' << r.start << ',' << r.letter << ','
          << (r.stable ? "true" : "false");
      if (extra) {
        out << ',';
        if (r.expected) {
          out << *r.expected;
        }
        out << ',';
        if (r.pass) {
          out << (*r.pass ? "true" : "false");
        }
      }
      out << '\n';
    }
    return out.str();
  }

  std::string to_json(std::vector<TableRow> const& rows) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = table_schema_version;
    doc["rows"]           = nlohmann::ordered_json::array();
    for (auto const& r : rows) {
      nlohmann::ordered_json row;
      row["d"]      = r.d;
      row["length"] = r.length;
      row["start"]  = r.start;
      row["letter"] = r.letter;
      row["stable"] = r.stable;
      if (r.expected) {
        row["expected"] = *r.expected;
      }
      if (r.pass) {
        row["pass"] = *r.pass;
      }
      doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
  }

  std::vector<TableRow> parse_table_json(std::string const& text) {
    auto const doc = nlohmann::json::parse(text);
    if (doc.value("schema_version", 0) != table_schema_version) {
      throw Error("unsupported table schema version");
    }
    std::vector<TableRow> rows;
    for (auto const& j : doc.at("rows")) {
      TableRow r{j.at("d").get<std::uint64_t>(),
                 j.at("length").get<std::uint64_t>(),
                 j.at("start").get<std::uint64_t>(),
                 j.at("letter").get<unsigned>(),
                 j.at("stable").get<bool>(),
                 {},
                 {}};
      if (j.contains("expected")) {
        r.expected = j["expected"].get<std::uint64_t>();
      }
      if (j.contains("pass")) {
        r.pass = j["pass"].get<bool>();
      }
      rows.push_back(r);
    }
    return rows;
  }

  void emit_table(std::vector<TableRow> const& rows,
                  TableFormat                  format,
                  std::string const&           path) {
    std::string const text = format == TableFormat::csv ? to_csv(rows) : to_json(rows);
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
      throw Error("cannot write " + path);
    }
  }

  std::vector<TableRow> load_table(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table_json(buf.str());
  }

}  // namespace apword
