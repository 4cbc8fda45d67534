// CSV and JSON tables of scan results.
//
// Columns are d, length, start, letter, stable, then expected and pass when
// any row carries an expectation. JSON output has "schema_version": 1.

#ifndef APWORD_TABLE_HPP_
#define APWORD_TABLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apword/ap.hpp"

namespace apword {

  inline constexpr int table_schema_version = 1;

  struct TableRow {
    std::uint64_t                d      = 0;
    std::uint64_t                length = 0;
    std::uint64_t                start  = 0;
    unsigned                     letter = 0;
    bool                         stable = false;
    std::optional<std::uint64_t> expected;
    std::optional<bool>          pass;

    friend bool operator==(TableRow const&, TableRow const&) = default;
  };

  enum class TableFormat { csv, json };

  TableFormat parse_table_format(std::string const& text);

  TableRow to_row(ScanReport const& r);

  std::string to_csv(std::vector<TableRow> const& rows);
  std::string to_json(std::vector<TableRow> const& rows);

  //! Reads the JSON written by to_json().
  std::vector<TableRow> parse_table_json(std::string const& text);

  //! Writes the table to \p path, or to stdout when path is empty or "-".
  void emit_table(std::vector<TableRow> const& rows,
                  TableFormat                  format,
                  std::string const&           path);

  std::vector<TableRow> load_table(std::string const& path);

}  // namespace apword

#endif  // APWORD_TABLE_HPP_
