#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "simplex_kde/simplex.hpp"

namespace simplex_kde::cli {

struct IngestOptions {
  //! Column holding the dates; empty means the first column.
  std::string date_column;
  //! Share columns by name; empty means every column except the date column.
  std::vector<std::string> share_columns;
  ValidationMode mode = ValidationMode::strict;
};

struct IngestResult {
  ShareTable table;  // rows divided by their totals
  std::vector<std::string> dates;
  std::size_t renormalized_rows = 0;
};

//! Reads a comma-separated file with a header row. Blank lines are skipped.
//! Row numbers in errors count the header as row 1.
IngestResult read_share_table(std::istream& in, const IngestOptions& options);
IngestResult read_share_table_file(const std::string& path, const IngestOptions& options);

//! Resolves a pair member given as a 1-based column number or a column name;
//! returns the 0-based index.
std::size_t resolve_column(const ShareTable& table, const std::string& spec);

}  // namespace simplex_kde::cli
