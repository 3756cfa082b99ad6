#include "share_table_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string_view>

#include <fmt/format.h>

#include "simplex_kde/error.hpp"

namespace simplex_kde::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '"' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_double(std::string_view text, double& value) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw Error(ErrorCode::MissingColumn, fmt::format("no column named '{}'", name));
  return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

IngestResult read_share_table(std::istream& in, const IngestOptions& options) {
  std::string line;
  std::size_t row_number = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++row_number;
    if (!trim(line).empty()) {
      header = split(line);
      break;
    }
  }
  if (header.empty()) throw Error(ErrorCode::EmptyData, "input has no header row");
  if (header.front().starts_with("\xEF\xBB\xBF")) header.front().erase(0, 3);

  const std::size_t date_index =
      options.date_column.empty() ? 0 : find_column(header, options.date_column);
  std::vector<std::size_t> share_index;
  IngestResult result;
  if (options.share_columns.empty()) {
    for (std::size_t k = 0; k < header.size(); ++k)
      if (k != date_index) {
        share_index.push_back(k);
        result.table.columns.push_back(header[k]);
      }
  } else {
    for (const std::string& name : options.share_columns) {
      share_index.push_back(find_column(header, name));
      result.table.columns.push_back(name);
    }
  }
  if (share_index.size() < 2)
    throw Error(ErrorCode::MissingColumn, "need at least two share columns");

  std::vector<double> raw(share_index.size());
  while (std::getline(in, line)) {
    ++row_number;
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split(line);
    if (cells.size() != header.size())
      throw Error(ErrorCode::UnparsableRow,
                  fmt::format("row {}: expected {} fields, found {}", row_number, header.size(),
                              cells.size()));
    for (std::size_t k = 0; k < share_index.size(); ++k)
      if (!parse_double(cells[share_index[k]], raw[k]))
        throw Error(ErrorCode::UnparsableRow,
                    fmt::format("row {}: column '{}' is not a number: '{}'", row_number,
                                result.table.columns[k], cells[share_index[k]]));
    const SimplexPoint point = [&] {
      try {
        return validate_composition(raw, options.mode, true);
      } catch (const Error& e) {
        throw Error(ErrorCode::UnparsableRow, fmt::format("row {}: {}", row_number, e.what()));
      }
    }();
    double total = 0.0;
    bool clipped = false;
    for (double x : raw) {
      total += std::max(x, 0.0);
      clipped = clipped || x < 0.0;
    }
    if (clipped || std::abs(total - 1.0) > kRowTolerance) ++result.renormalized_rows;
    std::vector<double> parts(point.coords().begin(), point.coords().end());
    parts.push_back(std::max(raw.back(), 0.0) / total);
    result.table.rows.push_back(std::move(parts));
    result.dates.push_back(cells[date_index]);
  }
  if (result.table.rows.empty()) throw Error(ErrorCode::EmptyData, "input has no data rows");
  return result;
}

IngestResult read_share_table_file(const std::string& path, const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot open '{}'", path));
  return read_share_table(in, options);
}

std::size_t resolve_column(const ShareTable& table, const std::string& spec) {
  const auto it = std::find(table.columns.begin(), table.columns.end(), spec);
  if (it != table.columns.end()) return static_cast<std::size_t>(it - table.columns.begin());
  std::size_t number = 0;
  const auto [ptr, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), number);
  if (ec != std::errc() || ptr != spec.data() + spec.size())
    throw Error(ErrorCode::MissingColumn, fmt::format("no share column '{}'", spec));
  if (number < 1 || number > table.columns.size())
    throw Error(ErrorCode::IndexOutOfRange,
                fmt::format("column {} outside 1..{}", number, table.columns.size()));
  return number - 1;
}

}  // namespace simplex_kde::cli
