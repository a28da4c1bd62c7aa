#include "radar_order/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace radar {

namespace {

struct Record {
  std::vector<std::string> cells;
  std::size_t line = 0;
};

std::vector<Record> split_records(std::string_view text) {
  std::vector<Record> records;
  Record current;
  std::string cell;
  std::size_t line = 1;
  current.line = line;
  bool in_quotes = false;
  bool cell_was_quoted = false;
  std::size_t i = 0;

  auto end_cell = [&] {
    current.cells.push_back(std::move(cell));
    cell.clear();
    cell_was_quoted = false;
  };
  auto end_record = [&] {
    end_cell();
    records.push_back(std::move(current));
    current = Record{};
  };

  if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        cell += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!cell.empty() || cell_was_quoted) {
          throw parse_error(line, "unexpected quote inside unquoted field");
        }
        in_quotes = true;
        cell_was_quoted = true;
        break;
      case ',':
        end_cell();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        current.line = line;
        break;
      default:
        cell += c;
    }
  }
  if (in_quotes) throw parse_error(line, "unterminated quoted field");
  // A trailing newline does not open another record.
  if (!cell.empty() || !current.cells.empty() || cell_was_quoted) end_record();
  return records;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

RawTable parse_csv_text(std::string_view text) {
  auto records = split_records(text);
  if (records.empty()) throw parse_error(1, "missing header row");

  const auto& header = records.front().cells;
  std::set<std::string> seen;
  for (const auto& name : header) {
    if (name.empty()) throw parse_error(1, "empty column name in header");
    if (!seen.insert(name).second) {
      throw parse_error(1, "duplicate column name '" + name + "'");
    }
  }
  const std::size_t columns = header.size();
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].cells.size() != columns) {
      throw parse_error(records[r].line,
                        "expected " + std::to_string(columns) +
                            " fields, found " +
                            std::to_string(records[r].cells.size()));
    }
  }

  RawTable table;
  const std::size_t rows = records.size() - 1;
  for (std::size_t c = 0; c < columns; ++c) {
    NumericColumn numeric(rows);
    bool is_numeric = true;
    for (std::size_t r = 0; r < rows && is_numeric; ++r) {
      const auto cell = trim(records[r + 1].cells[c]);
      if (cell.empty()) continue;
      numeric[r] = parse_real(cell);
      is_numeric = numeric[r].has_value();
    }
    if (is_numeric) {
      table.add_column(header[c], std::move(numeric));
      continue;
    }
    CategoricalColumn categorical(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      const auto& raw = records[r + 1].cells[c];
      if (!trim(raw).empty()) categorical[r] = raw;
    }
    table.add_column(header[c], std::move(categorical));
  }
  return table;
}

RawTable parse_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv_text(buffer.str());
}

}  // namespace radar
