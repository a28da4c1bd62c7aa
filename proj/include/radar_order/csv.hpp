#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "radar_order/preprocess.hpp"

namespace radar {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// RFC 4180 CSV with a header row. A column is numeric iff every non-empty
/// cell parses as a finite real; otherwise it is categorical. Empty cells
/// are missing.
RawTable parse_csv_text(std::string_view text);

/// Reads path and parses it; throws input_error when the file cannot be read.
RawTable parse_csv(const std::filesystem::path& path);

}  // namespace radar
