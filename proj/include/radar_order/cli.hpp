#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "radar_order/model.hpp"
#include "radar_order/preprocess.hpp"

namespace radar {

/// A user-facing failure; what() is the one-line diagnostic the CLI prints.
class cli_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::filesystem::path input_path;
  std::vector<std::string> features;
  /// Row indices (0-based) or, with id_column set, values of that column.
  std::vector<std::string> profiles;
  std::optional<std::string> id_column;
  std::optional<std::string> target;
  SearchMethod method = SearchMethod::exhaustive;
  std::uint64_t seed = 0;
  double epsilon_floor = default_epsilon_floor;
  double smoothing = 0.0;
  std::size_t max_exhaustive_p = 11;
  std::size_t random_samples = 1000;
  /// Exhaustive-search workers; 0 means hardware concurrency capped by the
  /// RADAR_ORDER_THREADS environment variable.
  std::size_t workers = 0;
  std::optional<std::filesystem::path> json_out;
  std::optional<std::filesystem::path> svg_before;
  std::optional<std::filesystem::path> svg_after;
};

/// Loads the CSV, normalizes the selected profiles, searches for the best
/// ordering, writes any requested artifacts and returns the result document.
/// Every failure surfaces as cli_error.
nlohmann::ordered_json run_order(const CliConfig& config);

/// Splits a comma-separated flag value, trimming surrounding blanks.
std::vector<std::string> split_list(const std::string& text);

/// Worker count for exhaustive search given the RADAR_ORDER_THREADS value.
std::size_t resolve_workers(std::size_t requested, const char* env_value);

}  // namespace radar
