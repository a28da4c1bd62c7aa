#include "radar_order/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace radar {

namespace {

void check_epsilon(double epsilon_floor) {
  if (!(epsilon_floor >= 0.0 && epsilon_floor < 0.5)) {
    throw config_error("epsilon floor must lie in [0, 0.5)");
  }
}

double scale_one(double x, double lo, double hi, double epsilon_floor) {
  if (hi == lo) return 0.5;
  if (x == hi) return 1.0;
  if (x == lo) return epsilon_floor;
  return epsilon_floor + (1.0 - epsilon_floor) * (x - lo) / (hi - lo);
}

}  // namespace

void RawTable::add_column(std::string name, ColumnData data) {
  if (has_column(name)) {
    throw input_error("duplicate column name '" + name + "'");
  }
  const std::size_t n =
      std::visit([](const auto& col) { return col.size(); }, data);
  if (!names_.empty() && n != row_count_) {
    throw input_error("column '" + name + "' has " + std::to_string(n) +
                      " rows, expected " + std::to_string(row_count_));
  }
  row_count_ = n;
  names_.push_back(std::move(name));
  columns_.push_back(std::move(data));
}

bool RawTable::has_column(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t RawTable::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw input_error("unknown column '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

const ColumnData& RawTable::column(const std::string& name) const {
  return columns_[index_of(name)];
}

bool RawTable::is_numeric(const std::string& name) const {
  return std::holds_alternative<NumericColumn>(column(name));
}

NumericColumn target_encode(const CategoricalColumn& column,
                            const NumericColumn& target, double smoothing) {
  if (!(smoothing >= 0.0) || !std::isfinite(smoothing)) {
    throw config_error("target-encoding smoothing must be finite and >= 0");
  }
  if (column.empty()) throw input_error("target_encode: empty column");
  if (column.size() != target.size()) {
    throw input_error("target_encode: column and target lengths differ");
  }

  struct Accum {
    double sum = 0.0;
    std::size_t count = 0;
  };
  std::map<std::string, Accum> by_category;
  Accum global;
  for (std::size_t r = 0; r < column.size(); ++r) {
    if (!column[r]) continue;
    if (!target[r] || !std::isfinite(*target[r])) {
      throw input_error("target_encode: target missing at row " +
                        std::to_string(r));
    }
    auto& acc = by_category[*column[r]];
    acc.sum += *target[r];
    ++acc.count;
    global.sum += *target[r];
    ++global.count;
  }
  if (global.count == 0) {
    throw input_error("target_encode: column has no present values");
  }
  const double global_mean = global.sum / static_cast<double>(global.count);

  std::map<std::string, double> encoded;
  for (const auto& [category, acc] : by_category) {
    const double n = static_cast<double>(acc.count);
    const double mean = acc.sum / n;
    encoded[category] = (n * mean + smoothing * global_mean) / (n + smoothing);
  }

  NumericColumn out(column.size());
  for (std::size_t r = 0; r < column.size(); ++r) {
    if (column[r]) out[r] = encoded.at(*column[r]);
  }
  return out;
}

std::vector<double> min_max_scale(std::span<const double> column,
                                  double epsilon_floor) {
  check_epsilon(epsilon_floor);
  if (column.empty()) throw input_error("min_max_scale: empty column");
  for (double x : column) {
    if (!std::isfinite(x)) throw input_error("min_max_scale: non-finite value");
  }
  const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
  std::vector<double> out;
  out.reserve(column.size());
  for (double x : column) out.push_back(scale_one(x, *lo, *hi, epsilon_floor));
  return out;
}

NumericColumn min_max_scale(const NumericColumn& column, double epsilon_floor) {
  std::vector<double> present;
  for (const auto& x : column) {
    if (x) present.push_back(*x);
  }
  if (present.empty()) throw input_error("min_max_scale: empty column");
  const auto scaled = min_max_scale(present, epsilon_floor);
  NumericColumn out(column.size());
  std::size_t k = 0;
  for (std::size_t r = 0; r < column.size(); ++r) {
    if (column[r]) out[r] = scaled[k++];
  }
  return out;
}

ProfileMatrix build_profile_matrix(
    const RawTable& table, std::span<const std::size_t> profile_rows,
    std::span<const std::string> feature_columns,
    const PreprocessConfig& config,
    std::optional<std::vector<std::string>> profile_names) {
  check_epsilon(config.epsilon_floor);
  if (profile_rows.empty()) throw input_error("no profile rows selected");
  if (feature_columns.size() < 3) {
    throw input_error("a radar chart needs at least 3 features, got " +
                      std::to_string(feature_columns.size()));
  }
  for (std::size_t r : profile_rows) {
    if (r >= table.row_count()) {
      throw input_error("row index " + std::to_string(r) +
                        " out of range (table has " +
                        std::to_string(table.row_count()) + " rows)");
    }
  }
  if (profile_names && profile_names->size() != profile_rows.size()) {
    throw input_error("profile name count does not match selected rows");
  }

  const NumericColumn* target = nullptr;
  for (const auto& name : feature_columns) {
    if (!table.has_column(name)) {
      throw input_error("unknown column '" + name + "'");
    }
    if (table.is_numeric(name)) continue;
    if (!config.target_column) {
      throw config_error("categorical feature '" + name +
                         "' requires a target column for encoding");
    }
    if (target == nullptr) {
      const auto& t = *config.target_column;
      if (!table.has_column(t)) {
        throw input_error("unknown target column '" + t + "'");
      }
      if (!table.is_numeric(t)) {
        throw config_error("target column '" + t + "' is not numeric");
      }
      if (std::find(feature_columns.begin(), feature_columns.end(), t) !=
          feature_columns.end()) {
        throw config_error("target column '" + t +
                           "' must not be one of the features");
      }
      target = &std::get<NumericColumn>(table.column(t));
    }
  }

  const std::size_t m = profile_rows.size();
  const std::size_t p = feature_columns.size();
  std::vector<double> values(m * p);
  for (std::size_t k = 0; k < p; ++k) {
    const auto& name = feature_columns[k];
    const auto& data = table.column(name);
    NumericColumn numeric =
        std::holds_alternative<NumericColumn>(data)
            ? std::get<NumericColumn>(data)
            : target_encode(std::get<CategoricalColumn>(data), *target,
                            config.smoothing);
    const NumericColumn scaled = min_max_scale(numeric, config.epsilon_floor);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& cell = scaled[profile_rows[j]];
      if (!cell) {
        throw input_error("missing value at row " +
                          std::to_string(profile_rows[j]) + ", column '" +
                          name + "'");
      }
      values[j * p + k] = std::clamp(*cell, config.epsilon_floor, 1.0);
    }
  }

  std::vector<std::string> names;
  if (profile_names) {
    names = std::move(*profile_names);
  } else {
    for (std::size_t r : profile_rows) names.push_back("row " + std::to_string(r));
  }
  return ProfileMatrix(
      std::vector<std::string>(feature_columns.begin(), feature_columns.end()),
      std::move(names), std::move(values), config.epsilon_floor);
}

}  // namespace radar
