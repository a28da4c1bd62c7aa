#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "radar_order/model.hpp"

namespace radar {

using NumericColumn = std::vector<std::optional<double>>;
using CategoricalColumn = std::vector<std::optional<std::string>>;
using ColumnData = std::variant<NumericColumn, CategoricalColumn>;

/// Mixed-type table prior to normalization. Columns are either entirely
/// numeric or entirely categorical; a missing cell is std::nullopt.
class RawTable {
 public:
  RawTable() = default;

  /// Appends a column. Throws input_error on a duplicate name or a length
  /// that differs from the existing columns.
  void add_column(std::string name, ColumnData data);

  std::size_t row_count() const { return row_count_; }
  std::size_t column_count() const { return names_.size(); }
  const std::vector<std::string>& column_names() const { return names_; }

  bool has_column(const std::string& name) const;
  const ColumnData& column(const std::string& name) const;
  bool is_numeric(const std::string& name) const;

 private:
  std::size_t index_of(const std::string& name) const;

  std::vector<std::string> names_;
  std::vector<ColumnData> columns_;
  std::size_t row_count_ = 0;
};

inline constexpr double default_epsilon_floor = 0.02;

struct PreprocessConfig {
  double epsilon_floor = default_epsilon_floor;
  std::optional<std::string> target_column;
  /// Shrinkage weight toward the global target mean; 0 gives plain category
  /// means.
  double smoothing = 0.0;
};

/// Replaces each category with its (optionally shrunk) mean target value:
///   (n_c * mean_c + smoothing * global_mean) / (n_c + smoothing)
/// The global mean is taken over rows where the category is present. Rows
/// with a missing category stay missing.
NumericColumn target_encode(const CategoricalColumn& column,
                            const NumericColumn& target, double smoothing);

/// Affine map of [min, max] onto [epsilon_floor, 1]. A constant column maps
/// to 0.5 everywhere.
std::vector<double> min_max_scale(std::span<const double> column,
                                  double epsilon_floor);

/// Same map applied to the present cells; missing cells stay missing and do
/// not contribute to the min/max.
NumericColumn min_max_scale(const NumericColumn& column, double epsilon_floor);

/// Encodes categoricals, scales every feature over all table rows, then
/// extracts the selected rows. Profile names are "row <index>" unless
/// profile_names is supplied (one per selected row).
ProfileMatrix build_profile_matrix(
    const RawTable& table, std::span<const std::size_t> profile_rows,
    std::span<const std::string> feature_columns,
    const PreprocessConfig& config,
    std::optional<std::vector<std::string>> profile_names = std::nullopt);

}  // namespace radar
