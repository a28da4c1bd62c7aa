#include "radar_order/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "radar_order/csv.hpp"
#include "radar_order/render.hpp"
#include "radar_order/search.hpp"

namespace radar {

namespace {

using nlohmann::ordered_json;

std::size_t parse_index(const std::string& text) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw cli_error("profile selector '" + text +
                    "' is not a row index (use --id-column to select by id)");
  }
  return value;
}

struct Selection {
  std::vector<std::size_t> rows;
  std::vector<std::string> names;
};

Selection resolve_profiles(const RawTable& table, const CliConfig& config) {
  if (config.profiles.empty()) throw cli_error("no profiles selected");
  Selection sel;
  if (!config.id_column) {
    for (const auto& s : config.profiles) {
      const std::size_t r = parse_index(s);
      if (r >= table.row_count()) {
        throw cli_error("row index " + s + " out of range (table has " +
                        std::to_string(table.row_count()) + " rows)");
      }
      sel.rows.push_back(r);
      sel.names.push_back("row " + s);
    }
    return sel;
  }

  const auto& id = *config.id_column;
  if (!table.has_column(id)) throw cli_error("unknown column '" + id + "'");
  const auto& data = table.column(id);
  for (const auto& s : config.profiles) {
    std::vector<std::size_t> hits;
    if (const auto* cat = std::get_if<CategoricalColumn>(&data)) {
      for (std::size_t r = 0; r < cat->size(); ++r) {
        if ((*cat)[r] && *(*cat)[r] == s) hits.push_back(r);
      }
    } else {
      const auto& num = std::get<NumericColumn>(data);
      double wanted = 0.0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), wanted);
      if (ec == std::errc{} && ptr == s.data() + s.size()) {
        for (std::size_t r = 0; r < num.size(); ++r) {
          if (num[r] && *num[r] == wanted) hits.push_back(r);
        }
      }
    }
    if (hits.empty()) {
      throw cli_error("no row has " + id + " = '" + s + "'");
    }
    if (hits.size() > 1) {
      throw cli_error(std::to_string(hits.size()) + " rows have " + id +
                      " = '" + s + "'; ids must be unique");
    }
    sel.rows.push_back(hits.front());
    sel.names.push_back(s);
  }
  return sel;
}

ordered_json score_json(const LexScore& s) {
  return {{"worst_mean", s.worst_mean}, {"worst_max", s.worst_max}};
}

ordered_json per_profile_json(const ProfileMatrix& matrix,
                              const std::vector<ProfileJumps>& jumps) {
  ordered_json out = ordered_json::array();
  for (std::size_t j = 0; j < jumps.size(); ++j) {
    out.push_back({{"profile", matrix.profile_names()[j]},
                   {"mean_jump", jumps[j].mean_jump},
                   {"max_jump", jumps[j].max_jump}});
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw cli_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw cli_error("failed writing '" + path.string() + "'");
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    std::string item = text.substr(start, comma - start);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    if (!item.empty()) out.push_back(std::move(item));
    start = comma + 1;
  }
  return out;
}

std::size_t resolve_workers(std::size_t requested, const char* env_value) {
  std::size_t workers =
      requested > 0 ? requested
                    : std::max<std::size_t>(std::thread::hardware_concurrency(), 1);
  if (env_value != nullptr && *env_value != '\0') {
    std::size_t cap = 0;
    const std::string_view env(env_value);
    const auto [ptr, ec] = std::from_chars(env.data(), env.data() + env.size(), cap);
    if (ec != std::errc{} || ptr != env.data() + env.size() || cap == 0) {
      throw cli_error("RADAR_ORDER_THREADS must be a positive integer, got '" +
                      std::string(env) + "'");
    }
    workers = std::min(workers, cap);
  }
  return workers;
}

ordered_json run_order(const CliConfig& config) {
  if (!std::filesystem::exists(config.input_path)) {
    throw cli_error("input file not found: " + config.input_path.string());
  }
  if (config.features.size() < 3) {
    throw cli_error("a radar chart needs at least 3 features, got " +
                    std::to_string(config.features.size()));
  }

  try {
    const RawTable table = parse_csv(config.input_path);
    for (const auto& f : config.features) {
      if (!table.has_column(f)) throw cli_error("unknown column '" + f + "'");
      if (!table.is_numeric(f) && !config.target) {
        throw cli_error("feature '" + f +
                        "' is categorical; pass --target <numeric column> to "
                        "target-encode it");
      }
    }
    if (config.target && !table.has_column(*config.target)) {
      throw cli_error("unknown column '" + *config.target + "'");
    }

    auto selection = resolve_profiles(table, config);
    PreprocessConfig prep;
    prep.epsilon_floor = config.epsilon_floor;
    prep.target_column = config.target;
    prep.smoothing = config.smoothing;
    const ProfileMatrix matrix = build_profile_matrix(
        table, selection.rows, config.features, prep, std::move(selection.names));

    SearchConfig search;
    search.max_exhaustive_p = config.max_exhaustive_p;
    search.random_samples = config.random_samples;
    search.seed = config.seed;
    search.workers =
        resolve_workers(config.workers, std::getenv("RADAR_ORDER_THREADS"));

    const std::size_t p = matrix.feature_count();
    if (config.method == SearchMethod::exhaustive && p > config.max_exhaustive_p) {
      throw cli_error(std::to_string(p) +
                      " features exceeds the exhaustive-search cap of " +
                      std::to_string(config.max_exhaustive_p) +
                      " (--max-exhaustive-p); use --method anneal for large "
                      "feature counts");
    }

    const Permutation before = Permutation::identity(p);
    const auto before_jumps = profile_jumps(matrix, before);
    const LexScore before_score = lex_score(matrix, before);
    const OrderingResult after = run_search(config.method, matrix, search);

    ordered_json order_names = ordered_json::array();
    for (std::size_t k : after.permutation.order()) {
      order_names.push_back(matrix.feature_names()[k]);
    }
    ordered_json values = ordered_json::array();
    for (std::size_t j = 0; j < matrix.profile_count(); ++j) {
      const auto row = matrix.row(j);
      values.push_back(std::vector<double>(row.begin(), row.end()));
    }

    ordered_json doc;
    doc["features"] = matrix.feature_names();
    doc["order"] = after.permutation.order();
    doc["order_names"] = std::move(order_names);
    doc["score_before"] = score_json(before_score);
    doc["score_after"] = score_json(after.score);
    doc["per_profile_before"] = per_profile_json(matrix, before_jumps);
    doc["per_profile_after"] = per_profile_json(matrix, after.per_profile);
    doc["method"] = to_string(after.method);
    doc["evaluated_count"] = after.evaluated_count;
    doc["is_global_optimum"] = after.is_global_optimum;
    doc["seed"] = config.seed;
    doc["epsilon_floor"] = matrix.epsilon_floor();
    doc["profiles"] = matrix.profile_names();
    doc["values"] = std::move(values);

    if (config.json_out) write_file(*config.json_out, doc.dump(2) + "\n");
    if (config.svg_before) {
      RenderSpec spec;
      spec.title = "Before reordering";
      write_file(*config.svg_before, render_svg(matrix, before, spec));
    }
    if (config.svg_after) {
      RenderSpec spec;
      spec.title = "After reordering";
      write_file(*config.svg_after, render_svg(matrix, after.permutation, spec));
    }
    return doc;
  } catch (const cli_error&) {
    throw;
  } catch (const parse_error& e) {
    throw cli_error(config.input_path.string() + ": " + e.what());
  } catch (const std::exception& e) {
    throw cli_error(e.what());
  }
}

}  // namespace radar
