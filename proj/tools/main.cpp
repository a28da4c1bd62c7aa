// radar-order: choose the feature ordering of a radar chart that minimizes
// polygon spikiness across the selected profiles.

#include <iostream>

#include "CLI11.hpp"
#include "radar_order/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Optimal radar-chart feature ordering (lexicographic minimax)"};
  app.set_version_flag("--version", "radar-order 0.1.0");

  radar::CliConfig config;
  std::string features;
  std::string profiles;
  std::string method = "exhaustive";
  std::string json_out, svg_before, svg_after;
  std::string target, id_column;

  app.add_option("--input", config.input_path, "CSV file with a header row")
      ->required();
  app.add_option("--features", features,
                 "Comma-separated feature columns (at least 3)")
      ->required();
  app.add_option("--profiles", profiles,
                 "Comma-separated 0-based row indices, or id values with "
                 "--id-column")
      ->required();
  app.add_option("--id-column", id_column,
                 "Select profiles by the values of this column");
  app.add_option("--target", target,
                 "Numeric column used to target-encode categorical features");
  app.add_option("--method", method, "Search method")
      ->check(CLI::IsMember({"exhaustive", "greedy", "anneal", "random"}));
  app.add_option("--seed", config.seed, "Seed for anneal and random");
  app.add_option("--epsilon", config.epsilon_floor,
                 "Lower bound of normalized values, in [0, 0.5)");
  app.add_option("--smoothing", config.smoothing,
                 "Target-encoding shrinkage weight (>= 0)");
  app.add_option("--max-exhaustive-p", config.max_exhaustive_p,
                 "Largest feature count accepted by exhaustive search")
      ->check(CLI::Range(3, 20));
  app.add_option("--samples", config.random_samples,
                 "Number of draws for --method random")
      ->check(CLI::PositiveNumber);
  app.add_option("--json-out", json_out,
                 "Write the result JSON here (default: stdout)");
  app.add_option("--svg-before", svg_before, "Chart of the input ordering");
  app.add_option("--svg-after", svg_after, "Chart of the optimized ordering");

  CLI11_PARSE(app, argc, argv);

  config.features = radar::split_list(features);
  config.profiles = radar::split_list(profiles);
  config.method = radar::parse_search_method(method);
  if (!target.empty()) config.target = target;
  if (!id_column.empty()) config.id_column = id_column;
  if (!json_out.empty()) config.json_out = json_out;
  if (!svg_before.empty()) config.svg_before = svg_before;
  if (!svg_after.empty()) config.svg_after = svg_after;

  try {
    const auto doc = radar::run_order(config);
    if (!config.json_out) std::cout << doc.dump(2) << '\n';
  } catch (const std::exception& e) {
    std::cerr << "radar-order: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
