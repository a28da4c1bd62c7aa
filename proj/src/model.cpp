#include "radar_order/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>

namespace radar {

namespace {

template <typename Names>
void require_unique(const Names& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw input_error(std::string("duplicate ") + what + " name '" + n + "'");
    }
  }
}

// Sum of the entries in ascending order.
double ordered_sum(std::span<double> scratch) {
  std::sort(scratch.begin(), scratch.end());
  double sum = 0.0;
  for (double x : scratch) sum += x;
  return sum;
}

}  // namespace

ProfileMatrix::ProfileMatrix(std::vector<std::string> feature_names,
                             std::vector<std::string> profile_names,
                             std::vector<double> values, double epsilon_floor)
    : feature_names_(std::move(feature_names)),
      profile_names_(std::move(profile_names)),
      values_(std::move(values)),
      epsilon_floor_(epsilon_floor) {
  if (feature_names_.size() < 3) {
    throw input_error("a radar chart needs at least 3 features, got " +
                      std::to_string(feature_names_.size()));
  }
  if (profile_names_.empty()) {
    throw input_error("at least one profile is required");
  }
  if (!(epsilon_floor_ >= 0.0 && epsilon_floor_ < 0.5)) {
    throw config_error("epsilon floor must lie in [0, 0.5)");
  }
  if (values_.size() != feature_names_.size() * profile_names_.size()) {
    throw input_error("value count does not match profiles x features");
  }
  require_unique(feature_names_, "feature");
  require_unique(profile_names_, "profile");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v < epsilon_floor_ || v > 1.0) {
      throw input_error("value at profile " +
                        std::to_string(i / feature_count()) + ", feature " +
                        std::to_string(i % feature_count()) +
                        " is outside [epsilon_floor, 1]");
    }
  }
}

ProfileMatrix ProfileMatrix::from_rows(
    const std::vector<std::vector<double>>& rows, double epsilon_floor) {
  if (rows.empty()) throw input_error("at least one profile is required");
  const std::size_t p = rows.front().size();
  std::vector<std::string> features;
  for (std::size_t k = 0; k < p; ++k) features.push_back("f" + std::to_string(k));
  std::vector<std::string> profiles;
  std::vector<double> values;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != p) throw input_error("ragged profile rows");
    profiles.push_back("P" + std::to_string(j));
    values.insert(values.end(), rows[j].begin(), rows[j].end());
  }
  return ProfileMatrix(std::move(features), std::move(profiles),
                       std::move(values), epsilon_floor);
}

Permutation::Permutation(std::vector<std::size_t> order)
    : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t v : order_) {
    if (v >= order_.size() || seen[v]) {
      throw input_error("not a permutation of 0.." +
                        std::to_string(order_.size()) + "-1");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t p) {
  std::vector<std::size_t> order(p);
  for (std::size_t i = 0; i < p; ++i) order[i] = i;
  return Permutation(std::move(order));
}

Permutation Permutation::rotated(std::size_t k) const {
  auto order = order_;
  if (!order.empty()) {
    std::rotate(order.begin(), order.begin() + (k % order.size()), order.end());
  }
  return Permutation(std::move(order));
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<std::size_t>(order_.rbegin(), order_.rend()));
}

std::string to_string(SearchMethod method) {
  switch (method) {
    case SearchMethod::exhaustive: return "exhaustive";
    case SearchMethod::greedy: return "greedy";
    case SearchMethod::anneal: return "anneal";
    case SearchMethod::random: return "random";
  }
  return "unknown";
}

SearchMethod parse_search_method(const std::string& name) {
  if (name == "exhaustive") return SearchMethod::exhaustive;
  if (name == "greedy") return SearchMethod::greedy;
  if (name == "anneal") return SearchMethod::anneal;
  if (name == "random") return SearchMethod::random;
  throw config_error("unknown search method '" + name +
                     "' (expected exhaustive, greedy, anneal or random)");
}

JumpVector circular_jumps(std::span<const double> values,
                          const Permutation& perm) {
  if (values.size() != perm.size()) {
    throw input_error("circular_jumps: " + std::to_string(values.size()) +
                      " values but permutation of length " +
                      std::to_string(perm.size()));
  }
  const std::size_t p = perm.size();
  JumpVector out;
  out.jumps.resize(p);
  for (std::size_t i = 0; i < p; ++i) {
    out.jumps[i] = std::abs(values[perm[(i + 1) % p]] - values[perm[i]]);
  }
  return out;
}

double mean_jump(const JumpVector& j) {
  if (j.jumps.empty()) return 0.0;
  std::vector<double> scratch = j.jumps;
  return ordered_sum(scratch) / static_cast<double>(scratch.size());
}

double max_jump(const JumpVector& j) {
  double best = 0.0;
  for (double x : j.jumps) best = std::max(best, x);
  return best;
}

namespace detail {

LexScore score_cycle(const ProfileMatrix& matrix,
                     std::span<const std::size_t> cycle) {
  const std::size_t k = cycle.size();
  std::array<double, 32> small{};
  std::vector<double> large;
  std::span<double> scratch;
  if (k <= small.size()) {
    scratch = std::span<double>(small.data(), k);
  } else {
    large.resize(k);
    scratch = large;
  }

  LexScore score;
  for (std::size_t j = 0; j < matrix.profile_count(); ++j) {
    const auto row = matrix.row(j);
    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double d = std::abs(row[cycle[i + 1 == k ? 0 : i + 1]] - row[cycle[i]]);
      scratch[i] = d;
      worst = std::max(worst, d);
    }
    const double mean = ordered_sum(scratch) / static_cast<double>(k);
    score.worst_mean = std::max(score.worst_mean, mean);
    score.worst_max = std::max(score.worst_max, worst);
  }
  return score;
}

}  // namespace detail

LexScore lex_score(const ProfileMatrix& matrix, const Permutation& perm) {
  if (perm.size() != matrix.feature_count()) {
    throw input_error("permutation length " + std::to_string(perm.size()) +
                      " does not match feature count " +
                      std::to_string(matrix.feature_count()));
  }
  return detail::score_cycle(matrix, perm.order());
}

std::vector<ProfileJumps> profile_jumps(const ProfileMatrix& matrix,
                                        const Permutation& perm) {
  std::vector<ProfileJumps> out;
  out.reserve(matrix.profile_count());
  for (std::size_t j = 0; j < matrix.profile_count(); ++j) {
    const auto jumps = circular_jumps(matrix.row(j), perm);
    out.push_back({mean_jump(jumps), max_jump(jumps)});
  }
  return out;
}

LexScore aggregate(std::span<const ProfileJumps> per_profile) {
  LexScore s;
  for (const auto& pj : per_profile) {
    s.worst_mean = std::max(s.worst_mean, pj.mean_jump);
    s.worst_max = std::max(s.worst_max, pj.max_jump);
  }
  return s;
}

ScoreOrder compare_scores(const LexScore& a, const LexScore& b,
                          double tie_tolerance) {
  if (std::abs(a.worst_mean - b.worst_mean) > tie_tolerance) {
    return a.worst_mean < b.worst_mean ? ScoreOrder::less : ScoreOrder::greater;
  }
  if (std::abs(a.worst_max - b.worst_max) > tie_tolerance) {
    return a.worst_max < b.worst_max ? ScoreOrder::less : ScoreOrder::greater;
  }
  return ScoreOrder::equal;
}

}  // namespace radar
