#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace radar {

/// Raised when caller-supplied data violates a precondition.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a configuration value is out of its documented range.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double default_tie_tolerance = 1e-9;

/// m profiles over p normalized features, stored row-major.
///
/// Every value is finite and lies in [epsilon_floor, 1]. Feature and profile
/// names are unique. A radar polygon needs at least three axes, so p >= 3.
class ProfileMatrix {
 public:
  ProfileMatrix(std::vector<std::string> feature_names,
                std::vector<std::string> profile_names,
                std::vector<double> values,
                double epsilon_floor = 0.0);

  /// Convenience constructor from one vector per profile; names default to
  /// f0..f{p-1} and P0..P{m-1}.
  static ProfileMatrix from_rows(const std::vector<std::vector<double>>& rows,
                                 double epsilon_floor = 0.0);

  std::size_t profile_count() const { return profile_names_.size(); }
  std::size_t feature_count() const { return feature_names_.size(); }
  double epsilon_floor() const { return epsilon_floor_; }

  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  const std::vector<std::string>& profile_names() const {
    return profile_names_;
  }

  std::span<const double> row(std::size_t profile) const {
    return {values_.data() + profile * feature_count(), feature_count()};
  }
  double at(std::size_t profile, std::size_t feature) const {
    return values_[profile * feature_count() + feature];
  }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<std::string> feature_names_;
  std::vector<std::string> profile_names_;
  std::vector<double> values_;
  double epsilon_floor_;
};

/// An ordering of feature indices around the chart; order[i] is the feature
/// drawn on axis i. Always a bijection over 0..p-1.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> order);

  static Permutation identity(std::size_t p);

  std::size_t size() const { return order_.size(); }
  std::size_t operator[](std::size_t i) const { return order_[i]; }
  const std::vector<std::size_t>& order() const { return order_; }

  /// Left rotation by k positions.
  Permutation rotated(std::size_t k) const;
  Permutation reversed() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> order_;
};

/// Circular adjacent differences of one profile: p - 1 consecutive terms
/// followed by the wrap-around term.
struct JumpVector {
  std::vector<double> jumps;
};

struct LexScore {
  double worst_mean = 0.0;
  double worst_max = 0.0;

  friend bool operator==(const LexScore&, const LexScore&) = default;
};

struct ProfileJumps {
  double mean_jump = 0.0;
  double max_jump = 0.0;

  friend bool operator==(const ProfileJumps&, const ProfileJumps&) = default;
};

enum class SearchMethod { exhaustive, greedy, anneal, random };

std::string to_string(SearchMethod method);
SearchMethod parse_search_method(const std::string& name);

struct OrderingResult {
  Permutation permutation;
  LexScore score;
  std::vector<ProfileJumps> per_profile;
  SearchMethod method = SearchMethod::exhaustive;
  std::size_t evaluated_count = 0;
  bool is_global_optimum = false;
  std::optional<std::uint64_t> seed;
};

enum class ScoreOrder { less, equal, greater };

JumpVector circular_jumps(std::span<const double> values,
                          const Permutation& perm);

/// Arithmetic mean of the jumps. Summation runs over the sorted entries so
/// any rearrangement of the same multiset yields a bitwise-identical mean.
double mean_jump(const JumpVector& j);
double max_jump(const JumpVector& j);

LexScore lex_score(const ProfileMatrix& matrix, const Permutation& perm);

/// Mean and max jump of every profile under perm.
std::vector<ProfileJumps> profile_jumps(const ProfileMatrix& matrix,
                                        const Permutation& perm);

/// Worst-case aggregation over per-profile measures.
LexScore aggregate(std::span<const ProfileJumps> per_profile);

/// Lexicographic comparison: worst mean first, worst max second, both with
/// absolute tolerance.
ScoreOrder compare_scores(const LexScore& a, const LexScore& b,
                          double tie_tolerance = default_tie_tolerance);

namespace detail {

/// Scores a closed cycle over any subset of features (not necessarily all
/// of them). The cycle needs at least two entries.
LexScore score_cycle(const ProfileMatrix& matrix,
                     std::span<const std::size_t> cycle);

}  // namespace detail

}  // namespace radar
