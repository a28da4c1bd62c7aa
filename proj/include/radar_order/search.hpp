#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "radar_order/model.hpp"

namespace radar {

/// Raised when exhaustive search is asked to handle more features than the
/// configured cap allows.
class search_refused : public std::runtime_error {
 public:
  search_refused(std::size_t features, std::size_t cap);

  std::size_t features() const { return features_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t features_;
  std::size_t cap_;
};

struct AnnealConfig {
  /// Total number of proposed moves.
  std::size_t iterations = 20000;
  double initial_temperature = 0.1;
  double cooling_factor = 0.95;
  /// Moves between cooling steps; 0 selects 50 * p.
  std::size_t moves_per_temperature = 0;
};

struct SearchConfig {
  std::size_t max_exhaustive_p = 11;
  double tie_tolerance = default_tie_tolerance;
  AnnealConfig anneal;
  std::size_t random_samples = 1000;
  std::uint64_t seed = 0;
  /// Worker threads for exhaustive search. The result does not depend on it.
  std::size_t workers = 1;
};

/// Unique representative of the rotation/reflection class of perm: feature 0
/// at position 0 and order[1] < order[p-1].
Permutation canonicalize(const Permutation& perm);

/// Number of canonical representatives for p features, (p-1)!/2.
std::uint64_t canonical_count(std::size_t p);

/// Globally optimal ordering under the lexicographic minimax score.
///
/// Scores one representative per rotation/reflection class. The result is
/// fixed by three order-independent reductions over all representatives:
///   1. best_mean  = min worst_mean
///   2. best_max   = min worst_max among classes with
///                   worst_mean <= best_mean + tie_tolerance
///   3. the lexicographically smallest canonical permutation with
///      worst_mean <= best_mean + tol and worst_max <= best_max + tol
/// Each reduction is a plain min, so chunking across workers cannot change
/// the answer.
OrderingResult exhaustive_search(const ProfileMatrix& matrix,
                                 const SearchConfig& config = {});

/// Deterministic cheapest-insertion construction.
OrderingResult greedy_insertion(const ProfileMatrix& matrix,
                                const SearchConfig& config = {});

/// Seeded 2-opt/swap annealing started from the greedy ordering.
OrderingResult simulated_annealing(const ProfileMatrix& matrix,
                                   const SearchConfig& config = {});

/// Best of the identity plus random_samples uniformly drawn orderings.
OrderingResult random_sampling(const ProfileMatrix& matrix,
                               const SearchConfig& config = {});

OrderingResult run_search(SearchMethod method, const ProfileMatrix& matrix,
                          const SearchConfig& config = {});

}  // namespace radar
