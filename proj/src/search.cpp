#include "radar_order/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace radar {

search_refused::search_refused(std::size_t features, std::size_t cap)
    : std::runtime_error(
          "exhaustive search refused: " + std::to_string(features) +
          " features exceeds the cap max_exhaustive_p = " +
          std::to_string(cap) +
          " ((p-1)!/2 orderings grows factorially); use a heuristic method "
          "such as simulated annealing, greedy insertion or random sampling"),
      features_(features),
      cap_(cap) {}

namespace {

using Cycle = std::vector<std::size_t>;

void validate(const SearchConfig& config) {
  if (config.max_exhaustive_p < 3) {
    throw config_error("max_exhaustive_p must be at least 3");
  }
  if (!(config.tie_tolerance >= 0.0)) {
    throw config_error("tie_tolerance must be >= 0");
  }
}

OrderingResult make_result(const ProfileMatrix& matrix, Cycle cycle,
                           SearchMethod method, std::size_t evaluated,
                           std::optional<std::uint64_t> seed) {
  Permutation perm = canonicalize(Permutation(std::move(cycle)));
  auto per_profile = profile_jumps(matrix, perm);
  LexScore score = lex_score(matrix, perm);
  return OrderingResult{std::move(perm),
                        score,
                        std::move(per_profile),
                        method,
                        evaluated,
                        method == SearchMethod::exhaustive,
                        seed};
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// Arrangement of {1..n} with the given lexicographic rank.
Cycle unrank_tail(std::uint64_t rank, std::size_t n) {
  Cycle pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{1});
  Cycle out;
  out.reserve(n);
  for (std::size_t k = n; k > 0; --k) {
    const std::uint64_t block = factorial(k - 1);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

// Visits canonical cycles whose tail (positions 1..p-1) has lexicographic
// rank in [first, last), in increasing order. The visitor returns false to
// stop early.
void for_each_canonical(std::size_t p, std::uint64_t first, std::uint64_t last,
                        const std::function<bool(const Cycle&)>& visit) {
  if (first >= last) return;
  Cycle cycle;
  cycle.reserve(p);
  cycle.push_back(0);
  const Cycle tail = unrank_tail(first, p - 1);
  cycle.insert(cycle.end(), tail.begin(), tail.end());
  for (std::uint64_t r = first; r < last; ++r) {
    if (cycle[1] < cycle[p - 1] && !visit(cycle)) return;
    std::next_permutation(cycle.begin() + 1, cycle.end());
  }
}

// Splits the tail rank space into contiguous chunks, runs one worker per
// chunk and returns the per-chunk values in chunk order.
template <typename T>
std::vector<T> run_chunks(
    std::size_t p, std::size_t workers,
    const std::function<T(std::uint64_t, std::uint64_t)>& work) {
  const std::uint64_t total = factorial(p - 1);
  const std::uint64_t chunks =
      std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(total, 1));
  std::vector<T> out(chunks);
  auto bound = [&](std::uint64_t c) { return total * c / chunks; };
  if (chunks == 1) {
    out[0] = work(0, total);
    return out;
  }
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    threads.emplace_back(
        [&, c] { out[c] = work(bound(c), bound(c + 1)); });
  }
  for (auto& t : threads) t.join();
  return out;
}

// Uniform integer in [0, n).
std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

Permutation canonicalize(const Permutation& perm) {
  auto order = perm.order();
  const std::size_t p = order.size();
  if (p == 0) return perm;
  const auto zero = std::find(order.begin(), order.end(), std::size_t{0});
  std::rotate(order.begin(), zero, order.end());
  if (p >= 3 && order[1] > order[p - 1]) {
    std::reverse(order.begin() + 1, order.end());
  }
  return Permutation(std::move(order));
}

std::uint64_t canonical_count(std::size_t p) {
  if (p < 3) return 1;
  return factorial(p - 1) / 2;
}

OrderingResult exhaustive_search(const ProfileMatrix& matrix,
                                 const SearchConfig& config) {
  validate(config);
  const std::size_t p = matrix.feature_count();
  if (p > config.max_exhaustive_p) {
    throw search_refused(p, config.max_exhaustive_p);
  }
  // 20! overflows 64 bits; no realistic cap gets near that.
  if (p > 20) throw search_refused(p, 20);
  const double tol = config.tie_tolerance;
  const std::size_t workers = std::max<std::size_t>(config.workers, 1);

  struct MeanPass {
    double best_mean = std::numeric_limits<double>::infinity();
    std::uint64_t count = 0;
  };
  const auto mean_chunks = run_chunks<MeanPass>(
      p, workers, [&](std::uint64_t first, std::uint64_t last) {
        MeanPass acc;
        for_each_canonical(p, first, last, [&](const Cycle& c) {
          acc.best_mean =
              std::min(acc.best_mean, detail::score_cycle(matrix, c).worst_mean);
          ++acc.count;
          return true;
        });
        return acc;
      });
  double best_mean = std::numeric_limits<double>::infinity();
  std::uint64_t evaluated = 0;
  for (const auto& c : mean_chunks) {
    best_mean = std::min(best_mean, c.best_mean);
    evaluated += c.count;
  }
  const double mean_limit = best_mean + tol;

  const auto max_chunks = run_chunks<double>(
      p, workers, [&](std::uint64_t first, std::uint64_t last) {
        double best = std::numeric_limits<double>::infinity();
        for_each_canonical(p, first, last, [&](const Cycle& c) {
          const LexScore s = detail::score_cycle(matrix, c);
          if (s.worst_mean <= mean_limit) best = std::min(best, s.worst_max);
          return true;
        });
        return best;
      });
  const double max_limit =
      *std::min_element(max_chunks.begin(), max_chunks.end()) + tol;

  // Enumeration within a chunk is lexicographic, so the first hit is the
  // chunk minimum and the first chunk with a hit holds the global minimum.
  const auto pick_chunks = run_chunks<std::optional<Cycle>>(
      p, workers, [&](std::uint64_t first, std::uint64_t last) {
        std::optional<Cycle> hit;
        for_each_canonical(p, first, last, [&](const Cycle& c) {
          const LexScore s = detail::score_cycle(matrix, c);
          if (s.worst_mean <= mean_limit && s.worst_max <= max_limit) {
            hit = c;
            return false;
          }
          return true;
        });
        return hit;
      });
  for (const auto& hit : pick_chunks) {
    if (hit) {
      return make_result(matrix, *hit, SearchMethod::exhaustive,
                         static_cast<std::size_t>(evaluated), std::nullopt);
    }
  }
  // Unreachable: the minimizer itself always qualifies.
  throw std::logic_error("exhaustive_search: no representative selected");
}

namespace {

struct GreedyOutcome {
  Cycle cycle;
  std::size_t evaluated = 0;
};

GreedyOutcome greedy_cycle(const ProfileMatrix& matrix, double tol) {
  const std::size_t p = matrix.feature_count();
  std::size_t partner = 1;
  double widest = -1.0;
  for (std::size_t k = 1; k < p; ++k) {
    double d = 0.0;
    for (std::size_t j = 0; j < matrix.profile_count(); ++j) {
      d = std::max(d, std::abs(matrix.at(j, k) - matrix.at(j, 0)));
    }
    if (d > widest) {
      widest = d;
      partner = k;
    }
  }

  GreedyOutcome out;
  out.cycle = {0, partner};
  Cycle candidate;
  for (std::size_t f = 1; f < p; ++f) {
    if (f == partner) continue;
    std::optional<LexScore> best_score;
    std::size_t best_slot = 0;
    for (std::size_t slot = 0; slot < out.cycle.size(); ++slot) {
      candidate = out.cycle;
      candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(slot + 1),
                       f);
      const LexScore s = detail::score_cycle(matrix, candidate);
      ++out.evaluated;
      if (!best_score || compare_scores(s, *best_score, tol) == ScoreOrder::less) {
        best_score = s;
        best_slot = slot;
      }
    }
    out.cycle.insert(out.cycle.begin() + static_cast<std::ptrdiff_t>(best_slot + 1),
                     f);
  }
  return out;
}

}  // namespace

OrderingResult greedy_insertion(const ProfileMatrix& matrix,
                                const SearchConfig& config) {
  validate(config);
  auto g = greedy_cycle(matrix, config.tie_tolerance);
  return make_result(matrix, std::move(g.cycle), SearchMethod::greedy,
                     g.evaluated, std::nullopt);
}

OrderingResult simulated_annealing(const ProfileMatrix& matrix,
                                   const SearchConfig& config) {
  validate(config);
  const auto& a = config.anneal;
  if (!(a.cooling_factor > 0.0 && a.cooling_factor < 1.0)) {
    throw config_error("cooling_factor must lie in (0, 1)");
  }
  if (a.iterations < 1) throw config_error("anneal iterations must be >= 1");
  if (!(a.initial_temperature > 0.0) || !std::isfinite(a.initial_temperature)) {
    throw config_error("initial_temperature must be positive");
  }
  const double tol = config.tie_tolerance;
  const std::size_t p = matrix.feature_count();
  const std::size_t per_temperature =
      a.moves_per_temperature > 0 ? a.moves_per_temperature : 50 * p;

  const auto start = greedy_insertion(matrix, config);
  Cycle current = start.permutation.order();
  LexScore current_score = start.score;
  Cycle best = current;
  LexScore best_score = current_score;

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double temperature = a.initial_temperature;
  Cycle candidate;

  for (std::size_t it = 0; it < a.iterations; ++it) {
    std::size_t i = draw_index(rng, p);
    std::size_t j = draw_index(rng, p - 1);
    if (j >= i) ++j;
    if (i > j) std::swap(i, j);
    const bool two_opt = draw_index(rng, 2) == 0;

    candidate = current;
    if (two_opt) {
      std::reverse(candidate.begin() + static_cast<std::ptrdiff_t>(i),
                   candidate.begin() + static_cast<std::ptrdiff_t>(j + 1));
    } else {
      std::swap(candidate[i], candidate[j]);
    }
    const LexScore s = detail::score_cycle(matrix, candidate);

    bool accept = compare_scores(s, current_score, tol) != ScoreOrder::greater;
    if (!accept) {
      const double delta = (s.worst_mean - current_score.worst_mean) +
                           0.01 * (s.worst_max - current_score.worst_max);
      accept = delta <= 0.0 || unit(rng) < std::exp(-delta / temperature);
    }
    if (accept) {
      current.swap(candidate);
      current_score = s;
      if (compare_scores(current_score, best_score, tol) == ScoreOrder::less) {
        best = current;
        best_score = current_score;
      }
    }
    if ((it + 1) % per_temperature == 0) temperature *= a.cooling_factor;
  }

  return make_result(matrix, std::move(best), SearchMethod::anneal,
                     start.evaluated_count + a.iterations, config.seed);
}

OrderingResult random_sampling(const ProfileMatrix& matrix,
                               const SearchConfig& config) {
  validate(config);
  if (config.random_samples < 1) {
    throw config_error("random_samples must be >= 1");
  }
  const double tol = config.tie_tolerance;
  const std::size_t p = matrix.feature_count();

  Cycle best = Permutation::identity(p).order();
  LexScore best_score = detail::score_cycle(matrix, best);

  std::mt19937_64 rng(config.seed);
  Cycle draw = best;
  for (std::size_t s = 0; s < config.random_samples; ++s) {
    std::shuffle(draw.begin(), draw.end(), rng);
    Cycle canon = canonicalize(Permutation(draw)).order();
    const LexScore score = detail::score_cycle(matrix, canon);
    const auto order = compare_scores(score, best_score, tol);
    if (order == ScoreOrder::less ||
        (order == ScoreOrder::equal && canon < best)) {
      best = std::move(canon);
      best_score = score;
    }
  }
  return make_result(matrix, std::move(best), SearchMethod::random,
                     config.random_samples + 1, config.seed);
}

OrderingResult run_search(SearchMethod method, const ProfileMatrix& matrix,
                          const SearchConfig& config) {
  switch (method) {
    case SearchMethod::exhaustive: return exhaustive_search(matrix, config);
    case SearchMethod::greedy: return greedy_insertion(matrix, config);
    case SearchMethod::anneal: return simulated_annealing(matrix, config);
    case SearchMethod::random: return random_sampling(matrix, config);
  }
  throw config_error("unknown search method");
}

}  // namespace radar
