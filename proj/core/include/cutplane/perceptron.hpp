#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cutplane/dataset.hpp"
#include "cutplane/linalg.hpp"
#include "cutplane/version_space.hpp"

namespace cutplane {

// Cutting-plane selection strategies. LargestError picks the most violated
// point (lowest normalized margin), SmallestError the least violated one,
// RandomError a uniform choice over the violated set.
enum class StrategyKind { LargestError, SmallestError, RandomError };

struct OracleStrategy {
  StrategyKind kind = StrategyKind::LargestError;
  std::uint64_t seed = 0;  // consumed by RandomError only
};

std::string strategy_name(StrategyKind kind);
StrategyKind parse_strategy(const std::string& name);

// Update cap guarding against non-separable input: ceil(1 / gamma_min^2)
// with gamma_min = 1e-4.
constexpr std::uint64_t default_update_budget() { return 100000000ULL; }

struct PassResult {
  Vec w;
  std::uint64_t updates = 0;
};

// Runs the Perceptron over a fixed constraint list until every constraint
// satisfies <w, p> >= 0. Each update adds the violated constraint vector of
// lowest normalized margin <w, p>/||p||, ties broken by lexicographic order
// of the constraint coordinates. The zero vector counts as violating every
// constraint, which forces an update on the first pass from a cold start.
// Throws UpdateBudgetExceeded once `budget` updates have been spent.
PassResult perceptron_pass(Vec w_start, const std::vector<Vec>& constraints,
                           std::uint64_t budget = default_update_budget());

// Index of the next cutting plane among points violated by w (strictly
// negative y <w, x>; every point when w is the zero vector). Margins are
// normalized by ||x||; ties broken lexicographically on the signed point
// coordinates. `round` is the number of planes picked so far; RandomError
// folds it into its draw so distinct rounds use distinct draws.
std::size_t pick_cutting_plane(const Vec& w, const Dataset& dataset,
                               const OracleStrategy& strategy,
                               std::uint64_t round = 0);

struct LocalizationTrace {
  Vec w_final;
  std::vector<std::size_t> plane_indices;
  // updates_per_round[i]: Perceptron updates spent after plane_indices[i]
  // was appended. Same length as plane_indices.
  std::vector<std::uint64_t> updates_per_round;
  std::uint64_t total_updates = 0;
  // queries[i]: normalized query point computed after plane_indices[i] was
  // appended; queries.back() equals w_final.
  std::vector<Vec> queries;
};

// Perceptron-based localization. Maintains an accumulated constraint list,
// warm-starts each Perceptron pass from the previous unnormalized iterate,
// normalizes, and stops as soon as the query point is a member of the full
// version space; otherwise the strategy picks one more cutting plane. The
// budget caps total updates across all passes.
LocalizationTrace localize(const Dataset& dataset,
                           const OracleStrategy& strategy,
                           std::uint64_t budget = default_update_budget());

}  // namespace cutplane
