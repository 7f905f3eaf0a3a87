#include "cutplane/perceptron.hpp"

#include <bit>
#include <cstring>

#include "cutplane/errors.hpp"
#include "cutplane/rng.hpp"

namespace cutplane {

std::string strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::LargestError: return "LargestError";
    case StrategyKind::SmallestError: return "SmallestError";
    case StrategyKind::RandomError: return "RandomError";
  }
  return "LargestError";
}

StrategyKind parse_strategy(const std::string& name) {
  if (name == "LargestError" || name == "largest")
    return StrategyKind::LargestError;
  if (name == "SmallestError" || name == "smallest")
    return StrategyKind::SmallestError;
  if (name == "RandomError" || name == "random")
    return StrategyKind::RandomError;
  throw ParseError("unknown strategy '" + name + "'");
}

namespace {

std::uint64_t hash_coords(const Vec& v) {
  std::uint64_t h = 0x811c9dc5a3f1b2e9ULL;
  for (double x : v) h = mix64(h ^ std::bit_cast<std::uint64_t>(x));
  return h;
}

// Uniform pick over the violated set, replayable under dataset reduction:
// each candidate gets a seed- and round-keyed priority hashed from its
// coordinates, and the smallest priority wins. Restricting the candidate set
// to any subset containing the winner leaves the winner unchanged, which a
// shared-stream draw would not.
std::uint64_t random_priority(const Vec& signed_x, std::uint64_t seed,
                              std::uint64_t round) {
  return mix64(mix64(seed ^ mix64(round + 1)) ^ hash_coords(signed_x));
}

}  // namespace

PassResult perceptron_pass(Vec w, const std::vector<Vec>& constraints,
                           std::uint64_t budget) {
  std::vector<double> norms(constraints.size());
  for (std::size_t i = 0; i < constraints.size(); ++i)
    norms[i] = norm(constraints[i]);
  std::uint64_t updates = 0;
  for (;;) {
    bool zero = is_zero(w);
    bool found = false;
    std::size_t best = 0;
    double best_margin = 0.0;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      double raw = dot(w, constraints[i]);
      if (!zero && raw >= 0.0) continue;
      double margin = raw / norms[i];
      if (!found || margin < best_margin ||
          (margin == best_margin &&
           lex_less(constraints[i], constraints[best]))) {
        found = true;
        best = i;
        best_margin = margin;
      }
    }
    if (!found) return {std::move(w), updates};
    if (updates >= budget) throw UpdateBudgetExceeded(budget);
    add_in_place(w, constraints[best]);
    ++updates;
  }
}

std::size_t pick_cutting_plane(const Vec& w, const Dataset& dataset,
                               const OracleStrategy& strategy,
                               std::uint64_t round) {
  if (dataset.empty()) throw EmptyDataset();
  if (w.size() != dataset.dim) throw DimensionMismatch(dataset.dim, w.size());
  bool zero = is_zero(w);
  bool found = false;
  std::size_t best = 0;
  double best_margin = 0.0;
  std::uint64_t best_priority = 0;
  Vec best_signed;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto& p = dataset.points[i];
    double raw = p.y * dot(w, p.x);
    if (!zero && raw >= 0.0) continue;
    Vec s = signed_point(p);
    double margin = raw / norm(p.x);
    bool take = false;
    if (strategy.kind == StrategyKind::RandomError) {
      std::uint64_t priority = random_priority(s, strategy.seed, round);
      take = !found || priority < best_priority ||
             (priority == best_priority && lex_less(s, best_signed));
      if (take) best_priority = priority;
    } else {
      bool prefer = strategy.kind == StrategyKind::LargestError
                        ? margin < best_margin
                        : margin > best_margin;
      take = !found || prefer ||
             (margin == best_margin && lex_less(s, best_signed));
    }
    if (take) {
      found = true;
      best = i;
      best_margin = margin;
      best_signed = std::move(s);
    }
  }
  if (!found) throw NoViolatedConstraint();
  return best;
}

LocalizationTrace localize(const Dataset& dataset,
                           const OracleStrategy& strategy,
                           std::uint64_t budget) {
  SphericalPolytope space = build_version_space(dataset);
  LocalizationTrace trace;
  Vec w_tilde(dataset.dim, 0.0);
  std::vector<Vec> constraints;
  for (;;) {
    PassResult pass =
        perceptron_pass(w_tilde, constraints, budget - trace.total_updates);
    w_tilde = std::move(pass.w);
    trace.total_updates += pass.updates;
    if (!constraints.empty()) {
      trace.updates_per_round.push_back(pass.updates);
      trace.queries.push_back(normalized(w_tilde));
    }
    // The zero vector (cold start, before any plane) is never a member.
    if (!is_zero(w_tilde)) {
      const Vec& q = trace.queries.back();
      if (contains(space, q)) {
        trace.w_final = q;
        return trace;
      }
    }
    const Vec& query = constraints.empty() ? w_tilde : trace.queries.back();
    std::size_t idx = pick_cutting_plane(query, dataset, strategy,
                                         trace.plane_indices.size());
    trace.plane_indices.push_back(idx);
    // Unit constraint normals keep every update a unit vector, which is what
    // makes ceil(1 / margin^2) a hard cap on total updates.
    constraints.push_back(normalized(signed_point(dataset.points[idx])));
  }
}

}  // namespace cutplane
