#include "cutplane/centers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cutplane/errors.hpp"
#include "cutplane/rng.hpp"

namespace cutplane {

namespace {

struct Chord {
  double lo = 0.0;
  double hi = 0.0;
  bool ok = false;
};

// Feasible parameter interval of x + t*u inside the polytope. The interval
// always contains 0 (x is feasible up to tolerance).
Chord chord_through(const SphericalPolytope& polytope, const Vec& x,
                    const Vec& u) {
  double b = dot(x, u);
  double c = dot(x, x) - 1.0;
  double disc = b * b - c;
  if (disc < 0.0) disc = 0.0;
  double s = std::sqrt(disc);
  Chord chord;
  chord.lo = -b - s;
  chord.hi = -b + s;
  for (const auto& h : polytope.halfspaces) {
    double d0 = dot(h.normal, x);
    double g = dot(h.normal, u);
    if (g > 1e-15) {
      chord.lo = std::max(chord.lo, -d0 / g);
    } else if (g < -1e-15) {
      chord.hi = std::min(chord.hi, -d0 / g);
    }
  }
  chord.ok = chord.hi - chord.lo >= 1e-12;
  return chord;
}

void resolve(const SamplerConfig& config, std::size_t dim,
             long long& burn_in, long long& thinning) {
  auto d = static_cast<long long>(dim);
  burn_in = config.burn_in < 0 ? 10 * d * d : config.burn_in;
  thinning = config.thinning < 0 ? d : config.thinning;
  if (thinning < 1)
    throw std::invalid_argument("sampler thinning must be >= 1");
}

// Strictly interior chain start: the largest-inscribed-ball center. The
// origin is feasible for every homogeneous halfspace but sits where all of
// them are active (the apex of the feasible cone), and chords through the
// apex of a narrow cone almost always degenerate. Bodies too collapsed for
// the center solve fall back to the origin and let the collapse diagnostics
// fire as before.
Vec interior_start(const SphericalPolytope& polytope) {
  if (polytope.halfspaces.empty()) return Vec(polytope.dim, 0.0);
  try {
    return chebyshev_center(polytope, 1e-6, 500000).point;
  } catch (const Error&) {
    return Vec(polytope.dim, 0.0);
  }
}

}  // namespace

std::vector<Vec> hit_and_run(const SphericalPolytope& polytope, std::size_t n,
                             const SamplerConfig& config) {
  long long burn_in = 0, thinning = 1;
  resolve(config, polytope.dim, burn_in, thinning);
  Rng rng(config.seed);
  Vec x = interior_start(polytope);
  std::vector<Vec> samples;
  samples.reserve(n);
  int collapses = 0;
  long long steps_done = 0;
  long long needed = burn_in + thinning * static_cast<long long>(n);
  while (steps_done < needed) {
    Vec u = rng.unit_sphere(polytope.dim);
    Chord chord = chord_through(polytope, x, u);
    if (!chord.ok) {
      if (++collapses >= 100) throw ChordCollapse();
      continue;
    }
    collapses = 0;
    double t = rng.uniform(chord.lo, chord.hi);
    axpy_in_place(x, t, u);
    ++steps_done;
    if (steps_done > burn_in && (steps_done - burn_in) % thinning == 0)
      samples.push_back(x);
  }
  return samples;
}

CenterEstimate centroid_estimate(const SphericalPolytope& polytope,
                                 std::size_t n, const SamplerConfig& config) {
  if (n == 0) throw std::invalid_argument("centroid needs n >= 1 samples");
  std::vector<Vec> samples = hit_and_run(polytope, n, config);
  Vec mean(polytope.dim, 0.0);
  for (const auto& s : samples) add_in_place(mean, s);
  for (auto& v : mean) v /= static_cast<double>(samples.size());
  return {std::move(mean), CenterMethod::CentroidMC, samples.size(), 0.0};
}

CenterEstimate chebyshev_center(const SphericalPolytope& polytope, double tol,
                                std::uint64_t max_iter) {
  std::size_t d = polytope.dim;
  if (polytope.halfspaces.empty())
    return {Vec(d, 0.0), CenterMethod::Chebyshev, 0, 1.0};

  auto min_margin_at = [&](const Vec& u, std::size_t* arg = nullptr) {
    double best = 0.0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < polytope.halfspaces.size(); ++i) {
      double m = dot(polytope.halfspaces[i].normal, u);
      if (i == 0 || m < best) {
        best = m;
        best_i = i;
      }
    }
    if (arg) *arg = best_i;
    return best;
  };

  Vec u(d, 0.0);
  for (const auto& h : polytope.halfspaces) add_in_place(u, h.normal);
  if (norm(u) < 1e-12) u = polytope.halfspaces.front().normal;
  u = normalized(u);

  Vec best_u = u;
  double best_f = min_margin_at(u);

  // Projected subgradient ascent with geometrically decaying step sizes.
  // Each sweep runs a fixed number of iterations at constant step; the step
  // halves between sweeps. Stops once a sweep improves the best margin by
  // less than tol (only after the step has decayed enough to resolve tol).
  constexpr int kSweepIters = 200;
  constexpr int kMaxSweeps = 64;
  double step = 0.5;
  std::uint64_t iters = 0;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double sweep_start_f = best_f;
    u = best_u;
    for (int i = 0; i < kSweepIters; ++i) {
      if (iters++ >= max_iter) throw MaxIterExceeded(max_iter);
      std::size_t active = 0;
      min_margin_at(u, &active);
      axpy_in_place(u, step, polytope.halfspaces[active].normal);
      double n = norm(u);
      if (n < 1e-12) {
        u = polytope.halfspaces[active].normal;
      } else {
        for (auto& v : u) v /= n;
      }
      double f = min_margin_at(u);
      if (f > best_f) {
        best_f = f;
        best_u = u;
      }
    }
    bool resolved = step <= std::max(tol, 1e-3);
    if (resolved && best_f - sweep_start_f < tol) break;
    step *= 0.5;
  }

  // The ascent zigzags near the optimum, so finish with an equal-margin
  // polish: at the optimum the best direction is the normalized equalizer
  // w = sum_i lambda_i a_i over the active normals, where the Gram system
  // G lambda = 1 makes every active margin equal. Candidates are kept only
  // when the full margin scan improves, so a misidentified active set (or a
  // singular Gram) can never make the answer worse.
  auto equalizer = [&](const std::vector<std::size_t>& active) {
    std::size_t k = active.size();
    std::size_t w_col = k + 1;  // augmented [G | 1], row-major
    std::vector<double> a(k * w_col);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j)
        a[i * w_col + j] = dot(polytope.halfspaces[active[i]].normal,
                               polytope.halfspaces[active[j]].normal);
      a[i * w_col + k] = 1.0;
    }
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t pivot = col;
      for (std::size_t row = col + 1; row < k; ++row)
        if (std::abs(a[row * w_col + col]) > std::abs(a[pivot * w_col + col]))
          pivot = row;
      if (std::abs(a[pivot * w_col + col]) < 1e-10) return Vec{};
      if (pivot != col)
        for (std::size_t j = col; j <= k; ++j)
          std::swap(a[col * w_col + j], a[pivot * w_col + j]);
      for (std::size_t row = col + 1; row < k; ++row) {
        double f = a[row * w_col + col] / a[col * w_col + col];
        for (std::size_t j = col; j <= k; ++j)
          a[row * w_col + j] -= f * a[col * w_col + j];
      }
    }
    std::vector<double> lambda(k);
    for (std::size_t i = k; i-- > 0;) {
      double v = a[i * w_col + k];
      for (std::size_t j = i + 1; j < k; ++j)
        v -= a[i * w_col + j] * lambda[j];
      lambda[i] = v / a[i * w_col + i];
    }
    Vec w(d, 0.0);
    for (std::size_t i = 0; i < k; ++i)
      axpy_in_place(w, lambda[i], polytope.halfspaces[active[i]].normal);
    if (norm(w) < 1e-12) return Vec{};
    return normalized(w);
  };
  // Two rounds: the second recomputes the active set at the polished point,
  // where margins are sharp enough to separate active from inactive.
  for (int round = 0; round < 2; ++round) {
    for (double eps : {1e-2, 1e-3, 1e-4, 1e-6, 1e-9}) {
      std::vector<std::size_t> active;
      for (std::size_t i = 0; i < polytope.halfspaces.size(); ++i)
        if (dot(polytope.halfspaces[i].normal, best_u) <= best_f + eps)
          active.push_back(i);
      Vec candidate = equalizer(active);
      if (candidate.empty()) continue;
      double f = min_margin_at(candidate);
      if (f > best_f) {
        best_f = f;
        best_u = candidate;
      }
    }
  }

  if (best_f <= tol) throw NotSeparable(best_f);
  double m = best_f;
  CenterEstimate estimate;
  estimate.point = scaled(best_u, 1.0 / (1.0 + m));
  estimate.method = CenterMethod::Chebyshev;
  estimate.n_samples = 0;
  estimate.inscribed_radius = m / (1.0 + m);
  return estimate;
}

}  // namespace cutplane
