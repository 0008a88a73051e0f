#pragma once

// Locating the point that halves a polygon's area along both coordinate
// axes: the minimizer of the taxicab distance mean function. Two routes are
// provided, a stochastic sign-step iteration driven by uniform samples and a
// deterministic bisection on the exact cumulative X-ray integrals.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "taxiray/distmean.hpp"
#include "taxiray/geometry.hpp"

namespace taxiray {

/// Step size as a function of the 1-based iteration index.
struct StepSchedule {
  std::function<double(std::uint64_t)> step;

  static StepSchedule harmonic() {
    return {[](std::uint64_t k) { return 1.0 / static_cast<double>(k); }};
  }
};

/// Componentwise sign of (x - sample); each component is -1, 0 or +1.
inline std::array<int, 2> sign_step(const Point2& x, const Point2& sample) {
  auto sgn = [](double d) { return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0); };
  return {sgn(x.x - sample.x), sgn(x.y - sample.y)};
}

struct BisectionRun {
  std::vector<Point2> trajectory;  // iterates X_0 .. X_N
  Point2 final_point;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
};

/// Stochastic approximation of the area-bisecting point.
///
/// Starts from the first uniform sample (or from `start` when given) and
/// performs `iterations` updates
///
///   X_k = X_{k-1} - t_k * sign(X_{k-1} - P_k),  k = 1..N,
///
/// with P_k a fresh uniform sample from the polygon and t_k given by the
/// schedule (default 1/k). The iterate is not projected back onto the
/// polygon; it may wander outside and is pulled back by later steps.
inline BisectionRun bisect_stochastic(
    const Polygon& p, std::size_t iterations, SeededRng& rng,
    const StepSchedule& schedule = StepSchedule::harmonic(),
    std::optional<Point2> start = std::nullopt) {
  BisectionRun run;
  run.seed = rng.seed();
  run.iterations = iterations;
  run.trajectory.reserve(iterations + 1);

  Point2 x;
  if (start.has_value()) {
    x = *start;
  } else {
    x = sample_uniform(p, 1, rng)[0];
  }
  run.trajectory.push_back(x);

  for (std::size_t k = 1; k <= iterations; ++k) {
    Point2 sample = sample_uniform(p, 1, rng)[0];
    std::array<int, 2> q = sign_step(x, sample);
    double t = schedule.step(static_cast<std::uint64_t>(k));
    x.x -= t * q[0];
    x.y -= t * q[1];
    run.trajectory.push_back(x);
  }
  run.final_point = x;
  return run;
}

/// Deterministic area-bisecting point: along each axis, binary search on the
/// cumulative X-ray integral until it equals half the total within
/// tol * area. The cumulative integral is continuous and nondecreasing, so
/// the search always converges.
inline Point2 bisect_exact(const Polygon& p, double tol = 1e-10) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  Point2 out;
  for (int axis = 1; axis <= 2; ++axis) {
    PiecewiseLinearProfile xr = coordinate_xray(p, axis);
    double area = xr.integral();
    double target = 0.5 * area;
    double lo = xr.support_min();
    double hi = xr.support_max();
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
      mid = 0.5 * (lo + hi);
      double c = cumulative_area(xr, mid);
      if (std::abs(c - target) <= tol * area) break;
      if (c < target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    (axis == 1 ? out.x : out.y) = mid;
  }
  return out;
}

}  // namespace taxiray
