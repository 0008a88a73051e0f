#pragma once

// Coordinate X-rays of simple polygons and the taxicab distance mean
// function they induce.
//
// The X-ray of a polygon along axis i assigns to each coordinate t the total
// length of the slice of the polygon by the line {x_i = t}. For a simple
// polygon that slice length is piecewise linear in t, with breakpoints only
// at vertex coordinates. The distance mean function
//
//   f(x) = integral over the polygon of |x - y|_1 dy
//
// splits into two one-dimensional integrals against the axis X-rays, which
// this header evaluates in closed form.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "taxiray/geometry.hpp"

namespace taxiray {

/// One linear piece of a profile: value runs from v0 at t0 to v1 at t1.
struct ProfilePiece {
  double t0 = 0.0;
  double t1 = 0.0;
  double v0 = 0.0;
  double v1 = 0.0;
};

/// A nonnegative piecewise linear function with bounded support, stored as
/// contiguous linear pieces. Adjacent pieces share endpoints but may jump in
/// value there; the function value at a shared breakpoint is the larger of
/// the two one-sided limits.
class PiecewiseLinearProfile {
 public:
  explicit PiecewiseLinearProfile(std::vector<ProfilePiece> pieces)
      : pieces_(std::move(pieces)) {
    if (pieces_.empty()) {
      throw std::invalid_argument("profile needs at least one piece");
    }
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      const ProfilePiece& p = pieces_[k];
      if (!(p.t0 < p.t1)) {
        throw std::invalid_argument("profile piece " + std::to_string(k) +
                                    " has non-increasing endpoints");
      }
      if (p.v0 < 0.0 || p.v1 < 0.0) {
        throw std::invalid_argument("profile piece " + std::to_string(k) +
                                    " has a negative value");
      }
      if (k > 0 && pieces_[k - 1].t1 != p.t0) {
        throw std::invalid_argument("profile pieces are not contiguous");
      }
    }
  }

  const std::vector<ProfilePiece>& pieces() const { return pieces_; }

  double support_min() const { return pieces_.front().t0; }
  double support_max() const { return pieces_.back().t1; }

  /// Function value; zero outside the support. At an interior breakpoint the
  /// larger one-sided limit wins, matching closed slices of a closed set.
  double value(double t) const {
    if (t < support_min() || t > support_max()) return 0.0;
    double best = 0.0;
    bool hit = false;
    for (const ProfilePiece& p : pieces_) {
      if (t < p.t0 || t > p.t1) continue;
      double s = (t - p.t0) / (p.t1 - p.t0);
      best = std::max(best, p.v0 + s * (p.v1 - p.v0));
      hit = true;
    }
    return hit ? best : 0.0;
  }

  /// Integral of the profile over its whole support.
  double integral() const {
    double sum = 0.0;
    for (const ProfilePiece& p : pieces_) {
      sum += 0.5 * (p.v0 + p.v1) * (p.t1 - p.t0);
    }
    return sum;
  }

 private:
  std::vector<ProfilePiece> pieces_;
};

/// X-ray of the polygon along a coordinate axis (1 = abscissa,
/// 2 = ordinate). Breakpoints are exactly the sorted distinct vertex
/// coordinates along that axis; values are exact at the breakpoints.
inline PiecewiseLinearProfile coordinate_xray(const Polygon& p, int axis) {
  if (axis != 1 && axis != 2) {
    throw std::invalid_argument("axis must be 1 or 2");
  }
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  auto along = [axis](const Point2& q) { return axis == 1 ? q.x : q.y; };
  auto across = [axis](const Point2& q) { return axis == 1 ? q.y : q.x; };

  std::vector<double> coords;
  coords.reserve(n);
  for (const Point2& q : v) coords.push_back(along(q));
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  std::vector<ProfilePiece> pieces;
  pieces.reserve(coords.size() - 1);
  for (std::size_t k = 0; k + 1 < coords.size(); ++k) {
    double a = coords[k];
    double b = coords[k + 1];
    double mid = 0.5 * (a + b);

    // Slice ordinate of each edge crossing the strip, as a linear function
    // of t; evaluated at mid for the even-odd pairing, at a and b for the
    // exact endpoint values.
    struct Crossing {
      double at_mid, at_a, at_b;
    };
    std::vector<Crossing> cr;
    for (std::size_t e = 0; e < n; ++e) {
      const Point2& P = v[e];
      const Point2& Q = v[(e + 1) % n];
      double ta = along(P);
      double tb = along(Q);
      if (std::min(ta, tb) < mid && mid < std::max(ta, tb)) {
        double ca = across(P);
        double cb = across(Q);
        double slope = (cb - ca) / (tb - ta);
        cr.push_back({ca + slope * (mid - ta), ca + slope * (a - ta),
                      ca + slope * (b - ta)});
      }
    }
    std::sort(cr.begin(), cr.end(),
              [](const Crossing& x, const Crossing& y) {
                return x.at_mid < y.at_mid;
              });
    double va = 0.0;
    double vb = 0.0;
    for (std::size_t c = 0; c + 1 < cr.size(); c += 2) {
      // Edges of a simple polygon cannot cross inside a strip, so each
      // pair's width is nonnegative; clamp away subtraction roundoff.
      va += std::max(0.0, cr[c + 1].at_a - cr[c].at_a);
      vb += std::max(0.0, cr[c + 1].at_b - cr[c].at_b);
    }
    pieces.push_back({a, b, va, vb});
  }
  return PiecewiseLinearProfile(std::move(pieces));
}

namespace detail {

// Integral of |c - t| * (linear interpolant of v0..v1) over [t0, t1].
inline double piece_abs_integral(double t0, double t1, double v0, double v1,
                                 double c) {
  double alpha = (v1 - v0) / (t1 - t0);
  double beta = v0 - alpha * t0;
  // Antiderivative of (c - t)(alpha t + beta).
  auto F = [alpha, beta, c](double t) {
    return c * (0.5 * alpha * t * t + beta * t) -
           (alpha * t * t * t / 3.0 + 0.5 * beta * t * t);
  };
  if (c <= t0) return -(F(t1) - F(t0));
  if (c >= t1) return F(t1) - F(t0);
  return (F(c) - F(t0)) - (F(t1) - F(c));
}

inline double profile_abs_integral(const PiecewiseLinearProfile& pr,
                                   double c) {
  double sum = 0.0;
  for (const ProfilePiece& p : pr.pieces()) {
    sum += piece_abs_integral(p.t0, p.t1, p.v0, p.v1, c);
  }
  return sum;
}

}  // namespace detail

/// Integral of the profile over (-inf, t].
inline double cumulative_area(const PiecewiseLinearProfile& pr, double t) {
  double sum = 0.0;
  for (const ProfilePiece& p : pr.pieces()) {
    if (t <= p.t0) break;
    double s = std::min(t, p.t1);
    double vs = p.v0 + (s - p.t0) / (p.t1 - p.t0) * (p.v1 - p.v0);
    sum += 0.5 * (p.v0 + vs) * (s - p.t0);
  }
  return sum;
}

inline double total_area(const PiecewiseLinearProfile& pr) {
  return pr.integral();
}

/// Distance mean value f(x) from the two axis X-rays:
/// f(x) = int |x.x - t| xray1(t) dt + int |x.y - t| xray2(t) dt.
/// Each piece integrates in closed form, split at the kink when x falls
/// inside the piece.
inline double distmean_eval(const PiecewiseLinearProfile& xray1,
                            const PiecewiseLinearProfile& xray2,
                            const Point2& x) {
  return detail::profile_abs_integral(xray1, x.x) +
         detail::profile_abs_integral(xray2, x.y);
}

/// Gradient of the distance mean function where it is differentiable.
/// Component i equals (mass on the low side of x along axis i) minus
/// (mass on the high side), i.e. 2 * cumulative - total.
inline Point2 distmean_gradient(const PiecewiseLinearProfile& xray1,
                                const PiecewiseLinearProfile& xray2,
                                const Point2& x) {
  return {2.0 * cumulative_area(xray1, x.x) - total_area(xray1),
          2.0 * cumulative_area(xray2, x.y) - total_area(xray2)};
}

}  // namespace taxiray
