#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "taxiray/distmean.hpp"

using namespace taxiray;

namespace {

double square_closed_form(double x, double y) {
  return (x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5) + 0.5;
}

// Quadrature route for f: integrate |x - t| against each profile piece.
double eval_by_quadrature(const PiecewiseLinearProfile& p1,
                          const PiecewiseLinearProfile& p2, Point2 x) {
  double sum = 0.0;
  for (const ProfilePiece& p : p1.pieces()) {
    auto lin = [&p](double t) {
      return p.v0 + (t - p.t0) / (p.t1 - p.t0) * (p.v1 - p.v0);
    };
    sum += oracles::abs_weighted_integral(lin, p.t0, p.t1, x.x);
  }
  for (const ProfilePiece& p : p2.pieces()) {
    auto lin = [&p](double t) {
      return p.v0 + (t - p.t0) / (p.t1 - p.t0) * (p.v1 - p.v0);
    };
    sum += oracles::abs_weighted_integral(lin, p.t0, p.t1, x.y);
  }
  return sum;
}

}  // namespace

TEST_CASE("x-ray of the unit square") {
  Polygon sq(oracles::unit_square());
  for (int axis : {1, 2}) {
    PiecewiseLinearProfile pr = coordinate_xray(sq, axis);
    REQUIRE(pr.pieces().size() == 1);
    REQUIRE(pr.support_min() == 0.0);
    REQUIRE(pr.support_max() == 1.0);
    REQUIRE(pr.value(0.25) == 1.0);
    REQUIRE(pr.value(0.75) == 1.0);
    REQUIRE(pr.value(1.5) == 0.0);
    REQUIRE_THAT(pr.integral(), Catch::Matchers::WithinAbs(1.0, 1e-15));
  }
}

TEST_CASE("x-ray of the right triangle") {
  Polygon tr(oracles::right_triangle());
  PiecewiseLinearProfile pr = coordinate_xray(tr, 1);
  REQUIRE(pr.support_min() == 0.0);
  REQUIRE(pr.support_max() == 1.0);
  for (double t : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    REQUIRE_THAT(pr.value(t), Catch::Matchers::WithinAbs(1.0 - t, 1e-15));
  }
}

TEST_CASE("x-ray of the L-shape steps down") {
  Polygon l(oracles::l_shape());
  for (int axis : {1, 2}) {
    PiecewiseLinearProfile pr = coordinate_xray(l, axis);
    REQUIRE(pr.value(0.5) == 2.0);
    REQUIRE(pr.value(1.5) == 1.0);
    // At the jump the closed-slice value is the larger one-sided limit.
    REQUIRE(pr.value(1.0) == 2.0);
    REQUIRE_THAT(pr.integral(), Catch::Matchers::WithinAbs(3.0, 1e-14));
  }
}

TEST_CASE("x-ray integral equals polygon area for random polygons") {
  SeededRng rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    int verts = 4 + static_cast<int>(rng.next_below(9));
    Polygon p(oracles::random_star_polygon(rng, verts, 3.0, 0.3));
    double area = polygon_area(p);
    for (int axis : {1, 2}) {
      REQUIRE_THAT(coordinate_xray(p, axis).integral(),
                   Catch::Matchers::WithinRel(area, 1e-9));
    }
  }
}

TEST_CASE("cumulative x-ray area equals clipped polygon area") {
  SeededRng rng(271);
  auto check = [&](const std::vector<Point2>& pts) {
    Polygon p(pts);
    for (int axis : {1, 2}) {
      PiecewiseLinearProfile pr = coordinate_xray(p, axis);
      double lo = pr.support_min();
      double hi = pr.support_max();
      for (int k = 0; k < 25; ++k) {
        double t = lo + (hi - lo) * rng.next_unit();
        double want = oracles::clipped_area(pts, axis, t, true);
        REQUIRE_THAT(cumulative_area(pr, t),
                     Catch::Matchers::WithinAbs(want, 1e-10));
      }
    }
  };
  check(oracles::unit_square());
  check(oracles::right_triangle());
  check(oracles::l_shape());
  for (int trial = 0; trial < 10; ++trial) {
    check(oracles::random_star_polygon(rng, 7, 2.0, 0.3));
  }
}

TEST_CASE("distance mean on the unit square matches the closed form") {
  Polygon sq(oracles::unit_square());
  PiecewiseLinearProfile x1 = coordinate_xray(sq, 1);
  PiecewiseLinearProfile x2 = coordinate_xray(sq, 2);

  REQUIRE_THAT(distmean_eval(x1, x2, {0.5, 0.5}),
               Catch::Matchers::WithinAbs(0.5, 1e-15));
  REQUIRE_THAT(distmean_eval(x1, x2, {0.25, 0.75}),
               Catch::Matchers::WithinAbs(0.625, 1e-15));
  REQUIRE_THAT(distmean_eval(x1, x2, {0.0, 0.0}),
               Catch::Matchers::WithinAbs(1.0, 1e-15));

  SeededRng rng(606);
  for (int k = 0; k < 100; ++k) {
    double x = rng.next_unit();
    double y = rng.next_unit();
    REQUIRE_THAT(distmean_eval(x1, x2, {x, y}),
                 Catch::Matchers::WithinAbs(square_closed_form(x, y), 1e-12));
  }
}

TEST_CASE("distance mean matches quadrature on the L-shape") {
  Polygon l(oracles::l_shape());
  PiecewiseLinearProfile x1 = coordinate_xray(l, 1);
  PiecewiseLinearProfile x2 = coordinate_xray(l, 2);
  SeededRng rng(1912);
  for (int k = 0; k < 200; ++k) {
    Point2 x{-1.0 + 4.0 * rng.next_unit(), -1.0 + 4.0 * rng.next_unit()};
    REQUIRE_THAT(distmean_eval(x1, x2, x),
                 Catch::Matchers::WithinAbs(eval_by_quadrature(x1, x2, x),
                                            1e-11));
  }
}

TEST_CASE("cumulative area examples") {
  Polygon sq(oracles::unit_square());
  PiecewiseLinearProfile pr = coordinate_xray(sq, 1);
  REQUIRE_THAT(cumulative_area(pr, 0.5), Catch::Matchers::WithinAbs(0.5, 1e-15));
  REQUIRE(cumulative_area(pr, -1.0) == 0.0);
  REQUIRE_THAT(cumulative_area(pr, 5.0), Catch::Matchers::WithinAbs(1.0, 1e-15));

  Polygon l(oracles::l_shape());
  PiecewiseLinearProfile lp = coordinate_xray(l, 1);
  REQUIRE_THAT(cumulative_area(lp, 1.5), Catch::Matchers::WithinAbs(2.5, 1e-14));
}

TEST_CASE("gradient examples on the unit square") {
  Polygon sq(oracles::unit_square());
  PiecewiseLinearProfile x1 = coordinate_xray(sq, 1);
  PiecewiseLinearProfile x2 = coordinate_xray(sq, 2);

  Point2 g = distmean_gradient(x1, x2, {0.5, 0.5});
  REQUIRE_THAT(g.x, Catch::Matchers::WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(g.y, Catch::Matchers::WithinAbs(0.0, 1e-15));

  g = distmean_gradient(x1, x2, {0.75, 0.5});
  REQUIRE_THAT(g.x, Catch::Matchers::WithinAbs(0.5, 1e-15));
  REQUIRE_THAT(g.y, Catch::Matchers::WithinAbs(0.0, 1e-15));

  g = distmean_gradient(x1, x2, {-1.0, 0.5});
  REQUIRE_THAT(g.x, Catch::Matchers::WithinAbs(-1.0, 1e-15));
}

TEST_CASE("gradient matches central differences away from breakpoints") {
  SeededRng rng(99);
  const double h = 1e-5;
  for (auto& pts : {oracles::unit_square(), oracles::right_triangle(),
                    oracles::l_shape()}) {
    Polygon p(pts);
    PiecewiseLinearProfile x1 = coordinate_xray(p, 1);
    PiecewiseLinearProfile x2 = coordinate_xray(p, 2);
    auto far_from_breaks = [](const PiecewiseLinearProfile& pr, double t) {
      for (const ProfilePiece& piece : pr.pieces()) {
        if (std::abs(t - piece.t0) < 1e-3 || std::abs(t - piece.t1) < 1e-3) {
          return false;
        }
      }
      return true;
    };
    int done = 0;
    while (done < 100) {
      Point2 x{x1.support_min() +
                   (x1.support_max() - x1.support_min()) * rng.next_unit(),
               x2.support_min() +
                   (x2.support_max() - x2.support_min()) * rng.next_unit()};
      if (!far_from_breaks(x1, x.x) || !far_from_breaks(x2, x.y)) continue;
      ++done;
      Point2 g = distmean_gradient(x1, x2, x);
      double fdx = (distmean_eval(x1, x2, {x.x + h, x.y}) -
                    distmean_eval(x1, x2, {x.x - h, x.y})) /
                   (2 * h);
      double fdy = (distmean_eval(x1, x2, {x.x, x.y + h}) -
                    distmean_eval(x1, x2, {x.x, x.y - h})) /
                   (2 * h);
      REQUIRE_THAT(g.x, Catch::Matchers::WithinAbs(fdx, 1e-6));
      REQUIRE_THAT(g.y, Catch::Matchers::WithinAbs(fdy, 1e-6));
    }
  }
}

TEST_CASE("second differences recover twice the x-ray") {
  SeededRng rng(123);
  const double h = 1e-4;
  for (auto& pts : {oracles::unit_square(), oracles::right_triangle(),
                    oracles::l_shape()}) {
    Polygon p(pts);
    PiecewiseLinearProfile x1 = coordinate_xray(p, 1);
    PiecewiseLinearProfile x2 = coordinate_xray(p, 2);
    for (int k = 0; k < 50; ++k) {
      double lo = x1.support_min(), hi = x1.support_max();
      double t = lo + (hi - lo) * rng.next_unit();
      bool near = false;
      for (const ProfilePiece& piece : x1.pieces()) {
        if (std::abs(t - piece.t0) < 1e-3 || std::abs(t - piece.t1) < 1e-3) {
          near = true;
        }
      }
      if (near) continue;
      double ymid = 0.5 * (x2.support_min() + x2.support_max());
      double sd = (distmean_eval(x1, x2, {t + h, ymid}) -
                   2 * distmean_eval(x1, x2, {t, ymid}) +
                   distmean_eval(x1, x2, {t - h, ymid})) /
                  (h * h);
      REQUIRE_THAT(sd, Catch::Matchers::WithinAbs(2.0 * x1.value(t), 1e-4));
    }
  }
}

TEST_CASE("distance mean is convex") {
  Polygon l(oracles::l_shape());
  PiecewiseLinearProfile x1 = coordinate_xray(l, 1);
  PiecewiseLinearProfile x2 = coordinate_xray(l, 2);
  SeededRng rng(55);
  for (int k = 0; k < 200; ++k) {
    Point2 a{4.0 * rng.next_unit() - 1.0, 4.0 * rng.next_unit() - 1.0};
    Point2 b{4.0 * rng.next_unit() - 1.0, 4.0 * rng.next_unit() - 1.0};
    double lam = rng.next_unit();
    Point2 mid{lam * a.x + (1 - lam) * b.x, lam * a.y + (1 - lam) * b.y};
    double lhs = distmean_eval(x1, x2, mid);
    double rhs = lam * distmean_eval(x1, x2, a) +
                 (1 - lam) * distmean_eval(x1, x2, b);
    REQUIRE(lhs <= rhs + 1e-9);
  }
}

TEST_CASE("distance mean grows with the domain") {
  Polygon small(oracles::unit_square());
  Polygon big(std::vector<Point2>{{-1, -1}, {2, -1}, {2, 2}, {-1, 2}});
  PiecewiseLinearProfile s1 = coordinate_xray(small, 1);
  PiecewiseLinearProfile s2 = coordinate_xray(small, 2);
  PiecewiseLinearProfile b1 = coordinate_xray(big, 1);
  PiecewiseLinearProfile b2 = coordinate_xray(big, 2);
  SeededRng rng(77);
  for (int k = 0; k < 100; ++k) {
    Point2 x{6.0 * rng.next_unit() - 2.0, 6.0 * rng.next_unit() - 2.0};
    REQUIRE(distmean_eval(s1, s2, x) <= distmean_eval(b1, b2, x));
  }
}

TEST_CASE("profile validation") {
  REQUIRE_THROWS_AS(PiecewiseLinearProfile({}), std::invalid_argument);
  REQUIRE_THROWS_AS(PiecewiseLinearProfile({{0, 0, 1, 1}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(PiecewiseLinearProfile({{0, 1, -0.5, 1}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(PiecewiseLinearProfile({{0, 1, 1, 1}, {2, 3, 1, 1}}),
                    std::invalid_argument);
}
