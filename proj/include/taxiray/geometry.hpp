#pragma once

// Planar geometry primitives: points, simple polygons, ear-clipping
// triangulation and uniform random sampling.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taxiray {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Point2& a, const Point2& b) {
  return a.x == b.x && a.y == b.y;
}

inline bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }

/// Taxicab (L1) distance between two points.
inline double taxicab_distance(const Point2& a, const Point2& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

/// Deterministic random source. Wraps a 64-bit Mersenne twister seeded
/// directly with the given value; uniform doubles in [0,1) are built from the
/// top 53 bits of the raw output so streams are bit-exact across platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0,1).
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(next_unit() * static_cast<double>(bound));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

namespace detail {

inline double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline bool within(double lo, double v, double hi) {
  return (lo <= v && v <= hi) || (hi <= v && v <= lo);
}

// p collinear with [a,b] assumed; true if p lies within the segment box.
inline bool on_collinear_segment(const Point2& p, const Point2& a,
                                 const Point2& b) {
  return within(a.x, p.x, b.x) && within(a.y, p.y, b.y);
}

inline int orient_sign(const Point2& o, const Point2& a, const Point2& b) {
  double c = cross(o, a, b);
  if (c > 0.0) return 1;
  if (c < 0.0) return -1;
  return 0;
}

// Closed-segment intersection test, including touching endpoints and
// collinear overlap.
inline bool segments_intersect(const Point2& a, const Point2& b,
                               const Point2& c, const Point2& d) {
  int d1 = orient_sign(a, b, c);
  int d2 = orient_sign(a, b, d);
  int d3 = orient_sign(c, d, a);
  int d4 = orient_sign(c, d, b);
  if (d1 != d2 && d3 != d4) return true;
  if (d1 == 0 && on_collinear_segment(c, a, b)) return true;
  if (d2 == 0 && on_collinear_segment(d, a, b)) return true;
  if (d3 == 0 && on_collinear_segment(a, c, d)) return true;
  if (d4 == 0 && on_collinear_segment(b, c, d)) return true;
  return false;
}

}  // namespace detail

/// A simple polygon with vertices in counterclockwise order. Construction
/// validates the boundary: at least three vertices, consecutive vertices
/// distinct, no self-intersection, positive (counterclockwise) area above a
/// degeneracy threshold of 1e-12.
class Polygon {
 public:
  explicit Polygon(std::vector<Point2> vertices) : v_(std::move(vertices)) {
    validate();
  }

  const std::vector<Point2>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  const Point2& operator[](std::size_t i) const { return v_[i]; }

 private:
  void validate() const {
    const std::size_t n = v_.size();
    if (n < 3) {
      throw std::invalid_argument("polygon needs at least 3 vertices");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (v_[i] == v_[(i + 1) % n]) {
        throw std::invalid_argument(
            "polygon has repeated consecutive vertices at index " +
            std::to_string(i));
      }
    }
    double twice_area = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& a = v_[i];
      const Point2& b = v_[(i + 1) % n];
      twice_area += a.x * b.y - b.x * a.y;
    }
    if (twice_area < 0.0) {
      throw std::invalid_argument(
          "polygon vertices are clockwise; expected counterclockwise order");
    }
    if (twice_area <= 2.0 * 1e-12) {
      throw std::invalid_argument("polygon is degenerate (area <= 1e-12)");
    }
    // O(n^2) pairwise edge check; fine for the polygon sizes handled here.
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& a = v_[i];
      const Point2& b = v_[(i + 1) % n];
      for (std::size_t j = i + 1; j < n; ++j) {
        const Point2& c = v_[j];
        const Point2& d = v_[(j + 1) % n];
        bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
        if (adjacent) {
          // Edges sharing one endpoint may not overlap beyond it.
          const Point2& shared = (j == i + 1) ? b : a;
          const Point2& tip1 = (j == i + 1) ? a : b;
          const Point2& tip2 = (j == i + 1) ? d : c;
          if (detail::orient_sign(shared, tip1, tip2) == 0 &&
              (detail::on_collinear_segment(tip1, shared, tip2) ||
               detail::on_collinear_segment(tip2, shared, tip1))) {
            throw std::invalid_argument(
                "polygon boundary folds back on itself at vertex " +
                std::to_string(j));
          }
          continue;
        }
        if (detail::segments_intersect(a, b, c, d)) {
          throw std::invalid_argument("polygon boundary self-intersects");
        }
      }
    }
  }

  std::vector<Point2> v_;
};

/// Area by the shoelace formula. Positive for any constructed Polygon.
inline double polygon_area(const Polygon& p) {
  const auto& v = p.vertices();
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

struct Triangle {
  std::array<std::size_t, 3> idx;  // indices into the polygon's vertex list
};

struct Triangulation {
  std::vector<Triangle> triangles;
};

inline double triangle_area(const Point2& a, const Point2& b,
                            const Point2& c) {
  return 0.5 * std::abs(detail::cross(a, b, c));
}

namespace detail {

// Closed point-in-triangle test for a counterclockwise triangle.
inline bool point_in_ccw_triangle(const Point2& p, const Point2& a,
                                  const Point2& b, const Point2& c) {
  return cross(a, b, p) >= 0.0 && cross(b, c, p) >= 0.0 &&
         cross(c, a, p) >= 0.0;
}

}  // namespace detail

/// Ear-clipping triangulation. Emits exactly n-2 triangles whose areas sum
/// to the polygon area; deterministic (always clips the first ear found in
/// vertex order).
inline Triangulation triangulate(const Polygon& p) {
  const auto& v = p.vertices();
  std::vector<std::size_t> idx(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

  Triangulation out;
  out.triangles.reserve(v.size() - 2);

  while (idx.size() > 3) {
    bool clipped = false;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      std::size_t ia = idx[(k + idx.size() - 1) % idx.size()];
      std::size_t ib = idx[k];
      std::size_t ic = idx[(k + 1) % idx.size()];
      double c = detail::cross(v[ia], v[ib], v[ic]);
      if (c <= 0.0) continue;  // reflex or flat corner: not an ear
      bool blocked = false;
      for (std::size_t m : idx) {
        if (m == ia || m == ib || m == ic) continue;
        if (detail::point_in_ccw_triangle(v[m], v[ia], v[ib], v[ic])) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      out.triangles.push_back({{ia, ib, ic}});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
      break;
    }
    if (!clipped) {
      // Only flat corners remain clippable; remove one to keep progress.
      for (std::size_t k = 0; k < idx.size(); ++k) {
        std::size_t ia = idx[(k + idx.size() - 1) % idx.size()];
        std::size_t ib = idx[k];
        std::size_t ic = idx[(k + 1) % idx.size()];
        if (detail::cross(v[ia], v[ib], v[ic]) == 0.0) {
          out.triangles.push_back({{ia, ib, ic}});
          idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
          clipped = true;
          break;
        }
      }
    }
    if (!clipped) {
      throw std::runtime_error("triangulation failed to find an ear");
    }
  }
  out.triangles.push_back({{idx[0], idx[1], idx[2]}});
  return out;
}

/// True if the point lies inside the polygon or on its boundary.
inline bool point_in_polygon(const Polygon& p, const Point2& pt) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % n];
    double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    double c = detail::cross(a, b, pt);
    if (c * c <= 1e-24 * len2 && detail::on_collinear_segment(pt, a, b)) {
      return true;
    }
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((v[i].y > pt.y) != (v[j].y > pt.y)) {
      double xc =
          (v[j].x - v[i].x) * (pt.y - v[i].y) / (v[j].y - v[i].y) + v[i].x;
      if (pt.x < xc) inside = !inside;
    }
  }
  return inside;
}

/// Draws `count` independent uniform points from the polygon.
///
/// The polygon is triangulated once; each point picks a triangle by a linear
/// scan of cumulative areas against a single uniform draw, then places a
/// point by two more uniform draws (u, v), reflecting (u, v) to
/// (1-u, 1-v) when u + v > 1 so the unit-square pair maps onto the triangle.
/// Consumes exactly three draws per point, in the order: triangle pick, u, v.
inline std::vector<Point2> sample_uniform(const Polygon& p, std::size_t count,
                                          SeededRng& rng) {
  if (count == 0) {
    throw std::invalid_argument("sample count must be positive");
  }
  Triangulation tri = triangulate(p);
  const auto& v = p.vertices();
  std::vector<double> cum;
  cum.reserve(tri.triangles.size());
  double total = 0.0;
  for (const Triangle& t : tri.triangles) {
    total += triangle_area(v[t.idx[0]], v[t.idx[1]], v[t.idx[2]]);
    cum.push_back(total);
  }

  std::vector<Point2> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    double x = rng.next_unit() * total;
    std::size_t pick = tri.triangles.size() - 1;
    for (std::size_t k = 0; k < cum.size(); ++k) {
      if (x <= cum[k]) {
        pick = k;
        break;
      }
    }
    const Triangle& t = tri.triangles[pick];
    const Point2& A = v[t.idx[0]];
    const Point2& B = v[t.idx[1]];
    const Point2& C = v[t.idx[2]];
    double u = rng.next_unit();
    double w = rng.next_unit();
    if (u + w > 1.0) {
      u = 1.0 - u;
      w = 1.0 - w;
    }
    out.push_back({A.x + u * (B.x - A.x) + w * (C.x - A.x),
                   A.y + u * (B.y - A.y) + w * (C.y - A.y)});
  }
  return out;
}

}  // namespace taxiray
