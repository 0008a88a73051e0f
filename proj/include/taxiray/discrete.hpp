#pragma once

// Finite lattice sets, their discrete coordinate X-rays, binary matrices
// with cached marginals, and the distance-sum machinery used to order fill
// preferences when reconstructing a matrix from its row and column sums.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taxiray {

struct LatticePoint {
  int x = 0;
  int y = 0;
};

inline bool operator==(const LatticePoint& a, const LatticePoint& b) {
  return a.x == b.x && a.y == b.y;
}

inline bool operator<(const LatticePoint& a, const LatticePoint& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

/// A finite set of lattice points. Points are stored sorted; duplicates are
/// rejected.
class LatticeSet {
 public:
  LatticeSet() = default;

  explicit LatticeSet(std::vector<LatticePoint> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
    for (std::size_t i = 1; i < pts_.size(); ++i) {
      if (pts_[i] == pts_[i - 1]) {
        throw std::invalid_argument("lattice set has duplicate points");
      }
    }
  }

  const std::vector<LatticePoint>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }

 private:
  std::vector<LatticePoint> pts_;
};

/// Discrete X-ray: per coordinate value, the number of set points on the
/// corresponding lattice line.
struct DiscreteXRay {
  std::map<int, long long> counts;

  long long total() const {
    long long t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
  }
};

/// X-rays of the set along both axes (first = per x value, second = per y).
inline std::pair<DiscreteXRay, DiscreteXRay> discrete_xrays(
    const LatticeSet& f) {
  DiscreteXRay by_x, by_y;
  for (const LatticePoint& p : f.points()) {
    ++by_x.counts[p.x];
    ++by_y.counts[p.y];
  }
  return {by_x, by_y};
}

/// Sum over the set of taxicab distances to x. Exact in integer arithmetic
/// for integer x.
inline long long discrete_distance_sum(const LatticeSet& f,
                                       const LatticePoint& x) {
  long long sum = 0;
  for (const LatticePoint& p : f.points()) {
    sum += std::abs(static_cast<long long>(p.x) - x.x) +
           std::abs(static_cast<long long>(p.y) - x.y);
  }
  return sum;
}

inline double discrete_distance_sum(const LatticeSet& f, double x, double y) {
  double sum = 0.0;
  for (const LatticePoint& p : f.points()) {
    sum += std::abs(p.x - x) + std::abs(p.y - y);
  }
  return sum;
}

/// The same distance sum computed from the two X-rays alone:
/// sum_t |x_1 - t| X1(t) + sum_t |x_2 - t| X2(t).
inline long long distance_sum_via_xrays(const DiscreteXRay& x1,
                                        const DiscreteXRay& x2,
                                        const LatticePoint& x) {
  long long sum = 0;
  for (const auto& [t, c] : x1.counts) {
    sum += c * std::abs(static_cast<long long>(t) - x.x);
  }
  for (const auto& [t, c] : x2.counts) {
    sum += c * std::abs(static_cast<long long>(t) - x.y);
  }
  return sum;
}

inline double distance_sum_via_xrays(const DiscreteXRay& x1,
                                     const DiscreteXRay& x2, double xx,
                                     double xy) {
  double sum = 0.0;
  for (const auto& [t, c] : x1.counts) {
    sum += static_cast<double>(c) * std::abs(t - xx);
  }
  for (const auto& [t, c] : x2.counts) {
    sum += static_cast<double>(c) * std::abs(t - xy);
  }
  return sum;
}

/// Counts of set points on either side of x along the given axis
/// (1 = abscissa, 2 = ordinate): first = points with coordinate <= x,
/// second = points with coordinate >= x. Points exactly at x count in both.
inline std::pair<long long, long long> one_sided_partials(const LatticeSet& f,
                                                          double x,
                                                          double y, int axis) {
  if (axis != 1 && axis != 2) {
    throw std::invalid_argument("axis must be 1 or 2");
  }
  long long lo = 0, hi = 0;
  for (const LatticePoint& p : f.points()) {
    double c = axis == 1 ? p.x : p.y;
    double v = axis == 1 ? x : y;
    if (c <= v) ++lo;
    if (c >= v) ++hi;
  }
  return {lo, hi};
}

/// Prescribed row sums R (length m) and column sums S (length n) for a
/// binary matrix. Entries must lie in [0, n] and [0, m] respectively;
/// whether the totals agree is reported by compatible(), not enforced.
struct SumVectors {
  std::vector<int> row_sums;
  std::vector<int> col_sums;

  SumVectors(std::vector<int> r, std::vector<int> s)
      : row_sums(std::move(r)), col_sums(std::move(s)) {
    if (row_sums.empty() || col_sums.empty()) {
      throw std::invalid_argument("sum vectors must be nonempty");
    }
    const int m = rows();
    const int n = cols();
    for (int v : row_sums) {
      if (v < 0 || v > n) {
        throw std::invalid_argument("row sum " + std::to_string(v) +
                                    " outside [0, " + std::to_string(n) + "]");
      }
    }
    for (int v : col_sums) {
      if (v < 0 || v > m) {
        throw std::invalid_argument("column sum " + std::to_string(v) +
                                    " outside [0, " + std::to_string(m) + "]");
      }
    }
  }

  int rows() const { return static_cast<int>(row_sums.size()); }
  int cols() const { return static_cast<int>(col_sums.size()); }

  long long total_rows() const {
    return std::accumulate(row_sums.begin(), row_sums.end(), 0LL);
  }
  long long total_cols() const {
    return std::accumulate(col_sums.begin(), col_sums.end(), 0LL);
  }

  bool compatible() const { return total_rows() == total_cols(); }
};

/// Dense 0/1 matrix with row and column sums kept current on every write.
/// Indices are 0-based throughout; printed traces use 1-based numbering.
class BinaryMatrix {
 public:
  BinaryMatrix(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0),
        row_sums_(static_cast<std::size_t>(rows), 0),
        col_sums_(static_cast<std::size_t>(cols), 0) {
    if (rows <= 0 || cols <= 0) {
      throw std::invalid_argument("matrix dimensions must be positive");
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int at(int i, int j) const { return a_[index(i, j)]; }

  void set(int i, int j, int value) {
    if (value != 0 && value != 1) {
      throw std::invalid_argument("matrix entries are 0 or 1");
    }
    std::size_t k = index(i, j);
    int old = a_[k];
    if (old == value) return;
    a_[k] = static_cast<std::uint8_t>(value);
    int d = value - old;
    row_sums_[static_cast<std::size_t>(i)] += d;
    col_sums_[static_cast<std::size_t>(j)] += d;
  }

  void toggle(int i, int j) { set(i, j, 1 - at(i, j)); }

  const std::vector<int>& row_sums() const { return row_sums_; }
  const std::vector<int>& col_sums() const { return col_sums_; }

  bool operator==(const BinaryMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
      throw std::out_of_range("matrix index (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") out of range");
    }
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_;
  int cols_;
  std::vector<std::uint8_t> a_;
  std::vector<int> row_sums_;
  std::vector<int> col_sums_;
};

// The lattice realization of a matrix reads cells as unit squares in the
// plane: matrix cell (i, j), 0-based with row 0 on top, corresponds to the
// lattice point (j + 1, m - i) for a matrix with m rows. These two helpers
// are the only place that owns the correspondence.
inline LatticePoint lattice_from_cell(int i, int j, int m) {
  return {j + 1, m - i};
}

inline std::pair<int, int> cell_from_lattice(const LatticePoint& q, int m) {
  return {m - q.y, q.x - 1};
}

inline LatticeSet lattice_from_matrix(const BinaryMatrix& a) {
  std::vector<LatticePoint> pts;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j)) pts.push_back(lattice_from_cell(i, j, a.rows()));
    }
  }
  return LatticeSet(std::move(pts));
}

inline BinaryMatrix matrix_from_lattice(const LatticeSet& f, int m, int n) {
  BinaryMatrix a(m, n);
  for (const LatticePoint& q : f.points()) {
    if (q.x < 1 || q.x > n || q.y < 1 || q.y > m) {
      throw std::invalid_argument("lattice point outside the m x n grid");
    }
    auto [i, j] = cell_from_lattice(q, m);
    a.set(i, j, 1);
  }
  return a;
}

/// Matrix of distance sums induced by the prescribed marginals: entry (k, l)
/// is sum_j S_j |l - j| + sum_i R_i |k - i| over 0-based indices. Cells with
/// small entries sit centrally with respect to the prescribed mass and are
/// preferred by the fill heuristic.
inline std::vector<std::vector<long long>> distance_sum_matrix(
    const SumVectors& sums) {
  const int m = sums.rows();
  const int n = sums.cols();
  std::vector<long long> col_term(static_cast<std::size_t>(n), 0);
  for (int l = 0; l < n; ++l) {
    long long t = 0;
    for (int j = 0; j < n; ++j) {
      t += static_cast<long long>(sums.col_sums[static_cast<std::size_t>(j)]) *
           std::abs(l - j);
    }
    col_term[static_cast<std::size_t>(l)] = t;
  }
  std::vector<long long> row_term(static_cast<std::size_t>(m), 0);
  for (int k = 0; k < m; ++k) {
    long long t = 0;
    for (int i = 0; i < m; ++i) {
      t += static_cast<long long>(sums.row_sums[static_cast<std::size_t>(i)]) *
           std::abs(k - i);
    }
    row_term[static_cast<std::size_t>(k)] = t;
  }
  std::vector<std::vector<long long>> out(
      static_cast<std::size_t>(m),
      std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < n; ++l) {
      out[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
          col_term[static_cast<std::size_t>(l)] +
          row_term[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

/// Events emitted by lav_fill, in execution order. Saturation events mark a
/// fully used row or column as visited; forced events fill every remaining
/// cell of a line (skipping columns or rows whose sum would overflow);
/// switch events set one preferred cell.
enum class LavEventKind {
  kRowSaturated,
  kColSaturated,
  kRowForced,
  kColForced,
  kSwitch,
};

struct LavEvent {
  LavEventKind kind;
  int line = -1;  // row or column index for saturation and forced events
  std::vector<std::pair<int, int>> filled;  // cells set to 1 by this event
};

struct LavResult {
  BinaryMatrix matrix;
  std::vector<std::uint8_t> visited;  // row-major m*n flags
  std::vector<LavEvent> events;
};

/// Greedy fill of a binary matrix toward the prescribed marginals.
///
/// Cells are tried in ascending order of their distance-sum value (ties by
/// row, then column) and switched to 1 whenever neither marginal would be
/// exceeded. Two accelerations run to a fixed point before the first try and
/// after every switch: (1) rows, then columns, whose sum is already met have
/// their remaining cells marked visited; (2) rows, then columns, whose
/// remaining deficit equals their number of unvisited cells are completed
/// outright, skipping cells whose cross sum is already met. The result never
/// exceeds either marginal but may fall short of both.
inline LavResult lav_fill(const SumVectors& sums) {
  const int m = sums.rows();
  const int n = sums.cols();
  std::vector<std::vector<long long>> dist = distance_sum_matrix(sums);

  struct Pref {
    long long d;
    int i, j;
  };
  std::vector<Pref> pref;
  pref.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      pref.push_back(
          {dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], i,
           j});
    }
  }
  std::sort(pref.begin(), pref.end(), [](const Pref& a, const Pref& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  LavResult res{BinaryMatrix(m, n),
                std::vector<std::uint8_t>(
                    static_cast<std::size_t>(m) * static_cast<std::size_t>(n),
                    0),
                {}};
  std::vector<int> unvisited_row(static_cast<std::size_t>(m), n);
  std::vector<int> unvisited_col(static_cast<std::size_t>(n), m);

  auto visited = [&](int i, int j) -> std::uint8_t& {
    return res.visited[static_cast<std::size_t>(i) *
                           static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(j)];
  };
  auto mark = [&](int i, int j) {
    if (!visited(i, j)) {
      visited(i, j) = 1;
      --unvisited_row[static_cast<std::size_t>(i)];
      --unvisited_col[static_cast<std::size_t>(j)];
    }
  };

  BinaryMatrix& a = res.matrix;

  // Fires the first applicable acceleration in the documented priority
  // order -- saturated rows, saturated columns, forced rows, forced
  // columns, each scanned by index -- and returns whether one fired. Every
  // event can enable earlier-priority events, so the caller rescans from
  // the top after each one.
  auto fire_one_acceleration = [&]() -> bool {
    for (int i = 0; i < m; ++i) {
      if (unvisited_row[static_cast<std::size_t>(i)] > 0 &&
          a.row_sums()[static_cast<std::size_t>(i)] ==
              sums.row_sums[static_cast<std::size_t>(i)]) {
        for (int j = 0; j < n; ++j) mark(i, j);
        res.events.push_back({LavEventKind::kRowSaturated, i, {}});
        return true;
      }
    }
    for (int j = 0; j < n; ++j) {
      if (unvisited_col[static_cast<std::size_t>(j)] > 0 &&
          a.col_sums()[static_cast<std::size_t>(j)] ==
              sums.col_sums[static_cast<std::size_t>(j)]) {
        for (int i = 0; i < m; ++i) mark(i, j);
        res.events.push_back({LavEventKind::kColSaturated, j, {}});
        return true;
      }
    }
    for (int i = 0; i < m; ++i) {
      int deficit = sums.row_sums[static_cast<std::size_t>(i)] -
                    a.row_sums()[static_cast<std::size_t>(i)];
      if (unvisited_row[static_cast<std::size_t>(i)] > 0 &&
          deficit == unvisited_row[static_cast<std::size_t>(i)]) {
        LavEvent ev{LavEventKind::kRowForced, i, {}};
        for (int j = 0; j < n; ++j) {
          if (visited(i, j)) continue;
          if (a.col_sums()[static_cast<std::size_t>(j)] + 1 <=
              sums.col_sums[static_cast<std::size_t>(j)]) {
            a.set(i, j, 1);
            ev.filled.emplace_back(i, j);
          }
          mark(i, j);
        }
        res.events.push_back(std::move(ev));
        return true;
      }
    }
    for (int j = 0; j < n; ++j) {
      int deficit = sums.col_sums[static_cast<std::size_t>(j)] -
                    a.col_sums()[static_cast<std::size_t>(j)];
      if (unvisited_col[static_cast<std::size_t>(j)] > 0 &&
          deficit == unvisited_col[static_cast<std::size_t>(j)]) {
        LavEvent ev{LavEventKind::kColForced, j, {}};
        for (int i = 0; i < m; ++i) {
          if (visited(i, j)) continue;
          if (a.row_sums()[static_cast<std::size_t>(i)] + 1 <=
              sums.row_sums[static_cast<std::size_t>(i)]) {
            a.set(i, j, 1);
            ev.filled.emplace_back(i, j);
          }
          mark(i, j);
        }
        res.events.push_back(std::move(ev));
        return true;
      }
    }
    return false;
  };
  auto accelerate = [&]() {
    while (fire_one_acceleration()) {
    }
  };

  accelerate();
  for (const Pref& c : pref) {
    if (visited(c.i, c.j)) continue;
    bool row_ok = a.row_sums()[static_cast<std::size_t>(c.i)] + 1 <=
                  sums.row_sums[static_cast<std::size_t>(c.i)];
    bool col_ok = a.col_sums()[static_cast<std::size_t>(c.j)] + 1 <=
                  sums.col_sums[static_cast<std::size_t>(c.j)];
    if (row_ok && col_ok) {
      a.set(c.i, c.j, 1);
      mark(c.i, c.j);
      res.events.push_back({LavEventKind::kSwitch, -1, {{c.i, c.j}}});
      accelerate();
    } else {
      mark(c.i, c.j);
    }
  }
  return res;
}

}  // namespace taxiray
