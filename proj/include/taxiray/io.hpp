#pragma once

// File formats: polygon vertex lists, profile and step X-ray CSVs, sum
// vectors, matrices (text and PGM), grid sets and trajectories. Parsers
// throw std::invalid_argument naming the offending line.

#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "taxiray/bisect.hpp"
#include "taxiray/discrete.hpp"
#include "taxiray/distmean.hpp"
#include "taxiray/geometry.hpp"
#include "taxiray/gridrecon.hpp"

namespace taxiray {

namespace detail {

inline std::string strip_comment(const std::string& line) {
  std::size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

}  // namespace detail

/// Polygon file: one `x y` pair per line, `#` starts a comment, blank lines
/// ignored. Vertices in counterclockwise order.
inline Polygon read_polygon(std::istream& in) {
  std::vector<Point2> pts;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    std::istringstream ls(line);
    double x = 0.0, y = 0.0;
    if (!(ls >> x >> y)) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected two coordinates");
    }
    std::string rest;
    if (ls >> rest) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": trailing content after coordinates");
    }
    pts.push_back({x, y});
  }
  return Polygon(std::move(pts));
}

inline void write_polygon(std::ostream& out, const Polygon& p) {
  for (const Point2& v : p.vertices()) {
    out << detail::fmt(v.x) << ' ' << detail::fmt(v.y) << '\n';
  }
}

/// Points CSV with an `x,y` header row.
inline void write_points_csv(std::ostream& out,
                             const std::vector<Point2>& pts) {
  out << "x,y\n";
  for (const Point2& p : pts) {
    out << detail::fmt(p.x) << ',' << detail::fmt(p.y) << '\n';
  }
}

/// Profile CSV: `t,value` rows, one per piece endpoint; a jump at a shared
/// breakpoint produces two rows with the same t.
inline void write_profile_csv(std::ostream& out,
                              const PiecewiseLinearProfile& pr) {
  out << "t,value\n";
  const auto& ps = pr.pieces();
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k == 0 || ps[k - 1].v1 != ps[k].v0) {
      out << detail::fmt(ps[k].t0) << ',' << detail::fmt(ps[k].v0) << '\n';
    }
    out << detail::fmt(ps[k].t1) << ',' << detail::fmt(ps[k].v1) << '\n';
  }
}

inline PiecewiseLinearProfile read_profile_csv(std::istream& in) {
  std::string raw;
  int lineno = 0;
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, raw)) {
    ++lineno;
    if (lineno == 1 && raw.rfind("t,", 0) == 0) continue;  // header
    if (detail::blank(raw)) continue;
    std::istringstream ls(raw);
    double t = 0.0, v = 0.0;
    char comma = 0;
    if (!(ls >> t >> comma >> v) || comma != ',') {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected `t,value`");
    }
    rows.emplace_back(t, v);
  }
  if (rows.size() < 2) {
    throw std::invalid_argument("profile needs at least two rows");
  }
  std::vector<ProfilePiece> pieces;
  for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
    if (rows[k].first == rows[k + 1].first) continue;  // jump marker
    pieces.push_back(
        {rows[k].first, rows[k + 1].first, rows[k].second, rows[k + 1].second});
  }
  return PiecewiseLinearProfile(std::move(pieces));
}

/// Sum-vector file: two lines, `R: 3 1 4 4 2` and `S: 4 3 1 4 2`.
inline SumVectors read_sum_vectors(std::istream& in) {
  std::vector<int> r, s;
  bool have_r = false, have_s = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    std::vector<int>* dst = nullptr;
    if (tag == "R:") {
      dst = &r;
      have_r = true;
    } else if (tag == "S:") {
      dst = &s;
      have_s = true;
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected `R:` or `S:`");
    }
    int v = 0;
    while (ls >> v) dst->push_back(v);
    if (!ls.eof()) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": non-integer entry");
    }
  }
  if (!have_r || !have_s) {
    throw std::invalid_argument("sum file needs both an R: and an S: line");
  }
  return SumVectors(std::move(r), std::move(s));
}

inline void write_sum_vectors(std::ostream& out, const SumVectors& sums) {
  out << "R:";
  for (int v : sums.row_sums) out << ' ' << v;
  out << "\nS:";
  for (int v : sums.col_sums) out << ' ' << v;
  out << '\n';
}

/// Matrix as a text grid of 0/1 separated by spaces.
inline void write_matrix_text(std::ostream& out, const BinaryMatrix& a) {
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      out << a.at(i, j);
    }
    out << '\n';
  }
}

/// Matrix as a PGM (P2) image, ones black on white.
inline void write_matrix_pgm(std::ostream& out, const BinaryMatrix& a) {
  out << "P2\n" << a.cols() << ' ' << a.rows() << "\n1\n";
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      out << (1 - a.at(i, j));
    }
    out << '\n';
  }
}

/// Step X-ray CSV: `t_start,t_end,value` rows.
inline StepXRay read_step_xray(std::istream& in) {
  std::string raw;
  int lineno = 0;
  std::vector<StepSegment> segs;
  while (std::getline(in, raw)) {
    ++lineno;
    if (lineno == 1 && raw.rfind("t_start,", 0) == 0) continue;  // header
    if (detail::blank(raw)) continue;
    std::istringstream ls(raw);
    double a = 0.0, b = 0.0, v = 0.0;
    char c1 = 0, c2 = 0;
    if (!(ls >> a >> c1 >> b >> c2 >> v) || c1 != ',' || c2 != ',') {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected `t_start,t_end,value`");
    }
    segs.push_back({a, b, v});
  }
  if (segs.empty()) {
    throw std::invalid_argument("step x-ray file has no segments");
  }
  return StepXRay(std::move(segs));
}

inline void write_step_xray(std::ostream& out, const StepXRay& x) {
  out << "t_start,t_end,value\n";
  for (const StepSegment& s : x.segments()) {
    out << detail::fmt(s.t0) << ',' << detail::fmt(s.t1) << ','
        << detail::fmt(s.v) << '\n';
  }
}

/// Grid set as a text grid of 0/1, one row per line, top row first.
inline void write_gridset_text(std::ostream& out, const GridSet& g) {
  for (int j = 0; j < g.resolution(); ++j) {
    for (int i = 0; i < g.resolution(); ++i) {
      if (i) out << ' ';
      out << (g.at(i, j) ? 1 : 0);
    }
    out << '\n';
  }
}

/// Trajectory CSV: iteration index and iterate coordinates.
inline void write_trajectory_csv(std::ostream& out, const BisectionRun& run) {
  out << "k,x,y\n";
  for (std::size_t k = 0; k < run.trajectory.size(); ++k) {
    out << k << ',' << detail::fmt(run.trajectory[k].x) << ','
        << detail::fmt(run.trajectory[k].y) << '\n';
  }
}

/// Replay of a fill's event log as annotated matrix snapshots (1-based rows
/// and columns in the annotations). Starts from the empty matrix and prints
/// one snapshot per event.
inline void write_lav_trace(std::ostream& out, const SumVectors& sums,
                            const LavResult& lav) {
  BinaryMatrix a(sums.rows(), sums.cols());
  out << "# initial\n";
  write_matrix_text(out, a);
  for (const LavEvent& ev : lav.events) {
    for (const auto& [i, j] : ev.filled) a.set(i, j, 1);
    switch (ev.kind) {
      case LavEventKind::kSwitch:
        out << "# switch row " << ev.filled.front().first + 1 << " column "
            << ev.filled.front().second + 1 << '\n';
        break;
      case LavEventKind::kRowSaturated:
        out << "# row " << ev.line + 1 << " saturated\n";
        break;
      case LavEventKind::kColSaturated:
        out << "# column " << ev.line + 1 << " saturated\n";
        break;
      case LavEventKind::kRowForced:
        out << "# row " << ev.line + 1 << " forced\n";
        break;
      case LavEventKind::kColForced:
        out << "# column " << ev.line + 1 << " forced\n";
        break;
    }
    write_matrix_text(out, a);
  }
}

}  // namespace taxiray
