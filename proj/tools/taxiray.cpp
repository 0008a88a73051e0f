// Command-line front end: uniform sampling, area bisection, coordinate
// x-rays, and the two reconstruction modes. Every run writes its outputs
// plus a manifest.json into --out-dir; outputs are deterministic for a
// given seed (no timestamps anywhere).
//
// Exit codes: 0 success, 2 bad input (unreadable or malformed files,
// invalid arguments), 3 infeasible reconstruction instance.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taxiray/taxiray.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace taxiray;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  return in;
}

Polygon load_polygon(const std::string& path) {
  std::ifstream in = open_input(path);
  try {
    return read_polygon(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

SumVectors load_sum_vectors(const std::string& path) {
  std::ifstream in = open_input(path);
  try {
    return read_sum_vectors(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

StepXRay load_step_xray(const std::string& path) {
  std::ifstream in = open_input(path);
  try {
    return read_step_xray(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << content;
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

// Emits one named output into the directory and records it in the list.
void emit(const fs::path& dir, const std::string& name,
          const std::string& content, std::vector<std::string>& outputs) {
  write_text_file(dir / name, content);
  outputs.push_back(name);
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const json& parameters,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs) {
  json m;
  m["tool"] = "taxiray";
  m["version"] = kVersion;
  m["command"] = command;
  m["parameters"] = parameters;
  m["inputs"] = inputs;
  m["outputs"] = outputs;
  write_text_file(dir / "manifest.json", m.dump(2) + "\n");
}

Point2 polygon_centroid(const Polygon& p) {
  const auto& v = p.vertices();
  double twice_area = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Point2& s = v[k];
    const Point2& t = v[(k + 1) % v.size()];
    double cross = s.x * t.y - t.x * s.y;
    twice_area += cross;
    cx += (s.x + t.x) * cross;
    cy += (s.y + t.y) * cross;
  }
  return {cx / (3.0 * twice_area), cy / (3.0 * twice_area)};
}

std::string point_line(const Point2& x) {
  return detail::fmt(x.x) + " " + detail::fmt(x.y);
}

int run_sample(const std::string& polygon_path, std::uint64_t seed,
               std::size_t count, const fs::path& dir) {
  Polygon p = load_polygon(polygon_path);
  SeededRng rng(seed);
  std::vector<Point2> pts = sample_uniform(p, count, rng);

  std::vector<std::string> outputs;
  std::ostringstream csv;
  write_points_csv(csv, pts);
  emit(dir, "points.csv", csv.str(), outputs);
  emit(dir, "points.svg", svg_points_over_polygon(p, pts), outputs);
  write_manifest(dir, "sample",
                 {{"seed", seed}, {"count", count}}, {polygon_path}, outputs);
  std::cout << "points: " << pts.size() << '\n';
  return kExitOk;
}

int run_bisect(const std::string& polygon_path, std::uint64_t seed,
               std::size_t iterations, bool exact, const std::string& start,
               const fs::path& dir) {
  Polygon p = load_polygon(polygon_path);
  std::vector<std::string> outputs;

  if (exact) {
    Point2 m = bisect_exact(p);
    emit(dir, "median.txt", point_line(m) + "\n", outputs);
    write_manifest(dir, "bisect", {{"exact", true}}, {polygon_path}, outputs);
    std::cout << point_line(m) << '\n';
    return kExitOk;
  }

  SeededRng rng(seed);
  std::optional<Point2> start_point;
  if (start == "centroid") start_point = polygon_centroid(p);
  BisectionRun run = bisect_stochastic(p, iterations, rng,
                                       StepSchedule::harmonic(), start_point);

  std::ostringstream csv;
  write_trajectory_csv(csv, run);
  emit(dir, "trajectory.csv", csv.str(), outputs);
  emit(dir, "trajectory.svg", svg_points_over_polygon(p, run.trajectory),
       outputs);
  write_manifest(dir, "bisect",
                 {{"exact", false},
                  {"seed", seed},
                  {"iterations", iterations},
                  {"start", start}},
                 {polygon_path}, outputs);
  std::cout << point_line(run.final_point) << '\n';
  return kExitOk;
}

int run_xray(const std::string& polygon_path, const fs::path& dir) {
  Polygon p = load_polygon(polygon_path);
  PiecewiseLinearProfile x1 = coordinate_xray(p, 1);
  PiecewiseLinearProfile x2 = coordinate_xray(p, 2);

  std::vector<std::string> outputs;
  std::ostringstream c1, c2;
  write_profile_csv(c1, x1);
  write_profile_csv(c2, x2);
  emit(dir, "xray1.csv", c1.str(), outputs);
  emit(dir, "xray2.csv", c2.str(), outputs);
  write_manifest(dir, "xray", json::object(), {polygon_path}, outputs);
  std::cout << "area: " << detail::fmt(x1.integral()) << '\n';
  return kExitOk;
}

int run_recon_discrete(const std::string& sums_path,
                       const std::string& trace_name, const fs::path& dir) {
  SumVectors sums = load_sum_vectors(sums_path);
  std::vector<std::string> outputs;
  json params{{"trace", !trace_name.empty()}};

  if (!sums.compatible()) {
    write_manifest(dir, "recon-discrete", params, {sums_path}, outputs);
    std::cout << "infeasible\n";
    std::cerr << "row and column totals differ\n";
    return kExitInfeasible;
  }

  ReconstructResult res = reconstruct(sums);
  if (!trace_name.empty()) {
    std::ostringstream tr;
    write_lav_trace(tr, sums, res.lav);
    emit(dir, trace_name, tr.str(), outputs);
  }

  if (!res.feasible) {
    write_manifest(dir, "recon-discrete", params, {sums_path}, outputs);
    std::cout << "infeasible\n";
    return kExitInfeasible;
  }

  std::ostringstream txt, pgm;
  write_matrix_text(txt, *res.matrix);
  write_matrix_pgm(pgm, *res.matrix);
  emit(dir, "matrix.txt", txt.str(), outputs);
  emit(dir, "matrix.pgm", pgm.str(), outputs);
  write_manifest(dir, "recon-discrete", params, {sums_path}, outputs);
  std::cout << "feasible\n";
  return kExitOk;
}

int run_recon_grid(const std::string& x1_path, const std::string& x2_path,
                   int resolution, const std::string& mode,
                   const fs::path& dir) {
  StepXRay x1 = load_step_xray(x1_path);
  StepXRay x2 = load_step_xray(x2_path);
  DeletionMode del =
      mode == "antigreedy" ? DeletionMode::kAntigreedy : DeletionMode::kGreedy;

  GridSet set(1);
  try {
    set = greedy_reconstruct(x1, x2, resolution, del);
  } catch (const std::invalid_argument& e) {
    std::cout << "infeasible\n";
    std::cerr << e.what() << '\n';
    return kExitInfeasible;
  }

  ControlGrid grid(bounding_box(x1, x2), resolution);
  std::vector<std::string> outputs;
  std::ostringstream txt;
  write_gridset_text(txt, set);
  emit(dir, "gridset.txt", txt.str(), outputs);
  emit(dir, "gridset.svg", svg_gridset(set, grid), outputs);
  write_manifest(dir, "recon-grid",
                 {{"resolution", resolution}, {"mode", mode}},
                 {x1_path, x2_path}, outputs);
  std::cout << "cells: " << set.count() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"taxicab distance-mean toolkit"};
  app.require_subcommand(1);

  std::string polygon_path, sums_path, x1_path, x2_path;
  std::string out_dir = ".";
  std::string mode = "greedy";
  std::string start = "sample";
  std::string trace_name;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t iterations = 1000;
  int resolution = 8;
  bool exact = false;

  auto* cmd_sample =
      app.add_subcommand("sample", "draw uniform points from a polygon");
  cmd_sample->add_option("polygon", polygon_path, "polygon vertex file")
      ->required();
  cmd_sample->add_option("--seed", seed, "rng seed");
  cmd_sample->add_option("--count", count, "number of points")
      ->check(CLI::PositiveNumber);
  cmd_sample->add_option("--out-dir", out_dir, "output directory");

  auto* cmd_bisect = app.add_subcommand(
      "bisect", "locate the area-bisecting point of a polygon");
  cmd_bisect->add_option("polygon", polygon_path, "polygon vertex file")
      ->required();
  cmd_bisect->add_option("--seed", seed, "rng seed");
  cmd_bisect->add_option("--iterations", iterations, "stochastic updates")
      ->check(CLI::PositiveNumber);
  cmd_bisect->add_flag("--exact", exact,
                       "use per-axis binary search instead of sampling");
  cmd_bisect->add_option("--start", start, "first iterate")
      ->check(CLI::IsMember({"sample", "centroid"}));
  cmd_bisect->add_option("--out-dir", out_dir, "output directory");

  auto* cmd_xray =
      app.add_subcommand("xray", "coordinate x-rays of a polygon");
  cmd_xray->add_option("polygon", polygon_path, "polygon vertex file")
      ->required();
  cmd_xray->add_option("--out-dir", out_dir, "output directory");

  auto* cmd_rd = app.add_subcommand(
      "recon-discrete", "binary matrix from row and column sums");
  cmd_rd->add_option("sums", sums_path, "sum vector file")->required();
  cmd_rd->add_option("--trace", trace_name,
                     "also write the fill's snapshot trace to this file");
  cmd_rd->add_option("--out-dir", out_dir, "output directory");

  auto* cmd_rg = app.add_subcommand(
      "recon-grid", "grid occupancy from two step x-rays");
  cmd_rg->add_option("xray1", x1_path, "vertical-slice x-ray csv")->required();
  cmd_rg->add_option("xray2", x2_path, "horizontal-slice x-ray csv")
      ->required();
  cmd_rg->add_option("--resolution", resolution, "cells per side")
      ->check(CLI::Range(1, 64));
  cmd_rg->add_option("--mode", mode, "deletion order")
      ->check(CLI::IsMember({"greedy", "antigreedy"}));
  cmd_rg->add_option("--out-dir", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    fs::path dir(out_dir);
    fs::create_directories(dir);
    if (*cmd_sample) return run_sample(polygon_path, seed, count, dir);
    if (*cmd_bisect)
      return run_bisect(polygon_path, seed, iterations, exact, start, dir);
    if (*cmd_xray) return run_xray(polygon_path, dir);
    if (*cmd_rd) return run_recon_discrete(sums_path, trace_name, dir);
    if (*cmd_rg)
      return run_recon_grid(x1_path, x2_path, resolution, mode, dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
