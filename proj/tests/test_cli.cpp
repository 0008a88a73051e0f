// Drives the installed command-line binary end to end: spawns it with
// std::system, then checks exit codes, stdout, and the files it writes.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oracles.hpp"
#include "taxiray/io.hpp"
#include "taxiray/reconstruct.hpp"

namespace fs = std::filesystem;
using namespace taxiray;
using Catch::Matchers::ContainsSubstring;

namespace {

const char* kCli = TAXIRAY_CLI_PATH;

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::path("cli_scratch") / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

CliRun run_cli(const std::string& args, const fs::path& dir) {
  fs::path out = dir / "stdout.log";
  fs::path err = dir / "stderr.log";
  std::string cmd = std::string("\"") + kCli + "\" " + args + " >\"" +
                    out.string() + "\" 2>\"" + err.string() + "\"";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

const std::string kSquare = "0 0\n1 0\n1 1\n0 1\n";
const std::string kLShape = "0 0\n2 0\n2 1\n1 1\n1 2\n0 2\n";

}  // namespace

TEST_CASE("sample writes deterministic outputs") {
  fs::path a = fresh_dir("sample_a");
  fs::path b = fresh_dir("sample_b");
  fs::path c = fresh_dir("sample_c");
  spit(a / "poly.txt", kSquare);

  std::string common = (a / "poly.txt").string() + " --count 50";
  CliRun ra = run_cli("sample " + common + " --seed 7 --out-dir " + a.string(), a);
  CliRun rb = run_cli("sample " + common + " --seed 7 --out-dir " + b.string(), b);
  CliRun rc = run_cli("sample " + common + " --seed 8 --out-dir " + c.string(), c);
  REQUIRE(ra.exit_code == 0);
  REQUIRE(rb.exit_code == 0);
  REQUIRE(rc.exit_code == 0);
  REQUIRE_THAT(ra.out, ContainsSubstring("points: 50"));

  // Same seed, byte-identical files; different seed, different points.
  REQUIRE(slurp(a / "points.csv") == slurp(b / "points.csv"));
  REQUIRE(slurp(a / "points.svg") == slurp(b / "points.svg"));
  REQUIRE(slurp(a / "manifest.json") == slurp(b / "manifest.json"));
  REQUIRE(slurp(a / "points.csv") != slurp(c / "points.csv"));

  // The CSV holds header plus one row per point, all inside the polygon.
  std::istringstream csv(slurp(a / "points.csv"));
  std::string line;
  REQUIRE(std::getline(csv, line));
  REQUIRE(line == "x,y");
  Polygon sq(oracles::unit_square());
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    auto comma = line.find(',');
    Point2 p{std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))};
    REQUIRE(point_in_polygon(sq, p));
  }
  REQUIRE(rows == 50);

  nlohmann::json manifest = nlohmann::json::parse(slurp(a / "manifest.json"));
  REQUIRE(manifest["command"] == "sample");
  REQUIRE(manifest["parameters"]["seed"] == 7);
  REQUIRE(manifest["outputs"].size() == 2);
}

TEST_CASE("malformed polygon input exits 2 naming the line") {
  fs::path d = fresh_dir("badpoly");
  spit(d / "poly.txt", "0 0\n1 oops\n1 1\n");
  CliRun r = run_cli("sample " + (d / "poly.txt").string() + " --out-dir " +
                         d.string(), d);
  REQUIRE(r.exit_code == 2);
  REQUIRE_THAT(r.err, ContainsSubstring("line 2"));
}

TEST_CASE("missing input file exits 2") {
  fs::path d = fresh_dir("missing");
  CliRun r = run_cli("xray " + (d / "nope.txt").string() + " --out-dir " +
                         d.string(), d);
  REQUIRE(r.exit_code == 2);
}

TEST_CASE("bad flag value exits 2") {
  fs::path d = fresh_dir("badflag");
  spit(d / "x.csv", "t_start,t_end,value\n0,1,1\n");
  CliRun r = run_cli("recon-grid " + (d / "x.csv").string() + " " +
                         (d / "x.csv").string() + " --mode sideways --out-dir " +
                         d.string(), d);
  REQUIRE(r.exit_code == 2);
}

TEST_CASE("exact bisection of the unit square prints the center") {
  fs::path d = fresh_dir("exact");
  spit(d / "poly.txt", kSquare);
  CliRun r = run_cli("bisect " + (d / "poly.txt").string() +
                         " --exact --out-dir " + d.string(), d);
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out == "0.5 0.5\n");
  REQUIRE(slurp(d / "median.txt") == "0.5 0.5\n");
}

TEST_CASE("stochastic bisection is reproducible per seed") {
  fs::path a = fresh_dir("bisect_a");
  fs::path b = fresh_dir("bisect_b");
  spit(a / "poly.txt", kLShape);
  std::string common = (a / "poly.txt").string() + " --iterations 500 --seed 11";
  CliRun ra = run_cli("bisect " + common + " --out-dir " + a.string(), a);
  CliRun rb = run_cli("bisect " + common + " --out-dir " + b.string(), b);
  REQUIRE(ra.exit_code == 0);
  REQUIRE(ra.out == rb.out);
  REQUIRE(slurp(a / "trajectory.csv") == slurp(b / "trajectory.csv"));

  // Header plus 501 iterate rows.
  std::string traj = slurp(a / "trajectory.csv");
  REQUIRE(std::count(traj.begin(), traj.end(), '\n') == 502);

  // The centroid start changes the first iterate.
  CliRun rcent = run_cli("bisect " + common + " --start centroid --out-dir " +
                             a.string(), a);
  REQUIRE(rcent.exit_code == 0);
  std::string traj2 = slurp(a / "trajectory.csv");
  std::istringstream t2(traj2);
  std::string header, first;
  std::getline(t2, header);
  std::getline(t2, first);
  // L-shape centroid is (5/6, 5/6).
  REQUIRE_THAT(first, ContainsSubstring("0,0.8333333333333333"));
}

TEST_CASE("xray command matches the library profiles") {
  fs::path d = fresh_dir("xray");
  spit(d / "poly.txt", kLShape);
  CliRun r = run_cli("xray " + (d / "poly.txt").string() + " --out-dir " +
                         d.string(), d);
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out, ContainsSubstring("area: 3"));

  Polygon l(oracles::l_shape());
  std::ostringstream want1, want2;
  write_profile_csv(want1, coordinate_xray(l, 1));
  write_profile_csv(want2, coordinate_xray(l, 2));
  REQUIRE(slurp(d / "xray1.csv") == want1.str());
  REQUIRE(slurp(d / "xray2.csv") == want2.str());
}

TEST_CASE("discrete reconstruction of the worked example") {
  fs::path d = fresh_dir("recon_d");
  spit(d / "sums.txt", "R: 3 1 4 4 2\nS: 4 3 1 4 2\n");
  CliRun r = run_cli("recon-discrete " + (d / "sums.txt").string() +
                         " --trace trace.txt --out-dir " + d.string(), d);
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out == "feasible\n");

  ReconstructResult res = reconstruct(SumVectors({3, 1, 4, 4, 2},
                                                 {4, 3, 1, 4, 2}));
  std::ostringstream want;
  write_matrix_text(want, *res.matrix);
  REQUIRE(slurp(d / "matrix.txt") == want.str());
  REQUIRE(slurp(d / "matrix.pgm").rfind("P2\n5 5\n1\n", 0) == 0);

  std::string trace = slurp(d / "trace.txt");
  REQUIRE(trace.rfind("# initial\n", 0) == 0);
  REQUIRE_THAT(trace, ContainsSubstring("# switch"));

  nlohmann::json manifest = nlohmann::json::parse(slurp(d / "manifest.json"));
  REQUIRE(manifest["outputs"].size() == 3);
}

TEST_CASE("infeasible and incompatible sums exit 3") {
  fs::path d = fresh_dir("recon_bad");
  spit(d / "infeasible.txt", "R: 2 0\nS: 2 0\n");
  CliRun r1 = run_cli("recon-discrete " + (d / "infeasible.txt").string() +
                          " --out-dir " + d.string(), d);
  REQUIRE(r1.exit_code == 3);
  REQUIRE(r1.out == "infeasible\n");

  spit(d / "incompatible.txt", "R: 1 0\nS: 0 0\n");
  CliRun r2 = run_cli("recon-discrete " + (d / "incompatible.txt").string() +
                          " --out-dir " + d.string(), d);
  REQUIRE(r2.exit_code == 3);
  REQUIRE(r2.out == "infeasible\n");
}

TEST_CASE("grid reconstruction recovers the left half square") {
  fs::path d = fresh_dir("recon_g");
  spit(d / "x1.csv", "t_start,t_end,value\n0,0.5,1\n0.5,1,0\n");
  spit(d / "x2.csv", "t_start,t_end,value\n0,1,0.5\n");
  CliRun r = run_cli("recon-grid " + (d / "x1.csv").string() + " " +
                         (d / "x2.csv").string() +
                         " --resolution 2 --out-dir " + d.string(), d);
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out == "cells: 2\n");
  REQUIRE(slurp(d / "gridset.txt") == "1 0\n1 0\n");
  REQUIRE_THAT(slurp(d / "gridset.svg"), ContainsSubstring("<svg"));

  nlohmann::json manifest = nlohmann::json::parse(slurp(d / "manifest.json"));
  REQUIRE(manifest["parameters"]["resolution"] == 2);
  REQUIRE(manifest["parameters"]["mode"] == "greedy");
}

TEST_CASE("unrealizable x-rays exit 3") {
  fs::path d = fresh_dir("recon_g_bad");
  spit(d / "x1.csv", "t_start,t_end,value\n0,1,5\n");
  spit(d / "x2.csv", "t_start,t_end,value\n0,1,1\n");
  CliRun r = run_cli("recon-grid " + (d / "x1.csv").string() + " " +
                         (d / "x2.csv").string() + " --out-dir " + d.string(),
                     d);
  REQUIRE(r.exit_code == 3);
  REQUIRE(r.out == "infeasible\n");
}
