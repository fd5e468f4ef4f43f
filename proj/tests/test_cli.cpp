#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"
#include "support.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ggphase_cli_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name, std::ios::binary) << text;
    return (path / name).string();
  }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kSigmaZ = R"("observable": {"matrix": [[[1,0],[0,0]],[[0,0],[-1,0]]]})";

json run_json(ggp::cli::JobSpec job, int& code) {
  std::ostringstream out;
  code = ggp::cli::run(job, out);
  return json::parse(out.str());
}

}  // namespace

TEST_CASE("cli classify reports the null tag") {
  TempDir dir;
  ggp::cli::JobSpec job;
  job.command = "classify";
  job.input_path = dir.write("in.json", std::string("{") + kSigmaZ +
                                            R"(, "samples": [[[0.7071067811865476,0],[0.7071067811865476,0]], [[1,0],[0,0]]]})");
  int code = -1;
  const json r = run_json(job, code);
  CHECK(code == 0);
  CHECK(r["results"][0]["tag"] == "Null");
  CHECK(r["results"][1]["tag"] == "Positive");
  CHECK(r["command"] == "classify");
  CHECK(r["inputs_digest"].get<std::string>().size() == 64);
  CHECK(r["tolerance"]["null_tol"] == 1e-9);
  CHECK(r.contains("versions"));
}

TEST_CASE("cli triangle on the worked example") {
  TempDir dir;
  ggp::cli::JobSpec job;
  job.command = "triangle";
  std::ostringstream in;
  in.precision(17);
  in << "{" << kSigmaZ << R"(, "samples": [[[1,0],[0,0]], [[)" << std::cosh(1.0) << ",0],["
     << std::sinh(1.0) << ",0]], [[" << std::cosh(1.0) << ",0],[0," << std::sinh(1.0) << "]]]}";
  job.input_path = dir.write("tri.json", in.str());
  int code = -1;
  const json r = run_json(job, code);
  CHECK(code == 0);
  const double th = std::tanh(1.0);
  CHECK(r["results"][0]["value"].get<double>() == doctest::Approx(-std::atan(th * th)).epsilon(1e-13));
  CHECK(r["results"][0]["method"] == "three_point");
}

TEST_CASE("cli phase reports every method") {
  TempDir dir;
  std::ostringstream in;
  in.precision(17);
  in << "{" << kSigmaZ << R"(, "closed": true, "samples": [)";
  const int K = 400;
  for (int k = 0; k < K; ++k) {
    const double s = 2 * test::pi * (k % (K - 1)) / (K - 1);
    in << (k ? "," : "") << "[[" << std::cosh(0.8) << ",0],[" << std::sinh(0.8) * std::cos(s) << ","
       << std::sinh(0.8) * std::sin(s) << "]]";
  }
  in << "]}";
  ggp::cli::JobSpec job;
  job.command = "phase";
  job.input_path = dir.write("loop.json", in.str());
  job.output_path = (dir.path / "out.json").string();
  std::ostringstream sink;
  CHECK(ggp::cli::run(job, sink) == 0);
  const json r = json::parse(slurp(job.output_path));
  REQUIRE(r["results"].size() == 3);
  const double exact = -2 * test::pi * std::sinh(0.8) * std::sinh(0.8);
  for (const json& m : r["results"]) {
    CHECK(ggp::angle_distance(m["value"].get<double>(), exact) < 1e-3);
    CHECK(m.contains("estimated_error"));
  }
}

TEST_CASE("cli exit codes and diagnostics") {
  TempDir dir;
  ggp::cli::JobSpec job;
  int code = -1;

  job.command = "classify";
  job.input_path = dir.write("bad.json", "{\"observable\": {\"matrix\": [[[1,0],[0,0]],\n[[0,0],[-1,0]]]},\n\"samples\": [}");
  json r = run_json(job, code);
  CHECK(code == 2);
  CHECK(r["errors"][0]["message"].get<std::string>().find(":3:") != std::string::npos);

  job.input_path = dir.write("field.json", std::string("{") + kSigmaZ + R"(, "samples": [[[1,0],[0,"x"]]]})");
  r = run_json(job, code);
  CHECK(code == 2);
  CHECK(r["errors"][0]["message"].get<std::string>().find("samples[0][1][1]") != std::string::npos);

  job.input_path = dir.write("missing.json", R"({"samples": []})");
  r = run_json(job, code);
  CHECK(code == 2);
  CHECK(r["errors"][0]["message"].get<std::string>().find("observable") != std::string::npos);

  job.command = "triangle";
  job.input_path = dir.write("null.json", std::string("{") + kSigmaZ +
                                              R"(, "samples": [[[1,0],[0,0]], [[1,0],[1,0]], [[1,0],[0,0]]]})");
  r = run_json(job, code);
  CHECK(code == 3);
  CHECK(r["errors"][0]["kind"] == "numerical");
  CHECK(r["errors"][0]["message"].get<std::string>().find("samples[1]") != std::string::npos);

  job.input_path = (dir.path / "does_not_exist.json").string();
  run_json(job, code);
  CHECK(code == 2);

  job = {};
  job.command = "stokes";
  job.preset = "torus";
  run_json(job, code);
  CHECK(code == 2);

  job = {};
  job.command = "metric-grid";
  job.sign = 3;
  run_json(job, code);
  CHECK(code == 2);

  job = {};
  job.command = "frobnicate";
  run_json(job, code);
  CHECK(code == 2);
}

TEST_CASE("cli metric-grid writes the CSV table") {
  TempDir dir;
  ggp::cli::JobSpec job;
  job.command = "metric-grid";
  job.resolution = 4;
  job.output_path = (dir.path / "grid.json").string();
  std::ostringstream sink;
  REQUIRE(ggp::cli::run(job, sink) == 0);
  CHECK(ggp::cli::csv_path_for(job.output_path) == (dir.path / "grid.csv").string());
  CHECK(ggp::cli::csv_path_for("report") == "report.csv");
  const std::string csv = slurp((dir.path / "grid.csv").string());
  CHECK(csv.rfind("theta,phi,re_z,im_z,potential,g11_re,f11_im\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);

  // Rows at the chart singularity are flagged, not fatal.
  job.input_path = dir.write("range.json", R"({"theta": [1.0, 40.0]})");
  job.resolution = 2;
  REQUIRE(ggp::cli::run(job, sink) == 0);
  const json r = json::parse(slurp(job.output_path));
  CHECK(r["results"][0]["singular_rows"] == json::array({2, 3}));
  CHECK(slurp((dir.path / "grid.csv").string()).find("nan") != std::string::npos);
}

TEST_CASE("cli stokes presets") {
  ggp::cli::JobSpec job;
  job.command = "stokes";
  job.preset = "bloch-octant";
  job.resolution = 32;
  int code = -1;
  json r = run_json(job, code);
  CHECK(code == 0);
  CHECK(r["results"][0]["gap"].get<double>() < 1e-3);
  job.preset = "hyperboloid-cap";
  job.radius = 0.5;
  r = run_json(job, code);
  CHECK(code == 0);
  CHECK(r["results"][0]["r"] == 0.5);
}

TEST_CASE("cli verify passes and is deterministic") {
  ggp::cli::JobSpec job;
  job.command = "verify";
  std::ostringstream a, b;
  CHECK(ggp::cli::run(job, a) == 0);
  CHECK(ggp::cli::run(job, b) == 0);
  CHECK(a.str() == b.str());
  const json r = json::parse(a.str());
  CHECK(r["results"].size() == 9);
  for (const json& s : r["results"]) CHECK(s["passed"] == true);
  job.seed = 7;
  std::ostringstream c;
  CHECK(ggp::cli::run(job, c) == 0);
  CHECK(c.str() != a.str());
}

TEST_CASE("cli verify fails with exit 4 when a suite misses its threshold") {
  ggp::cli::JobSpec job;
  job.command = "verify";
  job.tol.fd_step = 1e-1;  // coarse differences break the finite-difference suite
  std::ostringstream out;
  CHECK(ggp::cli::run(job, out) == 4);
}
