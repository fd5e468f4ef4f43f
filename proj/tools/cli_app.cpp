#include "cli_app.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ggp/errors.hpp"
#include "ggp/holonomy.hpp"
#include "ggp/projective_kahler.hpp"
#include "ggp/ray_classification.hpp"
#include "ggp/surface_integrator.hpp"

namespace ggp::cli {
namespace {

using nlohmann::json;

struct Report {
  json results = json::array();
  json errors = json::array();
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
    throw ValidationError(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                          ": malformed JSON");
  }
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError("field '" + where + key + "': missing");
  }
  return obj.at(key);
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ValidationError("field '" + where + "': expected a number");
  return j.get<double>();
}

Complex complex_of(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    throw ValidationError("field '" + where + "': expected [re, im] pair");
  }
  return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
}

StateVector vector_of(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ValidationError("field '" + where + "': expected a list of [re, im]");
  StateVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_of(j[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

Observable observable_of(const json& doc, const Tolerance& tol) {
  const json& m = field(field(doc, "observable", ""), "matrix", "observable.");
  if (!m.is_array() || m.empty()) throw ValidationError("field 'observable.matrix': expected rows");
  const auto n = static_cast<Eigen::Index>(m.size());
  ComplexMatrix M(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::string where = "observable.matrix[" + std::to_string(i) + "]";
    const StateVector row = vector_of(m[i], where);
    if (row.size() != n) throw ValidationError("field '" + where + "': row length differs from row count");
    M.row(i) = row.transpose();
  }
  return eigendecompose(M, tol);
}

DiscreteCurve curve_of(const json& doc) {
  const json& s = field(doc, "samples", "");
  if (!s.is_array()) throw ValidationError("field 'samples': expected a list of states");
  DiscreteCurve c;
  for (std::size_t k = 0; k < s.size(); ++k) {
    c.samples.push_back(vector_of(s[k], "samples[" + std::to_string(k) + "]"));
  }
  if (doc.contains("closed")) {
    if (!doc["closed"].is_boolean()) throw ValidationError("field 'closed': expected true or false");
    c.closed = doc["closed"].get<bool>();
  }
  if (doc.contains("params")) {
    const json& p = doc["params"];
    if (!p.is_array()) throw ValidationError("field 'params': expected a list of numbers");
    for (std::size_t k = 0; k < p.size(); ++k) c.params.push_back(number(p[k], "params[" + std::to_string(k) + "]"));
  }
  return c;
}

json phase_json(const PhaseResult& r) {
  return {{"method", to_string(r.method)},
          {"value", r.gamma},
          {"winding", r.winding},
          {"estimated_error", r.estimated_error}};
}

void classify_cmd(const json& doc, const Tolerance& tol, Report& rep) {
  const Observable O = observable_of(doc, tol);
  const DiscreteCurve c = curve_of(doc);
  for (std::size_t k = 0; k < c.samples.size(); ++k) {
    const StateVector& psi = c.samples[k];
    require_dim(psi, O, ("samples[" + std::to_string(k) + "]").c_str());
    const ONormClass cls = classify(psi, O, tol);
    rep.results.push_back({{"sample", k},
                           {"tag", to_string(cls.tag)},
                           {"raw_value", cls.raw_value},
                           {"quadric_residual", quadric_residual(psi, O)}});
  }
  if (O.degenerate()) rep.results.push_back({{"note", "observable spectrum is degenerate"}});
}

void phase_cmd(const json& doc, const Tolerance& tol, Report& rep) {
  const Observable O = observable_of(doc, tol);
  const DiscreteCurve c = curve_of(doc);
  rep.results.push_back(phase_json(loop_phase(c, O, tol)));
  rep.results.push_back(phase_json(discrete_pancharatnam(normalize_curve(c, O, tol), O, tol)));
  // The chart method needs the last eigen-component nonzero along the curve;
  // its failure is reported without discarding the other results.
  try {
    rep.results.push_back(phase_json(chart_loop_phase(c, O, tol)));
  } catch (const NumericalError& e) {
    rep.errors.push_back({{"method", "chart_integral"}, {"kind", "numerical"}, {"message", e.what()}});
  }
}

void triangle_cmd(const json& doc, const Tolerance& tol, Report& rep) {
  const Observable O = observable_of(doc, tol);
  const DiscreteCurve c = curve_of(doc);
  if (c.samples.size() != 3) throw ValidationError("field 'samples': triangle needs exactly 3 states");
  std::vector<RayPoint> r;
  for (std::size_t k = 0; k < 3; ++k) {
    try {
      r.push_back(ray_of(normalize_o(c.samples[k], O, tol)));
    } catch (const NullStateError& e) {
      throw NullStateError("samples[" + std::to_string(k) + "]: " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError("samples[" + std::to_string(k) + "]: " + e.what());
    }
  }
  rep.results.push_back(phase_json(three_point_phase(r[0], r[1], r[2], O, tol)));
}

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

void metric_grid_cmd(const json& doc, const JobSpec& job, Report& rep) {
  TwoStateGridSpec spec;
  spec.sign = job.sign;
  if (job.resolution) spec.resolution = *job.resolution;
  auto range = [&](const char* key, double& lo, double& hi) {
    if (!doc.is_object() || !doc.contains(key)) return;
    const json& r = doc[key];
    if (!r.is_array() || r.size() != 2) {
      throw ValidationError(std::string("field '") + key + "': expected [min, max]");
    }
    lo = number(r[0], std::string(key) + "[0]");
    hi = number(r[1], std::string(key) + "[1]");
  };
  range("theta", spec.theta_min, spec.theta_max);
  range("phi", spec.phi_min, spec.phi_max);

  const std::vector<TwoStateRow> rows = two_state_metric_grid(spec, job.tol);
  std::ostringstream csv;
  csv << "theta,phi,re_z,im_z,potential,g11_re,f11_im\n";
  json singular = json::array();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const TwoStateRow& r = rows[k];
    csv << csv_number(r.theta) << ',' << csv_number(r.phi) << ',' << csv_number(r.z.real()) << ','
        << csv_number(r.z.imag()) << ',' << csv_number(r.potential) << ','
        << csv_number(r.g11_re) << ',' << csv_number(r.f11_im) << '\n';
    if (r.singular) singular.push_back(k);
  }
  json grid = {{"sign", spec.sign},
               {"resolution", spec.resolution},
               {"theta", {spec.theta_min, spec.theta_max}},
               {"phi", {spec.phi_min, spec.phi_max}},
               {"rows", rows.size()},
               {"singular_rows", singular}};
  if (!job.output_path.empty()) {
    const std::string path = csv_path_for(job.output_path);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot write '" + path + "'");
    f << csv.str();
    grid["csv"] = path;
  } else {
    grid["csv_text"] = csv.str();
  }
  rep.results.push_back(grid);
}

void stokes_cmd(const json& doc, const JobSpec& job, Report& rep) {
  std::string preset = job.preset;
  double radius = job.radius;
  if (doc.is_object() && doc.contains("preset")) {
    if (!doc["preset"].is_string()) throw ValidationError("field 'preset': expected a string");
    preset = doc["preset"].get<std::string>();
  }
  if (doc.is_object() && doc.contains("r")) radius = number(doc["r"], "r");
  const int M = job.resolution.value_or(64);
  if (M < 8) throw ValidationError("--resolution: stokes needs at least 8 cells per side");

  SurfaceMesh mesh;
  RealVector ev(2);
  if (preset == "hyperboloid-cap") {
    mesh = hyperboloid_cap(radius, M);
    ev << 1.0, -1.0;
  } else if (preset == "bloch-octant") {
    mesh = bloch_octant(M);
    ev << 1.0, 1.0;
  } else {
    throw ValidationError("field 'preset': unknown preset '" + preset +
                          "' (expected hyperboloid-cap or bloch-octant)");
  }
  const Observable O = Observable::diagonal(ev, job.tol);
  const StokesReport s = stokes_report(mesh, O, job.tol);
  const StokesStudy st = stokes_study(mesh, {M / 4, M / 2, M}, O, job.tol);
  rep.results.push_back({{"preset", preset},
                         {"resolution", M},
                         {"loop", phase_json(s.loop)},
                         {"surface", phase_json(s.surface)},
                         {"gap", s.gap},
                         {"order", s.order},
                         {"study", {{"resolutions", st.resolutions},
                                    {"gaps", st.gaps},
                                    {"fitted_order", st.fitted_order}}}});
  if (preset == "hyperboloid-cap") rep.results.back()["r"] = radius;
}

bool verify_cmd(const JobSpec& job, Report& rep) {
  bool all = true;
  for (const verify::SuiteResult& s : verify::run_all(job.seed, job.tol)) {
    json values = json::object();
    for (const auto& [k, v] : s.values) values[k] = v;
    rep.results.push_back({{"suite", s.name},
                           {"passed", s.passed},
                           {"cases", s.cases},
                           {"max_error", s.max_error},
                           {"threshold", s.threshold},
                           {"values", values},
                           {"detail", s.detail}});
    all = all && s.passed;
  }
  return all;
}

std::string job_descriptor(const JobSpec& job) {
  std::ostringstream os;
  os << std::setprecision(17) << job.command << '|' << job.tol.eq_tol << '|' << job.tol.null_tol
     << '|' << job.tol.fd_step << '|' << job.seed << '|' << job.resolution.value_or(-1) << '|'
     << job.sign << '|' << job.preset << '|' << job.radius;
  return os.str();
}

}  // namespace

std::string csv_path_for(const std::string& output_path) {
  const std::string ext = ".json";
  if (output_path.size() > ext.size() &&
      output_path.compare(output_path.size() - ext.size(), ext.size(), ext) == 0) {
    return output_path.substr(0, output_path.size() - ext.size()) + ".csv";
  }
  return output_path + ".csv";
}

int run(const JobSpec& job, std::ostream& out) {
  Report rep;
  int code = kOk;
  std::string input_text;
  try {
    job.tol.validate();
    if (job.sign != 1 && job.sign != -1) throw ValidationError("--sign: must be +1 or -1");
    if (job.resolution && *job.resolution < 2) throw ValidationError("--resolution: must be at least 2");

    json doc;
    const bool needs_input = job.command == "classify" || job.command == "phase" || job.command == "triangle";
    if (!job.input_path.empty()) {
      input_text = read_file(job.input_path);
      doc = parse_json(input_text, job.input_path);
    } else if (needs_input) {
      throw ValidationError("--input: required for " + job.command);
    }

    if (job.command == "classify") classify_cmd(doc, job.tol, rep);
    else if (job.command == "phase") phase_cmd(doc, job.tol, rep);
    else if (job.command == "triangle") triangle_cmd(doc, job.tol, rep);
    else if (job.command == "metric-grid") metric_grid_cmd(doc, job, rep);
    else if (job.command == "stokes") stokes_cmd(doc, job, rep);
    else if (job.command == "verify") code = verify_cmd(job, rep) ? kOk : kVerifyFailed;
    else throw ValidationError("unknown command '" + job.command + "'");
  } catch (const ValidationError& e) {
    rep.errors.push_back({{"kind", "validation"}, {"message", e.what()}});
    code = kValidation;
  } catch (const NumericalError& e) {
    rep.errors.push_back({{"kind", "numerical"}, {"message", e.what()}});
    code = kNumerical;
  }

  json report = {
      {"command", job.command},
      {"inputs_digest", sha256_hex(input_text + "\n" + job_descriptor(job))},
      {"results", rep.results},
      {"errors", rep.errors},
      {"versions",
       {{"ggphase", GGP_VERSION},
        {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) +
                      "." + std::to_string(EIGEN_MINOR_VERSION)},
        {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                              std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                              std::to_string(NLOHMANN_JSON_VERSION_PATCH)}}},
      {"tolerance",
       {{"eq_tol", job.tol.eq_tol}, {"null_tol", job.tol.null_tol}, {"fd_step", job.tol.fd_step}}},
      {"seed", job.seed}};

  const std::string text = report.dump(2) + "\n";
  if (job.output_path.empty()) {
    out << text;
  } else {
    std::ofstream f(job.output_path, std::ios::binary);
    if (!f) {
      out << text;
      return kValidation;
    }
    f << text;
  }
  return code;
}

}  // namespace ggp::cli
