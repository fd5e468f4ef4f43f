#include <iostream>

#include <CLI11.hpp>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ggphase: generalized geometric phases and observable-weighted ray geometry"};
  app.require_subcommand(1);
  app.set_version_flag("--version", GGP_VERSION);

  ggp::cli::JobSpec job;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", job.input_path, "JSON input file")->check(CLI::ExistingFile);
    sub->add_option("--output", job.output_path, "report path (stdout when omitted)");
    sub->add_option("--seed", job.seed, "seed for randomized suites");
    sub->add_option("--eq-tol", job.tol.eq_tol, "equality tolerance");
    sub->add_option("--null-tol", job.tol.null_tol, "null-set band");
    sub->add_option("--fd-step", job.tol.fd_step, "finite-difference step");
    sub->add_option("--resolution", job.resolution, "grid or mesh resolution");
    sub->add_option("--sign", job.sign, "sheet sign, +1 or -1");
  };

  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {{"classify", "classify states by the sign of (psi, O psi)"},
                      {"phase", "phase of a closed curve by every available method"},
                      {"triangle", "three-point phase of three states"},
                      {"metric-grid", "two-state potential, metric and form over a grid (CSV)"},
                      {"stokes", "loop against surface integral for a preset surface"},
                      {"verify", "run the self-verification suites"}};
  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    common(sub);
    if (std::string(c.name) == "stokes") {
      sub->add_option("--preset", job.preset, "hyperboloid-cap or bloch-octant");
      sub->add_option("--radius", job.radius, "hyperboloid cap radius");
    }
    sub->callback([&job, sub] { job.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ggp::cli::kValidation;
  }
  return ggp::cli::run(job, std::cout);
}
