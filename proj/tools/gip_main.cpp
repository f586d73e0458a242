#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gip/json_io.hpp"
#include "gip/oracle.hpp"
#include "gip/potentials.hpp"

namespace {

bool log_enabled() {
  const char* env = std::getenv("GIP_LOG");
  return env != nullptr && *env != '\0' && std::string(env) != "0";
}

void log_line(const std::string& msg) {
  if (log_enabled()) std::cerr << "[gip] " << msg << "\n";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    gip::write_file(out_path, text);
  }
}

struct TolFlags {
  double tol_dot = 0.0;
  double tol_tie = 0.0;
  double eps_init = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--tol-dot", tol_dot,
                    "positivity threshold for dot products");
    cmd->add_option("--tol-tie", tol_tie, "relative tolerance for value ties");
    cmd->add_option("--eps-init", eps_init,
                    "initial slack for the strict potential system");
  }

  gip::Tolerances resolve() const {
    gip::Tolerances tol;
    if (tol_dot > 0.0) tol.eps_dot = tol_dot;
    if (tol_tie > 0.0) tol.eps_tie = tol_tie;
    if (eps_init > 0.0) tol.eps_strict_init = eps_init;
    tol.check();
    return tol;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Discrete Gauss image solver: decides whether a convex "
               "polytope pushes the equal-weight measure lambda onto the "
               "weighted measure mu, constructs it when it exists, and "
               "certifies the obstruction otherwise."};
  app.require_subcommand(1);

  std::string instance_path, solution_path, out_path, family, format = "json";
  TolFlags tol_flags;
  bool timings = false;
  int gen_n = 3, gen_m = 4, gen_l = 4, gen_loop_len = 4;
  std::uint64_t seed = 0;
  std::vector<long long> weights;
  int max_loop_len = 6;
  std::uint64_t budget = 10'000'000;
  double cap = 1e6;
  int trials = 100;

  CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("instance", instance_path, "instance JSON")->required();
  solve->add_option("-o,--output", out_path, "write the report here");
  solve->add_flag("--timings", timings, "collect per-stage timings");
  tol_flags.attach(solve);

  CLI::App* check = app.add_subcommand(
      "check", "feasibility diagnostics (weak Aleksandrov, concentration)");
  check->add_option("instance", instance_path, "instance JSON")->required();
  check->add_option("-o,--output", out_path, "write the report here");
  tol_flags.attach(check);

  CLI::App* verify = app.add_subcommand(
      "verify", "verify a solution file against an instance");
  verify->add_option("instance", instance_path, "instance JSON")->required();
  verify->add_option("solution", solution_path, "solution JSON")->required();
  verify->add_option("-o,--output", out_path, "write the report here");
  tol_flags.attach(verify);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustive maximizer enumeration (small instances)");
  oracle->add_option("instance", instance_path, "instance JSON")->required();
  oracle->add_option("-o,--output", out_path, "write the report here");
  oracle->add_option("--cap", cap, "enumeration cap");
  tol_flags.attach(oracle);

  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("family", family,
                  "triangle | simplex | polygon | random | loop")
      ->required();
  gen->add_option("-o,--output", out_path, "write the instance here");
  gen->add_option("--n", gen_n, "dimension");
  gen->add_option("--m", gen_m, "number of mu atoms (random)");
  gen->add_option("--l", gen_l, "polygon size");
  gen->add_option("--loop-len", gen_loop_len, "planted loop length");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--weights", weights, "mu weights (random)")->delimiter(',');
  tol_flags.attach(gen);

  CLI::App* loops = app.add_subcommand(
      "loops", "search for closed edge-normal loops");
  loops->add_option("instance", instance_path, "instance JSON")->required();
  loops->add_option("-o,--output", out_path, "write the loops here");
  loops->add_option("--max-loop-len", max_loop_len, "maximum loop length");
  loops->add_option("--budget", budget, "search expansion budget");
  tol_flags.attach(loops);

  CLI::App* generic = app.add_subcommand(
      "generic", "Monte Carlo solvability rate over random instances");
  generic->add_option("-o,--output", out_path, "write the tally here");
  generic->add_option("--n", gen_n, "dimension");
  generic->add_option("--m", gen_m, "number of mu atoms");
  generic->add_option("--trials", trials, "number of trials");
  generic->add_option("--seed", seed, "random seed");
  generic->add_option("--weights", weights, "mu weights")->delimiter(',');
  tol_flags.attach(generic);

  CLI::App* exp = app.add_subcommand(
      "export", "export solution geometry (JSON, or OBJ for n = 3)");
  exp->add_option("instance", instance_path, "instance JSON")->required();
  exp->add_option("solution", solution_path, "solution JSON")->required();
  exp->add_option("-o,--output", out_path, "write the geometry here");
  exp->add_option("--format", format, "json | obj")
      ->check(CLI::IsMember({"json", "obj"}));
  tol_flags.attach(exp);

  CLI11_PARSE(app, argc, argv);
  const gip::Tolerances tol = tol_flags.resolve();

  if (solve->parsed()) {
    const gip::Instance inst =
        gip::validate_instance(gip::load_raw_instance(instance_path), tol);
    gip::SolveOptions opts;
    opts.collect_timings = timings;
    const gip::SolveReport report = gip::solve_instance(inst, tol, opts);
    log_line(std::string("solve: ") + gip::to_string(report.status));
    emit(gip::report_to_json(report), out_path);
    return gip::exit_code_for(report.status);
  }

  if (check->parsed()) {
    const gip::Instance inst =
        gip::validate_instance(gip::load_raw_instance(instance_path), tol);
    const gip::FeasibilityReport report = gip::analyze_feasibility(inst, tol);
    emit(gip::feasibility_to_json(report), out_path);
    if (report.mu_concentrated) return 6;
    return report.weak.holds ? 0 : 3;
  }

  if (verify->parsed()) {
    const gip::Instance inst =
        gip::validate_instance(gip::load_raw_instance(instance_path), tol);
    const gip::SolutionFile sol = gip::load_solution(solution_path);
    const gip::Polytope poly =
        gip::Polytope::make(inst.mu.dirs, sol.alphas, tol);
    const gip::VerificationReport report =
        gip::verify_solution(inst, poly, sol.assignment, tol);
    emit(gip::verification_to_json(report), out_path);
    return report.ok ? 0 : 5;
  }

  if (oracle->parsed()) {
    const gip::Instance inst =
        gip::validate_instance(gip::load_raw_instance(instance_path), tol);
    const gip::OracleReport report = gip::oracle_maximizers(inst, tol, cap);
    emit(gip::oracle_to_json(report), out_path);
    return 0;
  }

  if (gen->parsed()) {
    gip::GenSpec spec;
    if (family == "triangle") {
      spec = gip::TriangleSpec{};
    } else if (family == "simplex") {
      spec = gip::SimplexSpec{gen_n};
    } else if (family == "polygon") {
      spec = gip::RegularPolygonSpec{gen_l};
    } else if (family == "random") {
      spec = gip::RandomSpec{gen_n, gen_m, weights, seed};
    } else if (family == "loop") {
      spec = gip::LoopSeededSpec{gen_n, gen_loop_len, seed};
    } else {
      std::cerr << "error: unknown family \"" << family << "\"\n";
      return 4;
    }
    const gip::Instance inst = gip::generate(spec, tol);
    emit(gip::instance_to_json(inst), out_path);
    return 0;
  }

  if (loops->parsed()) {
    const gip::Instance inst =
        gip::validate_instance(gip::load_raw_instance(instance_path), tol);
    gip::LoopSearchOptions opts;
    opts.max_len = max_loop_len;
    opts.max_expansions = budget;
    const std::vector<gip::LoopCertificate> found =
        gip::search_loops(inst, opts, tol);
    log_line("loops: found " + std::to_string(found.size()));
    emit(gip::loops_to_json(found), out_path);
    return 0;
  }

  if (generic->parsed()) {
    gip::GenericRateParams params;
    params.n = gen_n;
    params.m = gen_m;
    params.weights = weights;
    params.trials = trials;
    params.seed = seed;
    const gip::GenericTally tally = gip::generic_rate(params, tol);
    emit(gip::generic_to_json(tally), out_path);
    return 0;
  }

  if (exp->parsed()) {
    const gip::Instance inst =
        gip::validate_instance(gip::load_raw_instance(instance_path), tol);
    const gip::SolutionFile sol = gip::load_solution(solution_path);
    const gip::Polytope poly =
        gip::Polytope::make(inst.mu.dirs, sol.alphas, tol);
    if (format == "obj") {
      emit(gip::to_obj(gip::export_geometry(poly, true)), out_path);
    } else {
      const gip::Geometry geo = gip::export_geometry(poly, inst.n == 3);
      std::string text = "{\n  \"vertices\": [";
      // Geometry JSON is tiny; assembled by hand to keep full precision.
      char buf[64];
      for (size_t i = 0; i < geo.vertices.size(); ++i) {
        text += i == 0 ? "\n    [" : ",\n    [";
        for (size_t c = 0; c < geo.vertices[i].size(); ++c) {
          std::snprintf(buf, sizeof(buf), "%s%.17g", c == 0 ? "" : ", ",
                        geo.vertices[i][c]);
          text += buf;
        }
        text += "]";
      }
      text += "\n  ],\n  \"facets\": ";
      if (inst.n == 3) {
        text += "[";
        for (size_t f = 0; f < geo.facets.size(); ++f) {
          std::snprintf(buf, sizeof(buf), "%s[%d, %d, %d]",
                        f == 0 ? "" : ", ", geo.facets[f][0] + 1,
                        geo.facets[f][1] + 1, geo.facets[f][2] + 1);
          text += buf;
        }
        text += "]\n}\n";
      } else {
        text += "null\n}\n";
      }
      emit(text, out_path);
    }
    return 0;
  }

  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gip::Error& e) {
    std::cerr << "error: " << e.what() << " [" << gip::to_string(e.code())
              << "]\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
