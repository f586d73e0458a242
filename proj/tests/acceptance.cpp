// Acceptance gate: runs the numbered release criteria and prints one
// PASS/FAIL line each. Invoke with a criterion number (1..9) or without
// arguments to run all. Exit code 0 iff every requested criterion passes.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gip/assignment.hpp"
#include "gip/feasibility.hpp"
#include "gip/instances.hpp"
#include "gip/json_io.hpp"
#include "gip/loops.hpp"
#include "gip/oracle.hpp"
#include "gip/polytope.hpp"
#include "gip/potentials.hpp"
#include "gip/solver.hpp"
#include "json.hpp"

using namespace gip;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

const Tolerances kTol;

// Pinned acceptance tolerances and budgets.
constexpr double kValueTol = 1e-9;  // functional values, margins, equalities
constexpr double kLoopTol = 1e-8;   // loop scalars and perpendicularity
constexpr double kTriangleBudgetSec = 0.1;
constexpr double kPolygonBudgetSec = 1.0;
constexpr double kCorpusBudgetSec = 60.0;
constexpr double kGenericBudgetSec = 30.0;
constexpr int kCorpusTarget = 200;       // random instances for criterion 3
constexpr int kSubsetTarget = 100;       // instances for criterion 4
constexpr int kRandomAlphaTarget = 1000; // extra scalings for criterion 6
constexpr int kPerturbations = 20;       // per solved instance, criterion 7
constexpr double kStabilityFraction = 0.95;
constexpr double kGenericSolvable = 0.99;
constexpr int kGenericTrials = 500;
constexpr std::uint64_t kGenericSeed = 7;

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Problems {
 public:
  template <typename... Parts>
  void add(const Parts&... parts) {
    ++count_;
    if (count_ > 4) return;
    std::ostringstream out;
    (out << ... << parts);
    items_.push_back(out.str());
  }

  bool empty() const { return count_ == 0; }
  int count() const { return count_; }

  std::string join() const {
    std::ostringstream out;
    for (size_t i = 0; i < items_.size(); ++i) {
      if (i) out << "; ";
      out << items_[i];
    }
    if (count_ > static_cast<int>(items_.size())) {
      out << "; (+" << count_ - items_.size() << " more)";
    }
    return out.str();
  }

 private:
  int count_ = 0;
  std::vector<std::string> items_;
};

CriterionResult finish(const Problems& problems, const std::string& summary) {
  if (problems.empty()) return {true, summary};
  if (summary.empty()) return {false, problems.join()};
  return {false, summary + " | " + problems.join()};
}

// Scratch dot product so acceptance-side re-evaluations do not depend on the
// library's vector helpers.
double plain_dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (size_t c = 0; c < a.size(); ++c) s += a[c] * b[c];
  return s;
}

std::filesystem::path work_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "gip_acceptance";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

struct CliRun {
  int exit_code = -1;
  double seconds = 0.0;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd =
      std::string(GIP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const auto start = Clock::now();
  const int rc = std::system(cmd.c_str());
  CliRun run;
  run.seconds = seconds_since(start);
  if (rc != -1 && WIFEXITED(rc)) run.exit_code = WEXITSTATUS(rc);
  return run;
}

std::string stage_instance(const Instance& inst, const std::string& name) {
  const std::string path = (work_dir() / name).string();
  write_file(path, instance_to_json(inst));
  return path;
}

// ---------------------------------------------------------------------------
// Shared random corpus (criteria 3, 5, 6, 7, 9): small instances that pass
// the feasibility preconditions, each with its solve report and brute-force
// oracle report.

struct CorpusEntry {
  Instance inst;
  SolveReport report;
  OracleReport oracle;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  double build_seconds = 0.0;
};

Corpus build_corpus() {
  struct Config {
    int n;
    std::vector<long long> weights;
  };
  // All configurations keep m <= 5, k <= 7, weights <= 3. Dimension 4 needs
  // five atoms: fewer unit vectors always fit in a closed hemisphere.
  const std::vector<Config> configs = {
      {2, {1, 1, 1}},          {2, {2, 1, 1}},
      {2, {2, 2, 1}},          {2, {3, 2, 1}},
      {2, {2, 2, 2}},          {2, {1, 1, 1, 1}},
      {2, {2, 1, 1, 1}},       {2, {1, 1, 1, 1, 1}},
      {2, {2, 2, 1, 1, 1}},    {2, {3, 2, 2}},
      {3, {1, 1, 1, 1}},       {3, {2, 1, 1, 1}},
      {3, {3, 1, 1, 1}},       {3, {2, 2, 1, 1}},
      {3, {1, 1, 1, 1, 1}},    {3, {2, 1, 1, 1, 1}},
      {3, {2, 2, 1, 1, 1}},    {3, {3, 2, 1, 1}},
      {4, {1, 1, 1, 1, 1}},    {4, {2, 1, 1, 1, 1}},
      {4, {2, 2, 1, 1, 1}},    {4, {3, 1, 1, 1, 1}},
  };

  Corpus corpus;
  const auto start = Clock::now();
  for (int slot = 0; static_cast<int>(corpus.entries.size()) < kCorpusTarget &&
                     slot < 2000;
       ++slot) {
    const Config& cfg = configs[slot % configs.size()];
    for (std::uint64_t attempt = 0; attempt < 200; ++attempt) {
      RandomSpec spec;
      spec.n = cfg.n;
      spec.m = static_cast<int>(cfg.weights.size());
      spec.weights = cfg.weights;
      spec.seed = 1000003ull * slot + 97ull * attempt + 12345ull;
      Instance inst = generate(spec, kTol);
      if (is_concentrated_on_closed_hemisphere(inst.mu.dirs, kTol)) continue;
      if (!check_weak_aleksandrov(inst, kTol).holds) continue;
      CorpusEntry entry{std::move(inst), {}, {}};
      entry.report = solve_instance(entry.inst, kTol);
      entry.oracle = oracle_maximizers(entry.inst, kTol);
      corpus.entries.push_back(std::move(entry));
      break;
    }
  }
  corpus.build_seconds = seconds_since(start);
  return corpus;
}

const Corpus& corpus() {
  static const Corpus c = build_corpus();
  return c;
}

// ---------------------------------------------------------------------------

CriterionResult criterion1() {
  Problems problems;
  const Instance inst = generate(TriangleSpec{}, kTol);
  const std::string in = stage_instance(inst, "triangle.json");
  const std::string out = (work_dir() / "triangle_report.json").string();

  const CliRun run = run_cli("solve " + in + " -o " + out);
  if (run.exit_code != 0) {
    problems.add("solve exited ", run.exit_code, " (expected 0)");
    return finish(problems, "");
  }
  if (run.seconds >= kTriangleBudgetSec) {
    problems.add("runtime ", run.seconds, " s exceeds ", kTriangleBudgetSec);
  }

  const json rep = json::parse(read_file(out));
  if (rep.at("status") != "Solution") {
    problems.add("status ", rep.at("status").dump());
  }
  if (rep.at("assignment") != json::array({1, 2, 3})) {
    problems.add("assignment ", rep.at("assignment").dump(),
                 " is not the identity");
  }

  const SolutionFile sol = parse_solution(read_file(out));
  const Polytope poly = Polytope::make(inst.mu.dirs, sol.alphas, kTol);
  const VerificationReport ver =
      verify_solution(inst, poly, sol.assignment, kTol);
  if (!ver.ok) problems.add("verify_solution rejected the reported solution");
  if (std::abs(ver.min_margin - 1.5) > kValueTol) {
    problems.add("min_margin ", ver.min_margin, " != 1.5");
  }
  const double phi = compute_phi(poly, inst, kTol);
  const double value = assignment_value(inst, sol.assignment, kTol);
  if (std::abs(phi + value) > kValueTol) {
    problems.add("|phi + value| = ", std::abs(phi + value));
  }

  std::ostringstream summary;
  summary << "identity assignment, min_margin 1.5, |phi+A| <= 1e-9, "
          << run.seconds << " s";
  return finish(problems, summary.str());
}

CriterionResult criterion2() {
  Problems problems;
  std::ostringstream summary;
  summary << "per-l loop classes:";
  for (int l = 3; l <= 8; ++l) {
    const auto start = Clock::now();
    const Instance inst = generate(RegularPolygonSpec{l}, kTol);
    const std::string in =
        stage_instance(inst, "polygon" + std::to_string(l) + ".json");
    const CliRun run = run_cli("solve " + in);
    if (run.exit_code != 2) {
      problems.add("l=", l, ": solve exited ", run.exit_code, " (expected 2)");
    }

    const OracleReport oracle = oracle_maximizers(inst, kTol);
    std::vector<int> identity(l), shift(l);
    for (int t = 0; t < l; ++t) {
      identity[t] = t;
      shift[t] = (t + 1) % l;
    }
    std::set<std::vector<int>> maps;
    for (const Assignment& f : oracle.maximizers) maps.insert(f.map);
    if (maps != std::set<std::vector<int>>{identity, shift}) {
      problems.add("l=", l, ": oracle found ", maps.size(),
                   " maximizers instead of {identity, shift}");
    }
    if (l == 4 &&
        std::abs(oracle.value - (-2 * std::log(2.0))) > kValueTol) {
      problems.add("l=4: oracle value ", oracle.value, " != -2 ln 2");
    }

    LoopSearchOptions opts;
    opts.max_len = l;
    const std::vector<LoopCertificate> loops = search_loops(inst, opts, kTol);
    summary << " l" << l << "=" << loops.size();
    if (loops.size() != 1) {
      problems.add("l=", l, ": search_loops returned ", loops.size(),
                   " certificate classes (expected exactly 1)");
    } else {
      const LoopCertificate& cert = loops[0];
      if (static_cast<int>(cert.v_indices.size()) != l) {
        problems.add("l=", l, ": loop length ", cert.v_indices.size());
      }
      for (double s : cert.scalars) {
        if (std::abs(s - 1.0) > kLoopTol) {
          problems.add("l=", l, ": loop scalar ", s, " deviates from 1");
          break;
        }
      }
    }

    const double elapsed = seconds_since(start);
    if (elapsed >= kPolygonBudgetSec) {
      problems.add("l=", l, ": runtime ", elapsed, " s exceeds ",
                   kPolygonBudgetSec);
    }
  }
  return finish(problems, summary.str());
}

CriterionResult criterion3() {
  Problems problems;
  const Corpus& c = corpus();
  const auto start = Clock::now();
  if (static_cast<int>(c.entries.size()) < kCorpusTarget) {
    problems.add("corpus has only ", c.entries.size(), " instances");
  }

  int solutions = 0, ties = 0, ambiguous = 0;
  for (size_t idx = 0; idx < c.entries.size(); ++idx) {
    const CorpusEntry& e = c.entries[idx];
    const SolveReport& r = e.report;
    if (!r.value.has_value() || !r.assignment.has_value()) {
      problems.add("instance ", idx, ": solver reported ",
                   to_string(r.status), " on a prefiltered instance");
      continue;
    }
    if (std::abs(*r.value - e.oracle.value) > kValueTol) {
      problems.add("instance ", idx, ": value mismatch ",
                   std::abs(*r.value - e.oracle.value));
    }
    if (r.status == SolveStatus::Ambiguous) {
      ++ambiguous;  // inside the tie tolerance band: uniqueness not compared
      continue;
    }
    if (r.status == SolveStatus::Solution) {
      ++solutions;
      if (e.oracle.maximizers.size() != 1) {
        problems.add("instance ", idx, ": solver Unique but oracle found ",
                     e.oracle.maximizers.size(), " maximizers");
        continue;
      }
      if (!(e.oracle.maximizers[0] == *r.assignment)) {
        problems.add("instance ", idx, ": maximizer differs from oracle");
      }
      const Polytope poly = Polytope::make(e.inst.mu.dirs, r.alphas, kTol);
      const VerificationReport ver =
          verify_solution(e.inst, poly, *r.assignment, kTol);
      if (!ver.ok) {
        problems.add("instance ", idx, ": constructed polytope fails verify");
      }
    } else if (r.status == SolveStatus::NoSolution) {
      ++ties;
      if (e.oracle.maximizers.size() < 2) {
        problems.add("instance ", idx, ": solver NonUnique but oracle found ",
                     e.oracle.maximizers.size(), " maximizer");
      }
    } else {
      problems.add("instance ", idx, ": unexpected status ",
                   to_string(r.status));
    }
  }

  const double total = c.build_seconds + seconds_since(start);
  if (total >= kCorpusBudgetSec) {
    problems.add("total runtime ", total, " s exceeds ", kCorpusBudgetSec);
  }

  std::ostringstream summary;
  summary << c.entries.size() << " instances (" << solutions << " solved, "
          << ties << " ties, " << ambiguous << " ambiguous), values within "
          << "1e-9 of brute force, " << total << " s";
  return finish(problems, summary.str());
}

CriterionResult criterion4() {
  Problems problems;
  std::vector<Instance> instances;

  for (int idx = 0; idx < 60; ++idx) {
    RandomSpec spec;
    spec.n = 2 + idx % 3;
    spec.m = 2 + idx % 11;
    spec.weights.resize(spec.m);
    for (int i = 0; i < spec.m; ++i) spec.weights[i] = 1 + (idx + i) % 3;
    spec.seed = 9000 + idx;
    instances.push_back(generate(spec, kTol));
  }
  // Arc family: evenly spread mu against lambda packed into a short arc, so
  // the weak Aleksandrov condition usually fails with a nontrivial subset.
  for (int idx = 0; idx < 50; ++idx) {
    const int m = 3 + idx % 10;
    RawInstance raw;
    raw.n = 2;
    long long k = 0;
    for (int i = 0; i < m; ++i) {
      const double a = 2 * 3.14159265358979323846 * i / m;
      const long long w = 1 + (idx + i) % 2;
      raw.mu.push_back({{std::cos(a), std::sin(a)}, static_cast<double>(w)});
      k += w;
    }
    for (long long j = 0; j < k; ++j) {
      const double a = 1.0 + 0.4 * (j + 1.0) / (k + 1.0) + idx * 1e-4;
      raw.lambda.push_back({std::cos(a), std::sin(a)});
    }
    instances.push_back(validate_instance(raw, kTol));
  }

  if (static_cast<int>(instances.size()) < kSubsetTarget) {
    problems.add("only ", instances.size(), " instances built");
  }

  int failing = 0;
  for (size_t idx = 0; idx < instances.size(); ++idx) {
    const Instance& inst = instances[idx];
    const WeakAleksandrovResult flow = check_weak_aleksandrov(inst, kTol);
    const SubsetCheckReport oracle = oracle_weak_aleksandrov(inst, kTol);
    if (flow.holds != oracle.holds) {
      problems.add("instance ", idx, ": flow says ", flow.holds,
                   ", oracle says ", oracle.holds);
      continue;
    }
    if (flow.holds) continue;
    ++failing;
    if (!flow.violating_subset.has_value()) {
      problems.add("instance ", idx, ": failing verdict without a subset");
      continue;
    }
    if (flow.slack != oracle.worst_slack) {
      problems.add("instance ", idx, ": flow slack ", flow.slack,
                   " != oracle worst slack ", oracle.worst_slack);
    }
    // Re-evaluate the flow subset's slack from scratch: it must attain the
    // oracle's worst value, making it a genuine worst subset.
    long long covered = 0, demand = 0;
    for (int i : *flow.violating_subset) demand += inst.mu.weights[i];
    for (int j = 0; j < inst.k(); ++j) {
      for (int i : *flow.violating_subset) {
        if (plain_dot(inst.u(j), inst.v(i)) > kTol.eps_dot) {
          ++covered;
          break;
        }
      }
    }
    if (covered - demand != oracle.worst_slack) {
      problems.add("instance ", idx, ": flow subset re-evaluates to slack ",
                   covered - demand, " != ", oracle.worst_slack);
    }
  }
  if (failing == 0) {
    problems.add("no failing instance exercised the subset comparison");
  }

  std::ostringstream summary;
  summary << instances.size() << " instances, " << failing
          << " failing, verdicts and worst slacks all agree";
  return finish(problems, summary.str());
}

CriterionResult criterion5() {
  Problems problems;
  const Corpus& c = corpus();
  int solved_systems = 0, constraints_checked = 0;
  for (size_t idx = 0; idx < c.entries.size(); ++idx) {
    const CorpusEntry& e = c.entries[idx];
    if (!e.report.assignment.has_value()) continue;
    const StrictSystem sys =
        build_strict_system(e.inst, *e.report.assignment, kTol);
    const StrictSolveResult res = solve_strict_system(sys, kTol);
    const bool solved = std::holds_alternative<Potentials>(res);
    const bool unique = e.oracle.maximizers.size() == 1;
    if (solved != unique) {
      problems.add("instance ", idx, ": strict system ",
                   solved ? "solved" : "failed", " but oracle count ",
                   e.oracle.maximizers.size());
      continue;
    }
    if (!solved) continue;
    ++solved_systems;
    const Potentials& pot = std::get<Potentials>(res);
    for (const StrictConstraint& con : sys.constraints) {
      ++constraints_checked;
      if (!(pot.x[con.target] - con.bound - pot.eps_used >=
            pot.x[con.source])) {
        problems.add("instance ", idx, ": constraint via lambda atom ",
                     con.u_index, " has slack below eps_used");
      }
    }
  }
  std::ostringstream summary;
  summary << solved_systems << " systems solved iff oracle-unique, "
          << constraints_checked << " constraints hold with slack >= eps_used";
  return finish(problems, summary.str());
}

CriterionResult criterion6() {
  Problems problems;
  const Corpus& c = corpus();

  std::vector<const CorpusEntry*> solved;
  for (const CorpusEntry& e : c.entries) {
    if (e.report.status == SolveStatus::Solution) solved.push_back(&e);
  }
  if (solved.empty()) {
    problems.add("corpus contains no solved instance");
    return finish(problems, "");
  }

  long long pairs = 0, equalities = 0;
  auto check_pairs = [&](const CorpusEntry& e, const Polytope& poly) {
    const double phi = compute_phi(poly, e.inst, kTol);
    for_each_assignment(e.inst, [&](const Assignment& f) {
      const double value = assignment_value(e.inst, f, kTol);
      if (!std::isfinite(value)) return true;  // not a proper assignment
      const double excess = phi + value;       // <= 0 up to rounding
      const bool equal = std::abs(excess) <= kValueTol;
      const bool verified = verify_solution(e.inst, poly, f, kTol).ok;
      ++pairs;
      equalities += equal;
      if (excess > kValueTol) {
        problems.add("phi + A = ", excess, " above zero past tolerance");
      }
      if (equal != verified) {
        problems.add("equality/verification mismatch (phi+A = ", excess,
                     ", verified = ", verified, ")");
      }
      return problems.count() < 100;
    });
  };

  for (const CorpusEntry* e : solved) {
    check_pairs(*e, Polytope::make(e->inst.mu.dirs, e->report.alphas, kTol));
  }

  std::mt19937_64 rng(20250819);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int t = 0; t < kRandomAlphaTarget; ++t) {
    const CorpusEntry& e = *solved[t % solved.size()];
    std::vector<double> alphas(e.inst.m());
    for (double& a : alphas) a = std::exp(0.5 * normal(rng));
    check_pairs(e, Polytope::make(e.inst.mu.dirs, alphas, kTol));
  }

  std::ostringstream summary;
  summary << pairs << " (polytope, assignment) pairs (incl. "
          << kRandomAlphaTarget << " random scalings): phi + A <= 1e-9, "
          << "equality exactly on the " << equalities << " verified pairs";
  return finish(problems, summary.str());
}

CriterionResult criterion7() {
  Problems problems;
  const Corpus& c = corpus();
  long long total = 0, kept = 0;
  int instances = 0;
  for (size_t idx = 0; idx < c.entries.size(); ++idx) {
    const CorpusEntry& e = c.entries[idx];
    if (e.report.status != SolveStatus::Solution) continue;
    ++instances;
    if (!e.report.diagnostics.min_margin.has_value()) {
      problems.add("instance ", idx, ": solved without min_margin");
      continue;
    }
    const double magnitude = *e.report.diagnostics.min_margin / 10.0;
    if (!(magnitude > 0.0)) {
      problems.add("instance ", idx, ": nonpositive margin");
      continue;
    }
    for (int s = 0; s < kPerturbations; ++s) {
      ++total;
      try {
        const Instance moved =
            perturb(e.inst, magnitude, PerturbTarget::Both,
                    1000ull * idx + s, kTol);
        const SolveReport rep = solve_instance(moved, kTol);
        if (rep.status == SolveStatus::Solution &&
            rep.assignment == e.report.assignment) {
          ++kept;
        }
      } catch (const Error&) {
        // collision or validation failure: counts as not kept
      }
    }
  }
  if (total == 0) {
    problems.add("no solved instances to perturb");
    return finish(problems, "");
  }
  const double fraction = static_cast<double>(kept) / total;
  if (fraction < kStabilityFraction) {
    problems.add("only ", kept, "/", total,
                 " perturbations kept the solution");
  }
  std::ostringstream summary;
  summary << kept << "/" << total << " perturbations of " << instances
          << " solved instances kept status and assignment";
  return finish(problems, summary.str());
}

CriterionResult criterion8() {
  Problems problems;
  GenericRateParams params;
  params.n = 3;
  params.m = 5;
  params.trials = kGenericTrials;
  params.seed = kGenericSeed;
  const auto start = Clock::now();
  const GenericTally tally = generic_rate(params, kTol);
  const double elapsed = seconds_since(start);

  if (tally.trials != kGenericTrials) {
    problems.add("ran ", tally.trials, " trials");
  }
  if (tally.filtered == 0) {
    problems.add("no trial passed the feasibility filter");
  } else if (100ll * tally.solvable <
             static_cast<long long>(100 * kGenericSolvable) * tally.filtered) {
    problems.add("solvable ", tally.solvable, "/", tally.filtered,
                 " below the ", kGenericSolvable, " fraction");
  }
  if (tally.nonunique != 0) {
    problems.add(tally.nonunique, " filtered trials were NonUnique");
  }
  if (elapsed >= kGenericBudgetSec) {
    problems.add("runtime ", elapsed, " s exceeds ", kGenericBudgetSec);
  }

  std::ostringstream summary;
  summary << tally.solvable << "/" << tally.filtered
          << " filtered trials solvable, 0 nonunique, " << elapsed << " s";
  return finish(problems, summary.str());
}

CriterionResult criterion9() {
  Problems problems;

  struct TieCase {
    std::string label;
    const Instance* inst;
    const Assignment* best;
  };
  std::vector<Instance> polygon_store;
  std::vector<SolveReport> polygon_reports;
  for (int l = 3; l <= 8; ++l) {
    polygon_store.push_back(generate(RegularPolygonSpec{l}, kTol));
  }
  for (Instance& inst : polygon_store) {
    polygon_reports.push_back(solve_instance(inst, kTol));
  }

  std::vector<TieCase> cases;
  for (size_t i = 0; i < polygon_store.size(); ++i) {
    if (polygon_reports[i].status != SolveStatus::NoSolution) {
      problems.add("polygon l=", i + 3, " did not report NoSolution");
      continue;
    }
    cases.push_back({"polygon l=" + std::to_string(i + 3), &polygon_store[i],
                     &*polygon_reports[i].assignment});
  }
  const Corpus& c = corpus();
  for (size_t idx = 0; idx < c.entries.size(); ++idx) {
    const CorpusEntry& e = c.entries[idx];
    if (e.report.status != SolveStatus::NoSolution) continue;
    cases.push_back({"corpus instance " + std::to_string(idx), &e.inst,
                     &*e.report.assignment});
  }

  int converted = 0;
  for (const TieCase& tc : cases) {
    const Instance& inst = *tc.inst;
    AssignmentCycle cycle;
    const UniquenessResult uniq = uniqueness_certificate(inst, *tc.best, kTol);
    if (uniq.kind == UniquenessKind::NonUnique) {
      cycle = *uniq.cycle;
    } else {
      // NoSolution reached through an infeasible strict system: recover the
      // tie cycle from its negative-cycle witness instead.
      const StrictSystem sys = build_strict_system(inst, *tc.best, kTol);
      const StrictSolveResult res = solve_strict_system(sys, kTol);
      const auto* cert = std::get_if<NegativeCycleCertificate>(&res);
      if (cert == nullptr) {
        problems.add(tc.label, ": no tie cycle from either certificate path");
        continue;
      }
      cycle = cycle_from_negative_cycle(sys, *cert);
    }

    LoopCertificate loop;
    try {
      loop = loop_from_cycle_certificate(inst, *tc.best, cycle, kTol);
    } catch (const Error& err) {
      problems.add(tc.label, ": conversion failed (", err.what(), ")");
      continue;
    }
    ++converted;

    const int len = static_cast<int>(loop.v_indices.size());
    for (int t = 0; t < len; ++t) {
      const int tn = (t + 1) % len;
      const Vec& u = inst.u(loop.u_indices[t]);
      const Vec& a = inst.v(loop.v_indices[t]);
      const Vec& b = inst.v(loop.v_indices[tn]);
      double residual = 0.0;
      for (size_t comp = 0; comp < u.size(); ++comp) {
        residual += u[comp] * (loop.scalars[tn] * b[comp] -
                               loop.scalars[t] * a[comp]);
      }
      if (std::abs(residual) > kLoopTol) {
        problems.add(tc.label, ": segment ", t, " residual ",
                     std::abs(residual));
      }
    }

    const Assignment other = apply_cycle(*tc.best, cycle);
    const double va = assignment_value(inst, *tc.best, kTol);
    const double vb = assignment_value(inst, other, kTol);
    if (std::abs(va - vb) > len * kValueTol) {
      problems.add(tc.label, ": induced assignments differ by ",
                   std::abs(va - vb));
    }
  }

  std::ostringstream summary;
  summary << converted << "/" << cases.size()
          << " tie verdicts converted to loops; residuals <= 1e-8, induced "
          << "values equal within l*1e-9";
  return finish(problems, summary.str());
}

}  // namespace

int main(int argc, char** argv) {
  using Criterion = CriterionResult (*)();
  const Criterion criteria[9] = {criterion1, criterion2, criterion3,
                                 criterion4, criterion5, criterion6,
                                 criterion7, criterion8, criterion9};

  std::vector<int> to_run;
  if (argc < 2) {
    for (int i = 1; i <= 9; ++i) to_run.push_back(i);
  } else {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > 9) {
      std::fprintf(stderr, "usage: %s [criterion 1..9]\n", argv[0]);
      return 2;
    }
    to_run.push_back(n);
  }

  bool all_pass = true;
  for (int n : to_run) {
    CriterionResult result;
    try {
      result = criteria[n - 1]();
    } catch (const std::exception& e) {
      result = {false, std::string("unhandled exception: ") + e.what()};
    }
    std::printf("criterion %d: %s - %s\n", n, result.pass ? "PASS" : "FAIL",
                result.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && result.pass;
  }
  return all_pass ? 0 : 1;
}
