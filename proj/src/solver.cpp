#include "gip/solver.hpp"

#include <chrono>
#include <cmath>
#include <utility>

#include "gip/potentials.hpp"

namespace gip {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Solution: return "Solution";
    case SolveStatus::NoSolution: return "NoSolution";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::InvalidInput: return "InvalidInput";
    case SolveStatus::Ambiguous: return "Ambiguous";
    case SolveStatus::ConcentratedMu: return "ConcentratedMu";
  }
  return "Unknown";
}

int exit_code_for(SolveStatus status) {
  switch (status) {
    case SolveStatus::Solution: return 0;
    case SolveStatus::NoSolution: return 2;
    case SolveStatus::Infeasible: return 3;
    case SolveStatus::InvalidInput: return 4;
    case SolveStatus::Ambiguous: return 5;
    case SolveStatus::ConcentratedMu: return 6;
  }
  return 4;
}

namespace {

class Stopwatch {
 public:
  Stopwatch(bool enabled, SolveDiagnostics& diag)
      : enabled_(enabled), diag_(diag) {}

  template <typename F>
  auto time(const char* label, F&& f) {
    if (!enabled_) return f();
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    const auto stop = std::chrono::steady_clock::now();
    diag_.timings_ms.emplace_back(
        label,
        std::chrono::duration<double, std::milli>(stop - start).count());
    return result;
  }

 private:
  bool enabled_;
  SolveDiagnostics& diag_;
};

}  // namespace

SolveReport solve_instance(const Instance& inst, const Tolerances& tol,
                           const SolveOptions& opts) {
  tol.check();
  SolveReport report;
  Stopwatch watch(opts.collect_timings, report.diagnostics);

  auto witness = watch.time("concentration", [&] {
    return is_concentrated_on_closed_hemisphere(inst.mu.dirs, tol);
  });
  if (witness) {
    report.status = SolveStatus::ConcentratedMu;
    report.certificates.hemisphere_witness = std::move(*witness);
    return report;
  }

  WeakAleksandrovResult weak = watch.time(
      "feasibility", [&] { return check_weak_aleksandrov(inst, tol); });
  if (!weak.holds) {
    report.status = SolveStatus::Infeasible;
    report.certificates.violating_subset = std::move(weak.violating_subset);
    return report;
  }

  MaximizerResult max =
      watch.time("maximize", [&] { return maximize_assignment(inst, tol); });
  report.assignment = max.best;
  report.value = max.value;

  UniquenessResult uniq = watch.time(
      "uniqueness", [&] { return uniqueness_certificate(inst, max.best, tol); });
  report.diagnostics.ambiguity_gap = uniq.gap;
  if (uniq.kind == UniquenessKind::NonUnique) {
    report.status = SolveStatus::NoSolution;
    report.certificates.alternative = std::move(uniq.alternative);
    try {
      report.certificates.loop =
          loop_from_cycle_certificate(inst, max.best, *uniq.cycle, tol);
    } catch (const Error&) {
      // The tie is genuine even when its loop fails to close numerically.
    }
    return report;
  }
  if (uniq.kind == UniquenessKind::AmbiguousWithinTolerance) {
    report.status = SolveStatus::Ambiguous;
    return report;
  }

  StrictSolveResult strict = watch.time("potentials", [&] {
    return solve_strict_system(build_strict_system(inst, max.best, tol), tol);
  });
  if (auto* cert = std::get_if<NegativeCycleCertificate>(&strict)) {
    // A unique maximizer whose strict system is infeasible sits on a
    // structural tie: surface it as NoSolution when the witness cycle maps
    // back to a closed loop, otherwise stay within the ambiguity band.
    const StrictSystem sys = build_strict_system(inst, max.best, tol);
    try {
      AssignmentCycle cycle = cycle_from_negative_cycle(sys, *cert);
      report.certificates.loop =
          loop_from_cycle_certificate(inst, max.best, cycle, tol);
      report.certificates.alternative = apply_cycle(max.best, cycle);
      report.status = SolveStatus::NoSolution;
    } catch (const Error&) {
      report.status = SolveStatus::Ambiguous;
      report.diagnostics.ambiguity_gap = cert->bound_sum;
    }
    return report;
  }

  Potentials& pot = std::get<Potentials>(strict);
  report.alphas = pot.alphas;
  report.diagnostics.eps_used = pot.eps_used;

  VerificationReport verify = watch.time("verify", [&] {
    Polytope poly = Polytope::make(inst.mu.dirs, pot.alphas, tol);
    return verify_solution(inst, poly, max.best, tol);
  });
  report.diagnostics.min_margin = verify.min_margin;
  report.diagnostics.phi_gap = verify.phi_gap;
  report.status = verify.ok ? SolveStatus::Solution : SolveStatus::Ambiguous;
  return report;
}

}  // namespace gip
