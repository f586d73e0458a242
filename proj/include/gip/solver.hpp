#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gip/assignment.hpp"
#include "gip/feasibility.hpp"
#include "gip/loops.hpp"
#include "gip/polytope.hpp"
#include "gip/types.hpp"

namespace gip {

enum class SolveStatus {
  Solution,       // exit 0: polytope constructed and verified
  NoSolution,     // exit 2: tied maximizers, certified by alternative / loop
  Infeasible,     // exit 3: weak Aleksandrov fails
  InvalidInput,   // exit 4: validation errors
  Ambiguous,      // exit 5: verdict within the tie tolerance band
  ConcentratedMu  // exit 6: mu lives on a closed hemisphere
};

const char* to_string(SolveStatus status);
int exit_code_for(SolveStatus status);

struct SolveCertificates {
  std::optional<Assignment> alternative;
  std::optional<LoopCertificate> loop;
  std::optional<std::vector<int>> violating_subset;
  std::optional<UnitVec> hemisphere_witness;
};

struct SolveDiagnostics {
  std::optional<double> min_margin;
  std::optional<double> phi_gap;
  std::optional<double> eps_used;
  std::optional<double> ambiguity_gap;
  std::vector<std::pair<std::string, double>> timings_ms;  // filled on request
};

struct SolveReport {
  SolveStatus status = SolveStatus::InvalidInput;
  std::optional<Assignment> assignment;
  std::vector<double> alphas;
  std::optional<double> value;
  SolveCertificates certificates;
  SolveDiagnostics diagnostics;
};

struct SolveOptions {
  bool collect_timings = false;
};

// Full decision pipeline: concentration check, weak Aleksandrov, functional
// maximization, uniqueness certificate, strict potentials, construction and
// verification. Never throws for mathematically meaningful outcomes; only
// malformed inputs surface as exceptions from validation.
SolveReport solve_instance(const Instance& inst, const Tolerances& tol,
                           const SolveOptions& opts = {});

}  // namespace gip
