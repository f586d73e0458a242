#pragma once

#include <string>

#include "gip/feasibility.hpp"
#include "gip/instances.hpp"
#include "gip/loops.hpp"
#include "gip/oracle.hpp"
#include "gip/solver.hpp"
#include "gip/types.hpp"

namespace gip {

// JSON wire formats. Instance files look like
//   { "n": 2,
//     "mu":     [ { "dir": [0.0, 1.0], "weight": 2 }, ... ],
//     "lambda": [ { "dir": [0.6, 0.8] }, ... ] }
// Reports index atoms 1-based to match the human-facing convention used by
// the CLI; the library API stays 0-based.

RawInstance parse_raw_instance(const std::string& json_text);
RawInstance load_raw_instance(const std::string& path);

std::string instance_to_json(const Instance& inst);

std::string report_to_json(const SolveReport& report);

// Solution payload accepted by verify/export: the "assignment" and "alphas"
// fields of a solve report (1-based assignment entries).
struct SolutionFile {
  Assignment assignment;
  std::vector<double> alphas;
};

SolutionFile parse_solution(const std::string& json_text);
SolutionFile load_solution(const std::string& path);

std::string feasibility_to_json(const FeasibilityReport& report);
std::string oracle_to_json(const OracleReport& report);
std::string subset_check_to_json(const SubsetCheckReport& report);
std::string loops_to_json(const std::vector<LoopCertificate>& certs);
std::string generic_to_json(const GenericTally& tally);
std::string verification_to_json(const VerificationReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace gip
