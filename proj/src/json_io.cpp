#include "gip/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gip {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(e.what());
  }
}

Vec parse_dir(const Json& j, const char* where) {
  if (!j.is_array() || j.empty()) {
    fail(std::string(where) + ": \"dir\" must be a non-empty array");
  }
  Vec dir;
  for (const Json& c : j) {
    if (!c.is_number()) {
      fail(std::string(where) + ": direction coordinates must be numbers");
    }
    dir.push_back(c.get<double>());
  }
  return dir;
}

Json one_based(const std::vector<int>& idx) {
  Json out = Json::array();
  for (int i : idx) out.push_back(i + 1);
  return out;
}

Json finite_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json loop_to_json_value(const LoopCertificate& cert) {
  Json j;
  j["v_indices"] = one_based(cert.v_indices);
  j["u_indices"] = one_based(cert.u_indices);
  j["scalars"] = cert.scalars;
  return j;
}

}  // namespace

RawInstance parse_raw_instance(const std::string& json_text) {
  const Json j = parse_text(json_text);
  if (!j.is_object()) fail("instance must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    fail("instance needs an integer field \"n\"");
  }
  if (!j.contains("mu") || !j["mu"].is_array()) {
    fail("instance needs an array field \"mu\"");
  }
  if (!j.contains("lambda") || !j["lambda"].is_array()) {
    fail("instance needs an array field \"lambda\"");
  }

  RawInstance raw;
  raw.n = j["n"].get<int>();
  for (const Json& atom : j["mu"]) {
    if (!atom.is_object() || !atom.contains("dir")) {
      fail("every mu atom needs a \"dir\" field");
    }
    RawInstance::MuAtom out;
    out.dir = parse_dir(atom["dir"], "mu");
    if (atom.contains("weight")) {
      if (!atom["weight"].is_number()) fail("mu weights must be numbers");
      out.weight = atom["weight"].get<double>();
    }
    raw.mu.push_back(std::move(out));
  }
  for (const Json& atom : j["lambda"]) {
    if (!atom.is_object() || !atom.contains("dir")) {
      fail("every lambda atom needs a \"dir\" field");
    }
    raw.lambda.push_back(parse_dir(atom["dir"], "lambda"));
  }
  return raw;
}

RawInstance load_raw_instance(const std::string& path) {
  return parse_raw_instance(read_file(path));
}

std::string instance_to_json(const Instance& inst) {
  Json j;
  j["n"] = inst.n;
  j["mu"] = Json::array();
  for (int i = 0; i < inst.m(); ++i) {
    Json atom;
    atom["dir"] = inst.v(i);
    atom["weight"] = inst.mu.weights[i];
    j["mu"].push_back(std::move(atom));
  }
  j["lambda"] = Json::array();
  for (int i = 0; i < inst.k(); ++i) {
    Json atom;
    atom["dir"] = inst.u(i);
    j["lambda"].push_back(std::move(atom));
  }
  return j.dump(2) + "\n";
}

std::string report_to_json(const SolveReport& report) {
  Json j;
  j["status"] = to_string(report.status);
  j["assignment"] =
      report.assignment ? one_based(report.assignment->map) : Json(nullptr);
  j["alphas"] = report.alphas.empty() ? Json(nullptr) : Json(report.alphas);
  j["value"] = report.value ? Json(*report.value) : Json(nullptr);

  Json certs;
  certs["alternative"] = report.certificates.alternative
                             ? one_based(report.certificates.alternative->map)
                             : Json(nullptr);
  certs["loop"] = report.certificates.loop
                      ? loop_to_json_value(*report.certificates.loop)
                      : Json(nullptr);
  certs["violating_subset"] =
      report.certificates.violating_subset
          ? one_based(*report.certificates.violating_subset)
          : Json(nullptr);
  certs["hemisphere_witness"] =
      report.certificates.hemisphere_witness
          ? Json(report.certificates.hemisphere_witness->coords)
          : Json(nullptr);
  j["certificates"] = std::move(certs);

  Json diag;
  diag["min_margin"] = report.diagnostics.min_margin
                           ? finite_or_null(*report.diagnostics.min_margin)
                           : Json(nullptr);
  diag["phi_gap"] = report.diagnostics.phi_gap
                        ? finite_or_null(*report.diagnostics.phi_gap)
                        : Json(nullptr);
  diag["eps_used"] = report.diagnostics.eps_used ? Json(*report.diagnostics.eps_used)
                                                 : Json(nullptr);
  diag["ambiguity_gap"] = report.diagnostics.ambiguity_gap
                              ? finite_or_null(*report.diagnostics.ambiguity_gap)
                              : Json(nullptr);
  if (!report.diagnostics.timings_ms.empty()) {
    Json timings = Json::array();
    for (const auto& [stage, ms] : report.diagnostics.timings_ms) {
      Json entry;
      entry["stage"] = stage;
      entry["ms"] = ms;
      timings.push_back(std::move(entry));
    }
    diag["timings_ms"] = std::move(timings);
  }
  j["diagnostics"] = std::move(diag);
  return j.dump(2) + "\n";
}

SolutionFile parse_solution(const std::string& json_text) {
  const Json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("assignment") ||
      !j["assignment"].is_array() || !j.contains("alphas") ||
      !j["alphas"].is_array()) {
    fail("solution needs \"assignment\" and \"alphas\" arrays");
  }
  SolutionFile sol;
  for (const Json& entry : j["assignment"]) {
    if (!entry.is_number_integer() || entry.get<long long>() < 1) {
      fail("assignment entries are 1-based mu indices");
    }
    sol.assignment.map.push_back(entry.get<int>() - 1);
  }
  for (const Json& a : j["alphas"]) {
    if (!a.is_number()) fail("alphas must be numbers");
    sol.alphas.push_back(a.get<double>());
  }
  return sol;
}

SolutionFile load_solution(const std::string& path) {
  return parse_solution(read_file(path));
}

std::string feasibility_to_json(const FeasibilityReport& report) {
  Json j;
  j["weak_aleksandrov"] = report.weak.holds;
  j["violating_subset"] = report.weak.violating_subset
                              ? one_based(*report.weak.violating_subset)
                              : Json(nullptr);
  j["slack"] = report.weak.holds ? Json(nullptr) : Json(report.weak.slack);
  j["mu_concentrated"] = report.mu_concentrated;
  j["hemisphere_witness"] = report.hemisphere_witness
                                ? Json(report.hemisphere_witness->coords)
                                : Json(nullptr);
  j["alpha"] = report.alpha ? Json(*report.alpha) : Json(nullptr);
  return j.dump(2) + "\n";
}

std::string oracle_to_json(const OracleReport& report) {
  Json j;
  j["count"] = report.maximizers.size();
  j["value"] = report.value;
  j["top_gap"] = finite_or_null(report.top_gap);
  j["maximizers"] = Json::array();
  for (const Assignment& f : report.maximizers) {
    j["maximizers"].push_back(one_based(f.map));
  }
  return j.dump(2) + "\n";
}

std::string subset_check_to_json(const SubsetCheckReport& report) {
  Json j;
  j["holds"] = report.holds;
  j["worst_subset"] = one_based(report.worst_subset);
  j["worst_slack"] = report.worst_slack;
  return j.dump(2) + "\n";
}

std::string loops_to_json(const std::vector<LoopCertificate>& certs) {
  Json j;
  j["count"] = certs.size();
  j["loops"] = Json::array();
  for (const LoopCertificate& cert : certs) {
    j["loops"].push_back(loop_to_json_value(cert));
  }
  return j.dump(2) + "\n";
}

std::string generic_to_json(const GenericTally& tally) {
  Json j;
  j["trials"] = tally.trials;
  j["filtered"] = tally.filtered;
  j["solvable"] = tally.solvable;
  j["nonunique"] = tally.nonunique;
  j["infeasible"] = tally.infeasible;
  j["ambiguous"] = tally.ambiguous;
  return j.dump(2) + "\n";
}

std::string verification_to_json(const VerificationReport& report) {
  Json j;
  j["ok"] = report.ok;
  j["min_margin"] = finite_or_null(report.min_margin);
  j["phi_gap"] = finite_or_null(report.phi_gap);
  j["failed_lambda_index"] = report.failed_lambda_index
                                 ? Json(*report.failed_lambda_index + 1)
                                 : Json(nullptr);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
}

}  // namespace gip
