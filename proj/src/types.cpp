#include "gip/types.hpp"

#include <algorithm>
#include <cmath>

namespace gip {

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

double unit_dot(const Vec& a, const Vec& b) {
  return std::clamp(dot(a, b), -1.0, 1.0);
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUnitVector: return "NonUnitVector";
    case ErrorCode::DuplicateDirection: return "DuplicateDirection";
    case ErrorCode::MassMismatch: return "MassMismatch";
    case ErrorCode::NonIntegerWeight: return "NonIntegerWeight";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyMeasure: return "EmptyMeasure";
    case ErrorCode::NotWeakAleksandrov: return "NotWeakAleksandrov";
    case ErrorCode::CapacityViolation: return "CapacityViolation";
    case ErrorCode::InfeasibleTransport: return "InfeasibleTransport";
    case ErrorCode::NotOptimal: return "NotOptimal";
    case ErrorCode::ImproperAssignment: return "ImproperAssignment";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::NonPositiveDot: return "NonPositiveDot";
    case ErrorCode::NonPositiveScaling: return "NonPositiveScaling";
    case ErrorCode::ConcentratedDirections: return "ConcentratedDirections";
    case ErrorCode::InconsistentCertificate: return "InconsistentCertificate";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::AllNegativeInfinity: return "AllNegativeInfinity";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::CollisionAfterPerturbation: return "CollisionAfterPerturbation";
    case ErrorCode::UnsupportedDimensionForFacets: return "UnsupportedDimensionForFacets";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

void Tolerances::check() const {
  const double vals[] = {eps_unit,        eps_renorm,     eps_distinct,
                         eps_dot,         eps_tie,        eps_strict_init,
                         eps_strict_min,  eps_loop};
  for (double v : vals) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidSpec, "tolerances must be positive and finite");
    }
  }
  if (eps_strict_min >= eps_strict_init) {
    throw Error(ErrorCode::InvalidSpec, "eps_strict_min must be below eps_strict_init");
  }
}

UnitVec UnitVec::from_raw(Vec raw, const Tolerances& tol) {
  for (double c : raw) {
    if (!std::isfinite(c)) {
      throw Error(ErrorCode::NonUnitVector, "direction has non-finite coordinate");
    }
  }
  const double len = norm(raw);
  if (std::abs(len - 1.0) > tol.eps_renorm) {
    throw Error(ErrorCode::NonUnitVector,
                "direction norm " + std::to_string(len) + " deviates from 1");
  }
  for (double& c : raw) c /= len;
  return UnitVec{std::move(raw)};
}

long long DiscreteMeasure::total_mass() const {
  long long s = 0;
  for (long long w : weights) s += w;
  return s;
}

namespace {

void check_distinct(const std::vector<UnitVec>& dirs, const Tolerances& tol,
                    const char* label) {
  for (size_t a = 0; a < dirs.size(); ++a) {
    for (size_t b = a + 1; b < dirs.size(); ++b) {
      if (dot(dirs[a].coords, dirs[b].coords) >= 1.0 - tol.eps_distinct) {
        throw Error(ErrorCode::DuplicateDirection,
                    std::string(label) + " atoms " + std::to_string(a) + " and " +
                        std::to_string(b) + " share a direction");
      }
    }
  }
}

}  // namespace

Instance validate_instance(const RawInstance& raw, const Tolerances& tol) {
  tol.check();
  if (raw.n < 2) {
    throw Error(ErrorCode::DimensionTooSmall, "dimension must be at least 2");
  }
  if (raw.mu.empty() || raw.lambda.empty()) {
    throw Error(ErrorCode::EmptyMeasure, "both measures need at least one atom");
  }

  Instance inst;
  inst.n = raw.n;

  for (const auto& atom : raw.mu) {
    if (static_cast<int>(atom.dir.size()) != raw.n) {
      throw Error(ErrorCode::DimensionMismatch, "mu direction length differs from n");
    }
    if (!std::isfinite(atom.weight) || atom.weight != std::floor(atom.weight) ||
        atom.weight < 1.0) {
      throw Error(ErrorCode::NonIntegerWeight,
                  "mu weights must be integers >= 1");
    }
    inst.mu.dirs.push_back(UnitVec::from_raw(atom.dir, tol));
    inst.mu.weights.push_back(static_cast<long long>(atom.weight));
  }
  for (const auto& dir : raw.lambda) {
    if (static_cast<int>(dir.size()) != raw.n) {
      throw Error(ErrorCode::DimensionMismatch, "lambda direction length differs from n");
    }
    inst.lambda.dirs.push_back(UnitVec::from_raw(dir, tol));
    inst.lambda.weights.push_back(1);
  }

  check_distinct(inst.mu.dirs, tol, "mu");
  check_distinct(inst.lambda.dirs, tol, "lambda");

  if (inst.mu.total_mass() != inst.lambda.total_mass()) {
    throw Error(ErrorCode::MassMismatch,
                "sum of mu weights " + std::to_string(inst.mu.total_mass()) +
                    " differs from lambda atom count " +
                    std::to_string(inst.lambda.total_mass()));
  }
  return inst;
}

void check_capacity(const Instance& inst, const Assignment& f) {
  if (static_cast<int>(f.map.size()) != inst.k()) {
    throw Error(ErrorCode::CapacityViolation, "assignment length differs from k");
  }
  std::vector<long long> counts(inst.m(), 0);
  for (int i : f.map) {
    if (i < 0 || i >= inst.m()) {
      throw Error(ErrorCode::CapacityViolation, "assignment entry out of range");
    }
    ++counts[i];
  }
  for (int i = 0; i < inst.m(); ++i) {
    if (counts[i] != inst.mu.weights[i]) {
      throw Error(ErrorCode::CapacityViolation,
                  "atom " + std::to_string(i) + " receives " +
                      std::to_string(counts[i]) + " units, expected " +
                      std::to_string(inst.mu.weights[i]));
    }
  }
}

}  // namespace gip
