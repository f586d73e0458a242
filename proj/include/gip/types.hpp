#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gip {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);

// Dot product clamped to [-1, 1]. Unit vectors renormalized in floating point
// can produce |dot| marginally above 1; clamping keeps log(dot) <= 0.
double unit_dot(const Vec& a, const Vec& b);

enum class ErrorCode {
  NonUnitVector,
  DuplicateDirection,
  MassMismatch,
  NonIntegerWeight,
  DimensionTooSmall,
  DimensionMismatch,
  EmptyMeasure,
  NotWeakAleksandrov,
  CapacityViolation,
  InfeasibleTransport,
  NotOptimal,
  ImproperAssignment,
  NonFiniteInput,
  NonPositiveDot,
  NonPositiveScaling,
  ConcentratedDirections,
  InconsistentCertificate,
  SearchBudgetExceeded,
  TooLarge,
  AllNegativeInfinity,
  InvalidSpec,
  CollisionAfterPerturbation,
  UnsupportedDimensionForFacets,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Tolerances {
  double eps_unit = 1e-9;         // max norm deviation after renormalization
  double eps_renorm = 1e-6;       // inputs farther than this from unit length are rejected
  double eps_distinct = 1e-9;     // directions with dot > 1 - eps_distinct collide
  double eps_dot = 1e-12;         // "positive dot" means > eps_dot
  double eps_tie = 1e-9;          // relative tolerance for value ties
  double eps_strict_init = 1e-3;  // initial slack for strict difference constraints
  double eps_strict_min = 1e-12;  // give up halving below this
  double eps_loop = 1e-8;         // loop closure / perpendicularity tolerance

  void check() const;  // throws InvalidSpec on nonsense values
};

struct UnitVec {
  Vec coords;

  int dim() const { return static_cast<int>(coords.size()); }

  // Renormalizes to unit length. Throws NonUnitVector when the input norm
  // deviates from 1 by more than tol.eps_renorm, or is not finite.
  static UnitVec from_raw(Vec raw, const Tolerances& tol);
};

// Finite positive combination of point masses on the sphere. Weights stay
// integral; a measure with k unit weights models the equal-weight side.
struct DiscreteMeasure {
  std::vector<UnitVec> dirs;
  std::vector<long long> weights;

  int size() const { return static_cast<int>(dirs.size()); }
  long long total_mass() const;
};

// Validated problem instance: target measure mu (m atoms, integer weights)
// and source measure lambda (k atoms, all weights 1, sum of mu weights = k).
// Instances are immutable after validation.
struct Instance {
  int n = 0;
  DiscreteMeasure mu;
  DiscreteMeasure lambda;

  int m() const { return mu.size(); }
  int k() const { return lambda.size(); }

  const Vec& v(int i) const { return mu.dirs[i].coords; }
  const Vec& u(int j) const { return lambda.dirs[j].coords; }
};

// Pre-validation view of an instance, as parsed from JSON.
struct RawInstance {
  struct MuAtom {
    Vec dir;
    double weight = 1.0;
  };
  int n = 0;
  std::vector<MuAtom> mu;
  std::vector<Vec> lambda;
};

// Checks dimensions, renormalizes directions, rejects duplicates inside each
// measure, enforces integral positive mu weights and the mass balance
// sum(mu weights) == k.
Instance validate_instance(const RawInstance& raw, const Tolerances& tol);

// Total map from lambda indices to mu indices, preserving capacities:
// |f^-1(i)| == mu.weights[i] for all i. Entries are 0-based.
struct Assignment {
  std::vector<int> map;

  bool operator==(const Assignment&) const = default;
};

// Throws CapacityViolation unless f is a capacity-respecting total map.
void check_capacity(const Instance& inst, const Assignment& f);

}  // namespace gip
