#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gip/types.hpp"

namespace gip {

// Convex polytope conv{alpha_i * v_i} with the origin interior. Construction
// validates alpha_i > 0 (finite) and that the directions are not concentrated
// on a closed hemisphere. Canonical solver output additionally has
// max alpha = 1; arbitrary positive scalings are accepted here because every
// operation below is scale-covariant.
struct Polytope {
  std::vector<UnitVec> dirs;
  std::vector<double> alphas;

  int size() const { return static_cast<int>(dirs.size()); }
  int dim() const { return dirs.empty() ? 0 : dirs[0].dim(); }

  static Polytope make(std::vector<UnitVec> dirs, std::vector<double> alphas,
                       const Tolerances& tol);
};

// Support function h_P(u) = max_i alpha_i (v_i . u).
double support_value(const Polytope& p, const UnitVec& u);

// Verdict of the radial Gauss assignment at direction u: either u lies
// interior to the normal cone of one vertex (index + margin to the
// second-best support score), or it ties several vertices within
// eps_tie * max(1, |top|).
struct ConeInterior {
  int index = 0;
  double margin = 0.0;
};
struct ConeBoundary {
  std::vector<int> tied;
};
using ConeVerdict = std::variant<ConeInterior, ConeBoundary>;

ConeVerdict radial_gauss_assignment(const Polytope& p, const UnitVec& u,
                                    const Tolerances& tol);

// Pushforward of lambda under the radial Gauss assignment: unit counts per
// mu direction, or the first lambda index hitting a cone boundary.
struct BoundaryHit {
  int lambda_index = 0;
};
using GaussImage = std::variant<std::vector<long long>, BoundaryHit>;

GaussImage gauss_image_measure(const Polytope& p, const DiscreteMeasure& lambda,
                               const Tolerances& tol);

struct VerificationReport {
  bool ok = false;
  double min_margin = 0.0;  // min over lambda atoms of the interior margin
  double phi_gap = 0.0;     // |Phi(P) + A(f)|
  std::optional<int> failed_lambda_index;
};

// Checks that every lambda atom lands interior to the cone of its assigned
// vertex and that the aggregated counts reproduce the mu weights exactly.
VerificationReport verify_solution(const Instance& inst, const Polytope& p,
                                   const Assignment& f, const Tolerances& tol);

// Variational objective: sum_i mu_i log alpha_i +
// sum_j min over positive scores of log(1 / (alpha_i v_i . u_j)).
// Returns +infinity when some lambda atom sees no positive score.
double compute_phi(const Polytope& p, const Instance& inst,
                   const Tolerances& tol);

// Vertex list (alpha_i v_i) plus, for dimension 3, hull facets as triangles
// with outward orientation (counterclockwise seen from outside), 0-based.
struct Geometry {
  std::vector<Vec> vertices;
  std::vector<std::array<int, 3>> facets;
};

// Facets are only available for n = 3 (UnsupportedDimensionForFacets
// otherwise); vertices are exported for any dimension.
Geometry export_geometry(const Polytope& p, bool with_facets);

// Wavefront OBJ text for n = 3: "v x y z" lines then 1-based "f a b c" lines.
std::string to_obj(const Geometry& g);

}  // namespace gip
