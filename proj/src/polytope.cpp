#include "gip/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "detail/hull3.hpp"
#include "gip/assignment.hpp"
#include "gip/feasibility.hpp"

namespace gip {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Polytope Polytope::make(std::vector<UnitVec> dirs, std::vector<double> alphas,
                        const Tolerances& tol) {
  tol.check();
  if (dirs.empty()) {
    throw Error(ErrorCode::EmptyMeasure, "polytope needs at least one vertex");
  }
  if (dirs.size() != alphas.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "direction and scaling counts differ");
  }
  const int n = dirs[0].dim();
  for (const UnitVec& d : dirs) {
    if (d.dim() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "polytope directions have mixed dimensions");
    }
  }
  for (double a : alphas) {
    if (!std::isfinite(a)) {
      throw Error(ErrorCode::NonFiniteInput, "radial scaling is not finite");
    }
    if (a <= 0.0) {
      throw Error(ErrorCode::NonPositiveScaling,
                  "radial scalings must be positive");
    }
  }
  if (auto witness = is_concentrated_on_closed_hemisphere(dirs, tol)) {
    throw Error(ErrorCode::ConcentratedDirections,
                "vertex directions lie in a closed hemisphere, so the origin "
                "is not interior");
  }
  Polytope p;
  p.dirs = std::move(dirs);
  p.alphas = std::move(alphas);
  return p;
}

double support_value(const Polytope& p, const UnitVec& u) {
  if (u.dim() != p.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "support direction dimension differs from polytope");
  }
  double best = -kInf;
  for (int i = 0; i < p.size(); ++i) {
    best = std::max(best, p.alphas[i] * unit_dot(p.dirs[i].coords, u.coords));
  }
  return best;
}

ConeVerdict radial_gauss_assignment(const Polytope& p, const UnitVec& u,
                                    const Tolerances& tol) {
  if (u.dim() != p.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "query direction dimension differs from polytope");
  }
  std::vector<double> score(p.size());
  for (int i = 0; i < p.size(); ++i) {
    score[i] = p.alphas[i] * unit_dot(p.dirs[i].coords, u.coords);
  }
  int top = 0;
  for (int i = 1; i < p.size(); ++i) {
    if (score[i] > score[top]) top = i;
  }
  const double band = tol.eps_tie * std::max(1.0, std::abs(score[top]));
  std::vector<int> tied;
  double second = -kInf;
  for (int i = 0; i < p.size(); ++i) {
    if (score[top] - score[i] <= band) tied.push_back(i);
    if (i != top) second = std::max(second, score[i]);
  }
  if (tied.size() > 1) return ConeBoundary{std::move(tied)};
  return ConeInterior{top, second == -kInf ? kInf : score[top] - second};
}

GaussImage gauss_image_measure(const Polytope& p, const DiscreteMeasure& lambda,
                               const Tolerances& tol) {
  std::vector<long long> counts(p.size(), 0);
  for (int j = 0; j < lambda.size(); ++j) {
    const ConeVerdict verdict = radial_gauss_assignment(p, lambda.dirs[j], tol);
    if (std::holds_alternative<ConeBoundary>(verdict)) return BoundaryHit{j};
    counts[std::get<ConeInterior>(verdict).index] += lambda.weights[j];
  }
  return counts;
}

VerificationReport verify_solution(const Instance& inst, const Polytope& p,
                                   const Assignment& f, const Tolerances& tol) {
  check_capacity(inst, f);
  if (p.size() != inst.m() || p.dim() != inst.n) {
    throw Error(ErrorCode::DimensionMismatch,
                "polytope does not match the instance");
  }
  VerificationReport report;
  report.ok = true;
  report.min_margin = kInf;
  std::vector<long long> counts(p.size(), 0);
  for (int j = 0; j < inst.k(); ++j) {
    const ConeVerdict verdict =
        radial_gauss_assignment(p, inst.lambda.dirs[j], tol);
    const ConeInterior* interior = std::get_if<ConeInterior>(&verdict);
    if (interior != nullptr && interior->index == f.map[j]) {
      report.min_margin = std::min(report.min_margin, interior->margin);
      ++counts[interior->index];
    } else {
      report.ok = false;
      if (!report.failed_lambda_index) report.failed_lambda_index = j;
    }
  }
  for (int i = 0; i < p.size(); ++i) {
    if (counts[i] != inst.mu.weights[i]) report.ok = false;
  }
  if (report.min_margin == kInf) report.min_margin = 0.0;

  const double phi = compute_phi(p, inst, tol);
  const double a_value = assignment_value(inst, f, tol);
  report.phi_gap = (std::isfinite(phi) && std::isfinite(a_value))
                       ? std::abs(phi + a_value)
                       : kInf;
  return report;
}

double compute_phi(const Polytope& p, const Instance& inst,
                   const Tolerances& tol) {
  if (p.size() != inst.m() || p.dim() != inst.n) {
    throw Error(ErrorCode::DimensionMismatch,
                "polytope does not match the instance");
  }
  double phi = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    phi += static_cast<double>(inst.mu.weights[i]) * std::log(p.alphas[i]);
  }
  for (int j = 0; j < inst.k(); ++j) {
    double best = -kInf;
    for (int i = 0; i < p.size(); ++i) {
      const double d = unit_dot(p.dirs[i].coords, inst.u(j));
      if (d <= tol.eps_dot) continue;
      best = std::max(best, p.alphas[i] * d);
    }
    if (best <= 0.0) return kInf;
    phi -= std::log(best);
  }
  return phi;
}

Geometry export_geometry(const Polytope& p, bool with_facets) {
  Geometry g;
  for (int i = 0; i < p.size(); ++i) {
    Vec vertex = p.dirs[i].coords;
    for (double& c : vertex) c *= p.alphas[i];
    g.vertices.push_back(std::move(vertex));
  }
  if (with_facets) {
    if (p.dim() != 3) {
      throw Error(ErrorCode::UnsupportedDimensionForFacets,
                  "facet export requires dimension 3");
    }
    g.facets = detail::convex_hull_3d(g.vertices);
  }
  return g;
}

std::string to_obj(const Geometry& g) {
  std::string out;
  char buf[96];
  for (const Vec& v : g.vertices) {
    if (v.size() != 3) {
      throw Error(ErrorCode::UnsupportedDimensionForFacets,
                  "OBJ export requires dimension 3");
    }
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
    out += buf;
  }
  for (const auto& f : g.facets) {
    std::snprintf(buf, sizeof(buf), "f %d %d %d\n", f[0] + 1, f[1] + 1,
                  f[2] + 1);
    out += buf;
  }
  return out;
}

}  // namespace gip
