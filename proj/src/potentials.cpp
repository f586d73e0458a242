#include "gip/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace gip {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

StrictSystem build_strict_system(const Instance& inst, const Assignment& f,
                                 const Tolerances& tol) {
  check_capacity(inst, f);
  StrictSystem sys;
  sys.num_vars = inst.m();
  for (int j = 0; j < inst.k(); ++j) {
    const int target = f.map[j];
    const double st = unit_dot(inst.u(j), inst.v(target));
    if (st <= tol.eps_dot) {
      throw Error(ErrorCode::ImproperAssignment,
                  "assigned pair has non-positive dot");
    }
    const double log_st = std::log(st);
    for (int i = 0; i < inst.m(); ++i) {
      if (i == target) continue;
      const double si = unit_dot(inst.u(j), inst.v(i));
      if (si <= tol.eps_dot) continue;
      sys.constraints.push_back({target, i, std::log(si) - log_st, j});
    }
  }
  return sys;
}

namespace {

void check_system(const StrictSystem& sys) {
  if (sys.num_vars <= 0) {
    throw Error(ErrorCode::InvalidSpec, "strict system needs variables");
  }
  for (const StrictConstraint& c : sys.constraints) {
    if (c.target < 0 || c.target >= sys.num_vars || c.source < 0 ||
        c.source >= sys.num_vars || c.target == c.source ||
        !std::isfinite(c.bound)) {
      throw Error(ErrorCode::InvalidSpec,
                  "strict constraint references unknown variable");
    }
  }
}

// Bellman-Ford on x[source] <= x[target] - bound - eps with every variable
// seeded at zero. Returns the stabilized potentials, or nothing when
// relaxation still updates after enough passes for any simple walk.
std::optional<std::vector<double>> try_solve(const StrictSystem& sys,
                                             double eps) {
  std::vector<double> x(sys.num_vars, 0.0);
  for (int pass = 0; pass <= sys.num_vars + 1; ++pass) {
    bool updated = false;
    for (const StrictConstraint& c : sys.constraints) {
      const double cand = x[c.target] - c.bound - eps;
      if (cand < x[c.source]) {
        x[c.source] = cand;
        updated = true;
      }
    }
    if (!updated) return x;
  }
  return std::nullopt;
}

// All-pairs shortest distances over the constraint graph (edge target ->
// source with weight -bound - eps, cheapest parallel constraint kept), then
// a next-pointer walk around the most negative diagonal. The walk is
// validated and other anchors are tried if distance poisoning from strongly
// negative cycles breaks it.
NegativeCycleCertificate extract_cycle(const StrictSystem& sys, double eps) {
  const int n = sys.num_vars;
  auto at = [n](int a, int b) { return static_cast<size_t>(a) * n + b; };
  std::vector<double> dist(static_cast<size_t>(n) * n, kInf);
  std::vector<int> next(static_cast<size_t>(n) * n, -1);
  std::vector<int> edge_at(static_cast<size_t>(n) * n, -1);
  for (int idx = 0; idx < static_cast<int>(sys.constraints.size()); ++idx) {
    const StrictConstraint& c = sys.constraints[idx];
    const double w = -c.bound - eps;
    if (w < dist[at(c.target, c.source)]) {
      dist[at(c.target, c.source)] = w;
      next[at(c.target, c.source)] = c.source;
      edge_at[at(c.target, c.source)] = idx;
    }
  }
  for (int mid = 0; mid < n; ++mid) {
    for (int a = 0; a < n; ++a) {
      const double da = dist[at(a, mid)];
      if (da == kInf) continue;
      for (int b = 0; b < n; ++b) {
        const double nd = da + dist[at(mid, b)];
        if (nd < dist[at(a, b)]) {
          dist[at(a, b)] = nd;
          next[at(a, b)] = next[at(a, mid)];
        }
      }
    }
  }

  std::vector<int> anchors;
  for (int a = 0; a < n; ++a) {
    if (dist[at(a, a)] < 0.0) anchors.push_back(a);
  }
  std::sort(anchors.begin(), anchors.end(), [&](int a, int b) {
    return dist[at(a, a)] < dist[at(b, b)];
  });

  for (int anchor : anchors) {
    NegativeCycleCertificate cert;
    double weight_sum = 0.0;
    int x = anchor;
    bool closed = false;
    for (int steps = 0; steps <= n; ++steps) {
      const int y = next[at(x, anchor)];
      if (y == -1) break;
      const int e = edge_at[at(x, y)];
      if (e == -1) break;
      cert.constraint_indices.push_back(e);
      cert.bound_sum += sys.constraints[e].bound;
      weight_sum += -sys.constraints[e].bound - eps;
      x = y;
      if (x == anchor) {
        closed = true;
        break;
      }
    }
    if (closed && weight_sum < 0.0) return cert;
  }
  throw Error(ErrorCode::InconsistentCertificate,
              "relaxation diverged but no witness cycle was recovered");
}

}  // namespace

StrictSolveResult solve_strict_system(const StrictSystem& sys,
                                      const Tolerances& tol) {
  check_system(sys);
  double eps = tol.eps_strict_init;
  while (true) {
    if (auto x = try_solve(sys, eps)) {
      Potentials p;
      p.x = std::move(*x);
      p.alphas = alphas_from_potentials(p.x);
      p.eps_used = eps;
      return p;
    }
    if (eps <= tol.eps_strict_min) return extract_cycle(sys, eps);
    eps /= 2.0;
  }
}

std::vector<double> alphas_from_potentials(const std::vector<double>& x) {
  if (x.empty()) {
    throw Error(ErrorCode::EmptyMeasure, "no potentials to normalize");
  }
  double top = -kInf;
  for (double xi : x) {
    if (!std::isfinite(xi)) {
      throw Error(ErrorCode::NonFiniteInput, "potential is not finite");
    }
    top = std::max(top, xi);
  }
  std::vector<double> alphas(x.size());
  for (size_t i = 0; i < x.size(); ++i) alphas[i] = std::exp(x[i] - top);
  return alphas;
}

}  // namespace gip
