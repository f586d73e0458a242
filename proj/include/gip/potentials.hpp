#pragma once

#include <variant>
#include <vector>

#include "gip/types.hpp"

namespace gip {

// One strict difference constraint x[target] - x[source] > bound, generated
// by lambda atom u_index: bound = log(u.v[source]) - log(u.v[target]) with
// target = f(u_index). Pairs with non-positive dot are vacuous and omitted.
struct StrictConstraint {
  int target = 0;
  int source = 0;
  double bound = 0.0;
  int u_index = 0;
};

struct StrictSystem {
  int num_vars = 0;  // one variable per mu atom
  std::vector<StrictConstraint> constraints;
};

// Builds the system whose solutions are log radial scalings making f the
// radial Gauss assignment. Throws ImproperAssignment when some
// u_j . v_f(j) <= eps_dot.
StrictSystem build_strict_system(const Instance& inst, const Assignment& f,
                                 const Tolerances& tol);

struct Potentials {
  std::vector<double> x;       // finite potentials, one per variable
  std::vector<double> alphas;  // exp(x - max x), so max alpha = 1
  double eps_used = 0.0;       // every constraint holds with slack >= eps_used
};

// Constraint indices along a directed cycle whose bounds sum to >= 0 within
// tolerance, certifying that no strict solution exists.
struct NegativeCycleCertificate {
  std::vector<int> constraint_indices;
  double bound_sum = 0.0;
};

using StrictSolveResult = std::variant<Potentials, NegativeCycleCertificate>;

// Solves the strict system by Bellman-Ford on the relaxation
// x[source] <= x[target] - bound - eps, halving eps from eps_strict_init and
// giving up below eps_strict_min. The returned cycle (if any) witnesses a
// nonnegative bound sum around some permutation cycle.
StrictSolveResult solve_strict_system(const StrictSystem& sys,
                                      const Tolerances& tol);

// Normalizes potentials into radial scalings: alpha = exp(x - max x).
// Throws NonFiniteInput on non-finite potentials.
std::vector<double> alphas_from_potentials(const std::vector<double>& x);

}  // namespace gip
