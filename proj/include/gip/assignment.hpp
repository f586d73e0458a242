#pragma once

#include <optional>
#include <vector>

#include "gip/types.hpp"

namespace gip {

// Value of the assignment functional: sum over j of log(u_j . v_f(j)).
// Any factor with dot <= eps_dot makes the value -infinity. Always <= 0.
// Throws CapacityViolation when f does not respect the mu capacities.
double assignment_value(const Instance& inst, const Assignment& f,
                        const Tolerances& tol);

struct MaximizerResult {
  Assignment best;
  double value = 0.0;  // finite by construction
};

// Maximizes the assignment functional over capacity-respecting maps by
// solving the min-cost transportation problem with costs -log(u_j . v_i) on
// positive-dot edges only (forbidden pairs are excluded, preserving the
// -infinity semantics). Integrality of optimal flows puts the optimum at an
// assignment. Throws InfeasibleTransport when no finite-value map exists.
// Tie-breaking inside the flow solver is lowest-index-first, so results are
// deterministic.
MaximizerResult maximize_assignment(const Instance& inst, const Tolerances& tol);

// Directed cycle over mu indices whose edges carry distinct lambda labels:
// edge t runs v[v_cycle[t]] -> v[v_cycle[t+1]] and is labelled
// u[u_labels[t]], with f(u_labels[t]) == v_cycle[t]. Applying the cycle to f
// reassigns each labelled atom one step forward.
struct AssignmentCycle {
  std::vector<int> v_cycle;
  std::vector<int> u_labels;
  double value_change = 0.0;  // A(alternative) - A(best), ~0 for tie cycles
};

enum class UniquenessKind { Unique, NonUnique, AmbiguousWithinTolerance };

struct UniquenessResult {
  UniquenessKind kind = UniquenessKind::Unique;
  std::optional<Assignment> alternative;  // NonUnique: distinct, equal value
  std::optional<AssignmentCycle> cycle;   // NonUnique: the tie cycle
  double gap = 0.0;  // min residual cycle cost (0 when no cycle exists)
};

// Inspects the residual graph of the optimal transport encoded by best,
// using node potentials from Bellman-Ford. A residual cycle of ~zero reduced
// cost yields an alternative maximizer (NonUnique); a minimum cycle cost
// within (eps_tie, m*eps_tie] of zero (relative to max(1,|A|)) is reported as
// AmbiguousWithinTolerance. Throws NotOptimal when best violates
// complementary slackness beyond tolerance.
UniquenessResult uniqueness_certificate(const Instance& inst,
                                        const Assignment& best,
                                        const Tolerances& tol);

// Transport matrix of an assignment: entry (i, j) is 1 when f(j) = i.
// Column sums are 1 and row sums are the mu weights.
std::vector<std::vector<double>> transport_matrix(const Instance& inst,
                                                  const Assignment& f);

Assignment apply_cycle(const Assignment& f, const AssignmentCycle& cycle);

}  // namespace gip
