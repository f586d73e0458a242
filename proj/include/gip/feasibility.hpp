#pragma once

#include <optional>
#include <vector>

#include "gip/types.hpp"

namespace gip {

// Result of the weak Aleksandrov check. When the condition fails,
// violating_subset holds 0-based mu indices I with
// mu(I) > |{j : exists i in I with u_j . v_i > eps_dot}|, and slack is that
// (negative) difference |N(I)| - mu(I).
struct WeakAleksandrovResult {
  bool holds = false;
  std::optional<std::vector<int>> violating_subset;
  long long slack = 0;
};

// Decides, via max-flow over the positive-dot bipartite graph (unit supplies
// on lambda atoms, capacities mu_i on mu atoms), whether every subset demand
// can be covered. The violating subset comes from the min cut and attains the
// worst slack.
WeakAleksandrovResult check_weak_aleksandrov(const Instance& inst,
                                             const Tolerances& tol);

// Returns a unit witness w with w . d <= eps_dot for every direction d, when
// one exists; returns nullopt exactly when the origin lies interior to the
// convex hull of the directions. All directions must share one dimension
// (DimensionMismatch otherwise); candidate enumeration over (n-1)-subsets is
// capped (TooLarge) at desk scale.
std::optional<UnitVec> is_concentrated_on_closed_hemisphere(
    const std::vector<UnitVec>& dirs, const Tolerances& tol);

// Uniform angular slack: min over mu atoms of asin(min positive dot against
// the lambda atoms). Requires the weak Aleksandrov condition
// (NotWeakAleksandrov otherwise), which guarantees every mu atom sees at
// least one positive dot.
double uniform_alpha(const Instance& inst, const Tolerances& tol);

// Combined feasibility diagnostics for an instance, as surfaced by the CLI.
struct FeasibilityReport {
  WeakAleksandrovResult weak;
  bool mu_concentrated = false;
  std::optional<UnitVec> hemisphere_witness;
  std::optional<double> alpha;  // present when the weak condition holds
};

FeasibilityReport analyze_feasibility(const Instance& inst, const Tolerances& tol);

}  // namespace gip
