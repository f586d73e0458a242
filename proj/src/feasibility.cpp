#include "gip/feasibility.hpp"

#include <algorithm>
#include <cmath>

#include "detail/maxflow.hpp"

namespace gip {

// Gale-style feasibility: demands mu_i on one side, unit supplies on the
// other, edges where the dot is positive. The condition holds iff the
// transportation problem ships everything, i.e. max flow == k. The source
// side of the min cut yields a violating subset attaining the worst slack.
WeakAleksandrovResult check_weak_aleksandrov(const Instance& inst,
                                             const Tolerances& tol) {
  const int m = inst.m();
  const int k = inst.k();
  const int source = 0;
  const int v_base = 1;
  const int u_base = 1 + m;
  const int sink = 1 + m + k;

  detail::MaxFlow flow(m + k + 2);
  for (int i = 0; i < m; ++i) {
    flow.add_edge(source, v_base + i, inst.mu.weights[i]);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) {
      if (dot(inst.u(j), inst.v(i)) > tol.eps_dot) {
        flow.add_edge(v_base + i, u_base + j, 1);
      }
    }
  }
  for (int j = 0; j < k; ++j) flow.add_edge(u_base + j, sink, 1);

  WeakAleksandrovResult result;
  const long long shipped = flow.run(source, sink);
  if (shipped == k) {
    result.holds = true;
    result.slack = 0;
    return result;
  }

  result.holds = false;
  const std::vector<bool> cut = flow.residual_reachable(source);
  std::vector<int> subset;
  long long demand = 0;
  for (int i = 0; i < m; ++i) {
    if (cut[v_base + i]) {
      subset.push_back(i);
      demand += inst.mu.weights[i];
    }
  }
  long long covered = 0;
  for (int j = 0; j < k; ++j) {
    bool seen = false;
    for (int i : subset) {
      if (dot(inst.u(j), inst.v(i)) > tol.eps_dot) {
        seen = true;
        break;
      }
    }
    if (seen) ++covered;
  }
  result.slack = covered - demand;
  result.violating_subset = std::move(subset);
  return result;
}

double uniform_alpha(const Instance& inst, const Tolerances& tol) {
  if (!check_weak_aleksandrov(inst, tol).holds) {
    throw Error(ErrorCode::NotWeakAleksandrov,
                "uniform angular slack needs the weak Aleksandrov condition");
  }
  double alpha = std::asin(1.0);
  for (int i = 0; i < inst.m(); ++i) {
    double min_pos = 1.0;
    for (int j = 0; j < inst.k(); ++j) {
      const double s = dot(inst.u(j), inst.v(i));
      if (s > tol.eps_dot) min_pos = std::min(min_pos, s);
    }
    alpha = std::min(alpha, std::asin(std::min(min_pos, 1.0)));
  }
  return alpha;
}

FeasibilityReport analyze_feasibility(const Instance& inst,
                                      const Tolerances& tol) {
  FeasibilityReport report;
  report.weak = check_weak_aleksandrov(inst, tol);
  report.hemisphere_witness =
      is_concentrated_on_closed_hemisphere(inst.mu.dirs, tol);
  report.mu_concentrated = report.hemisphere_witness.has_value();
  if (report.weak.holds) report.alpha = uniform_alpha(inst, tol);
  return report;
}

}  // namespace gip
