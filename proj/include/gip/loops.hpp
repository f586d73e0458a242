#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "gip/assignment.hpp"
#include "gip/potentials.hpp"
#include "gip/types.hpp"

namespace gip {

// Closed polygonal path x_t = scalars[t] * v[v_indices[t]] whose segment
// [x_t, x_(t+1)] is perpendicular to u[u_indices[t]]. Certifies a structural
// tie of the assignment functional. Stored in canonical form: the
// lexicographically smallest (v,u) pair sequence over rotations and reversal.
struct LoopCertificate {
  std::vector<int> v_indices;
  std::vector<int> u_indices;
  std::vector<double> scalars;  // scalars[0] == 1

  bool operator==(const LoopCertificate&) const = default;
};

struct NotClosed {
  double residual = 0.0;  // |product of perpendicularity ratios - 1|
};

using LoopBuildResult = std::variant<LoopCertificate, NotClosed>;

// Runs the scalar recursion scalars[t+1]/scalars[t] =
// (u_t . v_t)/(u_t . v_(t+1)), requiring every dot along the way to exceed
// eps_dot (NonPositiveDot otherwise). Closes iff the ratio product returns to
// 1 within eps_loop; perpendicularity of every segment is re-verified on the
// built certificate. Indices must be distinct within each list and lists must
// have equal length >= 2 (InvalidSpec otherwise).
LoopBuildResult build_loop(const Instance& inst,
                           const std::vector<int>& v_indices,
                           const std::vector<int>& u_indices,
                           const Tolerances& tol);

// Converts a tie cycle coming from the optimizer into a loop certificate.
// Throws InconsistentCertificate when the cycle's bound sum is not ~0 or the
// resulting loop fails to close within eps_loop.
LoopCertificate loop_from_cycle_certificate(const Instance& inst,
                                            const Assignment& f,
                                            const AssignmentCycle& cycle,
                                            const Tolerances& tol);

// Maps a negative-cycle certificate of the strict difference system back to
// the tie cycle over mu indices it certifies.
AssignmentCycle cycle_from_negative_cycle(const StrictSystem& sys,
                                          const NegativeCycleCertificate& cert);

struct LoopSearchOptions {
  int max_len = 6;
  std::uint64_t max_expansions = 10'000'000;  // SearchBudgetExceeded beyond
};

// Exhaustive search over simple cycles of mu indices with injective lambda
// labels, up to max_len, returning every closing loop once (canonical form,
// rotation/reversal deduplicated), sorted lexicographically. The parallel
// variant fans out over starting indices and merges deterministically; the
// serial variant is the reference implementation.
std::vector<LoopCertificate> search_loops(const Instance& inst,
                                          const LoopSearchOptions& opts,
                                          const Tolerances& tol);
std::vector<LoopCertificate> search_loops_serial(const Instance& inst,
                                                 const LoopSearchOptions& opts,
                                                 const Tolerances& tol);

}  // namespace gip
