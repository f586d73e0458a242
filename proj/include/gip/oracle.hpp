#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gip/types.hpp"

namespace gip {

// Brute-force reference implementations. These deliberately reimplement dot
// products and the assignment functional from scratch so their verdicts stay
// independent of the optimization code they are used to check.

// Number of capacity-respecting maps, k! / prod(mu_i!). Throws TooLarge above
// the cap so callers cannot accidentally start astronomic enumerations.
double count_assignments(const Instance& inst, double cap = 1e6);

// Visits every capacity-respecting map in lexicographic order of the index
// array. The visitor may return false to stop early.
void for_each_assignment(const Instance& inst,
                         const std::function<bool(const Assignment&)>& visit,
                         double cap = 1e6);

struct OracleReport {
  std::vector<Assignment> maximizers;  // all within eps_tie*k of the best
  double value = 0.0;                  // best finite value
  double top_gap = 0.0;  // distance to the best value outside the tie band,
                         // +infinity when every other map is -infinity
};

// Enumerates all maps, evaluates the functional directly, and groups the
// maximizers within eps_tie * k relative tolerance. Throws AllNegativeInfinity
// when no map has finite value, TooLarge above the enumeration cap. The
// parallel variant evaluates in chunks and reduces deterministically, so both
// variants return identical reports.
OracleReport oracle_maximizers(const Instance& inst, const Tolerances& tol,
                               double cap = 1e6);
OracleReport oracle_maximizers_serial(const Instance& inst,
                                      const Tolerances& tol, double cap = 1e6);

struct SubsetCheckReport {
  bool holds = false;
  std::vector<int> worst_subset;  // 0-based mu indices
  long long worst_slack = 0;      // |N(I)| - mu(I), negative iff violated
};

// Checks the weak Aleksandrov condition by enumerating all 2^m - 1 subsets
// (m <= 20, TooLarge otherwise) and returns the subset with the most negative
// slack, ties broken by smallest subset bitmask. Deterministic regardless of
// thread count.
SubsetCheckReport oracle_weak_aleksandrov(const Instance& inst,
                                          const Tolerances& tol);
SubsetCheckReport oracle_weak_aleksandrov_serial(const Instance& inst,
                                                 const Tolerances& tol);

}  // namespace gip
