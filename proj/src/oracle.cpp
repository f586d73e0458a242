#include "gip/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gip {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Local dot product and functional evaluation, kept separate from the
// library helpers on purpose: the oracle must not inherit bugs from the
// code paths it certifies.
double raw_dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
  return s;
}

double eval_map(const Instance& inst, const std::vector<int>& map,
                double eps_dot) {
  double sum = 0.0;
  for (size_t j = 0; j < map.size(); ++j) {
    double s = raw_dot(inst.lambda.dirs[j].coords, inst.mu.dirs[map[j]].coords);
    if (s <= eps_dot) return kNegInf;
    sum += std::log(std::min(s, 1.0));
  }
  return sum;
}

std::vector<int> initial_map(const Instance& inst) {
  std::vector<int> map;
  map.reserve(inst.k());
  for (int i = 0; i < inst.m(); ++i) {
    for (long long c = 0; c < inst.mu.weights[i]; ++c) map.push_back(i);
  }
  return map;
}

// Runs the full lexicographic enumeration, handing (map, value) pairs to
// consume in enumeration order. The parallel flavour evaluates batches with
// OpenMP but folds serially, so consumers see identical sequences.
void scan_assignments(const Instance& inst, double eps_dot, bool parallel,
                      const std::function<void(const std::vector<int>&, double)>&
                          consume) {
  std::vector<int> map = initial_map(inst);
  if (!parallel) {
    do {
      consume(map, eval_map(inst, map, eps_dot));
    } while (std::next_permutation(map.begin(), map.end()));
    return;
  }
  const int batch = 4096;
  std::vector<std::vector<int>> maps(batch);
  std::vector<double> vals(batch);
  bool more = true;
  while (more) {
    int filled = 0;
    while (filled < batch) {
      maps[filled++] = map;
      if (!std::next_permutation(map.begin(), map.end())) {
        more = false;
        break;
      }
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int t = 0; t < filled; ++t) {
      vals[t] = eval_map(inst, maps[t], eps_dot);
    }
    for (int t = 0; t < filled; ++t) consume(maps[t], vals[t]);
  }
}

OracleReport maximize_report(const Instance& inst, const Tolerances& tol,
                             bool parallel) {
  const int k = inst.k();

  double best = kNegInf;
  scan_assignments(inst, tol.eps_dot, parallel,
                   [&](const std::vector<int>&, double val) {
                     if (val > best) best = val;
                   });
  if (best == kNegInf) {
    throw Error(ErrorCode::AllNegativeInfinity,
                "every capacity-respecting map has value -infinity");
  }

  const double band = tol.eps_tie * k * std::max(1.0, std::abs(best));
  OracleReport report;
  report.value = best;
  double best_outside = kNegInf;
  scan_assignments(inst, tol.eps_dot, parallel,
                   [&](const std::vector<int>& m, double val) {
                     if (val >= best - band) {
                       report.maximizers.push_back(Assignment{m});
                     } else if (val > best_outside) {
                       best_outside = val;
                     }
                   });
  report.top_gap = best_outside == kNegInf
                       ? std::numeric_limits<double>::infinity()
                       : best - best_outside;
  return report;
}

}  // namespace

double count_assignments(const Instance& inst, double cap) {
  // k! / prod(mu_i!) as a product of binomials, bailing out early at the cap.
  double count = 1.0;
  long long placed = 0;
  for (int i = 0; i < inst.m(); ++i) {
    const long long w = inst.mu.weights[i];
    placed += w;
    for (long long t = 0; t < w; ++t) {
      count = count * static_cast<double>(placed - t) /
              static_cast<double>(w - t);
    }
    if (count > cap * (1.0 + 1e-12)) {
      throw Error(ErrorCode::TooLarge,
                  "assignment count exceeds enumeration cap");
    }
  }
  return std::round(count);
}

void for_each_assignment(const Instance& inst,
                         const std::function<bool(const Assignment&)>& visit,
                         double cap) {
  count_assignments(inst, cap);
  std::vector<int> map = initial_map(inst);
  Assignment f;
  do {
    f.map = map;
    if (!visit(f)) return;
  } while (std::next_permutation(map.begin(), map.end()));
}

OracleReport oracle_maximizers(const Instance& inst, const Tolerances& tol,
                               double cap) {
  count_assignments(inst, cap);
  return maximize_report(inst, tol, true);
}

OracleReport oracle_maximizers_serial(const Instance& inst,
                                      const Tolerances& tol, double cap) {
  count_assignments(inst, cap);
  return maximize_report(inst, tol, false);
}

namespace {

struct SubsetBest {
  long long slack = std::numeric_limits<long long>::max();
  std::uint64_t subset = 0;

  void offer(long long s, std::uint64_t mask) {
    if (s < slack || (s == slack && mask < subset)) {
      slack = s;
      subset = mask;
    }
  }
};

SubsetCheckReport subset_check(const Instance& inst, const Tolerances& tol,
                               bool parallel) {
  const int m = inst.m();
  const int k = inst.k();
  if (m > 20) {
    throw Error(ErrorCode::TooLarge, "subset enumeration needs m <= 20");
  }
  const int words = (k + 63) / 64;

  // Per mu atom: bitmask of lambda atoms with positive dot.
  std::vector<std::uint64_t> sees(static_cast<size_t>(m) * words, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) {
      double s = raw_dot(inst.lambda.dirs[j].coords, inst.mu.dirs[i].coords);
      if (s > tol.eps_dot) {
        sees[static_cast<size_t>(i) * words + j / 64] |= 1ULL << (j % 64);
      }
    }
  }

  const std::uint64_t subsets = (1ULL << m) - 1;
  auto scan_range = [&](std::uint64_t from, std::uint64_t to, SubsetBest& best) {
    std::vector<std::uint64_t> acc(words);
    for (std::uint64_t mask = from; mask <= to; ++mask) {
      std::fill(acc.begin(), acc.end(), 0);
      long long demand = 0;
      for (int i = 0; i < m; ++i) {
        if (mask & (1ULL << i)) {
          demand += inst.mu.weights[i];
          for (int w = 0; w < words; ++w) {
            acc[w] |= sees[static_cast<size_t>(i) * words + w];
          }
        }
      }
      long long covered = 0;
      for (int w = 0; w < words; ++w) {
        covered += std::popcount(acc[w]);
      }
      best.offer(covered - demand, mask);
    }
  };

  SubsetBest best;
#ifdef _OPENMP
  if (parallel) {
    const int threads = omp_get_max_threads();
    std::vector<SubsetBest> locals(threads);
#pragma omp parallel num_threads(threads)
    {
      const int t = omp_get_thread_num();
      const std::uint64_t chunk =
          (subsets + static_cast<std::uint64_t>(threads) - 1) / threads;
      const std::uint64_t from = 1 + chunk * t;
      const std::uint64_t to = std::min(subsets, from + chunk - 1);
      if (from <= to) scan_range(from, to, locals[t]);
    }
    // The offer rule is a total order, so the merged result does not depend
    // on how the range was split.
    for (const SubsetBest& local : locals) {
      if (local.slack != std::numeric_limits<long long>::max()) {
        best.offer(local.slack, local.subset);
      }
    }
  } else {
    scan_range(1, subsets, best);
  }
#else
  (void)parallel;
  scan_range(1, subsets, best);
#endif

  SubsetCheckReport report;
  report.holds = best.slack >= 0;
  report.worst_slack = best.slack;
  for (int i = 0; i < m; ++i) {
    if (best.subset & (1ULL << i)) report.worst_subset.push_back(i);
  }
  return report;
}

}  // namespace

SubsetCheckReport oracle_weak_aleksandrov(const Instance& inst,
                                          const Tolerances& tol) {
  return subset_check(inst, tol, true);
}

SubsetCheckReport oracle_weak_aleksandrov_serial(const Instance& inst,
                                                 const Tolerances& tol) {
  return subset_check(inst, tol, false);
}

}  // namespace gip
