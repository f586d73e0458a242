#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "gip/instances.hpp"
#include "gip/loops.hpp"
#include "gip/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(const std::function<void()>& f, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(
        best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms, bool same) {
  std::printf("%-22s %10.2f %10.2f %8.2fx  %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, same ? "identical" : "DIFFER");
}

}  // namespace

int main() {
  const gip::Tolerances tol;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-22s %10s %10s %9s  %s\n", "kernel", "serial", "parallel",
              "speedup", "agreement");

  {
    gip::RandomSpec spec;
    spec.n = 3;
    spec.m = 6;
    spec.weights = {2, 2, 2, 1, 1, 1};
    spec.seed = 17;
    const gip::Instance inst = gip::generate(spec, tol);
    gip::OracleReport serial_report, parallel_report;
    const double s = time_ms(
        [&] { serial_report = gip::oracle_maximizers_serial(inst, tol, 1e7); },
        3);
    const double p = time_ms(
        [&] { parallel_report = gip::oracle_maximizers(inst, tol, 1e7); }, 3);
    const bool same = serial_report.maximizers == parallel_report.maximizers &&
                      serial_report.value == parallel_report.value &&
                      serial_report.top_gap == parallel_report.top_gap;
    row("oracle_maximizers", s, p, same);
  }

  {
    gip::RandomSpec spec;
    spec.n = 4;
    spec.m = 20;
    spec.weights = std::vector<long long>(20, 1);
    spec.seed = 23;
    const gip::Instance inst = gip::generate(spec, tol);
    gip::SubsetCheckReport serial_report, parallel_report;
    const double s = time_ms(
        [&] { serial_report = gip::oracle_weak_aleksandrov_serial(inst, tol); },
        3);
    const double p = time_ms(
        [&] { parallel_report = gip::oracle_weak_aleksandrov(inst, tol); }, 3);
    const bool same = serial_report.holds == parallel_report.holds &&
                      serial_report.worst_subset == parallel_report.worst_subset &&
                      serial_report.worst_slack == parallel_report.worst_slack;
    row("subset_check", s, p, same);
  }

  {
    gip::LoopSeededSpec spec;
    spec.n = 3;
    spec.loop_len = 7;
    spec.seed = 5;
    const gip::Instance inst = gip::generate(spec, tol);
    gip::LoopSearchOptions opts;
    opts.max_len = 7;
    opts.max_expansions = 400'000'000;
    std::vector<gip::LoopCertificate> serial_found, parallel_found;
    const double s = time_ms(
        [&] { serial_found = gip::search_loops_serial(inst, opts, tol); }, 3);
    const double p =
        time_ms([&] { parallel_found = gip::search_loops(inst, opts, tol); }, 3);
    row("search_loops", s, p, serial_found == parallel_found);
  }

  {
    gip::GenericRateParams params;
    params.n = 3;
    params.m = 5;
    params.trials = 60;
    params.seed = 11;
    gip::GenericTally serial_tally, parallel_tally;
    const double s = time_ms(
        [&] { serial_tally = gip::generic_rate_serial(params, tol); }, 3);
    const double p =
        time_ms([&] { parallel_tally = gip::generic_rate(params, tol); }, 3);
    const bool same = serial_tally.trials == parallel_tally.trials &&
                      serial_tally.filtered == parallel_tally.filtered &&
                      serial_tally.solvable == parallel_tally.solvable &&
                      serial_tally.nonunique == parallel_tally.nonunique &&
                      serial_tally.infeasible == parallel_tally.infeasible &&
                      serial_tally.ambiguous == parallel_tally.ambiguous;
    row("generic_rate", s, p, same);
  }

  return 0;
}
