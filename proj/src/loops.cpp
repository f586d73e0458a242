#include "gip/loops.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gip {

namespace {

void require(bool cond, ErrorCode code, const char* what) {
  if (!cond) throw Error(code, what);
}

std::vector<std::pair<int, int>> pair_sequence(const std::vector<int>& v,
                                               const std::vector<int>& u) {
  std::vector<std::pair<int, int>> seq(v.size());
  for (size_t t = 0; t < v.size(); ++t) seq[t] = {v[t], u[t]};
  return seq;
}

// Lexicographically smallest rotation of the pair sequence, over both
// traversal directions. Reversing the walk visits v[0], v[L-1], ..., v[1]
// and relabels each segment by the u of the segment it retraces.
void canonicalize(std::vector<int>& v, std::vector<int>& u) {
  const size_t len = v.size();
  std::vector<int> rv(len), ru(len);
  for (size_t s = 0; s < len; ++s) {
    rv[s] = v[(len - s) % len];
    ru[s] = u[len - 1 - s];
  }
  auto best_v = v;
  auto best_u = u;
  auto best_seq = pair_sequence(v, u);
  auto consider = [&](const std::vector<int>& cv, const std::vector<int>& cu) {
    for (size_t r = 0; r < len; ++r) {
      std::vector<int> wv(len), wu(len);
      for (size_t s = 0; s < len; ++s) {
        wv[s] = cv[(s + r) % len];
        wu[s] = cu[(s + r) % len];
      }
      auto seq = pair_sequence(wv, wu);
      if (seq < best_seq) {
        best_seq = std::move(seq);
        best_v = std::move(wv);
        best_u = std::move(wu);
      }
    }
  };
  consider(v, u);
  consider(rv, ru);
  v = std::move(best_v);
  u = std::move(best_u);
}

}  // namespace

LoopBuildResult build_loop(const Instance& inst,
                           const std::vector<int>& v_indices,
                           const std::vector<int>& u_indices,
                           const Tolerances& tol) {
  const size_t len = v_indices.size();
  require(len >= 2 && u_indices.size() == len, ErrorCode::InvalidSpec,
          "loop needs matching index lists of length >= 2");
  for (size_t t = 0; t < len; ++t) {
    require(v_indices[t] >= 0 && v_indices[t] < inst.m(),
            ErrorCode::InvalidSpec, "loop vertex index out of range");
    require(u_indices[t] >= 0 && u_indices[t] < inst.k(),
            ErrorCode::InvalidSpec, "loop label index out of range");
    for (size_t s = t + 1; s < len; ++s) {
      require(v_indices[t] != v_indices[s], ErrorCode::InvalidSpec,
              "loop vertices repeat");
      require(u_indices[t] != u_indices[s], ErrorCode::InvalidSpec,
              "loop labels repeat");
    }
  }

  std::vector<int> v = v_indices;
  std::vector<int> u = u_indices;
  canonicalize(v, u);

  auto ratio = [&](int t) {
    const double num = unit_dot(inst.u(u[t]), inst.v(v[t]));
    const double den = unit_dot(inst.u(u[t]), inst.v(v[(t + 1) % len]));
    if (num <= tol.eps_dot || den <= tol.eps_dot) {
      throw Error(ErrorCode::NonPositiveDot,
                  "loop label does not see both segment endpoints");
    }
    return num / den;
  };

  double product = 1.0;
  std::vector<double> scalars(len, 1.0);
  for (size_t t = 0; t < len; ++t) {
    const double r = ratio(static_cast<int>(t));
    product *= r;
    if (t + 1 < len) scalars[t + 1] = scalars[t] * r;
  }
  if (std::abs(product - 1.0) > tol.eps_loop) {
    return NotClosed{std::abs(product - 1.0)};
  }

  for (size_t t = 0; t < len; ++t) {
    const size_t s = (t + 1) % len;
    const double along = scalars[s] * unit_dot(inst.u(u[t]), inst.v(v[s])) -
                         scalars[t] * unit_dot(inst.u(u[t]), inst.v(v[t]));
    const double tolerance =
        tol.eps_loop *
        std::max(1.0, std::abs(scalars[t] * unit_dot(inst.u(u[t]), inst.v(v[t]))));
    if (std::abs(along) > tolerance) return NotClosed{std::abs(along)};
  }

  LoopCertificate cert;
  cert.v_indices = std::move(v);
  cert.u_indices = std::move(u);
  cert.scalars = std::move(scalars);
  return cert;
}

LoopCertificate loop_from_cycle_certificate(const Instance& inst,
                                            const Assignment& f,
                                            const AssignmentCycle& cycle,
                                            const Tolerances& tol) {
  const size_t len = cycle.v_cycle.size();
  require(len >= 2 && cycle.u_labels.size() == len,
          ErrorCode::InconsistentCertificate, "tie cycle is malformed");
  require(std::abs(cycle.value_change) <= tol.eps_loop,
          ErrorCode::InconsistentCertificate,
          "tie cycle claims a nonzero value change");
  for (size_t t = 0; t < len; ++t) {
    const int j = cycle.u_labels[t];
    require(j >= 0 && j < inst.k() && f.map[j] == cycle.v_cycle[t],
            ErrorCode::InconsistentCertificate,
            "tie cycle labels disagree with the assignment");
  }
  LoopBuildResult built = build_loop(inst, cycle.v_cycle, cycle.u_labels, tol);
  if (auto* cert = std::get_if<LoopCertificate>(&built)) return *cert;
  throw Error(ErrorCode::InconsistentCertificate,
              "tie cycle does not close into a loop");
}

AssignmentCycle cycle_from_negative_cycle(
    const StrictSystem& sys, const NegativeCycleCertificate& cert) {
  const size_t len = cert.constraint_indices.size();
  require(len >= 2, ErrorCode::InconsistentCertificate,
          "witness cycle needs at least two constraints");
  AssignmentCycle cycle;
  for (size_t t = 0; t < len; ++t) {
    const int idx = cert.constraint_indices[t];
    require(idx >= 0 && idx < static_cast<int>(sys.constraints.size()),
            ErrorCode::InconsistentCertificate,
            "witness references unknown constraint");
    const StrictConstraint& c = sys.constraints[idx];
    const StrictConstraint& next =
        sys.constraints[cert.constraint_indices[(t + 1) % len]];
    require(c.source == next.target, ErrorCode::InconsistentCertificate,
            "witness constraints do not chain into a cycle");
    cycle.v_cycle.push_back(c.target);
    cycle.u_labels.push_back(c.u_index);
    cycle.value_change += c.bound;
  }
  for (size_t t = 0; t < len; ++t) {
    for (size_t s = t + 1; s < len; ++s) {
      require(cycle.v_cycle[t] != cycle.v_cycle[s],
              ErrorCode::InconsistentCertificate, "witness cycle revisits an atom");
    }
  }
  return cycle;
}

namespace {

// Depth-first enumeration of simple mu-index cycles with injective,
// sign-compatible lambda labels. Each geometric loop is met at its smallest
// vertex index; canonical forms are deduplicated by the callers.
struct LoopSearcher {
  const Instance& inst;
  const Tolerances& tol;
  int len_cap;
  std::function<void()> charge;
  std::vector<std::vector<std::vector<int>>> compat;

  LoopSearcher(const Instance& in, const LoopSearchOptions& opts,
               const Tolerances& t, std::function<void()> charge_fn)
      : inst(in), tol(t), charge(std::move(charge_fn)) {
    len_cap = std::min(opts.max_len, inst.m());
    compat.assign(inst.m(), std::vector<std::vector<int>>(inst.m()));
    for (int a = 0; a < inst.m(); ++a) {
      for (int b = 0; b < inst.m(); ++b) {
        if (a == b) continue;
        for (int j = 0; j < inst.k(); ++j) {
          if (unit_dot(inst.u(j), inst.v(a)) > tol.eps_dot &&
              unit_dot(inst.u(j), inst.v(b)) > tol.eps_dot) {
            compat[a][b].push_back(j);
          }
        }
      }
    }
  }

  std::vector<int> path, labels;
  std::vector<char> used_v, used_u;
  std::vector<LoopCertificate>* out = nullptr;

  void search_from(int start, std::vector<LoopCertificate>& sink) {
    out = &sink;
    path.assign(1, start);
    labels.clear();
    used_v.assign(inst.m(), 0);
    used_u.assign(inst.k(), 0);
    used_v[start] = 1;
    dfs(start);
  }

  double cycle_product(int closing_label) const {
    const size_t len = path.size();
    double product = 1.0;
    for (size_t t = 0; t < len; ++t) {
      const int j = t + 1 < len ? labels[t] : closing_label;
      product *= unit_dot(inst.u(j), inst.v(path[t])) /
                 unit_dot(inst.u(j), inst.v(path[(t + 1) % len]));
    }
    return product;
  }

  void dfs(int start) {
    const int last = path.back();
    if (static_cast<int>(path.size()) >= 2) {
      for (int j : compat[last][start]) {
        if (used_u[j]) continue;
        charge();
        if (std::abs(cycle_product(j) - 1.0) <= tol.eps_loop) {
          labels.push_back(j);
          LoopBuildResult built = build_loop(inst, path, labels, tol);
          labels.pop_back();
          if (auto* cert = std::get_if<LoopCertificate>(&built)) {
            out->push_back(std::move(*cert));
          }
        }
      }
    }
    if (static_cast<int>(path.size()) >= len_cap) return;
    for (int next = start + 1; next < inst.m(); ++next) {
      if (used_v[next]) continue;
      for (int j : compat[last][next]) {
        if (used_u[j]) continue;
        charge();
        path.push_back(next);
        labels.push_back(j);
        used_v[next] = 1;
        used_u[j] = 1;
        dfs(start);
        used_u[j] = 0;
        used_v[next] = 0;
        labels.pop_back();
        path.pop_back();
      }
    }
  }
};

void finish(std::vector<LoopCertificate>& found) {
  auto key = [](const LoopCertificate& c) {
    return std::make_pair(c.v_indices, c.u_indices);
  };
  std::sort(found.begin(), found.end(),
            [&](const LoopCertificate& a, const LoopCertificate& b) {
              return key(a) < key(b);
            });
  found.erase(std::unique(found.begin(), found.end(),
                          [&](const LoopCertificate& a,
                              const LoopCertificate& b) {
                            return key(a) == key(b);
                          }),
              found.end());
}

void check_options(const LoopSearchOptions& opts) {
  if (opts.max_len < 2 || opts.max_expansions == 0) {
    throw Error(ErrorCode::InvalidSpec,
                "loop search needs max_len >= 2 and a positive budget");
  }
}

}  // namespace

std::vector<LoopCertificate> search_loops_serial(const Instance& inst,
                                                 const LoopSearchOptions& opts,
                                                 const Tolerances& tol) {
  check_options(opts);
  std::uint64_t used = 0;
  LoopSearcher searcher(inst, opts, tol, [&used, &opts] {
    if (++used > opts.max_expansions) {
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "loop search exceeded its expansion budget");
    }
  });
  std::vector<LoopCertificate> found;
  for (int start = 0; start < inst.m(); ++start) {
    searcher.search_from(start, found);
  }
  finish(found);
  return found;
}

std::vector<LoopCertificate> search_loops(const Instance& inst,
                                          const LoopSearchOptions& opts,
                                          const Tolerances& tol) {
#ifdef _OPENMP
  check_options(opts);
  const int m = inst.m();
  std::vector<std::vector<LoopCertificate>> per_start(m);
  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> exceeded{false};

  #pragma omp parallel for schedule(dynamic, 1)
  for (int start = 0; start < m; ++start) {
    if (exceeded.load(std::memory_order_relaxed)) continue;
    LoopSearcher searcher(inst, opts, tol, [&used, &exceeded, &opts] {
      if (used.fetch_add(1, std::memory_order_relaxed) + 1 >
          opts.max_expansions) {
        exceeded.store(true, std::memory_order_relaxed);
        throw Error(ErrorCode::SearchBudgetExceeded, "budget");
      }
    });
    try {
      searcher.search_from(start, per_start[start]);
    } catch (const Error&) {
      exceeded.store(true, std::memory_order_relaxed);
    }
  }

  if (exceeded.load()) {
    throw Error(ErrorCode::SearchBudgetExceeded,
                "loop search exceeded its expansion budget");
  }
  std::vector<LoopCertificate> found;
  for (int start = 0; start < m; ++start) {
    for (LoopCertificate& cert : per_start[start]) {
      found.push_back(std::move(cert));
    }
  }
  finish(found);
  return found;
#else
  return search_loops_serial(inst, opts, tol);
#endif
}

}  // namespace gip
