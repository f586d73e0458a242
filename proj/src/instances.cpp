#include "gip/instances.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "detail/geometry.hpp"
#include "detail/rng.hpp"
#include "gip/feasibility.hpp"
#include "gip/solver.hpp"

namespace gip {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

Vec planar(double angle, int n) {
  Vec v(n, 0.0);
  v[0] = std::cos(angle);
  v[1] = std::sin(angle);
  return v;
}

Instance from_parts(int n, std::vector<Vec> mu_dirs,
                    std::vector<long long> weights, std::vector<Vec> lambda,
                    const Tolerances& tol) {
  RawInstance raw;
  raw.n = n;
  for (size_t i = 0; i < mu_dirs.size(); ++i) {
    raw.mu.push_back({std::move(mu_dirs[i]), static_cast<double>(weights[i])});
  }
  raw.lambda = std::move(lambda);
  return validate_instance(raw, tol);
}

// Columns of the Helmert matrix, normalized: n+1 unit vectors in dimension n
// with pairwise dot -1/n.
std::vector<Vec> simplex_directions(int n) {
  std::vector<Vec> cols(n + 1, Vec(n, 0.0));
  for (int t = 1; t <= n; ++t) {
    const double s = 1.0 / std::sqrt(static_cast<double>(t) * (t + 1));
    for (int i = 0; i < t; ++i) cols[i][t - 1] = s;
    cols[t][t - 1] = -s * t;
  }
  for (Vec& c : cols) {
    const double len = norm(c);
    for (double& x : c) x /= len;
  }
  return cols;
}

Vec random_unit(detail::SplitMix& rng, int n) {
  while (true) {
    Vec v(n);
    for (double& x : v) x = rng.normal();
    const double len = norm(v);
    if (len > 1e-6) {
      for (double& x : v) x /= len;
      return v;
    }
  }
}

bool collides(const std::vector<Vec>& dirs, const Vec& cand, double eps) {
  for (const Vec& d : dirs) {
    if (dot(d, cand) >= 1.0 - eps) return true;
  }
  return false;
}

std::vector<Vec> draw_distinct(std::uint64_t seed, std::uint64_t tag, int count,
                               int n, const Tolerances& tol) {
  std::vector<Vec> dirs;
  for (int d = 0; d < count; ++d) {
    bool placed = false;
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
      detail::SplitMix rng{detail::hash_words(
          {seed, tag, static_cast<std::uint64_t>(d), attempt})};
      Vec cand = random_unit(rng, n);
      if (!collides(dirs, cand, tol.eps_distinct)) {
        dirs.push_back(std::move(cand));
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw Error(ErrorCode::CollisionAfterPerturbation,
                  "could not draw distinct random directions");
    }
  }
  return dirs;
}

// Orthogonal matrix (rows) close to the identity: Gram-Schmidt applied to
// identity columns nudged by scaled Gaussians.
std::vector<Vec> near_identity_rotation(int n, double strength,
                                        detail::SplitMix& rng) {
  while (true) {
    std::vector<Vec> basis;
    bool full = true;
    for (int i = 0; i < n; ++i) {
      Vec raw(n, 0.0);
      raw[i] = 1.0;
      for (double& x : raw) x += strength * rng.normal();
      if (!detail::gs_extend(basis, raw, 1e-9)) {
        full = false;
        break;
      }
    }
    if (full) return basis;
  }
}

Vec apply_rotation(const std::vector<Vec>& rows, const Vec& x) {
  Vec out(rows.size());
  for (size_t r = 0; r < rows.size(); ++r) out[r] = dot(rows[r], x);
  return out;
}

std::vector<long long> resolve_weights(const std::vector<long long>& weights,
                                       int m) {
  if (weights.empty()) return std::vector<long long>(m, 1);
  if (static_cast<int>(weights.size()) != m) {
    throw Error(ErrorCode::InvalidSpec, "weight list length differs from m");
  }
  return weights;
}

Instance generate_random(const RandomSpec& spec, const Tolerances& tol) {
  if (spec.n < 2 || spec.m < 1) {
    throw Error(ErrorCode::InvalidSpec, "random family needs n >= 2, m >= 1");
  }
  const std::vector<long long> weights = resolve_weights(spec.weights, spec.m);
  long long k = 0;
  for (long long w : weights) {
    if (w < 1) throw Error(ErrorCode::InvalidSpec, "weights must be >= 1");
    k += w;
  }
  std::vector<Vec> mu = draw_distinct(spec.seed, 1, spec.m, spec.n, tol);
  std::vector<Vec> lambda =
      draw_distinct(spec.seed, 2, static_cast<int>(k), spec.n, tol);
  return from_parts(spec.n, std::move(mu), weights, std::move(lambda), tol);
}

Instance generate_loop_seeded(const LoopSeededSpec& spec,
                              const Tolerances& tol) {
  if (spec.n < 2 || spec.loop_len < 2 || spec.loop_len > 16) {
    throw Error(ErrorCode::InvalidSpec,
                "loop family needs n >= 2 and loop length in [2, 16]");
  }
  if (spec.loop_len == 2 && spec.n < 3) {
    throw Error(ErrorCode::InvalidSpec,
                "a two-vertex loop needs two independent segment normals, "
                "hence dimension >= 3");
  }
  const int L = spec.loop_len;
  const int n = spec.n;

  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    detail::SplitMix rng{detail::hash_words({spec.seed, 7, attempt})};

    // Star polygon around the origin in the first coordinate plane; segment
    // normals are in-plane and exactly perpendicular by construction.
    std::vector<double> radii(L);
    std::vector<double> angles(L);
    for (int t = 0; t < L; ++t) {
      angles[t] = 2.0 * kPi * t / L +
                  (rng.uniform01() - 0.5) * 0.6 * (2.0 * kPi / L);
      radii[t] = 0.9 + 0.2 * rng.uniform01();
    }
    std::vector<Vec> points(L);
    std::vector<Vec> loop_v(L);
    for (int t = 0; t < L; ++t) {
      points[t] = planar(angles[t], n);
      for (double& x : points[t]) x *= radii[t];
      loop_v[t] = planar(angles[t], n);
    }

    std::vector<Vec> loop_u(L);
    bool good = true;
    if (L == 2) {
      Vec chord(n, 0.0);
      for (int c = 0; c < n; ++c) chord[c] = points[1][c] - points[0][c];
      Vec w(n, 0.0);
      w[0] = -chord[1];
      w[1] = chord[0];
      const double wl = norm(w);
      if (wl < 1e-9 || std::abs(dot(w, points[0])) < 0.05 * wl) continue;
      for (double& x : w) x /= wl;
      if (dot(w, points[0]) < 0.0) {
        for (double& x : w) x = -x;
      }
      loop_u[0] = w;
      Vec tilted = w;
      tilted[2] += 0.3;
      const double tl = norm(tilted);
      for (double& x : tilted) x /= tl;
      loop_u[1] = tilted;
    } else {
      for (int t = 0; t < L; ++t) {
        const Vec& a = points[t];
        const Vec& b = points[(t + 1) % L];
        Vec w(n, 0.0);
        w[0] = -(b[1] - a[1]);
        w[1] = b[0] - a[0];
        const double wl = norm(w);
        if (wl < 1e-9 || std::abs(dot(w, a)) < 0.05 * wl) {
          good = false;
          break;
        }
        for (double& x : w) x /= wl;
        if (dot(w, a) < 0.0) {
          for (double& x : w) x = -x;
        }
        loop_u[t] = w;
      }
    }
    if (!good) continue;

    std::vector<Vec> rotation = near_identity_rotation(n, 0.05, rng);
    std::vector<Vec> mu_dirs = loop_v;
    std::vector<Vec> lambda_dirs = loop_u;
    for (const Vec& d : simplex_directions(n)) {
      Vec pad = apply_rotation(rotation, d);
      mu_dirs.push_back(pad);
      lambda_dirs.push_back(std::move(pad));
    }
    try {
      return from_parts(n, std::move(mu_dirs),
                        std::vector<long long>(L + n + 1, 1),
                        std::move(lambda_dirs), tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DuplicateDirection) throw;
    }
  }
  throw Error(ErrorCode::CollisionAfterPerturbation,
              "could not plant a loop without direction collisions");
}

}  // namespace

Instance generate(const GenSpec& spec, const Tolerances& tol) {
  tol.check();
  if (const auto* tri = std::get_if<TriangleSpec>(&spec)) {
    (void)tri;
    std::vector<Vec> dirs = {planar(kPi / 2, 2), planar(7 * kPi / 6, 2),
                             planar(11 * kPi / 6, 2)};
    return from_parts(2, dirs, {1, 1, 1}, dirs, tol);
  }
  if (const auto* sim = std::get_if<SimplexSpec>(&spec)) {
    if (sim->n < 2) {
      throw Error(ErrorCode::InvalidSpec, "simplex family needs n >= 2");
    }
    std::vector<Vec> dirs = simplex_directions(sim->n);
    return from_parts(sim->n, dirs,
                      std::vector<long long>(sim->n + 1, 1), dirs, tol);
  }
  if (const auto* poly = std::get_if<RegularPolygonSpec>(&spec)) {
    if (poly->l < 3 || poly->l > 64) {
      throw Error(ErrorCode::InvalidSpec, "polygon family needs l in [3, 64]");
    }
    std::vector<Vec> mu, lambda;
    for (int t = 0; t < poly->l; ++t) {
      mu.push_back(planar(2.0 * kPi * t / poly->l + kPi / poly->l, 2));
      lambda.push_back(planar(2.0 * kPi * (t + 1) / poly->l, 2));
    }
    return from_parts(2, std::move(mu), std::vector<long long>(poly->l, 1),
                      std::move(lambda), tol);
  }
  if (const auto* rnd = std::get_if<RandomSpec>(&spec)) {
    return generate_random(*rnd, tol);
  }
  return generate_loop_seeded(std::get<LoopSeededSpec>(spec), tol);
}

Instance perturb(const Instance& inst, double magnitude, PerturbTarget which,
                 std::uint64_t seed, const Tolerances& tol) {
  if (!(magnitude > 0.0) || !(magnitude < kPi / 4)) {
    throw Error(ErrorCode::InvalidSpec,
                "perturbation magnitude must lie in (0, pi/4)");
  }
  auto rotate_dir = [&](const Vec& d, std::uint64_t tag, int index) {
    detail::SplitMix rng{detail::hash_words(
        {seed, tag, static_cast<std::uint64_t>(index)})};
    Vec tangent;
    while (true) {
      Vec g(d.size());
      for (double& x : g) x = rng.normal();
      const double along = dot(g, d);
      for (size_t c = 0; c < g.size(); ++c) g[c] -= along * d[c];
      const double len = norm(g);
      if (len > 1e-9) {
        for (double& x : g) x /= len;
        tangent = std::move(g);
        break;
      }
    }
    const double theta = magnitude * rng.uniform01();
    Vec out(d.size());
    for (size_t c = 0; c < d.size(); ++c) {
      out[c] = std::cos(theta) * d[c] + std::sin(theta) * tangent[c];
    }
    return out;
  };

  RawInstance raw;
  raw.n = inst.n;
  const bool move_mu = which != PerturbTarget::LambdaOnly;
  const bool move_lambda = which != PerturbTarget::MuOnly;
  for (int i = 0; i < inst.m(); ++i) {
    Vec d = move_mu ? rotate_dir(inst.v(i), 11, i) : inst.v(i);
    raw.mu.push_back({std::move(d), static_cast<double>(inst.mu.weights[i])});
  }
  for (int j = 0; j < inst.k(); ++j) {
    raw.lambda.push_back(move_lambda ? rotate_dir(inst.u(j), 13, j)
                                     : inst.u(j));
  }
  try {
    return validate_instance(raw, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DuplicateDirection) {
      throw Error(ErrorCode::CollisionAfterPerturbation,
                  "perturbed directions collided");
    }
    throw;
  }
}

namespace {

enum class TrialOutcome : int {
  Unfiltered = 0,
  Solvable,
  NonUnique,
  Infeasible,
  Ambiguous,
};

TrialOutcome run_trial(const GenericRateParams& params, int trial,
                       const Tolerances& tol) {
  RandomSpec spec;
  spec.n = params.n;
  spec.m = params.m;
  spec.weights = params.weights;
  spec.seed = detail::hash_words(
      {params.seed, 0x7472696131ull, static_cast<std::uint64_t>(trial)});
  const Instance inst = generate(spec, tol);
  if (is_concentrated_on_closed_hemisphere(inst.mu.dirs, tol)) {
    return TrialOutcome::Unfiltered;
  }
  if (!check_weak_aleksandrov(inst, tol).holds) {
    return TrialOutcome::Unfiltered;
  }
  switch (solve_instance(inst, tol).status) {
    case SolveStatus::Solution: return TrialOutcome::Solvable;
    case SolveStatus::NoSolution: return TrialOutcome::NonUnique;
    case SolveStatus::Infeasible: return TrialOutcome::Infeasible;
    case SolveStatus::Ambiguous: return TrialOutcome::Ambiguous;
    default: return TrialOutcome::Unfiltered;
  }
}

GenericTally tally_outcomes(const std::vector<TrialOutcome>& outcomes) {
  GenericTally tally;
  tally.trials = static_cast<int>(outcomes.size());
  for (TrialOutcome o : outcomes) {
    if (o == TrialOutcome::Unfiltered) continue;
    ++tally.filtered;
    switch (o) {
      case TrialOutcome::Solvable: ++tally.solvable; break;
      case TrialOutcome::NonUnique: ++tally.nonunique; break;
      case TrialOutcome::Infeasible: ++tally.infeasible; break;
      case TrialOutcome::Ambiguous: ++tally.ambiguous; break;
      case TrialOutcome::Unfiltered: break;
    }
  }
  return tally;
}

void check_params(const GenericRateParams& params) {
  if (params.trials < 1) {
    throw Error(ErrorCode::InvalidSpec, "trial count must be positive");
  }
}

}  // namespace

GenericTally generic_rate_serial(const GenericRateParams& params,
                                 const Tolerances& tol) {
  check_params(params);
  std::vector<TrialOutcome> outcomes(params.trials);
  for (int t = 0; t < params.trials; ++t) {
    outcomes[t] = run_trial(params, t, tol);
  }
  return tally_outcomes(outcomes);
}

GenericTally generic_rate(const GenericRateParams& params,
                          const Tolerances& tol) {
  check_params(params);
  std::vector<TrialOutcome> outcomes(params.trials);
  #pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < params.trials; ++t) {
    outcomes[t] = run_trial(params, t, tol);
  }
  return tally_outcomes(outcomes);
}

}  // namespace gip
