#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "gip/types.hpp"

namespace gip {

// Instance generators. Everything is deterministic in its parameters: random
// draws come from a counter-based generator seeded by hashing, so results do
// not depend on call order or thread count.

struct TriangleSpec {};  // n=2, three symmetric directions, u = v

struct SimplexSpec {
  int n = 3;  // n+1 regular simplex directions, u = v
};

// Regular l-gon tie family: v_t at angle 2*pi*t/l + pi/l, u_t at
// 2*pi*(t+1)/l. Every u_t scores its two flanking v's equally, so the
// functional has exactly two maximizers and no solution exists.
struct RegularPolygonSpec {
  int l = 4;
};

struct RandomSpec {
  int n = 3;
  int m = 4;
  std::vector<long long> weights;  // size m, defaults to all ones when empty
  std::uint64_t seed = 0;
};

// Plants a closed edge-normal loop (loop_len vertices) and pads both measures
// with a slightly rotated regular simplex so the instance stays usable.
struct LoopSeededSpec {
  int n = 3;
  int loop_len = 4;
  std::uint64_t seed = 0;
};

using GenSpec = std::variant<TriangleSpec, SimplexSpec, RegularPolygonSpec,
                             RandomSpec, LoopSeededSpec>;

// Throws InvalidSpec on out-of-range parameters (polygon l in [3, 64],
// dimensions >= 2, loop length in [2, 16]).
Instance generate(const GenSpec& spec, const Tolerances& tol);

enum class PerturbTarget { MuOnly, LambdaOnly, Both };

// Rotates each selected direction by an independent random angle <= magnitude
// (radians, in (0, pi/4)) inside its tangent plane. Throws
// CollisionAfterPerturbation when the result violates distinctness.
Instance perturb(const Instance& inst, double magnitude, PerturbTarget which,
                 std::uint64_t seed, const Tolerances& tol);

struct GenericRateParams {
  int n = 3;
  int m = 5;
  std::vector<long long> weights;  // defaults to all ones when empty
  int trials = 100;
  std::uint64_t seed = 0;
};

struct GenericTally {
  int trials = 0;
  int filtered = 0;  // passing weak Aleksandrov + non-concentration
  int solvable = 0;
  int nonunique = 0;
  int infeasible = 0;
  int ambiguous = 0;
};

// Monte Carlo estimate of how often random instances are solvable. Each trial
// draws a fresh instance from a per-trial RNG stream keyed by (seed, trial),
// filters on the feasibility preconditions, and tallies the full pipeline
// outcome. solvable + nonunique + infeasible + ambiguous == filtered. The
// parallel variant fans trials across threads; tallies are identical to the
// serial reference for any thread count.
GenericTally generic_rate(const GenericRateParams& params, const Tolerances& tol);
GenericTally generic_rate_serial(const GenericRateParams& params,
                                 const Tolerances& tol);

}  // namespace gip
