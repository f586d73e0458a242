#include <algorithm>
#include <cmath>
#include <optional>

#include "detail/geometry.hpp"
#include "gip/feasibility.hpp"

namespace gip {

namespace detail {

bool gs_extend(std::vector<Vec>& basis, const Vec& raw, double eps) {
  Vec r = raw;
  for (const Vec& b : basis) {
    const double c = dot(r, b);
    for (size_t t = 0; t < r.size(); ++t) r[t] -= c * b[t];
  }
  // Second orthogonalization pass keeps the basis clean for near-dependent
  // inputs.
  for (const Vec& b : basis) {
    const double c = dot(r, b);
    for (size_t t = 0; t < r.size(); ++t) r[t] -= c * b[t];
  }
  const double len = norm(r);
  if (len <= eps) return false;
  for (double& c : r) c /= len;
  basis.push_back(std::move(r));
  return true;
}

std::optional<Vec> orthogonal_complement_dir(const std::vector<Vec>& basis,
                                             int n, double eps) {
  std::vector<Vec> extended = basis;
  for (int d = 0; d < n; ++d) {
    Vec e(n, 0.0);
    e[d] = 1.0;
    if (gs_extend(extended, e, eps)) return extended.back();
  }
  return std::nullopt;
}

}  // namespace detail

namespace {

using detail::gs_extend;
using detail::orthogonal_complement_dir;

constexpr double kRankEps = 1e-9;

double max_dot_against(const Vec& w, const std::vector<UnitVec>& dirs) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const UnitVec& d : dirs) worst = std::max(worst, dot(w, d.coords));
  return worst;
}

double subset_count(int m, int r) {
  double c = 1.0;
  for (int t = 0; t < r; ++t) c = c * (m - t) / (t + 1);
  return c;
}

}  // namespace

// A closed hemisphere {x : w.x <= 0} contains every direction iff the origin
// is not interior to their convex hull. If one exists, some witness is
// orthogonal to the whole span (rank-deficient case) or spans the null space
// of n-1 of the directions (an extreme ray of the polar cone), so checking
// those candidates decides the question.
std::optional<UnitVec> is_concentrated_on_closed_hemisphere(
    const std::vector<UnitVec>& dirs, const Tolerances& tol) {
  if (dirs.empty()) {
    throw Error(ErrorCode::EmptyMeasure, "hemisphere test needs directions");
  }
  const int n = dirs[0].dim();
  if (n < 2) {
    throw Error(ErrorCode::DimensionTooSmall, "hemisphere test needs n >= 2");
  }
  for (const UnitVec& d : dirs) {
    if (d.dim() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "hemisphere test directions must share a dimension");
    }
  }
  const int m = static_cast<int>(dirs.size());

  std::vector<Vec> span;
  for (const UnitVec& d : dirs) gs_extend(span, d.coords, kRankEps);
  if (static_cast<int>(span.size()) < n) {
    auto w = orthogonal_complement_dir(span, n, kRankEps);
    // The complement of a proper subspace is never empty.
    return UnitVec{*w};
  }

  if (subset_count(m, n - 1) > 1e6) {
    throw Error(ErrorCode::TooLarge,
                "hemisphere witness enumeration exceeds the desk-scale cap");
  }

  // Enumerate (n-1)-subsets in lexicographic order; deterministic output.
  std::vector<int> pick(n - 1);
  for (int t = 0; t < n - 1; ++t) pick[t] = t;
  while (true) {
    std::vector<Vec> basis;
    for (int idx : pick) gs_extend(basis, dirs[idx].coords, kRankEps);
    if (static_cast<int>(basis.size()) == n - 1) {
      if (auto w = orthogonal_complement_dir(basis, n, kRankEps)) {
        if (max_dot_against(*w, dirs) <= tol.eps_dot) return UnitVec{*w};
        Vec neg = *w;
        for (double& c : neg) c = -c;
        if (max_dot_against(neg, dirs) <= tol.eps_dot) return UnitVec{neg};
      }
    }
    // Next combination.
    int t = n - 2;
    while (t >= 0 && pick[t] == m - (n - 1) + t) --t;
    if (t < 0) break;
    ++pick[t];
    for (int s = t + 1; s < n - 1; ++s) pick[s] = pick[s - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace gip
