#include "gip/feasibility.hpp"

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "gip/instances.hpp"

using namespace gip;

namespace {

const Tolerances kTol;

Instance starved_instance() {
  // mu atom 0 demands 3 but only two lambda atoms see it.
  RawInstance raw;
  raw.n = 2;
  raw.mu = {{{0.0, 1.0}, 3.0}, {{1.0, 0.0}, 1.0}};
  raw.lambda = {{0.6, 0.8}, {-0.6, 0.8}, {0.0, -1.0}, {0.8, -0.6}};
  return validate_instance(raw, kTol);
}

UnitVec unit(Vec raw) { return UnitVec::from_raw(std::move(raw), kTol); }

bool witness_covers(const UnitVec& w, const std::vector<UnitVec>& dirs) {
  if (std::abs(norm(w.coords) - 1.0) > 1e-6) return false;
  for (const UnitVec& d : dirs) {
    if (dot(w.coords, d.coords) > kTol.eps_dot) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("weak Aleksandrov holds on the triangle") {
  Instance inst = generate(TriangleSpec{}, kTol);
  WeakAleksandrovResult res = check_weak_aleksandrov(inst, kTol);
  CHECK(res.holds);
  CHECK_FALSE(res.violating_subset.has_value());
}

TEST_CASE("weak Aleksandrov fails with a starved mu atom") {
  Instance inst = starved_instance();
  WeakAleksandrovResult res = check_weak_aleksandrov(inst, kTol);
  CHECK_FALSE(res.holds);
  REQUIRE(res.violating_subset.has_value());
  CHECK(*res.violating_subset == std::vector<int>{0});
  CHECK(res.slack == -1);
}

TEST_CASE("uniform_alpha frozen values") {
  CHECK(uniform_alpha(generate(TriangleSpec{}, kTol), kTol) ==
        doctest::Approx(std::asin(1.0)).epsilon(1e-12));
  CHECK(uniform_alpha(generate(RegularPolygonSpec{4}, kTol), kTol) ==
        doctest::Approx(std::atan(1.0)).epsilon(1e-9));  // pi/4
  CHECK_THROWS_AS(uniform_alpha(starved_instance(), kTol), Error);
}

TEST_CASE("hemisphere check: spanning direction sets are not concentrated") {
  Instance tri = generate(TriangleSpec{}, kTol);
  CHECK_FALSE(is_concentrated_on_closed_hemisphere(tri.mu.dirs, kTol));

  std::vector<UnitVec> octa;
  for (int axis = 0; axis < 3; ++axis) {
    for (double sign : {1.0, -1.0}) {
      Vec d(3, 0.0);
      d[axis] = sign;
      octa.push_back(unit(std::move(d)));
    }
  }
  CHECK_FALSE(is_concentrated_on_closed_hemisphere(octa, kTol));
}

TEST_CASE("hemisphere check: rank-deficient sets are concentrated") {
  std::vector<UnitVec> dirs = {unit({0.0, 1.0, 0.0}), unit({0.0, -1.0, 0.0}),
                               unit({0.0, 0.6, 0.8})};
  auto witness = is_concentrated_on_closed_hemisphere(dirs, kTol);
  REQUIRE(witness.has_value());
  CHECK(witness_covers(*witness, dirs));
}

TEST_CASE("hemisphere check: boundary-touching sets are concentrated") {
  std::vector<UnitVec> dirs = {unit({0.0, 1.0}), unit({1.0, 0.0})};
  auto witness = is_concentrated_on_closed_hemisphere(dirs, kTol);
  REQUIRE(witness.has_value());
  CHECK(witness_covers(*witness, dirs));
}

TEST_CASE("hemisphere check: open covers in the plane") {
  std::vector<UnitVec> dirs = {unit({0.0, 1.0}), unit({1.0, 0.0}),
                               unit({-0.6, -0.8})};
  CHECK_FALSE(is_concentrated_on_closed_hemisphere(dirs, kTol));
}

TEST_CASE("hemisphere check caps the subset enumeration") {
  std::vector<UnitVec> dirs;
  const int n = 10;
  for (int i = 0; i < n; ++i) {
    Vec d(n, 0.0);
    d[i] = 1.0;
    dirs.push_back(unit(std::move(d)));
  }
  const double half = std::sqrt(0.5);
  for (int a = 0; a < n && static_cast<int>(dirs.size()) < 30; ++a) {
    for (int b = a + 1; b < n && static_cast<int>(dirs.size()) < 30; ++b) {
      Vec d(n, 0.0);
      d[a] = half;
      d[b] = half;
      dirs.push_back(unit(std::move(d)));
    }
  }
  REQUIRE(dirs.size() == 30);
  try {
    is_concentrated_on_closed_hemisphere(dirs, kTol);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("hemisphere check rejects mixed dimensions") {
  std::vector<UnitVec> dirs = {unit({0.0, 1.0}), unit({1.0, 0.0, 0.0})};
  CHECK_THROWS_AS(is_concentrated_on_closed_hemisphere(dirs, kTol), Error);
}

TEST_CASE("analyze_feasibility aggregates the verdicts") {
  FeasibilityReport tri = analyze_feasibility(generate(TriangleSpec{}, kTol), kTol);
  CHECK(tri.weak.holds);
  CHECK_FALSE(tri.mu_concentrated);
  REQUIRE(tri.alpha.has_value());
  CHECK(*tri.alpha == doctest::Approx(std::asin(1.0)));

  FeasibilityReport bad = analyze_feasibility(starved_instance(), kTol);
  CHECK_FALSE(bad.weak.holds);
  CHECK_FALSE(bad.alpha.has_value());
}

TEST_CASE("concentrated mu is reported with a witness") {
  RawInstance raw;
  raw.n = 2;
  raw.mu = {{{0.0, 1.0}, 2.0}};
  raw.lambda = {{0.6, 0.8}, {-0.6, 0.8}};
  Instance inst = validate_instance(raw, kTol);
  FeasibilityReport rep = analyze_feasibility(inst, kTol);
  CHECK(rep.mu_concentrated);
  REQUIRE(rep.hemisphere_witness.has_value());
  CHECK(witness_covers(*rep.hemisphere_witness, inst.mu.dirs));
}
