#pragma once

#include "logmot/fan.hpp"
#include "logmot/snc.hpp"

namespace logmot {
namespace presets {

// The affine space A^n: one maximal smooth cone spanned by the standard basis.
inline Fan affine_fan(int n) {
  FanData d;
  d.dim = n;
  Cone top;
  for (int i = 0; i < n; ++i) {
    RayVec e(n, 0);
    e[i] = 1;
    d.rays.push_back(std::move(e));
    top.push_back(i);
  }
  if (n > 0) d.cones.push_back(std::move(top));
  return validate_fan(d);
}

inline Fan p1_fan() {
  return validate_fan({1, {{1}, {-1}}, {{0}, {1}}});
}

inline Fan p2_fan() {
  return validate_fan({2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}});
}

inline Fan p3_fan() {
  return validate_fan({3,
                       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                       {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}});
}

inline Fan p1xp1_fan() {
  return validate_fan(
      {2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}});
}

// A^2 minus the origin: the two coordinate rays without the spanning 2-cone.
inline Fan a2_minus_origin_fan() {
  return validate_fan({2, {{1, 0}, {0, 1}}, {{0}, {1}}});
}

// Blowup of A^2 at the origin, as a fan.
inline Fan blowup_a2_fan() {
  return validate_fan({2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 2}, {1, 2}}});
}

// (P^1, D) with |D| = 0, 1 or 2 boundary points, as a stratum table.
inline SncSpec p1_pair(int points) {
  SncSpec spec;
  spec.dim = 1;
  MotiveClass interior = MotiveClass::lefschetz() + MotiveClass::constant(1);
  for (int i = 0; i < points; ++i) {
    spec.components.push_back("D" + std::to_string(i));
    interior -= MotiveClass::constant(1);
    spec.open_strata[{i}] = MotiveClass::constant(1);
  }
  spec.open_strata[{}] = interior;
  return spec;
}

// (P^2, triangle of coordinate lines).
inline SncSpec p2_triangle() {
  SncSpec spec;
  spec.dim = 2;
  spec.components = {"E0", "E1", "E2"};
  MotiveClass gm = MotiveClass::gm();
  spec.open_strata[{}] = gm.pow(2);
  for (int i = 0; i < 3; ++i) spec.open_strata[{i}] = gm;
  spec.open_strata[{0, 1}] = MotiveClass::constant(1);
  spec.open_strata[{0, 2}] = MotiveClass::constant(1);
  spec.open_strata[{1, 2}] = MotiveClass::constant(1);
  return spec;
}

// The four constant-free base classes used by the oracle-agreement suites:
// pt, P^1, P^2 and P^1 x P^1, as L-polynomials.
inline std::vector<std::pair<MotiveClass, unsigned>> constant_free_bases() {
  MotiveClass l = MotiveClass::lefschetz();
  MotiveClass one = MotiveClass::constant(1);
  return {
      {one, 0},
      {l + one, 1},
      {l.pow(2) + l + one, 2},
      {(l + one).pow(2), 2},
  };
}

}  // namespace presets
}  // namespace logmot
