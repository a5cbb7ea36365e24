#pragma once

#include <functional>
#include <string>

#include "bigyro/report.hpp"

namespace bigyro {

/// A groupoid presented as black-box callables, together with a candidate
/// gyrator. Nothing here knows how the operation or the gyrations were built.
template <class T>
struct GyrogroupModel {
  std::function<T(const T&, const T&)> op;
  std::function<T(const T&)> neg;
  T zero;
  /// gyr[a, b](c)
  std::function<T(const T&, const T&, const T&)> gyr;
  /// Distance between two elements; 0 means equal.
  std::function<double(const T&, const T&)> distance;
};

/// Evaluates the gyrogroup axioms (G1)-(G4), gyrocommutativity, and the
/// gyrator identity on one sample tuple, recording into `report` under
/// `prefix` + law name. `witness()` is called only when a law fails.
template <class T, class WitnessFn>
void check_gyrogroup_sample(const GyrogroupModel<T>& g, const T& a, const T& b, const T& c, const T& d,
                            double tol, Report& report, const std::string& prefix, const WitnessFn& witness) {
  const auto& op = g.op;
  const auto& dist = g.distance;
  auto rec = [&](const char* law, double r) {
    report.record(prefix + law, r, tol, r <= tol ? std::string{} : std::string(witness()));
  };

  // (G1) left identity; the right identity is a consequence worth watching too.
  rec("G1.left_identity", dist(op(g.zero, a), a));
  rec("G1.right_identity", dist(op(a, g.zero), a));

  // (G2) left inverse.
  rec("G2.left_inverse", dist(op(g.neg(a), a), g.zero));

  // (G3) left gyroassociative law with an automorphic gyration.
  const T ab = op(a, b);
  rec("G3.left_gyroassociative", dist(op(a, op(b, c)), op(ab, g.gyr(a, b, c))));
  rec("G3.gyration_automorphism", dist(g.gyr(a, b, op(c, d)), op(g.gyr(a, b, c), g.gyr(a, b, d))));
  rec("G3.gyration_bijective", dist(g.gyr(b, a, g.gyr(a, b, c)), c));

  // (G4) left reduction property.
  rec("G4.left_reduction", dist(g.gyr(a, b, c), g.gyr(ab, b, c)));

  rec("gyrocommutative", dist(ab, g.gyr(a, b, op(b, a))));
  rec("gyrator_identity", dist(g.gyr(a, b, c), op(g.neg(ab), op(a, op(b, c)))));
}

}  // namespace bigyro
