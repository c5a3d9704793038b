// Copyright 2026 The hopfcoords Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <Eigen/Geometry>

#include <cmath>
#include <functional>
#include <numbers>

#include "doctest.h"
#include "hopf/error.h"
#include "hopf/oracles.h"
#include "hopf/plgeom.h"
#include "hopf/roundlink.h"
#include "hopf/sampling.h"

using namespace hopf;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidInput;
}

// Is p inside the closed disc of c (on its plane, within tol)?
bool in_disc(const RoundCircle& c, const Vec3& p, double tol) {
  const Vec3 d = p - c.center;
  return std::abs(d.dot(c.normal)) <= tol && d.norm() <= c.radius + tol;
}

}  // namespace

TEST_CASE("linking number of round circles") {
  const HopfLink H = oracle::basepoint();
  CHECK(linking_number_round(H.first, H.second) == 1);
  CHECK(linking_number_round(H.second, H.first) == 1);
  CHECK(linking_number_round(H.first, H.second.reversed()) == -1);
  CHECK(linking_number_round(H.first.reversed(), H.second) == -1);
  // Agrees with the polygonal Gauss sum on a dense sample.
  CHECK(gauss_linking_pl(sample_circle(H.first, 256), sample_circle(H.second, 256)) == 1);

  const RoundCircle far{Vec3(10, 0, 0), 1.0, Vec3(0, 0, 1)};
  CHECK(linking_number_round(H.first, far) == 0);

  const RoundCircle tangent{Vec3(2, 0, 0), 1.0, Vec3(0, 1, 0)};
  CHECK(kind_of([&] { linking_number_round(H.first, tangent); }) == ErrorKind::Degenerate);
}

TEST_CASE("arc of intersection") {
  const HopfLink H = oracle::basepoint();
  const ArcOfIntersection arc = arc_of_intersection(H);
  CHECK((arc.on_first - Vec3(1, 0, 0)).norm() < 1e-15);
  CHECK((arc.on_second - Vec3(0, 0, 0)).norm() < 1e-15);
  CHECK((arc.midpoint - Vec3(0.5, 0, 0)).norm() < 1e-15);

  const Vec3 t(3, -4, 5);
  const RigidMotion shift{Rotation3::Identity(), t};
  const ArcOfIntersection moved = arc_of_intersection(shift.apply(H));
  CHECK((moved.midpoint - arc.midpoint - t).norm() < 1e-12);

  SplitMix64 rng(21);
  for (int n = 0; n < 500; ++n) {
    const HopfLink l = random_hopf_link(rng);
    const ArcOfIntersection a = arc_of_intersection(l);
    for (const Vec3& p : {a.on_first, a.on_second}) {
      CHECK(in_disc(l.first, p, 1e-9));
      CHECK(in_disc(l.second, p, 1e-9));
    }
    CHECK(std::abs((a.on_first - l.first.center).norm() - l.first.radius) < 1e-9);
    CHECK(std::abs((a.on_second - l.second.center).norm() - l.second.radius) < 1e-9);
    CHECK(a.length() > 0);

    const Rotation3 R = random_rotation(rng);
    const RigidMotion g{R, Vec3(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3))};
    const ArcOfIntersection ga = arc_of_intersection(g.apply(l));
    CHECK((ga.midpoint - (R * a.midpoint + g.translation)).norm() < 1e-9);
  }
}

TEST_CASE("dihedral angle") {
  const HopfLink H = oracle::basepoint();
  CHECK(dihedral_angle(H) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  // Rotating the second disc about the arc line (the x-axis).
  for (double sign : {1.0, -1.0}) {
    const RigidMotion turn = RigidMotion::about_axis(Vec3::Zero(), Vec3::UnitX(), sign * 0.3);
    const HopfLink tilted{H.first, turn.apply(H.second)};
    const double theta = dihedral_angle(tilted);
    CHECK((std::abs(theta - (std::numbers::pi / 2 - 0.3)) < 1e-12 ||
           std::abs(theta - (std::numbers::pi / 2 + 0.3)) < 1e-12));
  }
  const HopfLink parallel{H.first, {Vec3(0, 0, 3), 1.0, Vec3(0, 0, 1)}};
  CHECK(kind_of([&] { dihedral_angle(parallel); }) == ErrorKind::ParallelPlanes);
}

TEST_CASE("round unknot parameters") {
  const RoundCircle c{Vec3::Zero(), 1.0, Vec3(0, 0, 1)};
  const RoundUnknotParams p = round_unknot_params(c);
  CHECK(p.center == Vec3::Zero());
  CHECK(p.radius == 1.0);
  CHECK(p.line == Vec3(0, 0, 1));
  const RoundUnknotParams q = round_unknot_params(c.reversed());
  CHECK(q.line == p.line);

  SplitMix64 rng(5);
  for (int n = 0; n < 200; ++n) {
    const RoundCircle r = random_hopf_link(rng).second;
    const RoundCircle back = round_unknot_params(r).reconstruct();
    CHECK((back.center - r.center).norm() < 1e-12);
    CHECK(back.radius == r.radius);
    CHECK(std::min((back.normal - r.normal).norm(), (back.normal + r.normal).norm()) < 1e-12);
  }
}

TEST_CASE("validate_hopf") {
  const HopfLink H = oracle::basepoint();
  CHECK_NOTHROW(validate_hopf(H.first, H.second));
  const RoundCircle inner{Vec3::Zero(), 0.5, Vec3(0, 0, 1)};
  CHECK(kind_of([&] { validate_hopf(H.first, inner); }) == ErrorKind::NotLinked);
  const RoundCircle touching{Vec3(2, 0, 0), 1.0, Vec3(0, 1, 0)};
  CHECK(kind_of([&] { validate_hopf(H.first, touching); }) == ErrorKind::Degenerate);
}

TEST_CASE("circle and link distances") {
  const HopfLink H = oracle::basepoint();
  const RoundCircle far{Vec3(4, 0, 0), 1.0, Vec3(0, 0, 1)};
  CHECK(circle_distance(H.first, far) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(link_distance(H, H) == 0.0);
}
