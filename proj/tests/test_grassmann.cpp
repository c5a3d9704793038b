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

#include <cmath>
#include <functional>
#include <numbers>

#include "doctest.h"
#include "hopf/error.h"
#include "hopf/grassmann.h"
#include "hopf/oracles.h"
#include "hopf/plgeom.h"
#include "hopf/sampling.h"

using namespace hopf;

namespace {

const Quaternion kOne{1, 0, 0, 0}, kI{0, 1, 0, 0}, kJ{0, 0, 1, 0}, kK{0, 0, 0, 1};

bool close(const Quaternion& a, const Quaternion& b, double tol) { return max_abs_diff(a, b) <= tol; }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidInput;
}

// Are the two planes the same unoriented subspace?
bool same_span(const Plane2in4& a, const Plane2in4& b, double tol) {
  const Vec4 bx = to_vec4(b.x), by = to_vec4(b.y);
  for (const Vec4& v : {to_vec4(a.x), to_vec4(a.y)}) {
    const Vec4 r = v - v.dot(bx) * bx - v.dot(by) * by;
    if (r.norm() > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("mu and nu") {
  CHECK(close(mu(kOne, kI), -kI, 0.0));
  CHECK(close(nu(kOne, kI), kI, 0.0));
  CHECK(close(mu(kJ, kK), -kI, 0.0));
  CHECK(close(nu(kJ, kK), -kI, 0.0));
  CHECK(kind_of([] { mu(kOne, kOne); }) == ErrorKind::NotOrthonormal);
  CHECK(kind_of([] { nu(kOne, Quaternion{0, 2, 0, 0}); }) == ErrorKind::NotOrthonormal);

  const double c = std::cos(std::numbers::pi / 8), s = std::sin(std::numbers::pi / 8);
  const Quaternion rot{c, s, 0, 0};
  const Quaternion e{std::cos(std::numbers::pi / 4), std::sin(std::numbers::pi / 4), 0, 0};
  SplitMix64 rng(4);
  for (int n = 0; n < 2000; ++n) {
    const Plane2in4 p = random_plane(rng);
    const Quaternion m = mu(p.x, p.y), v = nu(p.x, p.y);
    CHECK(std::abs(m.w) < 1e-10);
    CHECK(std::abs(v.w) < 1e-10);
    CHECK(std::abs(m.norm() - 1) < 1e-10);
    CHECK(std::abs(v.norm() - 1) < 1e-10);
    // Independent formula through 4x4 multiplication matrices.
    CHECK((to_vec4(m) - oracle::mu(to_vec4(p.x), to_vec4(p.y))).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((to_vec4(v) - oracle::nu(to_vec4(p.x), to_vec4(p.y))).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(close(mu(p.x * e, p.y * e), m, 1e-9));
    CHECK(close(nu(e * p.x, e * p.y), v, 1e-9));
    CHECK(close(mu(p.x * rot, p.y * rot), m, 1e-9));
  }
}

TEST_CASE("xi") {
  const auto [m, v] = xi(Plane2in4::make(kOne, kI));
  CHECK(close(m, -kI, 1e-12));
  CHECK(close(v, kI, 1e-12));

  SplitMix64 rng(6);
  for (int n = 0; n < 1000; ++n) {
    const Plane2in4 p = random_plane(rng);
    const auto [a, b] = xi(p);
    const auto [fa, fb] = xi({p.x, -p.y});
    CHECK(fa == -a);
    CHECK(fb == -b);
    const double t = 0.3;
    const Vec4 x = to_vec4(p.x), y = to_vec4(p.y);
    const Plane2in4 turned{from_vec4(std::cos(t) * x + std::sin(t) * y), from_vec4(-std::sin(t) * x + std::cos(t) * y)};
    const auto [ta, tb] = xi(turned);
    CHECK(close(ta, a, 1e-9));
    CHECK(close(tb, b, 1e-9));
  }
}

TEST_CASE("orthogonal complement") {
  const Plane2in4 base = Plane2in4::make(kOne, kI);
  const Plane2in4 c = orthogonal_complement(base);
  CHECK(same_span(c, Plane2in4::make(kJ, kK), 1e-15));
  CHECK(same_span(orthogonal_complement(c), base, 1e-15));
  const auto [cm, cn] = xi(c);
  CHECK(close(cm, -kI, 1e-12));
  CHECK(close(cn, -kI, 1e-12));

  SplitMix64 rng(8);
  for (int n = 0; n < 1000; ++n) {
    const Plane2in4 p = random_plane(rng);
    const Plane2in4 q = orthogonal_complement(p);
    Eigen::Matrix4d B;
    B << to_vec4(p.x), to_vec4(p.y), to_vec4(q.x), to_vec4(q.y);
    CHECK((B.transpose() * B - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(B.determinant() > 0);
    CHECK(same_span(orthogonal_complement(q), p, 1e-9));
  }
}

TEST_CASE("canonical great Hopf link") {
  const RP2Pair base = canonical_great_hopf(Plane2in4::make(kOne, kI));
  CHECK(base.first == Vec3(1, 0, 0));
  CHECK(base.second == Vec3(1, 0, 0));
  CHECK(canonical_great_hopf(Plane2in4::make(kJ, kK)) == base);
  CHECK(canonicalize_rp2(Vec3(0, -1, 2)) == Vec3(0, 1, -2));
  CHECK(canonicalize_rp2(Vec3(-1e-12, 1, 0)) == Vec3(-1e-12, 1, 0));

  SplitMix64 rng(15);
  for (int n = 0; n < 1000; ++n) {
    const Plane2in4 p = random_plane(rng);
    const RP2Pair r = canonical_great_hopf(p);
    const Plane2in4 c = orthogonal_complement(p);
    for (const Plane2in4& q : {c, Plane2in4{p.x, -p.y}, Plane2in4{-p.x, p.y}, Plane2in4{p.y, p.x}, Plane2in4{c.y, c.x}}) {
      const RP2Pair rq = canonical_great_hopf(q);
      CHECK(rp2_distance(rq.first, r.first) < 1e-9);
      CHECK(rp2_distance(rq.second, r.second) < 1e-9);
    }
  }
}

TEST_CASE("great circles and stereographic projection") {
  CHECK_THROWS_AS(great_circle_points(Plane2in4::make(kOne, kI), 4), Error);
  const auto pts = great_circle_points(Plane2in4::make(kOne, kI), 8);
  CHECK((pts[0] - Vec4(1, 0, 0, 0)).norm() < 1e-15);
  CHECK((pts[2] - Vec4(0, 1, 0, 0)).norm() < 1e-15);
  CHECK((pts[4] - Vec4(-1, 0, 0, 0)).norm() < 1e-15);
  CHECK((pts[6] - Vec4(0, -1, 0, 0)).norm() < 1e-15);

  CHECK(kind_of([] { stereographic(Vec4(0, 0, 0, 1)); }) == ErrorKind::PoleProximity);

  SplitMix64 rng(16);
  for (int n = 0; n < 1000; ++n) {
    const Vec4 p = to_vec4(random_unit_quaternion(rng));
    CHECK((inverse_stereographic(stereographic(p)) - p).norm() < 1e-9);
    const Vec4 pole = to_vec4(random_unit_quaternion(rng));
    if ((p - pole).norm() > 1e-3) CHECK((inverse_stereographic(stereographic(p, pole), pole) - p).norm() < 1e-9);
  }

  // The two coordinate great circles project to a Hopf link.
  const Plane2in4 first = Plane2in4::make(kOne, kI), second = Plane2in4::make(kJ, kK);
  for (const Vec4& pole : std::vector<Vec4>{Vec4(1, 1, 1, 1) / 2, Vec4(0.1, 0.7, -0.5, 0.5).normalized()}) {
    Polyline3 a, b;
    for (const Vec4& p : great_circle_points(first, 256)) a.vertices.push_back(stereographic(p, pole));
    for (const Vec4& p : great_circle_points(second, 256)) b.vertices.push_back(stereographic(p, pole));
    CHECK(std::abs(gauss_linking_pl(a, b)) == 1);
  }
}
