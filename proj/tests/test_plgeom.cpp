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
#include <limits>

#include "doctest.h"
#include "hopf/error.h"
#include "hopf/oracles.h"
#include "hopf/plgeom.h"
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

std::string signs(const IntersectionPattern& p) {
  std::string s;
  for (const BoundaryPoint& b : p.points) s += to_char(b.sign);
  return s;
}

}  // namespace

TEST_CASE("polygonal linking numbers") {
  const HopfLink H = oracle::basepoint();
  const Polyline3 a = sample_circle(H.first, 64), b = sample_circle(H.second, 64);
  CHECK(gauss_linking_pl(a, b) == 1);
  CHECK(crossing_linking_pl(a, b) == 1);
  const Polyline3 rb = sample_circle(H.second.reversed(), 64);
  CHECK(gauss_linking_pl(a, rb) == -1);
  CHECK(crossing_linking_pl(a, rb) == -1);
  const Polyline3 far = sample_circle({Vec3(10, 0, 0), 1.0, Vec3::UnitZ()}, 64);
  CHECK(gauss_linking_pl(a, far) == 0);
  CHECK(crossing_linking_pl(a, far) == 0);
  CHECK(std::abs(gauss_linking_sum(a, b) - 1.0) < 1e-9);

  CHECK(kind_of([&] { gauss_linking_pl(a, a); }) == ErrorKind::TooClose);

  SplitMix64 rng(13);
  for (int n = 0; n < 200; ++n) {
    const HopfLink l = random_hopf_link(rng);
    const int res = polygon_resolution(l.first, l.second);
    const Polyline3 p = sample_circle(l.first, res), q = sample_circle(l.second, res);
    CHECK(gauss_linking_pl(p, q) == 1);
    CHECK(crossing_linking_pl(p, q) == 1);
  }
}

TEST_CASE("segment distance") {
  CHECK(segment_distance(Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0.5, 1, -1), Vec3(0.5, 1, 1)) == doctest::Approx(1.0));
  CHECK(segment_distance(Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(2, 0, 0), Vec3(3, 0, 0)) == doctest::Approx(1.0));
  CHECK(segment_distance(Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(1, 1, 0)) == doctest::Approx(1.0));
}

TEST_CASE("polyline validation") {
  Polyline3 bow{{Vec3(0, 0, 0), Vec3(1, 1, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)}, true};
  CHECK_THROWS_AS(bow.validate(), Error);
  Polyline3 tiny{{Vec3(0, 0, 0), Vec3(1, 0, 0)}, true};
  CHECK_THROWS_AS(tiny.validate(), Error);
  CHECK_NOTHROW(sample_circle(oracle::basepoint().first, 16).validate());
}

TEST_CASE("ellipsoid") {
  const Ellipsoid e(oracle::basepoint().first, 0.5);
  CHECK(e.value(Vec3(1, 0, 0)) == doctest::Approx(0.0));
  CHECK(e.value(Vec3(0, 0, 0.5)) == doctest::Approx(0.0));
  CHECK(e.value(Vec3(0, 0, 0)) == doctest::Approx(-1.0));
  CHECK(e.elevation(Vec3(3, 1, -2)) == doctest::Approx(-2.0));
  CHECK(e.normalized(Vec3(0, 0, 0.5)).norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(Ellipsoid(oracle::basepoint().first, 0.0), Error);
}

TEST_CASE("disc mesh") {
  for (int res : {8, 32, 64, 200}) {
    TriMesh m = make_disc_mesh(oracle::basepoint().second, res);
    CHECK_NOTHROW(m.validate());
    CHECK(m.boundary.size() == static_cast<std::size_t>(res));
    for (const Vec3& v : m.vertices) CHECK(std::abs(v.y()) < 1e-15);
    CHECK(m.uv.size() == m.vertices.size());
  }
  TriMesh broken = make_disc_mesh(oracle::basepoint().second, 16);
  broken.triangles.pop_back();
  CHECK_THROWS_AS(broken.validate(), Error);
}

TEST_CASE("transverse height") {
  const RoundCircle equator = oracle::basepoint().first;
  const TriMesh flat = oracle::flat_disc(64);
  const double h = find_transverse_height(flat, equator, 0.5, 2.0);
  CHECK(h >= 0.5);
  CHECK(h <= 2.0);
  CHECK(transversality_margin(flat, Ellipsoid(equator, h)) > kMinTransversality);
  // The returned height is at least as good as every coarse grid sample.
  const double best = transversality_margin(flat, Ellipsoid(equator, h));
  for (int k = 0; k < 64; ++k) {
    const double hk = 0.5 * std::pow(4.0, k / 63.0);
    CHECK(transversality_margin(flat, Ellipsoid(equator, hk)) <= best);
  }

  const TriMesh far = make_disc_mesh({Vec3(50, 0, 0), 1.0, Vec3::UnitY()}, 32);
  CHECK(transversality_margin(far, Ellipsoid(equator, 1.0)) == std::numeric_limits<double>::infinity());
  CHECK(find_transverse_height(far, equator, 0.5, 2.0) == 1.25);

  // Tangent to the unit sphere E_1 at a vertex: h = 1 is the first grid
  // sample and must be rejected.
  const TriMesh tangent = oracle::tangent_disc(32);
  CHECK(transversality_margin(tangent, Ellipsoid(equator, 1.0)) == 0.0);
  const double ht = find_transverse_height(tangent, equator, 1.0, 4.0);
  CHECK(ht != 1.0);
  CHECK(transversality_margin(tangent, Ellipsoid(equator, ht)) > kMinTransversality);

  CHECK(kind_of([&] { find_transverse_height(flat, equator, 2.0, 0.5); }) == ErrorKind::InvalidInput);
}

TEST_CASE("pattern of the flat basepoint disc") {
  const RoundCircle equator = oracle::basepoint().first;
  const TriMesh flat = oracle::flat_disc(64);
  const IntersectionPattern p = extract_intersection_pattern(flat, Ellipsoid(equator, 0.5));
  CHECK(p.points.size() == 2);
  CHECK(p.chords.empty());
  CHECK(p.circles.empty());
  CHECK(p.points[p.alpha.first].sign != p.points[p.alpha.second].sign);

  // The boundary sign changes sit at the analytic ellipse-circle
  // intersection, up to the polygon's sagitta.
  const auto [top, bottom] = oracle::basepoint_arc_endpoints(0.5);
  const Ellipsoid e(equator, 0.5);
  const Polyline3 loop = flat.boundary_polyline();
  std::vector<Vec3> roots;
  for (std::size_t i = 0; i < loop.segment_count(); ++i) {
    Vec3 a = loop.segment_start(i), b = loop.segment_end(i);
    if ((e.value(a) < 0) == (e.value(b) < 0)) continue;
    for (int it = 0; it < 60; ++it) {
      const Vec3 m = 0.5 * (a + b);
      ((e.value(m) < 0) == (e.value(a) < 0) ? a : b) = m;
    }
    roots.push_back(a);
  }
  REQUIRE(roots.size() == 2);
  for (const Vec3& r : roots) CHECK(std::min((r - top).norm(), (r - bottom).norm()) < 5e-3);
}

TEST_CASE("fixture patterns are stable across resolutions") {
  const RoundCircle equator = oracle::basepoint().first;
  for (int res : {32, 64, 128}) {
    CAPTURE(res);
    const IntersectionPattern flat = extract_intersection_pattern(oracle::flat_disc(res), Ellipsoid(equator, 2.0));
    CHECK(is_alpha_only(flat));

    const IntersectionPattern finger = extract_intersection_pattern(oracle::finger_disc(res), Ellipsoid(equator, 2.0));
    CHECK(signs(finger) == "-+++");
    CHECK(finger.alpha == std::pair<int, int>(0, 3));
    REQUIRE(finger.chords.size() == 1);
    CHECK(finger.chords[0].a == 1);
    CHECK(finger.chords[0].b == 2);
    CHECK(finger.circles.empty());

    const IntersectionPattern bubble = extract_intersection_pattern(oracle::bubble_disc(res), Ellipsoid(equator, 2.0));
    CHECK(bubble.points.size() == 2);
    CHECK(bubble.chords.empty());
    REQUIRE(bubble.circles.size() == 1);
    CHECK(!bubble.circles[0].inside.has_value());
  }
}

TEST_CASE("extraction errors") {
  const RoundCircle equator = oracle::basepoint().first;
  CHECK(kind_of([&] { extract_intersection_pattern(oracle::tangent_disc(32), Ellipsoid(equator, 1.0)); }) ==
        ErrorKind::NotTransverse);
  // A disc that meets the ellipsoid in a same-sign arc only.
  const TriMesh lonely = make_disc_mesh({Vec3(1, 0, 0.5), 0.4, Vec3::UnitY()}, 64);
  CHECK(kind_of([&] { extract_intersection_pattern(lonely, Ellipsoid(equator, 1.0)); }) == ErrorKind::NoMixedChord);
}
