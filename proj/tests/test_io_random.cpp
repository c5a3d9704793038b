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

#include "doctest.h"
#include "hopf/error.h"
#include "hopf/io.h"
#include "hopf/oracles.h"
#include "hopf/random.h"
#include "hopf/sampling.h"

using namespace hopf;

TEST_CASE("SplitMix64 reference stream") {
  // Published outputs for seed 1234567.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("SplitMix64 distributions") {
  SplitMix64 rng(42);
  double sum = 0, sq = 0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const int b = rng.below(7);
    CHECK(b >= 0);
    CHECK(b < 7);
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / n) < 0.02);
  CHECK(std::abs(sq / n - 1.0) < 0.02);

  SplitMix64 a(5), b(5);
  SplitMix64 ca = a.split(), cb = b.split();
  CHECK(ca.next() == cb.next());
  CHECK(a.next() == b.next());
}

TEST_CASE("link and quaternion JSON") {
  SplitMix64 rng(1);
  for (int n = 0; n < 100; ++n) {
    const HopfLink l = random_hopf_link(rng);
    const Json j = link_to_json(l);
    CHECK(link_from_json(Json::parse(j.dump())).first.center == l.first.center);
    CHECK(link_to_json(link_from_json(j)) == j);
    const Quaternion q = random_unit_quaternion(rng);
    CHECK(quaternion_from_json(Json::parse(quaternion_to_json(q).dump())) == q);
  }
  CHECK_THROWS_AS(link_from_json(Json::parse(R"({"components": [1]})")), Error);
  CHECK_THROWS_AS(link_from_json(Json::parse(R"({"components": []})")), Error);
  CHECK_THROWS_AS(circle_from_json(Json::parse(R"({"center": [0,0], "radius": 1, "normal": [0,0,1]})")), Error);
  CHECK_THROWS_AS(circle_from_json(Json::parse(R"({"center": [0,0,0], "radius": -1, "normal": [0,0,1]})")), Error);
  CHECK_THROWS_AS(quaternion_from_json(Json::parse("[1, 0, 0]")), Error);
}

TEST_CASE("pattern and schedule JSON") {
  SplitMix64 rng(2);
  for (int n = 0; n < 100; ++n) {
    const IntersectionPattern p = random_pattern(rng);
    const Json j = pattern_to_json(p);
    CHECK(pattern_to_json(pattern_from_json(Json::parse(j.dump()))) == j);
    const Schedule s = make_schedule(p);
    CHECK(schedule_from_json(Json::parse(schedule_to_json(s).dump())) == s);
  }
  const Json bad = Json::parse(R"({"points": [{"index": 0, "sign": "+"}, {"index": 1, "sign": "+"}],
                                   "chords": [], "alpha": [0, 1], "circles": []})");
  CHECK_THROWS_AS(pattern_from_json(bad), Error);
  CHECK_THROWS_AS(pattern_from_json(Json::parse("{}")), Error);
}

TEST_CASE("plane and scene JSON") {
  SplitMix64 rng(3);
  const Plane2in4 p = random_plane(rng);
  const Plane2in4 back = plane_from_json(Json::parse(plane_to_json(p).dump()));
  CHECK(back.x == p.x);
  CHECK(back.y == p.y);

  Scene scene{oracle::finger_disc(32), oracle::basepoint().first, 0.5, 2.0};
  const Json j = scene_to_json(scene);
  const Scene again = scene_from_json(Json::parse(j.dump()));
  CHECK(scene_to_json(again) == j);
  CHECK(again.disc_mesh.vertices == scene.disc_mesh.vertices);

  const Json flat = Json::parse(R"({"disc_mesh": {"circle": {"center": [1,0,0], "radius": 1, "normal": [0,1,0]},
                                                  "resolution": 64},
                                    "equator": {"center": [0,0,0], "radius": 1, "normal": [0,0,1]},
                                    "h_range": [0.5, 2]})");
  const Scene s = scene_from_json(flat);
  CHECK(s.disc_mesh.boundary.size() == 64);
  CHECK(s.h_max == 2.0);
  CHECK_THROWS_AS(scene_from_json(Json::parse(R"({"equator": 1})")), Error);
}

TEST_CASE("files") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), Error);
}
