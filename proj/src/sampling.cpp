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

#include "hopf/sampling.h"

#include <cmath>
#include <numbers>

namespace hopf {

namespace {

// Non-crossing perfect matching of positions [lo, hi) (even length).
void random_matching(SplitMix64& rng, int lo, int hi, std::vector<std::pair<int, int>>& out) {
  while (lo < hi) {
    const int partner = lo + 1 + 2 * rng.below((hi - lo) / 2);
    out.emplace_back(lo, partner);
    random_matching(rng, lo + 1, partner, out);
    lo = partner + 1;
  }
}

}  // namespace

Quaternion random_unit_quaternion(SplitMix64& rng) {
  while (true) {
    const Quaternion q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    if (q.norm() > 1e-6) return q.normalized();
  }
}

Rotation3 random_rotation(SplitMix64& rng) {
  return conjugation_action(random_unit_quaternion(rng));
}

HopfLink random_hopf_link(SplitMix64& rng) {
  while (true) {
    const Rotation3 R = random_rotation(rng);
    const Vec3 n1 = R.col(0), v = R.col(1), side1 = R.col(2);  // side1 = n1 x v
    const Vec3 m(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5));
    const double arc = rng.uniform(0.2, 1.8);
    const double theta = rng.uniform(0.25, std::numbers::pi - 0.25);
    const Vec3 n2 = std::cos(theta) * n1 + std::sin(theta) * side1;
    const Vec3 side2 = n2.cross(v);
    const double r1 = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
    const double r2 = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
    const double b1 = rng.uniform(-1.2, 1.2);
    const double b2 = rng.uniform(-1.2, 1.2);
    // Each circle's chord on the arc line must reach past the far endpoint.
    if (2.0 * r1 * std::cos(b1) <= 1.05 * arc || 2.0 * r2 * std::cos(b2) <= 1.05 * arc) continue;
    const Vec3 end1 = m + 0.5 * arc * v;  // on the first circle
    const Vec3 end2 = m - 0.5 * arc * v;  // on the second circle
    const Vec3 c1 = end1 + r1 * (-std::cos(b1) * v + std::sin(b1) * side1);
    const Vec3 c2 = end2 + r2 * (std::cos(b2) * v + std::sin(b2) * side2);
    HopfLink link{{c1, r1, n1}, {c2, r2, n2}};
    if (circle_distance(link.first, link.second) < 0.02) continue;
    if (linking_number_round(link.first, link.second) < 0) link.second = link.second.reversed();
    return link;
  }
}

Plane2in4 random_plane(SplitMix64& rng) {
  while (true) {
    const Vec4 a(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    const Vec4 b(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    const Vec4 x = a.normalized();
    const Vec4 y = b - x.dot(b) * x;
    if (a.norm() > 1e-3 && y.norm() > 1e-3) return Plane2in4::spanned_by(a, b);
  }
}

IntersectionPattern random_pattern(SplitMix64& rng, int max_chords, int max_circles) {
  const int m = rng.below(max_chords + 1);
  const int n = 2 * (m + 1);
  std::vector<std::pair<int, int>> matching;
  random_matching(rng, 0, n, matching);
  const int alpha = rng.below(m + 1);

  IntersectionPattern p;
  p.points.resize(n);
  for (int i = 0; i < n; ++i) p.points[i].index = i;
  for (int c = 0; c < m + 1; ++c) {
    const auto [a, b] = matching[c];
    if (c == alpha) {
      const bool plus_first = rng.below(2) == 0;
      p.points[a].sign = plus_first ? Sign::Plus : Sign::Minus;
      p.points[b].sign = plus_first ? Sign::Minus : Sign::Plus;
      p.alpha = {a, b};
    } else {
      const Sign s = rng.below(2) == 0 ? Sign::Plus : Sign::Minus;
      p.points[a].sign = s;
      p.points[b].sign = s;
      p.chords.push_back({static_cast<int>(p.chords.size()), a, b});
    }
  }
  const int circles = rng.below(max_circles + 1);
  for (int k = 0; k < circles; ++k) {
    const int tag = rng.below(m + 1);
    p.circles.push_back({tag == m ? std::nullopt : std::optional<int>(tag)});
  }
  return p;
}

}  // namespace hopf
