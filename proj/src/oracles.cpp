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

#include "hopf/oracles.h"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hopf::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

TriMesh bump(TriMesh m, const Vec3& center, double radius, const Vec3& displacement) {
  for (Vec3& v : m.vertices) {
    const double d = (v - center).norm();
    if (d < radius) {
      const double s = 1.0 - (d / radius) * (d / radius);
      v += s * s * displacement;
    }
  }
  m.uv.clear();
  return m;
}

std::set<int> walk(int from, int to, int n) {
  std::set<int> out;
  for (int i = from;; i = (i + 1) % n) {
    out.insert(i);
    if (i == to) break;
  }
  return out;
}

}  // namespace

HopfLink basepoint() {
  return {{Vec3(0, 0, 0), 1.0, Vec3(0, 0, 1)}, {Vec3(1, 0, 0), 1.0, Vec3(0, 1, 0)}};
}

Quaternion lift(const Rotation3& R) {
  const Eigen::Quaterniond q(R);
  return {q.w(), q.x(), q.y(), q.z()};
}

std::vector<Quaternion> deck_lifts() {
  const double h = std::sqrt(0.5);
  std::vector<Quaternion> out = {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, h, 0, h}, {0, h, 0, -h}};
  for (std::size_t i = 0; i < 4; ++i) out.push_back(-out[i]);
  return out;
}

Quaternion canonical_orbit_point(const Quaternion& q) {
  std::vector<Eigen::Vector4d> orbit;
  for (const Quaternion& g : deck_lifts()) {
    const Vec4 p = product(Vec4(q.w, q.x, q.y, q.z), Vec4(g.w, g.x, g.y, g.z));
    orbit.push_back(p);
  }
  Vec4 best = orbit[0];
  for (const Vec4& p : orbit) {
    for (int i = 0; i < 4; ++i) {
      if (p[i] > best[i] + 1e-9) {
        best = p;
        break;
      }
      if (p[i] < best[i] - 1e-9) break;
    }
  }
  return {best[0], best[1], best[2], best[3]};
}

HopfLink rotate_link(const HopfLink& link, const Vec3& point, const Vec3& axis, double angle) {
  const Eigen::Matrix3d R = Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
  auto move = [&](const RoundCircle& c) {
    return RoundCircle{point + R * (c.center - point), c.radius, R * c.normal};
  };
  return {move(link.first), move(link.second)};
}

std::vector<HopfLink> half_turn_loop(const HopfLink& link, const Vec3& point, const Vec3& axis,
                                     int samples) {
  std::vector<HopfLink> loop;
  for (int k = 0; k <= samples; ++k) loop.push_back(rotate_link(link, point, axis, kPi * k / samples));
  return loop;
}

std::set<int> region_points(const IntersectionPattern& p, const Chord& c) {
  const int n = static_cast<int>(p.points.size());
  const std::set<int> one = walk(c.a, c.b, n);
  if (one.count(p.alpha.first) || one.count(p.alpha.second)) return walk(c.b, c.a, n);
  return one;
}

bool region_contains(const IntersectionPattern& p, const Chord& outer, const Chord& inner) {
  if (outer.id == inner.id) return false;
  const std::set<int> big = region_points(p, outer);
  const std::set<int> small = region_points(p, inner);
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool is_linear_extension(const IntersectionPattern& p, const std::vector<int>& order) {
  std::vector<int> sorted = order, ids;
  for (const Chord& c : p.chords) ids.push_back(c.id);
  std::sort(sorted.begin(), sorted.end());
  std::sort(ids.begin(), ids.end());
  if (sorted != ids) return false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (region_contains(p, p.chord(order[i]), p.chord(order[j]))) return false;
    }
  }
  return true;
}

std::optional<int> parent(const IntersectionPattern& p, int id) {
  const Chord& c = p.chord(id);
  std::optional<int> best;
  std::size_t best_size = 0;
  for (const Chord& o : p.chords) {
    if (!region_contains(p, o, c)) continue;
    const std::size_t size = region_points(p, o).size();
    if (!best || size < best_size) {
      best = o.id;
      best_size = size;
    }
  }
  return best;
}

Vec4 product(const Vec4& a, const Vec4& b) {
  Eigen::Matrix4d L;
  L << a[0], -a[1], -a[2], -a[3],
       a[1],  a[0], -a[3],  a[2],
       a[2],  a[3],  a[0], -a[1],
       a[3], -a[2],  a[1],  a[0];
  return L * b;
}

Vec4 conj(const Vec4& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Vec4 mu(const Vec4& x, const Vec4& y) { return 0.5 * (product(x, conj(y)) - product(y, conj(x))); }

Vec4 nu(const Vec4& x, const Vec4& y) { return 0.5 * (product(conj(x), y) - product(conj(y), x)); }

std::pair<Vec3, Vec3> basepoint_arc_endpoints(double h) {
  // (h^2 - 1) x^2 + 2x - h^2 = 0 with x in [0, 2].
  const double a = h * h - 1.0;
  const double x = std::abs(a) < 1e-14 ? 0.5 : (-1.0 + std::sqrt(1.0 + h * h * a)) / a;
  const double z = std::sqrt(2.0 * x - x * x);
  return {Vec3(x, 0, z), Vec3(x, 0, -z)};
}

TriMesh flat_disc(int resolution) { return make_disc_mesh(basepoint().second, resolution); }

TriMesh finger_disc(int resolution) {
  return bump(flat_disc(resolution), Vec3(0.5, 0, std::sqrt(0.75)), 0.3, Vec3(0, 1.2, 0));
}

TriMesh bubble_disc(int resolution) {
  return bump(flat_disc(resolution), Vec3(1.45, 0, 0.55), 0.25, Vec3(-1.3, 0.7, 0));
}

TriMesh tangent_disc(int resolution) {
  const Vec3 p(std::sqrt(0.5), 0, std::sqrt(0.5));
  const RoundCircle c{p, 0.5, p};
  const auto [u, w] = c.plane_basis();
  const int rings = std::max(2, resolution / 8);
  TriMesh m;
  m.vertices.push_back(p);
  for (int k = 1; k <= rings; ++k) {
    for (int j = 0; j < resolution; ++j) {
      const double t = 2.0 * kPi * j / resolution;
      m.vertices.push_back(p + 0.5 * k / rings * (std::cos(t) * u + std::sin(t) * w));
    }
  }
  auto at = [&](int k, int j) { return 1 + (k - 1) * resolution + (j % resolution); };
  for (int j = 0; j < resolution; ++j) m.triangles.push_back({0, at(1, j), at(1, j + 1)});
  for (int k = 1; k < rings; ++k) {
    for (int j = 0; j < resolution; ++j) {
      m.triangles.push_back({at(k, j), at(k + 1, j), at(k + 1, j + 1)});
      m.triangles.push_back({at(k, j), at(k + 1, j + 1), at(k, j + 1)});
    }
  }
  for (int j = 0; j < resolution; ++j) m.boundary.push_back(at(rings, j));
  return m;
}

}  // namespace hopf::oracle
