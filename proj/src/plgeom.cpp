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

#include "hopf/plgeom.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "hopf/error.h"

namespace hopf {

namespace {

constexpr double kPi = std::numbers::pi;

// Projection directions for the crossing count, tried in order until one is
// generic for the given pair.
const Vec3 kViewDirections[] = {
    Vec3(0.31415926, 0.27182818, 0.91018113).normalized(),
    Vec3(-0.57721566, 0.14142135, 0.80431234).normalized(),
    Vec3(0.73205080, -0.41421356, 0.54030230).normalized(),
    Vec3(0.16180339, 0.98696044, -0.01234567).normalized(),
};

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// Signed solid angle subtended by segment pair (p1,p2), (p3,p4), after
// Klenin and Langowski.
double segment_pair_solid_angle(const Vec3& p1, const Vec3& p2, const Vec3& p3, const Vec3& p4) {
  const Vec3 r13 = p3 - p1, r14 = p4 - p1, r23 = p3 - p2, r24 = p4 - p2;
  Vec3 n[4] = {r13.cross(r14), r14.cross(r24), r24.cross(r23), r23.cross(r13)};
  for (Vec3& v : n) {
    const double len = v.norm();
    if (len < 1e-300) return 0.0;
    v /= len;
  }
  const double omega = std::asin(clamp_unit(n[0].dot(n[1]))) + std::asin(clamp_unit(n[1].dot(n[2]))) +
                       std::asin(clamp_unit(n[2].dot(n[3]))) + std::asin(clamp_unit(n[3].dot(n[0])));
  const double orient = (p4 - p3).cross(p2 - p1).dot(r13);
  return orient > 0 ? omega : (orient < 0 ? -omega : 0.0);
}

void require_closed(const Polyline3& p) {
  if (!p.closed || p.vertices.size() < 3) {
    throw Error(ErrorKind::InvalidInput, "linking needs closed polygons with at least 3 vertices");
  }
}

}  // namespace

std::size_t Polyline3::segment_count() const {
  if (vertices.size() < 2) return 0;
  return closed ? vertices.size() : vertices.size() - 1;
}

void Polyline3::validate() const {
  if (closed && vertices.size() < 3) {
    throw Error(ErrorKind::InvalidInput, "closed polyline needs at least 3 vertices");
  }
  if (vertices.size() < 2) throw Error(ErrorKind::InvalidInput, "polyline needs 2 vertices");
  const std::size_t n = segment_count();
  for (std::size_t i = 0; i < n; ++i) {
    if ((segment_end(i) - segment_start(i)).norm() <= 1e-12) {
      throw Error(ErrorKind::InvalidInput, "repeated consecutive vertex");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (closed && i == 0 && j == n - 1) continue;
      if (segment_distance(segment_start(i), segment_end(i), segment_start(j), segment_end(j)) <
          1e-9) {
        throw Error(ErrorKind::InvalidInput, "polyline intersects itself");
      }
    }
  }
}

Polyline3 sample_circle(const RoundCircle& c, int n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "need at least 3 samples");
  Polyline3 p;
  p.vertices.reserve(n);
  for (int k = 0; k < n; ++k) p.vertices.push_back(c.point_at(2.0 * kPi * k / n));
  return p;
}

int polygon_resolution(const RoundCircle& a, const RoundCircle& b, int cap) {
  const double dist = circle_distance(a, b);
  const double r = std::max(a.radius, b.radius);
  if (dist <= 0.0) return cap;
  // Sagitta r (1 - cos(pi/n)) <= r pi^2 / (2 n^2) <= dist / 3.
  const double n = std::ceil(kPi * std::sqrt(1.5 * r / dist));
  return static_cast<int>(std::clamp(n, 64.0, static_cast<double>(cap)));
}

double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1) {
  const Vec3 d1 = p1 - p0, d2 = q1 - q0, r = p0 - q0;
  const double a = d1.squaredNorm(), e = d2.squaredNorm(), f = d2.dot(r);
  double s = 0.0, t = 0.0;
  if (a <= 1e-300 && e <= 1e-300) return r.norm();
  if (a <= 1e-300) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = d1.dot(r);
    if (e <= 1e-300) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = d1.dot(d2), denom = a * e - b * b;
      s = denom > 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return ((p0 + s * d1) - (q0 + t * d2)).norm();
}

double polyline_distance(const Polyline3& a, const Polyline3& b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.segment_count(); ++i) {
    for (std::size_t j = 0; j < b.segment_count(); ++j) {
      best = std::min(best, segment_distance(a.segment_start(i), a.segment_end(i),
                                             b.segment_start(j), b.segment_end(j)));
    }
  }
  return best;
}

double gauss_linking_sum(const Polyline3& a, const Polyline3& b) {
  require_closed(a);
  require_closed(b);
  double total = 0.0;
  for (std::size_t i = 0; i < a.segment_count(); ++i) {
    for (std::size_t j = 0; j < b.segment_count(); ++j) {
      total += segment_pair_solid_angle(a.segment_start(i), a.segment_end(i), b.segment_start(j),
                                        b.segment_end(j));
    }
  }
  return total / (4.0 * kPi);
}

int gauss_linking_pl(const Polyline3& a, const Polyline3& b) {
  require_closed(a);
  require_closed(b);
  const double dist = polyline_distance(a, b);
  if (dist < 1e-6) {
    throw Error(ErrorKind::TooClose, "polygons are " + std::to_string(dist) + " apart");
  }
  const double sum = gauss_linking_sum(a, b);
  const double rounded = std::round(sum);
  if (std::abs(sum - rounded) >= 0.1) {
    throw Error(ErrorKind::PostconditionFailed,
                "Gauss sum " + std::to_string(sum) + " is not near an integer");
  }
  return static_cast<int>(rounded);
}

int crossing_linking_pl(const Polyline3& a, const Polyline3& b) {
  require_closed(a);
  require_closed(b);
  for (const Vec3& d : kViewDirections) {
    const Vec3 e1 = d.unitOrthogonal();
    const Vec3 e2 = d.cross(e1);
    auto flat = [&](const Vec3& p) { return Vec2(p.dot(e1), p.dot(e2)); };
    int twice = 0;
    bool generic = true;
    for (std::size_t i = 0; i < a.segment_count() && generic; ++i) {
      const Vec3 a0 = a.segment_start(i), a1 = a.segment_end(i);
      const Vec2 p = flat(a0), r = flat(a1) - p;
      for (std::size_t j = 0; j < b.segment_count(); ++j) {
        const Vec3 b0 = b.segment_start(j), b1 = b.segment_end(j);
        const Vec2 q = flat(b0), s = flat(b1) - q;
        const double denom = r.x() * s.y() - r.y() * s.x();
        const Vec2 qp = q - p;
        const double scale = r.norm() * s.norm();
        if (std::abs(denom) <= 1e-12 * scale) {
          // Parallel in projection: only a problem if the segments overlap.
          if (std::abs(qp.x() * r.y() - qp.y() * r.x()) <= 1e-12 * r.norm() * (qp.norm() + 1.0)) {
            generic = false;
            break;
          }
          continue;
        }
        const double t = (qp.x() * s.y() - qp.y() * s.x()) / denom;
        const double u = (qp.x() * r.y() - qp.y() * r.x()) / denom;
        constexpr double kEnd = 1e-9;
        if (t < -kEnd || t > 1.0 + kEnd || u < -kEnd || u > 1.0 + kEnd) continue;
        if (t < kEnd || t > 1.0 - kEnd || u < kEnd || u > 1.0 - kEnd) {
          generic = false;
          break;
        }
        const double over = (a0 + t * (a1 - a0)).dot(d) - (b0 + u * (b1 - b0)).dot(d);
        const double turn = (a1 - a0).cross(b1 - b0).dot(d);
        if (std::abs(over) <= 1e-12) {
          generic = false;
          break;
        }
        twice += ((turn > 0) == (over > 0)) ? 1 : -1;
      }
    }
    if (generic && twice % 2 == 0) return twice / 2;
  }
  throw Error(ErrorKind::Degenerate, "no generic projection found");
}

Ellipsoid::Ellipsoid(const RoundCircle& equator, double height)
    : equator_(RoundCircle::make(equator.center, equator.radius, equator.normal)), height_(height) {
  if (!(height > 0.0) || !std::isfinite(height)) {
    throw Error(ErrorKind::InvalidInput, "ellipsoid height must be positive");
  }
  std::tie(u_, w_) = equator_.plane_basis();
}

double Ellipsoid::value(const Vec3& p) const { return normalized(p).squaredNorm() - 1.0; }

double Ellipsoid::elevation(const Vec3& p) const {
  return (p - equator_.center).dot(equator_.normal);
}

Vec3 Ellipsoid::normalized(const Vec3& p) const {
  const Vec3 d = p - equator_.center;
  return {d.dot(u_) / equator_.radius, d.dot(w_) / equator_.radius,
          d.dot(equator_.normal) / height_};
}

}  // namespace hopf
