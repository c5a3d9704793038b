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

#include "hopf/roundlink.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hopf/error.h"

namespace hopf {

namespace {

double length_tol(double a, double b) { return 1e-9 * std::max({1.0, a, b}); }

}  // namespace

RoundCircle RoundCircle::make(const Vec3& center, double radius, const Vec3& normal) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorKind::InvalidInput, "circle radius must be positive");
  }
  const double n = normal.norm();
  if (!(n > 1e-12) || !std::isfinite(n)) {
    throw Error(ErrorKind::InvalidInput, "circle normal must be nonzero");
  }
  if (!center.allFinite()) throw Error(ErrorKind::InvalidInput, "circle center not finite");
  // Leave unit normals bit-identical so that JSON round trips are exact.
  return {center, radius, std::abs(n - 1.0) <= 1e-15 ? normal : Vec3(normal / n)};
}

std::pair<Vec3, Vec3> RoundCircle::plane_basis() const {
  int axis = 0;
  normal.cwiseAbs().minCoeff(&axis);
  Vec3 helper = Vec3::Zero();
  helper[axis] = 1.0;
  const Vec3 u = (helper - helper.dot(normal) * normal).normalized();
  return {u, normal.cross(u)};
}

Vec3 RoundCircle::point_at(double t) const {
  const auto [u, w] = plane_basis();
  return center + radius * (std::cos(t) * u + std::sin(t) * w);
}

Vec3 RoundCircle::tangent_at(double t) const {
  const auto [u, w] = plane_basis();
  return radius * (-std::sin(t) * u + std::cos(t) * w);
}

int linking_number_round(const RoundCircle& a, const RoundCircle& b) {
  const double tol = length_tol(a.radius, b.radius);
  const auto [u, w] = b.plane_basis();
  // Height of b(t) above the plane of a: c + P cos t + Q sin t.
  const double c = (b.center - a.center).dot(a.normal);
  const double P = b.radius * u.dot(a.normal);
  const double Q = b.radius * w.dot(a.normal);
  const double amp = std::hypot(P, Q);

  if (amp <= tol) {
    if (std::abs(c) > tol) return 0;
    // Coplanar circles: split unless they touch.
    const double D = (b.center - a.center).norm();
    const double gap = std::min(std::abs(D - (a.radius + b.radius)),
                                std::abs(D - std::abs(a.radius - b.radius)));
    const bool overlapping = D < a.radius + b.radius && D > std::abs(a.radius - b.radius);
    if (overlapping || gap <= tol) {
      throw Error(ErrorKind::Degenerate, "coplanar circles intersect");
    }
    return 0;
  }
  if (std::abs(c) > amp + tol) return 0;
  if (std::abs(std::abs(c) - amp) <= tol) {
    throw Error(ErrorKind::Degenerate, "second circle is tangent to the first plane");
  }

  const double phase = std::atan2(Q, P);
  const double spread = std::acos(std::clamp(-c / amp, -1.0, 1.0));
  int lk = 0;
  for (double t : {phase + spread, phase - spread}) {
    const Vec3 x = b.center + b.radius * (std::cos(t) * u + std::sin(t) * w);
    const double dist = (x - a.center).norm();
    if (std::abs(dist - a.radius) <= tol) {
      throw Error(ErrorKind::Degenerate, "crossing lies on the boundary circle");
    }
    if (dist < a.radius) {
      const double rate = -P * std::sin(t) + Q * std::cos(t);
      lk += rate > 0.0 ? 1 : -1;
    }
  }
  return lk;
}

ArcOfIntersection arc_of_intersection(const RoundCircle& a, const RoundCircle& b) {
  const Vec3 cross = a.normal.cross(b.normal);
  const double sin_angle = cross.norm();
  if (sin_angle < 1e-9) throw Error(ErrorKind::ParallelPlanes, "disc planes are parallel");
  const Vec3 d = cross / sin_angle;

  const double c12 = a.normal.dot(b.normal);
  const double h1 = a.normal.dot(a.center);
  const double h2 = b.normal.dot(b.center);
  const double denom = 1.0 - c12 * c12;
  const Vec3 base = ((h1 - h2 * c12) / denom) * a.normal + ((h2 - h1 * c12) / denom) * b.normal;

  struct Interval {
    double lo, hi;
  };
  auto chord = [&](const RoundCircle& c) -> Interval {
    const double t = (c.center - base).dot(d);
    const double off2 = (c.center - (base + t * d)).squaredNorm();
    const double r2 = c.radius * c.radius;
    if (off2 >= r2) {
      throw Error(ErrorKind::EmptyIntersection, "common line misses a disc");
    }
    const double s = std::sqrt(r2 - off2);
    return {t - s, t + s};
  };
  const Interval ca = chord(a);
  const Interval cb = chord(b);
  const double tol = length_tol(a.radius, b.radius);
  const double lo = std::max(ca.lo, cb.lo);
  const double hi = std::min(ca.hi, cb.hi);
  if (hi - lo <= tol) throw Error(ErrorKind::EmptyIntersection, "discs do not overlap");
  if (std::abs(ca.lo - cb.lo) <= tol || std::abs(ca.hi - cb.hi) <= tol) {
    throw Error(ErrorKind::Degenerate, "chords share an endpoint");
  }
  const bool lo_on_first = ca.lo > cb.lo;
  const bool hi_on_first = ca.hi < cb.hi;
  if (lo_on_first == hi_on_first) {
    throw Error(ErrorKind::EmptyIntersection,
                "one chord contains the other; not a Hopf configuration");
  }
  const Vec3 p_lo = base + lo * d;
  const Vec3 p_hi = base + hi * d;
  ArcOfIntersection arc;
  arc.on_first = lo_on_first ? p_lo : p_hi;
  arc.on_second = lo_on_first ? p_hi : p_lo;
  arc.midpoint = 0.5 * (p_lo + p_hi);
  return arc;
}

double dihedral_angle(const HopfLink& link) {
  const Vec3 cross = link.first.normal.cross(link.second.normal);
  const double s = cross.norm();
  if (s < 1e-9) throw Error(ErrorKind::ParallelPlanes, "disc planes are parallel");
  return std::atan2(s, link.first.normal.dot(link.second.normal));
}

Vec3 canonical_line(const Vec3& n) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(n[i]) > 1e-9) return n[i] > 0.0 ? n : Vec3(-n);
  }
  return n;
}

RoundUnknotParams round_unknot_params(const RoundCircle& c) {
  return {c.center, c.radius, canonical_line(c.normal)};
}

HopfLink validate_hopf(const RoundCircle& a, const RoundCircle& b) {
  const int lk = linking_number_round(a, b);
  if (lk == 0) throw Error(ErrorKind::NotLinked, "linking number is 0");
  return {a, b};
}

double circle_distance(const RoundCircle& a, const RoundCircle& b) {
  auto dist_to_b = [&](double t) {
    const Vec3 v = a.point_at(t) - b.center;
    const double h = v.dot(b.normal);
    const double rho = (v - h * b.normal).norm();
    return std::hypot(h, rho - b.radius);
  };
  constexpr int kSamples = 720;
  const double step = 2.0 * std::numbers::pi / kSamples;
  int best = 0;
  double best_val = dist_to_b(0.0);
  for (int k = 1; k < kSamples; ++k) {
    const double v = dist_to_b(k * step);
    if (v < best_val) {
      best_val = v;
      best = k;
    }
  }
  // Golden-section refinement around the coarse minimum.
  double lo = (best - 1) * step, hi = (best + 1) * step;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = dist_to_b(x1), f2 = dist_to_b(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = dist_to_b(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = dist_to_b(x2);
    }
  }
  return std::min({best_val, f1, f2});
}

RigidMotion RigidMotion::about_axis(const Vec3& point, const Vec3& axis, double angle) {
  RigidMotion m;
  m.rotation = axis_angle(axis, angle);
  m.translation = point - m.rotation * point;
  return m;
}

double link_distance(const HopfLink& a, const HopfLink& b) {
  auto circ = [](const RoundCircle& x, const RoundCircle& y) {
    return std::max({(x.center - y.center).cwiseAbs().maxCoeff(),
                     std::abs(x.radius - y.radius),
                     (x.normal - y.normal).cwiseAbs().maxCoeff()});
  };
  return std::max(circ(a.first, b.first), circ(a.second, b.second));
}

}  // namespace hopf
