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

#include "hopf/grassmann.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hopf/error.h"

namespace hopf {

namespace {

void require_orthonormal(const Quaternion& x, const Quaternion& y) {
  const double err = std::max({std::abs(x.norm() - 1.0), std::abs(y.norm() - 1.0),
                               std::abs(x.dot(y))});
  if (!(err <= 1e-10)) {
    throw Error(ErrorKind::NotOrthonormal, "pair is not orthonormal (error " + std::to_string(err) + ")");
  }
}

// Orthonormal basis of the hyperplane orthogonal to `pole`, built from the
// three coordinate axes least aligned with it.
std::array<Vec4, 3> hyperplane_basis(const Vec4& pole) {
  int skip = 0;
  pole.cwiseAbs().maxCoeff(&skip);
  std::array<Vec4, 3> basis;
  int filled = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == skip) continue;
    Vec4 v = Vec4::Unit(i) - pole[i] * pole;
    for (int j = 0; j < filled; ++j) v -= basis[j].dot(v) * basis[j];
    basis[filled++] = v.normalized();
  }
  return basis;
}

Vec4 unit_pole(const Vec4& pole) {
  if (std::abs(pole.norm() - 1.0) > 1e-9) {
    throw Error(ErrorKind::InvalidInput, "projection pole must be a unit vector");
  }
  return pole;
}

}  // namespace

Vec4 to_vec4(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }
Quaternion from_vec4(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

Plane2in4 Plane2in4::make(const Quaternion& x, const Quaternion& y) {
  require_orthonormal(x, y);
  return {x, y};
}

Plane2in4 Plane2in4::spanned_by(const Vec4& a, const Vec4& b) {
  const double na = a.norm();
  if (!(na > 1e-12)) throw Error(ErrorKind::NotOrthonormal, "first vector is zero");
  const Vec4 x = a / na;
  Vec4 y = b - x.dot(b) * x;
  if (!(y.norm() > 1e-9 * std::max(1.0, b.norm()))) {
    throw Error(ErrorKind::NotOrthonormal, "vectors are parallel");
  }
  y.normalize();
  return make(from_vec4(x), from_vec4(y));
}

Quaternion mu(const Quaternion& x, const Quaternion& y) {
  require_orthonormal(x, y);
  return (x * y.conj() - y * x.conj()) * 0.5;
}

Quaternion nu(const Quaternion& x, const Quaternion& y) {
  require_orthonormal(x, y);
  return (x.conj() * y - y.conj() * x) * 0.5;
}

std::pair<Quaternion, Quaternion> xi(const Plane2in4& plane) {
  return {mu(plane.x, plane.y), nu(plane.x, plane.y)};
}

Plane2in4 orthogonal_complement(const Plane2in4& plane) {
  require_orthonormal(plane.x, plane.y);
  const Vec4 x = to_vec4(plane.x), y = to_vec4(plane.y);
  auto residual = [&](const Vec4& v, const std::vector<Vec4>& against) {
    Vec4 r = v;
    for (const Vec4& a : against) r -= a.dot(r) * a;
    return r;
  };
  std::vector<Vec4> span{x, y};
  for (int pick = 0; pick < 2; ++pick) {
    Vec4 best = Vec4::Zero();
    for (int i = 0; i < 4; ++i) {
      const Vec4 r = residual(Vec4::Unit(i), span);
      if (r.norm() > best.norm() + 1e-12) best = r;
    }
    span.push_back(residual(best, span).normalized());
  }
  Eigen::Matrix4d m;
  m << span[0], span[1], span[2], span[3];
  if (m.determinant() < 0) span[3] = -span[3];
  return Plane2in4::make(from_vec4(span[2]), from_vec4(span[3]));
}

Vec3 canonicalize_rp2(const Vec3& v) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v[i]) > 1e-9) return v[i] > 0 ? v : Vec3(-v);
  }
  return v;
}

double rp2_distance(const Vec3& a, const Vec3& b) { return std::min((a - b).norm(), (a + b).norm()); }

RP2Pair canonical_great_hopf(const Plane2in4& plane) {
  const auto [m, n] = xi(plane);
  return {canonicalize_rp2(m.imag()), canonicalize_rp2(n.imag())};
}

std::vector<Vec4> great_circle_points(const Plane2in4& plane, int n) {
  if (n < 8) throw Error(ErrorKind::InvalidInput, "need at least 8 points");
  require_orthonormal(plane.x, plane.y);
  const Vec4 x = to_vec4(plane.x), y = to_vec4(plane.y);
  std::vector<Vec4> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    out.push_back(std::cos(t) * x + std::sin(t) * y);
  }
  return out;
}

Vec3 stereographic(const Vec4& p, const Vec4& pole) {
  const Vec4 P = unit_pole(pole);
  if (std::abs(p.norm() - 1.0) > 1e-9) throw Error(ErrorKind::InvalidInput, "point is not on S^3");
  if ((p - P).norm() < 1e-6) throw Error(ErrorKind::PoleProximity, "point is at the projection pole");
  const double h = p.dot(P);
  const Vec4 s = (p - h * P) / (1.0 - h);
  const auto basis = hyperplane_basis(P);
  return {s.dot(basis[0]), s.dot(basis[1]), s.dot(basis[2])};
}

Vec4 inverse_stereographic(const Vec3& u, const Vec4& pole) {
  const Vec4 P = unit_pole(pole);
  const auto basis = hyperplane_basis(P);
  const Vec4 w = u[0] * basis[0] + u[1] * basis[1] + u[2] * basis[2];
  const double s = w.squaredNorm();
  return (2.0 * w + (s - 1.0) * P) / (s + 1.0);
}

}  // namespace hopf
