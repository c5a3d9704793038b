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

#pragma once

#include <utility>
#include <vector>

#include "hopf/quat.h"

namespace hopf {

using Vec4 = Eigen::Vector4d;

Vec4 to_vec4(const Quaternion& q);
Quaternion from_vec4(const Vec4& v);

/// Oriented 2-plane in R^4 = H given by an orthonormal pair.
struct Plane2in4 {
  Quaternion x;
  Quaternion y;

  /// Throws NotOrthonormal unless |x| = |y| = 1 and <x,y> = 0 within 1e-10.
  static Plane2in4 make(const Quaternion& x, const Quaternion& y);
  /// Orthonormalizes a pair of independent vectors (Gram-Schmidt).
  static Plane2in4 spanned_by(const Vec4& a, const Vec4& b);
};

/// mu(x,y) = (x conj(y) - y conj(x)) / 2 and nu(x,y) = (conj(x) y - conj(y) x) / 2,
/// purely imaginary unit quaternions for orthonormal (x, y).
Quaternion mu(const Quaternion& x, const Quaternion& y);
Quaternion nu(const Quaternion& x, const Quaternion& y);

/// (mu, nu) of the plane.
std::pair<Quaternion, Quaternion> xi(const Plane2in4& plane);

/// Orthogonal complement, oriented so that (x, y, x', y') is a positive
/// basis of R^4.
Plane2in4 orthogonal_complement(const Plane2in4& plane);

/// Representative of a point of RP^2: first coordinate beyond 1e-9 positive.
Vec3 canonicalize_rp2(const Vec3& v);

struct RP2Pair {
  Vec3 first;
  Vec3 second;
  bool operator==(const RP2Pair&) const = default;
};

/// Distance in RP^2 between the lines through a and b.
double rp2_distance(const Vec3& a, const Vec3& b);

/// Coordinate of the unoriented great Hopf link {plane, complement} in
/// RP^2 x RP^2.
RP2Pair canonical_great_hopf(const Plane2in4& plane);

/// n equally spaced points cos(t) x + sin(t) y of the great circle.
std::vector<Vec4> great_circle_points(const Plane2in4& plane, int n);

/// Stereographic projection from `pole` onto the hyperplane orthogonal to
/// it, in a fixed orthonormal basis of that hyperplane. Throws
/// PoleProximity within 1e-6 of the pole.
Vec3 stereographic(const Vec4& p, const Vec4& pole = Vec4(0, 0, 0, 1));
Vec4 inverse_stereographic(const Vec3& u, const Vec4& pole = Vec4(0, 0, 0, 1));

}  // namespace hopf
