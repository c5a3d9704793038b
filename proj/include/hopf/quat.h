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

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace hopf {

using Vec3 = Eigen::Vector3d;
using Rotation3 = Eigen::Matrix3d;

/// Hamilton quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static Quaternion pure(const Vec3& v) { return {0.0, v.x(), v.y(), v.z()}; }

  Vec3 imag() const { return {x, y, z}; }
  Eigen::Vector4d coeffs() const { return {w, x, y, z}; }
  Quaternion conj() const { return {w, -x, -y, -z}; }
  double dot(const Quaternion& o) const {
    return w * o.w + x * o.x + y * o.y + z * o.z;
  }
  double norm() const;
  Quaternion normalized() const;

  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion operator+(const Quaternion& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }
  Quaternion operator-(const Quaternion& o) const {
    return {w - o.w, x - o.x, y - o.y, z - o.z};
  }
  Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
  bool operator==(const Quaternion&) const = default;
};

inline Quaternion operator*(double s, const Quaternion& q) { return q * s; }

double max_abs_diff(const Quaternion& a, const Quaternion& b);

/// Lexicographic comparison on (w, x, y, z) where components closer than
/// `tol` count as equal and the next component decides.
bool lex_greater(const Quaternion& a, const Quaternion& b, double tol);

/// Lexicographic maximum of `candidates`. The result depends only on the
/// multiset of inputs, not on their order.
Quaternion lex_max(std::span<const Quaternion> candidates, double tol);

/// A finite subgroup of the unit quaternions, closed under products and
/// negation.
class QuaternionSubgroup {
 public:
  /// Validates closure of `elements` under product and inverse.
  explicit QuaternionSubgroup(std::vector<Quaternion> elements,
                              double tol = 1e-9);

  /// Smallest subgroup containing the generators and -1.
  static QuaternionSubgroup generated_by(std::span<const Quaternion> gens,
                                         double tol = 1e-9);
  /// {+-1, +-i, +-j, +-k}.
  static QuaternionSubgroup standard_q8();

  const std::vector<Quaternion>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Quaternion& q, double tol = 1e-9) const;

 private:
  std::vector<Quaternion> elements_;
};

/// The rotation v -> Im(q v q^-1). Throws NonUnit when |q| is off by more
/// than 1e-9.
Rotation3 conjugation_action(const Quaternion& q);

/// Both preimages of R under the double cover; the first has w >= 0.
std::pair<Quaternion, Quaternion> lift_rotation(const Rotation3& R);

/// Continuous lift of a sampled rotation path starting at q0.
std::vector<Quaternion> lift_path(std::span<const Rotation3> rotations,
                                  const Quaternion& q0);

/// Maximum step between consecutive samples accepted by lift_path.
inline constexpr double kMaxLiftStep = 0.7853981633974483;  // pi/4

struct Orbit {
  std::vector<Quaternion> elements;
  Quaternion canonical;
};

/// Right orbit {q g : g in G}, deduplicated at 1e-9, with its lexicographic
/// maximum as representative.
Orbit orbit_and_canonical(const Quaternion& q, const QuaternionSubgroup& G);

// Rotation helpers.
Rotation3 axis_angle(const Vec3& axis, double angle);
double rotation_angle(const Rotation3& R);
bool is_rotation(const Rotation3& R, double tol = 1e-9);

}  // namespace hopf
