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

#include "hopf/quat.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <tuple>

#include <Eigen/Geometry>

#include "hopf/error.h"

namespace hopf {

double Quaternion::norm() const { return std::sqrt(dot(*this)); }

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error(ErrorKind::NonUnit, "cannot normalize zero quaternion");
  return *this * (1.0 / n);
}

double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x),
                   std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

bool lex_greater(const Quaternion& a, const Quaternion& b, double tol) {
  const double da[4] = {a.w, a.x, a.y, a.z};
  const double db[4] = {b.w, b.x, b.y, b.z};
  for (int i = 0; i < 4; ++i) {
    if (da[i] > db[i] + tol) return true;
    if (da[i] < db[i] - tol) return false;
  }
  return false;
}

Quaternion lex_max(std::span<const Quaternion> candidates, double tol) {
  if (candidates.empty()) {
    throw Error(ErrorKind::InvalidInput, "lex_max of an empty set");
  }
  std::vector<Quaternion> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end(), [](const Quaternion& a, const Quaternion& b) {
    return std::tie(a.w, a.x, a.y, a.z) > std::tie(b.w, b.x, b.y, b.z);
  });
  Quaternion best = sorted.front();
  for (const Quaternion& q : sorted) {
    if (lex_greater(q, best, tol)) best = q;
  }
  return best;
}

namespace {

bool contains_near(const std::vector<Quaternion>& set, const Quaternion& q, double tol) {
  return std::any_of(set.begin(), set.end(),
                     [&](const Quaternion& e) { return max_abs_diff(e, q) <= tol; });
}

}  // namespace

QuaternionSubgroup::QuaternionSubgroup(std::vector<Quaternion> elements, double tol)
    : elements_(std::move(elements)) {
  if (!contains_near(elements_, Quaternion::one(), tol) ||
      !contains_near(elements_, -Quaternion::one(), tol)) {
    throw Error(ErrorKind::InvalidInput, "subgroup must contain 1 and -1");
  }
  for (const Quaternion& a : elements_) {
    if (std::abs(a.norm() - 1.0) > tol) {
      throw Error(ErrorKind::NonUnit, "subgroup element is not a unit quaternion");
    }
    if (!contains_near(elements_, a.conj(), tol) || !contains_near(elements_, -a, tol)) {
      throw Error(ErrorKind::InvalidInput, "subgroup not closed under inverse/negation");
    }
    for (const Quaternion& b : elements_) {
      if (!contains_near(elements_, a * b, tol)) {
        throw Error(ErrorKind::InvalidInput, "subgroup not closed under products");
      }
    }
  }
}

QuaternionSubgroup QuaternionSubgroup::generated_by(std::span<const Quaternion> gens,
                                                    double tol) {
  constexpr std::size_t kMaxOrder = 1024;
  std::vector<Quaternion> elems{Quaternion::one(), -Quaternion::one()};
  std::deque<Quaternion> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    const Quaternion a = frontier.front();
    frontier.pop_front();
    for (const Quaternion& g : gens) {
      const Quaternion p = a * g;
      if (!contains_near(elems, p, tol)) {
        elems.push_back(p);
        frontier.push_back(p);
        if (elems.size() > kMaxOrder) {
          throw Error(ErrorKind::InvalidInput, "generated subgroup is not finite");
        }
      }
    }
  }
  return QuaternionSubgroup(std::move(elems), tol);
}

QuaternionSubgroup QuaternionSubgroup::standard_q8() {
  return QuaternionSubgroup({{1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0},
                             {0, 0, 1, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}, {0, 0, 0, -1}});
}

bool QuaternionSubgroup::contains(const Quaternion& q, double tol) const {
  return contains_near(elements_, q, tol);
}

Rotation3 conjugation_action(const Quaternion& q) {
  if (std::abs(q.norm() - 1.0) > 1e-9) {
    throw Error(ErrorKind::NonUnit, "conjugation action needs a unit quaternion");
  }
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  Rotation3 R;
  R << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return R;
}

bool is_rotation(const Rotation3& R, double tol) {
  const double ortho = (R.transpose() * R - Rotation3::Identity()).cwiseAbs().maxCoeff();
  return ortho <= tol && std::abs(R.determinant() - 1.0) <= tol;
}

std::pair<Quaternion, Quaternion> lift_rotation(const Rotation3& R) {
  if (!is_rotation(R)) {
    throw Error(ErrorKind::NotRotation, "matrix is not in SO(3)");
  }
  // Shepperd: pivot on the largest of trace and diagonal entries.
  const double tr = R.trace();
  Quaternion q;
  if (tr >= R(0, 0) && tr >= R(1, 1) && tr >= R(2, 2)) {
    q.w = 0.5 * std::sqrt(std::max(0.0, 1.0 + tr));
    const double s = 0.25 / q.w;
    q.x = (R(2, 1) - R(1, 2)) * s;
    q.y = (R(0, 2) - R(2, 0)) * s;
    q.z = (R(1, 0) - R(0, 1)) * s;
  } else if (R(0, 0) >= R(1, 1) && R(0, 0) >= R(2, 2)) {
    q.x = 0.5 * std::sqrt(std::max(0.0, 1.0 + R(0, 0) - R(1, 1) - R(2, 2)));
    const double s = 0.25 / q.x;
    q.w = (R(2, 1) - R(1, 2)) * s;
    q.y = (R(0, 1) + R(1, 0)) * s;
    q.z = (R(0, 2) + R(2, 0)) * s;
  } else if (R(1, 1) >= R(2, 2)) {
    q.y = 0.5 * std::sqrt(std::max(0.0, 1.0 - R(0, 0) + R(1, 1) - R(2, 2)));
    const double s = 0.25 / q.y;
    q.w = (R(0, 2) - R(2, 0)) * s;
    q.x = (R(0, 1) + R(1, 0)) * s;
    q.z = (R(1, 2) + R(2, 1)) * s;
  } else {
    q.z = 0.5 * std::sqrt(std::max(0.0, 1.0 - R(0, 0) - R(1, 1) + R(2, 2)));
    const double s = 0.25 / q.z;
    q.w = (R(1, 0) - R(0, 1)) * s;
    q.x = (R(0, 2) + R(2, 0)) * s;
    q.y = (R(1, 2) + R(2, 1)) * s;
  }
  q = q.normalized();
  // Sign convention: w >= 0; for w == 0 the first nonzero component is positive.
  const double key[4] = {q.w, q.x, q.y, q.z};
  for (double c : key) {
    if (c > 0.0) break;
    if (c < 0.0) {
      q = -q;
      break;
    }
  }
  return {q, -q};
}

double rotation_angle(const Rotation3& R) {
  const double c = std::clamp(0.5 * (R.trace() - 1.0), -1.0, 1.0);
  return std::acos(c);
}

Rotation3 axis_angle(const Vec3& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

std::vector<Quaternion> lift_path(std::span<const Rotation3> rotations,
                                  const Quaternion& q0) {
  if (rotations.empty()) return {};
  const Rotation3 start = conjugation_action(q0);
  if ((start - rotations.front()).cwiseAbs().maxCoeff() > 1e-8) {
    throw Error(ErrorKind::InvalidInput, "q0 does not project to the first rotation");
  }
  std::vector<Quaternion> lifted;
  lifted.reserve(rotations.size());
  lifted.push_back(q0);
  for (std::size_t k = 1; k < rotations.size(); ++k) {
    const double step = rotation_angle(rotations[k - 1].transpose() * rotations[k]);
    if (!(step < kMaxLiftStep)) {
      throw Error(ErrorKind::StepTooLarge,
                  "samples " + std::to_string(k - 1) + " and " + std::to_string(k) +
                      " differ by " + std::to_string(step) + " rad");
    }
    Quaternion q = lift_rotation(rotations[k]).first;
    if (q.dot(lifted.back()) < 0.0) q = -q;
    lifted.push_back(q);
  }
  return lifted;
}

Orbit orbit_and_canonical(const Quaternion& q, const QuaternionSubgroup& G) {
  constexpr double kDedup = 1e-9;
  Orbit orbit;
  for (const Quaternion& g : G.elements()) {
    const Quaternion p = q * g;
    if (!contains_near(orbit.elements, p, kDedup)) orbit.elements.push_back(p);
  }
  orbit.canonical = lex_max(orbit.elements, kDedup);
  return orbit;
}

}  // namespace hopf
