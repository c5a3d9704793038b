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

#include "hopf/quat.h"

namespace hopf {

/// Oriented Euclidean circle; the orientation is counterclockwise about
/// `normal`.
struct RoundCircle {
  Vec3 center = Vec3::Zero();
  double radius = 1.0;
  Vec3 normal = Vec3::UnitZ();

  /// Validates r > 0 and a nonzero normal, which is normalized.
  static RoundCircle make(const Vec3& center, double radius, const Vec3& normal);

  /// In-plane orthonormal pair (u, w) with u x w = normal.
  std::pair<Vec3, Vec3> plane_basis() const;
  Vec3 point_at(double t) const;
  Vec3 tangent_at(double t) const;
  RoundCircle reversed() const { return {center, radius, -normal}; }
};

/// Unoriented circle: the normal is a canonical representative of its line.
struct RoundUnknotParams {
  Vec3 center;
  double radius;
  Vec3 line;

  RoundCircle reconstruct() const { return {center, radius, line}; }
};

/// Two oriented, labeled round circles; field order fixes the labels.
struct HopfLink {
  RoundCircle first;
  RoundCircle second;
};

/// The segment shared by the two flat discs.
struct ArcOfIntersection {
  Vec3 on_first;   // endpoint lying on the first circle
  Vec3 on_second;  // endpoint lying on the second circle
  Vec3 midpoint;

  double length() const { return (on_first - on_second).norm(); }
};

/// Signed count of crossings of `b` through the flat disc of `a`. Coplanar
/// disjoint circles are split and give 0.
int linking_number_round(const RoundCircle& a, const RoundCircle& b);

ArcOfIntersection arc_of_intersection(const RoundCircle& a, const RoundCircle& b);
inline ArcOfIntersection arc_of_intersection(const HopfLink& link) {
  return arc_of_intersection(link.first, link.second);
}

/// Angle between the oriented normals, in (0, pi).
double dihedral_angle(const HopfLink& link);

RoundUnknotParams round_unknot_params(const RoundCircle& c);

/// Canonical representative of a line through the origin: first coordinate
/// with magnitude above 1e-9 is positive.
Vec3 canonical_line(const Vec3& n);

/// Accepts the pair iff the circles are disjoint and |lk| = 1.
HopfLink validate_hopf(const RoundCircle& a, const RoundCircle& b);

/// Minimum distance between two circles (numerical).
double circle_distance(const RoundCircle& a, const RoundCircle& b);

/// Proper rigid motion x -> rotation * x + translation.
struct RigidMotion {
  Rotation3 rotation = Rotation3::Identity();
  Vec3 translation = Vec3::Zero();

  static RigidMotion about_axis(const Vec3& point, const Vec3& axis, double angle);

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
  RoundCircle apply(const RoundCircle& c) const {
    return {apply(c.center), c.radius, rotation * c.normal};
  }
  HopfLink apply(const HopfLink& l) const { return {apply(l.first), apply(l.second)}; }
};

/// Largest absolute difference between corresponding circle parameters.
double link_distance(const HopfLink& a, const HopfLink& b);

}  // namespace hopf
