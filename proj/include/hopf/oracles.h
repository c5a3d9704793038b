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

// Independent reference computations used by the tests and the acceptance
// suite. Nothing here is used by the library itself.

#include <set>
#include <vector>

#include "hopf/grassmann.h"
#include "hopf/pattern.h"
#include "hopf/plgeom.h"
#include "hopf/retraction.h"

namespace hopf::oracle {

/// Basepoint link: unit circle in the xy-plane and the unit circle in the
/// xz-plane centred at (1,0,0), with normals e3 and e2.
HopfLink basepoint();

/// Lift of R through Eigen's rotation-to-quaternion conversion.
Quaternion lift(const Rotation3& R);

/// The eight lifts of the deck matrices, written out by hand.
std::vector<Quaternion> deck_lifts();

/// Lexicographic maximum of the right orbit q * g over deck_lifts().
Quaternion canonical_orbit_point(const Quaternion& q);

/// Rotation by `angle` about `axis` through `point`, from Eigen::AngleAxisd.
HopfLink rotate_link(const HopfLink& link, const Vec3& point, const Vec3& axis, double angle);

/// Closed loop rotating `link` by pi about the given axis, `samples` steps.
std::vector<HopfLink> half_turn_loop(const HopfLink& link, const Vec3& point, const Vec3& axis,
                                     int samples);

/// Boundary indices on the side of the chord away from alpha, endpoints
/// included, found by walking the circle both ways.
std::set<int> region_points(const IntersectionPattern& p, const Chord& c);
bool region_contains(const IntersectionPattern& p, const Chord& outer, const Chord& inner);
/// True if no chord appears after a chord whose region lies inside its own.
bool is_linear_extension(const IntersectionPattern& p, const std::vector<int>& order);
/// Parent by exhaustive search: the containing chord with fewest points.
std::optional<int> parent(const IntersectionPattern& p, int id);

/// Quaternion product through 4x4 left-multiplication matrices.
Vec4 product(const Vec4& a, const Vec4& b);
Vec4 conj(const Vec4& a);
Vec4 mu(const Vec4& x, const Vec4& y);
Vec4 nu(const Vec4& x, const Vec4& y);

/// Endpoints of the basepoint disc's intersection with E_h, solved in closed
/// form from (x-1)^2 + z^2 = 1 and x^2 + z^2/h^2 = 1.
std::pair<Vec3, Vec3> basepoint_arc_endpoints(double h);

// Mesh fixtures on the basepoint's second disc.

/// Flat disc of the basepoint.
TriMesh flat_disc(int resolution);
/// Boundary pushed out of E_2 through the upper hemisphere and back:
/// one extra (+,+) chord.
TriMesh finger_disc(int resolution);
/// Interior bubble pushed into E_2 away from the equator: one circle.
TriMesh bubble_disc(int resolution);
/// Flat disc tangent to the unit sphere E_1 (equator: basepoint first
/// component) at its center vertex.
TriMesh tangent_disc(int resolution);

}  // namespace hopf::oracle
