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

#include <array>
#include <vector>

#include "hopf/pattern.h"
#include "hopf/roundlink.h"

namespace hopf {

using Vec2 = Eigen::Vector2d;

struct Polyline3 {
  std::vector<Vec3> vertices;
  bool closed = true;

  /// Checks vertex count, repeated vertices and self-intersection (1e-9).
  void validate() const;
  std::size_t segment_count() const;
  Vec3 segment_start(std::size_t i) const { return vertices[i]; }
  Vec3 segment_end(std::size_t i) const { return vertices[(i + 1) % vertices.size()]; }
};

/// Regular n-gon inscribed in the circle, following its orientation.
Polyline3 sample_circle(const RoundCircle& c, int n);

/// Smallest n for which the inscribed n-gons of the two circles stay
/// within a third of their separation of the circles (at least 64).
int polygon_resolution(const RoundCircle& a, const RoundCircle& b, int cap = 4096);

double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1);
double polyline_distance(const Polyline3& a, const Polyline3& b);

/// Sum of exact segment-pair solid angles over 4 pi. An integer up to
/// rounding for disjoint closed polygons.
double gauss_linking_sum(const Polyline3& a, const Polyline3& b);

/// gauss_linking_sum rounded; throws TooClose below 1e-6 separation and
/// PostconditionFailed if the rounding residual reaches 0.1.
int gauss_linking_pl(const Polyline3& a, const Polyline3& b);

/// Half the signed crossing count of a generic parallel projection.
int crossing_linking_pl(const Polyline3& a, const Polyline3& b);

/// Ellipsoid with equator `equator` and semi-axis `height` along its normal:
/// f = rho^2/r^2 + z^2/h^2 - 1 in the equator frame. Negative inside.
class Ellipsoid {
 public:
  /// Throws InvalidInput unless height > 0.
  Ellipsoid(const RoundCircle& equator, double height);
  static Ellipsoid make(const RoundCircle& equator, double height) { return {equator, height}; }

  const RoundCircle& equator() const { return equator_; }
  double height() const { return height_; }
  double value(const Vec3& p) const;
  /// Height above the equator plane.
  double elevation(const Vec3& p) const;
  /// Affine map to coordinates where the ellipsoid is the unit sphere.
  Vec3 normalized(const Vec3& p) const;

 private:
  RoundCircle equator_;
  double height_;
  Vec3 u_, w_;
};

/// Triangulated disc whose boundary loop is the second link component.
/// `uv` optionally holds a planar embedding of the disc (one entry per
/// vertex); it is filled in by `ensure_uv` when absent.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> boundary;
  std::vector<Vec2> uv;

  /// Index ranges, nondegenerate triangles, V - E + F = 1 and a boundary
  /// loop matching the edges used by exactly one triangle.
  void validate() const;
  void ensure_uv();
  Polyline3 boundary_polyline() const;
};

/// Flat disc bounded by `c`: `resolution` boundary vertices and concentric
/// rings with no vertex at the center.
TriMesh make_disc_mesh(const RoundCircle& c, int resolution);

/// Minimum |f| over vertices of triangles where f changes sign; 0 when a
/// vertex is within 1e-9 of the surface or a same-sign triangle touches it; +inf when
/// the mesh misses the ellipsoid.
double transversality_margin(const TriMesh& mesh, const Ellipsoid& e);

inline constexpr double kMinTransversality = 1e-6;

/// Geometric grid of 64 heights in [h_min, h_max], refined once around the
/// best sample. Returns the arithmetic midpoint when the mesh misses every
/// ellipsoid of the family.
double find_transverse_height(const TriMesh& mesh, const RoundCircle& equator,
                              double h_min, double h_max);

/// Marching-triangles zero set of the ellipsoid on the mesh, read as a
/// chord-and-circle diagram on the disc.
IntersectionPattern extract_intersection_pattern(const TriMesh& mesh, const Ellipsoid& e);

}  // namespace hopf
