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

#include "hopf/retraction.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hopf/error.h"

namespace hopf {

namespace {

const Vec3 kMidpointTarget{0.5, 0.0, 0.0};

int bits(DeckElement g) {
  switch (g) {
    case DeckElement::Identity: return 0;
    case DeckElement::Alpha: return 1;
    case DeckElement::Swap: return 2;
    case DeckElement::AlphaSwap: return 3;
  }
  return 0;
}

double scale_of(const HopfLink& link) {
  return std::max({1.0, link.first.radius, link.second.radius,
                   link.first.center.cwiseAbs().maxCoeff(),
                   link.second.center.cwiseAbs().maxCoeff()});
}

RoundCircle rotate_about(const RoundCircle& c, const Vec3& point, const Rotation3& R) {
  return {point + R * (c.center - point), c.radius, R * c.normal};
}

void require_arc_kept(const ArcOfIntersection& before, const HopfLink& after,
                      double tol, const char* stage) {
  const ArcOfIntersection now = arc_of_intersection(after);
  const double err = std::max((now.on_first - before.on_first).norm(),
                              (now.on_second - before.on_second).norm());
  if (err > tol) {
    throw Error(ErrorKind::Degenerate,
                std::string(stage) + " moved the arc of intersection by " +
                    std::to_string(err));
  }
}

}  // namespace

DeckElement compose(DeckElement a, DeckElement b) {
  switch (bits(a) ^ bits(b)) {
    case 0: return DeckElement::Identity;
    case 1: return DeckElement::Alpha;
    case 2: return DeckElement::Swap;
    default: return DeckElement::AlphaSwap;
  }
}

std::string_view to_string(DeckElement g) {
  switch (g) {
    case DeckElement::Identity: return "id";
    case DeckElement::Alpha: return "alpha";
    case DeckElement::Swap: return "s";
    case DeckElement::AlphaSwap: return "alpha_s";
  }
  return "?";
}

HopfLink g_act(DeckElement g, const HopfLink& link) {
  HopfLink out = link;
  if (bits(g) & 1) {
    out.first.normal = -out.first.normal;
    out.second.normal = -out.second.normal;
  }
  if (bits(g) & 2) std::swap(out.first, out.second);
  return out;
}

Rotation3 deck_matrix(DeckElement g) {
  Rotation3 alpha = Vec3(-1.0, 1.0, -1.0).asDiagonal();
  Rotation3 swap;
  swap << 0, 0, 1, 0, -1, 0, 1, 0, 0;
  switch (g) {
    case DeckElement::Identity: return Rotation3::Identity();
    case DeckElement::Alpha: return alpha;
    case DeckElement::Swap: return swap;
    case DeckElement::AlphaSwap: return alpha * swap;
  }
  return Rotation3::Identity();
}

const QuaternionSubgroup& deck_lift_group() {
  static const QuaternionSubgroup group = [] {
    const double h = std::numbers::sqrt2 / 2.0;
    const Quaternion gens[] = {{0, 0, 1, 0}, {0, h, 0, h}};
    return QuaternionSubgroup::generated_by(gens);
  }();
  return group;
}

HopfLink center_midpoint(const HopfLink& link) {
  const Vec3 shift = kMidpointTarget - arc_of_intersection(link).midpoint;
  HopfLink out = link;
  out.first.center += shift;
  out.second.center += shift;
  return out;
}

HopfLink orthogonalize(const HopfLink& link) {
  const double theta = dihedral_angle(link);
  if (theta < 1e-9 || theta > std::numbers::pi - 1e-9) {
    throw Error(ErrorKind::Degenerate, "dihedral angle at 0 or pi");
  }
  const ArcOfIntersection arc = arc_of_intersection(link);
  const Vec3 axis = link.first.normal.cross(link.second.normal).normalized();
  const double half = 0.5 * (std::numbers::pi / 2.0 - theta);
  return {rotate_about(link.first, arc.midpoint, axis_angle(axis, -half)),
          rotate_about(link.second, arc.midpoint, axis_angle(axis, half))};
}

HopfLink equalize_radii(const HopfLink& link) {
  const ArcOfIntersection arc = arc_of_intersection(link);
  const double target = std::max(link.first.radius, link.second.radius);
  auto grow = [&](const RoundCircle& c, const Vec3& own_end) {
    if (c.radius >= target) return c;
    const double f = target / c.radius;
    return RoundCircle{own_end + f * (c.center - own_end), target, c.normal};
  };
  HopfLink out{grow(link.first, arc.on_first), grow(link.second, arc.on_second)};
  require_arc_kept(arc, out, 1e-8 * scale_of(link), "equalize_radii");
  return out;
}

HopfLink normalize_radius(const HopfLink& link) {
  ArcOfIntersection arc = arc_of_intersection(link);
  HopfLink src = link;
  if (!(arc.length() < 2.0 - 1e-6)) {
    const double f = 1.0 / arc.length();
    const Vec3 m = arc.midpoint;
    for (RoundCircle* c : {&src.first, &src.second}) {
      c->center = m + f * (c->center - m);
      c->radius *= f;
    }
    arc.on_first = m + f * (arc.on_first - m);
    arc.on_second = m + f * (arc.on_second - m);
  }
  const Vec3 toward_second = (arc.on_second - arc.on_first).normalized();
  HopfLink out{{arc.on_first + toward_second, 1.0, src.first.normal},
               {arc.on_second - toward_second, 1.0, src.second.normal}};
  require_arc_kept(arc, out, 1e-8 * scale_of(link), "normalize_radius");
  return out;
}

HopfLink center_arc_endpoints(const HopfLink& link) {
  const ArcOfIntersection arc = arc_of_intersection(link);
  const Vec3 d = (arc.on_first - arc.on_second).normalized();
  const Vec3 p1 = link.first.center;
  const Vec3 p2 = link.second.center;
  auto nearest = [](const Vec3& a, const Vec3& b, const Vec3& target) {
    return (a - target).squaredNorm() <= (b - target).squaredNorm() ? a : b;
  };
  // y1: end of the diameter of C2 parallel to the arc, nearest p1; y2 likewise.
  const Vec3 y1 = nearest(p2 + link.second.radius * d, p2 - link.second.radius * d, p1);
  const Vec3 y2 = nearest(p1 + link.first.radius * d, p1 - link.first.radius * d, p2);
  HopfLink out = link;
  out.first.center = p1 + 0.5 * (y1 - p1);
  out.second.center = p2 + 0.5 * (y2 - p2);

  const ArcOfIntersection now = arc_of_intersection(out);
  const double err = std::max((now.on_second - out.first.center).norm(),
                              (now.on_first - out.second.center).norm());
  if (err > 1e-9 * scale_of(link)) {
    throw Error(ErrorKind::PostconditionFailed,
                "arc endpoints are not the centers (error " + std::to_string(err) + ")");
  }
  return out;
}

std::array<HopfLink, 5> retraction_stages(const HopfLink& link) {
  std::array<HopfLink, 5> s;
  s[0] = center_midpoint(link);
  s[1] = orthogonalize(s[0]);
  s[2] = equalize_radii(s[1]);
  s[3] = normalize_radius(s[2]);
  s[4] = center_arc_endpoints(s[3]);
  return s;
}

HopfLink retract_to_Y(const HopfLink& link) { return retraction_stages(link)[4]; }

double YResiduals::max() const {
  return std::max({midpoint, angle, radii, endpoints, orientation});
}

YResiduals y_residuals(const HopfLink& link) {
  const ArcOfIntersection arc = arc_of_intersection(link);
  YResiduals r;
  r.midpoint = (arc.midpoint - kMidpointTarget).norm();
  r.angle = std::abs(link.first.normal.dot(link.second.normal));
  r.radii = std::max(std::abs(link.first.radius - 1.0), std::abs(link.second.radius - 1.0));
  r.endpoints = std::max((arc.on_second - link.first.center).norm(),
                         (arc.on_first - link.second.center).norm());
  const Vec3 v = (link.second.center - link.first.center).normalized();
  r.orientation = (link.second.normal - link.first.normal.cross(v)).norm();
  return r;
}

Frame frame_of(const HopfLink& link) {
  const YResiduals r = y_residuals(link);
  if (r.max() > 1e-8) {
    throw Error(ErrorKind::NotInY, "link violates the Y conditions by " + std::to_string(r.max()));
  }
  const Vec3 n1 = link.first.normal.normalized();
  Vec3 v = link.second.center - link.first.center;
  v = (v - v.dot(n1) * n1).normalized();
  Frame f;
  f.matrix.col(0) = n1;
  f.matrix.col(1) = v;
  f.matrix.col(2) = n1.cross(v);
  return f;
}

HopfLink config_of_frame(const Rotation3& R) {
  if (!is_rotation(R, 1e-9)) throw Error(ErrorKind::NotRotation, "frame is not in SO(3)");
  const Vec3 n1 = R.col(0), v = R.col(1), n2 = R.col(2);
  return {{kMidpointTarget - 0.5 * v, 1.0, n1}, {kMidpointTarget + 0.5 * v, 1.0, n2}};
}

PrismPoint canonical_prism_point(const HopfLink& link) {
  const int lk = linking_number_round(link.first, link.second);
  if (lk == 0) throw Error(ErrorKind::NotLinked, "linking number is 0");
  const HopfLink oriented = lk > 0 ? link : HopfLink{link.first, link.second.reversed()};

  // Symmetrize over the deck group: the multiset of orbit points depends only
  // on the G-orbit of the input, so the selected maximum is exactly invariant.
  std::vector<Quaternion> pool;
  pool.reserve(4 * deck_lift_group().size());
  for (DeckElement g : kDeckGroup) {
    const Frame f = frame_of(retract_to_Y(g_act(g, oriented)));
    const Quaternion q = lift_rotation(f.matrix).first;
    for (const Quaternion& h : deck_lift_group().elements()) pool.push_back(q * h);
  }
  return {lex_max(pool, 1e-9)};
}

Quaternion loop_holonomy(std::span<const HopfLink> loop) {
  if (loop.size() < 2) throw Error(ErrorKind::InvalidInput, "loop needs at least two samples");
  const double tol = 1e-8 * scale_of(loop.front());
  const bool closed = std::any_of(kDeckGroup.begin(), kDeckGroup.end(), [&](DeckElement g) {
    return link_distance(g_act(g, loop.front()), loop.back()) <= tol;
  });
  if (!closed) throw Error(ErrorKind::NotClosed, "loop endpoints differ beyond relabeling");

  std::vector<Rotation3> frames;
  frames.reserve(loop.size());
  for (const HopfLink& l : loop) frames.push_back(frame_of(retract_to_Y(l)).matrix);
  const Quaternion q0 = lift_rotation(frames.front()).first;
  const std::vector<Quaternion> path = lift_path(frames, q0);
  return path.back() * q0.conj();
}

}  // namespace hopf
