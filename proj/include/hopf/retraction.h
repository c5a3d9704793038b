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
#include <span>
#include <string_view>
#include <vector>

#include "hopf/quat.h"
#include "hopf/roundlink.h"

namespace hopf {

/// Element of the deck group Z/2 x Z/2 of oriented labeled links over
/// unoriented unlabeled ones: Alpha reverses both orientations, Swap
/// exchanges the labels.
enum class DeckElement { Identity, Alpha, Swap, AlphaSwap };

inline constexpr std::array<DeckElement, 4> kDeckGroup = {
    DeckElement::Identity, DeckElement::Alpha, DeckElement::Swap, DeckElement::AlphaSwap};

DeckElement compose(DeckElement a, DeckElement b);
std::string_view to_string(DeckElement g);

HopfLink g_act(DeckElement g, const HopfLink& link);

/// Right-action matrix of `g` on frames with columns (n1, v, n2).
Rotation3 deck_matrix(DeckElement g);

/// Lifts of the four deck matrices to SU(2):
/// {+-1, +-j, +-(i+k)/sqrt2, +-(i-k)/sqrt2}.
const QuaternionSubgroup& deck_lift_group();

// Retraction stages. Each takes a valid oriented link with lk = +1 and
// returns the image under one stage map.

/// X0: translate so the arc midpoint sits at (1/2, 0, 0).
HopfLink center_midpoint(const HopfLink& link);

/// X1: rotate each disc about the arc line by -+(pi/2 - theta)/2 so the
/// dihedral angle becomes pi/2.
HopfLink orthogonalize(const HopfLink& link);

/// X2: grow the smaller circle to the larger radius by a homothety centred
/// at its own arc endpoint.
HopfLink equalize_radii(const HopfLink& link);

/// X3: make both radii 1, each circle keeping its plane and its own arc
/// endpoint, with its center on the arc line. The arc is kept whenever it is
/// shorter than 2; a longer arc cannot fit inside a unit disc, in which case
/// the configuration is first scaled about the arc midpoint to arc length 1.
HopfLink normalize_radius(const HopfLink& link);

/// X4: translate the circles by half of gamma_1 = -gamma_2 so the arc
/// endpoints become the two centers.
HopfLink center_arc_endpoints(const HopfLink& link);

/// All five stages composed.
HopfLink retract_to_Y(const HopfLink& link);

/// The five intermediate links X0, X1, X2, X3, Y.
std::array<HopfLink, 5> retraction_stages(const HopfLink& link);

/// Residuals of the four conditions defining Y.
struct YResiduals {
  double midpoint = 0.0;  // |m - (1/2,0,0)|
  double angle = 0.0;     // |<n1, n2>|
  double radii = 0.0;     // max |r_i - 1|
  double endpoints = 0.0; // max distance between arc endpoints and centers
  double orientation = 0.0;  // |n2 - n1 x v|

  double max() const;
};
YResiduals y_residuals(const HopfLink& link);

/// Orthonormal frame with columns (n1, v, n2), n2 = n1 x v.
struct Frame {
  Rotation3 matrix = Rotation3::Identity();

  Vec3 n1() const { return matrix.col(0); }
  Vec3 v() const { return matrix.col(1); }
  Vec3 n2() const { return matrix.col(2); }
};

/// Frame of a link in Y; throws NotInY beyond 1e-8.
Frame frame_of(const HopfLink& link);

/// The link in Y whose frame is R.
HopfLink config_of_frame(const Rotation3& R);

/// A point of S^3/Q8: canonical unit quaternion of the orbit.
struct PrismPoint {
  Quaternion value;
};

/// Canonical quotient coordinate of a round Hopf link. Links with lk = -1
/// are first re-oriented by reversing the second component. The result is
/// bitwise invariant under the deck group.
PrismPoint canonical_prism_point(const HopfLink& link);

/// q(1) q(0)^-1 for the lift of the retracted frame path along a closed
/// loop of links.
Quaternion loop_holonomy(std::span<const HopfLink> loop);

}  // namespace hopf
