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

#include "hopf/grassmann.h"
#include "hopf/pattern.h"
#include "hopf/random.h"
#include "hopf/roundlink.h"

namespace hopf {

Quaternion random_unit_quaternion(SplitMix64& rng);
Rotation3 random_rotation(SplitMix64& rng);

/// Random round Hopf link with lk = +1, drawn from explicit coordinates:
/// arc midpoint in [-5,5]^3, arc direction and first normal from a random
/// frame, arc length in [0.2, 1.8], dihedral angle in [0.25, pi - 0.25],
/// log-uniform radii in [0.5, 2]. Components stay at least 0.02 apart.
HopfLink random_hopf_link(SplitMix64& rng);

/// Random oriented 2-plane in R^4 (Gaussian pair, orthonormalized).
Plane2in4 random_plane(SplitMix64& rng);

/// Random valid pattern with up to `max_chords` same-sign chords besides
/// alpha and up to `max_circles` circles.
IntersectionPattern random_pattern(SplitMix64& rng, int max_chords = 20, int max_circles = 10);

}  // namespace hopf
