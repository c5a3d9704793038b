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

#include <string>

#include "json.hpp"

#include "hopf/grassmann.h"
#include "hopf/pattern.h"
#include "hopf/plgeom.h"
#include "hopf/retraction.h"

namespace hopf {

using Json = nlohmann::ordered_json;

// All parsers throw InvalidInput on malformed documents.

Json vec_to_json(const Eigen::VectorXd& v);

Json circle_to_json(const RoundCircle& c);
RoundCircle circle_from_json(const Json& j);

/// {"components": [circle, circle]}
Json link_to_json(const HopfLink& link);
HopfLink link_from_json(const Json& j);

/// [w, x, y, z]
Json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const Json& j);

Json frame_to_json(const Frame& f);

/// {"x": [4], "y": [4]}
Json plane_to_json(const Plane2in4& p);
Plane2in4 plane_from_json(const Json& j);

Json rp2pair_to_json(const RP2Pair& p);

/// {"points": [{"index", "sign"}], "chords": [[a, b]], "alpha": [a, b],
///  "circles": [{"inside": chord | null}]}. Chords are referred to by
/// their position in "chords"; parsing assigns ids 0, 1, ...
Json pattern_to_json(const IntersectionPattern& p);
IntersectionPattern pattern_from_json(const Json& j);

/// {"entries": [{"chord", "start", "end"}], "delta"}
Json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const Json& j);

/// {"vertices": [[x,y,z]], "triangles": [[i,j,k]], "boundary": [i]} or
/// {"circle": circle, "resolution": n} for a flat meshed disc.
Json mesh_to_json(const TriMesh& m);
TriMesh mesh_from_json(const Json& j);

struct Scene {
  TriMesh disc_mesh;
  RoundCircle equator;
  double h_min = 0.5;
  double h_max = 2.0;
};

/// {"disc_mesh": mesh, "equator": circle, "h_range": [a, b]}
Json scene_to_json(const Scene& s);
Scene scene_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hopf
