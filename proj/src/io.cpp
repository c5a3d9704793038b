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

#include "hopf/io.h"

#include <fstream>
#include <sstream>

#include "hopf/error.h"

namespace hopf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j) {
  if (!j.is_number()) bad("expected a number");
  return j.get<double>();
}

int integer(const Json& j) {
  if (!j.is_number_integer()) bad("expected an integer");
  return j.get<int>();
}

template <int N>
Eigen::Matrix<double, N, 1> vec(const Json& j) {
  if (!j.is_array() || j.size() != N) bad("expected an array of " + std::to_string(N) + " numbers");
  Eigen::Matrix<double, N, 1> v;
  for (int i = 0; i < N; ++i) v[i] = number(j[i]);
  return v;
}

std::pair<int, int> index_pair(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("expected a pair of indices");
  return {integer(j[0]), integer(j[1])};
}

}  // namespace

Json vec_to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json circle_to_json(const RoundCircle& c) {
  return {{"center", vec_to_json(c.center)}, {"radius", c.radius}, {"normal", vec_to_json(c.normal)}};
}

RoundCircle circle_from_json(const Json& j) {
  return RoundCircle::make(vec<3>(field(j, "center")), number(field(j, "radius")),
                           vec<3>(field(j, "normal")));
}

Json link_to_json(const HopfLink& link) {
  return {{"components", Json::array({circle_to_json(link.first), circle_to_json(link.second)})}};
}

HopfLink link_from_json(const Json& j) {
  const Json& comps = field(j, "components");
  if (!comps.is_array() || comps.size() != 2) bad("a link has exactly two components");
  return {circle_from_json(comps[0]), circle_from_json(comps[1])};
}

Json quaternion_to_json(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const Json& j) { return from_vec4(vec<4>(j)); }

Json frame_to_json(const Frame& f) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) rows.push_back(vec_to_json(f.matrix.row(r).transpose()));
  return rows;
}

Json plane_to_json(const Plane2in4& p) {
  return {{"x", vec_to_json(to_vec4(p.x))}, {"y", vec_to_json(to_vec4(p.y))}};
}

Plane2in4 plane_from_json(const Json& j) {
  return Plane2in4::make(from_vec4(vec<4>(field(j, "x"))), from_vec4(vec<4>(field(j, "y"))));
}

Json rp2pair_to_json(const RP2Pair& p) {
  return {{"first", vec_to_json(p.first)}, {"second", vec_to_json(p.second)}};
}

Json pattern_to_json(const IntersectionPattern& p) {
  Json points = Json::array();
  for (const BoundaryPoint& b : p.points) {
    points.push_back({{"index", b.index}, {"sign", std::string(1, to_char(b.sign))}});
  }
  Json chords = Json::array();
  for (const Chord& c : p.chords) chords.push_back(Json::array({c.a, c.b}));
  Json circles = Json::array();
  for (const CircleComponent& c : p.circles) {
    Json entry = {{"inside", nullptr}};
    if (c.inside) {
      for (std::size_t i = 0; i < p.chords.size(); ++i) {
        if (p.chords[i].id == *c.inside) entry["inside"] = i;
      }
    }
    circles.push_back(entry);
  }
  return {{"points", points},
          {"chords", chords},
          {"alpha", Json::array({p.alpha.first, p.alpha.second})},
          {"circles", circles}};
}

IntersectionPattern pattern_from_json(const Json& j) {
  IntersectionPattern p;
  const Json& points = field(j, "points");
  if (!points.is_array()) bad("\"points\" must be an array");
  for (const Json& b : points) {
    const Json& sign = field(b, "sign");
    if (sign != "+" && sign != "-") bad("sign must be \"+\" or \"-\"");
    p.points.push_back({integer(field(b, "index")), sign == "+" ? Sign::Plus : Sign::Minus});
  }
  const Json& chords = field(j, "chords");
  if (!chords.is_array()) bad("\"chords\" must be an array");
  for (const Json& c : chords) {
    const auto [a, b] = index_pair(c);
    p.chords.push_back({static_cast<int>(p.chords.size()), std::min(a, b), std::max(a, b)});
  }
  p.alpha = index_pair(field(j, "alpha"));
  const Json& circles = j.contains("circles") ? j.at("circles") : Json::array();
  if (!circles.is_array()) bad("\"circles\" must be an array");
  for (const Json& c : circles) {
    const Json& inside = field(c, "inside");
    p.circles.push_back({inside.is_null() ? std::nullopt : std::optional<int>(integer(inside))});
  }
  validate_pattern(p);
  return p;
}

Json schedule_to_json(const Schedule& s) {
  Json entries = Json::array();
  for (const ScheduleEntry& e : s.entries) {
    entries.push_back({{"chord", e.chord}, {"start", e.start}, {"end", e.end}});
  }
  return {{"entries", entries}, {"delta", s.delta}};
}

Schedule schedule_from_json(const Json& j) {
  Schedule s;
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) bad("\"entries\" must be an array");
  for (const Json& e : entries) {
    s.entries.push_back(
        {integer(field(e, "chord")), number(field(e, "start")), number(field(e, "end"))});
  }
  s.delta = number(field(j, "delta"));
  return s;
}

Json mesh_to_json(const TriMesh& m) {
  Json vertices = Json::array(), triangles = Json::array();
  for (const Vec3& v : m.vertices) vertices.push_back(vec_to_json(v));
  for (const auto& t : m.triangles) triangles.push_back(Json::array({t[0], t[1], t[2]}));
  return {{"vertices", vertices}, {"triangles", triangles}, {"boundary", m.boundary}};
}

TriMesh mesh_from_json(const Json& j) {
  if (j.is_object() && j.contains("circle")) {
    return make_disc_mesh(circle_from_json(j.at("circle")), integer(field(j, "resolution")));
  }
  TriMesh m;
  const Json& vertices = field(j, "vertices");
  const Json& triangles = field(j, "triangles");
  const Json& boundary = field(j, "boundary");
  if (!vertices.is_array() || !triangles.is_array() || !boundary.is_array()) {
    bad("mesh fields must be arrays");
  }
  for (const Json& v : vertices) m.vertices.push_back(vec<3>(v));
  for (const Json& t : triangles) {
    if (!t.is_array() || t.size() != 3) bad("triangles have three indices");
    m.triangles.push_back({integer(t[0]), integer(t[1]), integer(t[2])});
  }
  for (const Json& b : boundary) m.boundary.push_back(integer(b));
  m.validate();
  return m;
}

Json scene_to_json(const Scene& s) {
  return {{"disc_mesh", mesh_to_json(s.disc_mesh)},
          {"equator", circle_to_json(s.equator)},
          {"h_range", Json::array({s.h_min, s.h_max})}};
}

Scene scene_from_json(const Json& j) {
  Scene s;
  s.disc_mesh = mesh_from_json(field(j, "disc_mesh"));
  s.equator = circle_from_json(field(j, "equator"));
  if (j.contains("h_range")) {
    const Eigen::Vector2d r = vec<2>(j.at("h_range"));
    s.h_min = r[0];
    s.h_max = r[1];
  }
  return s;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) bad("cannot write " + path);
}

}  // namespace hopf
