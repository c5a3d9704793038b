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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <vector>

#include "hopf/error.h"
#include "hopf/grassmann.h"
#include "hopf/io.h"
#include "hopf/pattern.h"
#include "hopf/plgeom.h"
#include "hopf/retraction.h"
#include "hopf/verify.h"

namespace py = pybind11;

namespace {

using Quat = std::array<double, 4>;

Quat to_py(const hopf::Quaternion& q) { return {q.w, q.x, q.y, q.z}; }
hopf::Quaternion from_py(const Quat& q) { return {q[0], q[1], q[2], q[3]}; }

int linking_number(const hopf::HopfLink& l, const std::string& method) {
  if (method == "round") return hopf::linking_number_round(l.first, l.second);
  const int res = hopf::polygon_resolution(l.first, l.second);
  const auto a = hopf::sample_circle(l.first, res), b = hopf::sample_circle(l.second, res);
  if (method == "gauss") return hopf::gauss_linking_pl(a, b);
  if (method == "crossing") return hopf::crossing_linking_pl(a, b);
  throw hopf::Error(hopf::ErrorKind::InvalidInput, "unknown method " + method);
}

hopf::Plane2in4 plane(const Quat& x, const Quat& y) { return hopf::Plane2in4::make(from_py(x), from_py(y)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Round Hopf link coordinates";

  static py::exception<hopf::Error> error(m, "HopfError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hopf::Error& e) {
      py::object err = error;
      py::object instance = err(e.what());
      instance.attr("kind") = hopf::to_string(e.kind());
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  py::class_<hopf::RoundCircle>(m, "RoundCircle")
      .def(py::init(&hopf::RoundCircle::make), py::arg("center"), py::arg("radius"), py::arg("normal"))
      .def_readonly("center", &hopf::RoundCircle::center)
      .def_readonly("radius", &hopf::RoundCircle::radius)
      .def_readonly("normal", &hopf::RoundCircle::normal)
      .def("reversed", &hopf::RoundCircle::reversed)
      .def("__repr__", [](const hopf::RoundCircle& c) {
        return "RoundCircle(" + hopf::circle_to_json(c).dump() + ")";
      });

  py::class_<hopf::HopfLink>(m, "HopfLink")
      .def(py::init<hopf::RoundCircle, hopf::RoundCircle>(), py::arg("first"), py::arg("second"))
      .def_readonly("first", &hopf::HopfLink::first)
      .def_readonly("second", &hopf::HopfLink::second)
      .def("to_json", [](const hopf::HopfLink& l) { return hopf::link_to_json(l).dump(); })
      .def_static("from_json", [](const std::string& s) { return hopf::link_from_json(hopf::Json::parse(s)); });

  m.def("linking_number", &linking_number, py::arg("link"), py::arg("method") = "round",
        "Linking number by closed form ('round'), Gauss sum or crossing count.");
  m.def("arc_of_intersection", [](const hopf::HopfLink& l) {
    const hopf::ArcOfIntersection a = hopf::arc_of_intersection(l);
    return std::make_pair(a.on_first, a.on_second);
  });
  m.def("dihedral_angle", &hopf::dihedral_angle);
  m.def("retract_to_Y", &hopf::retract_to_Y);
  m.def("retraction_stages", [](const hopf::HopfLink& l) {
    const auto s = hopf::retraction_stages(l);
    return std::vector<hopf::HopfLink>(s.begin(), s.end());
  });
  m.def("frame_of", [](const hopf::HopfLink& l) { return hopf::frame_of(l).matrix; });
  m.def("config_of_frame", &hopf::config_of_frame);
  m.def("canonical_prism_point", [](const hopf::HopfLink& l) { return to_py(hopf::canonical_prism_point(l).value); });
  m.def("loop_holonomy", [](const std::vector<hopf::HopfLink>& loop) { return to_py(hopf::loop_holonomy(loop)); });

  m.def("conjugation_action", [](const Quat& q) { return hopf::conjugation_action(from_py(q)); });
  m.def("lift_rotation", [](const hopf::Rotation3& R) {
    const auto [a, b] = hopf::lift_rotation(R);
    return std::make_pair(to_py(a), to_py(b));
  });
  m.def("lift_path", [](const std::vector<hopf::Rotation3>& path, const Quat& q0) {
    std::vector<Quat> out;
    for (const hopf::Quaternion& q : hopf::lift_path(path, from_py(q0))) out.push_back(to_py(q));
    return out;
  }, py::arg("rotations"), py::arg("q0") = Quat{1, 0, 0, 0});

  m.def("mu", [](const Quat& x, const Quat& y) { return to_py(hopf::mu(from_py(x), from_py(y))); });
  m.def("nu", [](const Quat& x, const Quat& y) { return to_py(hopf::nu(from_py(x), from_py(y))); });
  m.def("xi", [](const Quat& x, const Quat& y) {
    const auto [a, b] = hopf::xi(plane(x, y));
    return std::make_pair(to_py(a), to_py(b));
  });
  m.def("orthogonal_complement", [](const Quat& x, const Quat& y) {
    const hopf::Plane2in4 c = hopf::orthogonal_complement(plane(x, y));
    return std::make_pair(to_py(c.x), to_py(c.y));
  });
  m.def("canonical_great_hopf", [](const Quat& x, const Quat& y) {
    const hopf::RP2Pair r = hopf::canonical_great_hopf(plane(x, y));
    return std::make_pair(r.first, r.second);
  });

  m.def("schedule", [](const std::string& pattern_json) {
    const hopf::ScheduleRun run = hopf::run_schedule(hopf::pattern_from_json(hopf::Json::parse(pattern_json)));
    hopf::Json j = {{"schedule", hopf::schedule_to_json(run.schedule)},
                    {"removed", run.removed},
                    {"final", hopf::pattern_to_json(run.final_pattern)},
                    {"directive", run.directive}};
    return j.dump();
  }, "Runs the innermost-first removal schedule on a pattern given as JSON; returns JSON.");

  m.def("verify", [](std::uint64_t seed, std::optional<int> samples) {
    hopf::VerifyConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    std::vector<py::dict> out;
    for (const hopf::CriterionResult& r : hopf::run_acceptance(cfg)) {
      py::dict d;
      d["number"] = r.number;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      out.push_back(d);
    }
    return out;
  }, py::arg("seed") = 1, py::arg("samples") = py::none());
}
