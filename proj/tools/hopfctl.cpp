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

// hopfctl: command-line front end for the hopf library.
//
// Exit codes: 0 ok, 1 usage or I/O error, 2 geometric degeneracy,
// 3 verification failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hopf/error.h"
#include "hopf/grassmann.h"
#include "hopf/io.h"
#include "hopf/pattern.h"
#include "hopf/plgeom.h"
#include "hopf/retraction.h"
#include "hopf/sampling.h"
#include "hopf/verify.h"

namespace {

using hopf::Json;

struct RunConfig {
  std::string input;
  std::string output;
  std::uint64_t seed = 1;
  std::optional<int> n;
  double tol = 1e-9;
  std::optional<int> mesh_res;
  std::optional<double> h_min;
  std::optional<double> h_max;
  std::string method = "round";
  std::string kind = "link";
  std::string fault = "none";
};

constexpr int kExitVerifyFailed = 3;

class Output {
 public:
  explicit Output(const RunConfig& cfg) : path_(cfg.output) {}
  void line(const std::string& s) { buf_ << s << '\n'; }
  void json(const Json& j) { line(j.dump(2)); }
  void flush() {
    if (path_.empty()) {
      std::cout << buf_.str();
    } else {
      hopf::write_text_file(path_, buf_.str());
    }
  }

 private:
  std::string path_;
  std::ostringstream buf_;
};

std::string signed_int(int v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

Json residuals_json(const hopf::YResiduals& r) {
  return {{"midpoint", r.midpoint}, {"angle", r.angle}, {"radii", r.radii},
          {"endpoints", r.endpoints}, {"orientation", r.orientation}};
}

hopf::Scene load_scene(const RunConfig& cfg) {
  Json j = hopf::read_json_file(cfg.input);
  if (j.is_object() && j.contains("disc_mesh") && j["disc_mesh"].is_object() &&
      j["disc_mesh"].contains("circle")) {
    if (cfg.mesh_res || !j["disc_mesh"].contains("resolution")) {
      j["disc_mesh"]["resolution"] = cfg.mesh_res.value_or(64);
    }
  }
  hopf::Scene s = hopf::scene_from_json(j);
  if (cfg.h_min) s.h_min = *cfg.h_min;
  if (cfg.h_max) s.h_max = *cfg.h_max;
  return s;
}

int cmd_lk(const RunConfig& cfg, Output& out) {
  const hopf::HopfLink link = hopf::link_from_json(hopf::read_json_file(cfg.input));
  int lk = 0;
  if (cfg.method == "round") {
    lk = hopf::linking_number_round(link.first, link.second);
  } else {
    const int res = cfg.mesh_res.value_or(hopf::polygon_resolution(link.first, link.second));
    const auto a = hopf::sample_circle(link.first, res), b = hopf::sample_circle(link.second, res);
    lk = cfg.method == "gauss" ? hopf::gauss_linking_pl(a, b) : hopf::crossing_linking_pl(a, b);
  }
  out.line(signed_int(lk));
  return 0;
}

int cmd_canon(const RunConfig& cfg, Output& out) {
  const hopf::HopfLink link = hopf::link_from_json(hopf::read_json_file(cfg.input));
  out.json({{"prism_point", hopf::quaternion_to_json(hopf::canonical_prism_point(link).value)}});
  return 0;
}

int cmd_retract(const RunConfig& cfg, Output& out) {
  const hopf::HopfLink link = hopf::link_from_json(hopf::read_json_file(cfg.input));
  const hopf::HopfLink y = hopf::retract_to_Y(link);
  const hopf::YResiduals r = hopf::y_residuals(y);
  out.json({{"link", hopf::link_to_json(y)},
            {"frame", hopf::frame_to_json(hopf::frame_of(y))},
            {"residuals", residuals_json(r)},
            {"in_Y", r.max() <= cfg.tol}});
  return 0;
}

int cmd_frames(const RunConfig& cfg, Output& out) {
  const hopf::HopfLink link = hopf::link_from_json(hopf::read_json_file(cfg.input));
  const auto stages = hopf::retraction_stages(link);
  const char* names[] = {"X0", "X1", "X2", "X3", "Y"};
  for (int k = 0; k < 5; ++k) {
    const hopf::YResiduals r = hopf::y_residuals(stages[k]);
    Json j = {{"stage", names[k]}, {"link", hopf::link_to_json(stages[k])},
              {"residuals", residuals_json(r)}, {"in_Y", r.max() <= cfg.tol}};
    if (k == 4) j["frame"] = hopf::frame_to_json(hopf::frame_of(stages[k]));
    out.line(j.dump());
  }
  return 0;
}

int cmd_pattern(const RunConfig& cfg, Output& out) {
  const hopf::Scene s = load_scene(cfg);
  const double h = hopf::find_transverse_height(s.disc_mesh, s.equator, s.h_min, s.h_max);
  const hopf::IntersectionPattern p =
      hopf::extract_intersection_pattern(s.disc_mesh, hopf::Ellipsoid(s.equator, h));
  out.json({{"h", h}, {"pattern", hopf::pattern_to_json(p)}});
  return 0;
}

int cmd_schedule(const RunConfig& cfg, Output& out) {
  const Json doc = hopf::read_json_file(cfg.input);
  Json result = Json::object();
  hopf::IntersectionPattern p;
  if (doc.is_object() && doc.contains("points")) {
    p = hopf::pattern_from_json(doc);
  } else {
    const hopf::Scene s = load_scene(cfg);
    const double h = hopf::find_transverse_height(s.disc_mesh, s.equator, s.h_min, s.h_max);
    p = hopf::extract_intersection_pattern(s.disc_mesh, hopf::Ellipsoid(s.equator, h));
    result["h"] = h;
  }
  const hopf::ScheduleRun run = hopf::run_schedule(p);
  result["pattern"] = hopf::pattern_to_json(p);
  result["schedule"] = hopf::schedule_to_json(run.schedule);
  result["removed"] = run.removed;
  result["stray_circles"] = run.stray_circles;
  result["final"] = hopf::pattern_to_json(run.final_pattern);
  result["directive"] = run.directive;
  out.json(result);
  return 0;
}

int cmd_xi(const RunConfig& cfg, Output& out) {
  const auto [m, v] = hopf::xi(hopf::plane_from_json(hopf::read_json_file(cfg.input)));
  out.json({{"mu", hopf::quaternion_to_json(m)}, {"nu", hopf::quaternion_to_json(v)}});
  return 0;
}

int cmd_canon_s3(const RunConfig& cfg, Output& out) {
  const hopf::Plane2in4 plane = hopf::plane_from_json(hopf::read_json_file(cfg.input));
  out.json(hopf::rp2pair_to_json(hopf::canonical_great_hopf(plane)));
  return 0;
}

int cmd_verify(const RunConfig& cfg, Output& out) {
  hopf::VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.samples = cfg.n;
  if (cfg.fault == "flip-linking-sign") vc.fault = hopf::Fault::FlipLinkingSign;
  bool ok = true;
  for (const hopf::CriterionResult& r : hopf::run_acceptance(vc)) {
    out.line(r.line());
    ok = ok && r.passed;
  }
  return ok ? 0 : kExitVerifyFailed;
}

int cmd_sample(const RunConfig& cfg, Output& out) {
  hopf::SplitMix64 rng(cfg.seed);
  const int n = cfg.n.value_or(1);
  for (int i = 0; i < n; ++i) {
    if (cfg.kind == "link") {
      out.line(hopf::link_to_json(hopf::random_hopf_link(rng)).dump());
    } else if (cfg.kind == "plane") {
      out.line(hopf::plane_to_json(hopf::random_plane(rng)).dump());
    } else {
      out.line(hopf::pattern_to_json(hopf::random_pattern(rng)).dump());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coordinates and checks for round Hopf links"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--n", cfg.n, "Sample count")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "Tolerance for the Y-condition report")->check(CLI::PositiveNumber);
  app.add_option("--mesh-res", cfg.mesh_res, "Disc mesh resolution")->check(CLI::Range(8, 4096));
  app.add_option("--h-min", cfg.h_min, "Lower end of the ellipsoid height range");
  app.add_option("--h-max", cfg.h_max, "Upper end of the ellipsoid height range");
  app.add_option("--out", cfg.output, "Write output to this file");

  using Handler = int (*)(const RunConfig&, Output&);
  struct Command {
    const char* name;
    const char* help;
    const char* input;  // nullptr when the command takes no input file
    Handler run;
  };
  const Command commands[] = {
      {"lk", "Linking number of a link", "link JSON", cmd_lk},
      {"canon", "Canonical prism coordinate of a link", "link JSON", cmd_canon},
      {"retract", "Retracted link in Y and its frame", "link JSON", cmd_retract},
      {"frames", "JSONL of the five retraction stages", "link JSON", cmd_frames},
      {"pattern", "Intersection pattern of a scene", "scene JSON", cmd_pattern},
      {"schedule", "Removal schedule of a scene or pattern", "scene or pattern JSON", cmd_schedule},
      {"xi", "(mu, nu) of a 2-plane in R^4", "plane JSON", cmd_xi},
      {"canon-s3", "RP2 x RP2 coordinate of a great Hopf link", "plane JSON", cmd_canon_s3},
      {"verify", "Run the invariant suites", nullptr, cmd_verify},
      {"sample", "Emit random links, planes or patterns as JSONL", nullptr, cmd_sample},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (c.input) sub->add_option("input", cfg.input, c.input)->required();
    subs.emplace_back(sub, c.run);
  }
  app.get_subcommand("lk")
      ->add_option("--method", cfg.method, "round, gauss or crossing")
      ->check(CLI::IsMember({"round", "gauss", "crossing"}));
  app.get_subcommand("sample")
      ->add_option("--kind", cfg.kind, "link, plane or pattern")
      ->check(CLI::IsMember({"link", "plane", "pattern"}));
  app.get_subcommand("verify")
      ->add_option("--inject-fault", cfg.fault, "Deliberate defect for testing the suite")
      ->check(CLI::IsMember({"none", "flip-linking-sign"}))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (cfg.h_min && cfg.h_max && !(*cfg.h_min < *cfg.h_max)) {
    std::cerr << "error: --h-min must be below --h-max\n";
    return 1;
  }

  try {
    for (const auto& [sub, run] : subs) {
      if (!sub->parsed()) continue;
      Output out(cfg);
      const int code = run(cfg, out);
      out.flush();
      return code;
    }
  } catch (const hopf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hopf::is_geometric(e.kind()) ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
