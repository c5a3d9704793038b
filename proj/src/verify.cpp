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

#include "hopf/verify.h"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include "hopf/error.h"
#include "hopf/grassmann.h"
#include "hopf/oracles.h"
#include "hopf/pattern.h"
#include "hopf/plgeom.h"
#include "hopf/retraction.h"
#include "hopf/sampling.h"

namespace hopf {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

SplitMix64 stream(const VerifyConfig& cfg, int criterion) {
  return SplitMix64(cfg.seed ^ (0xd1b54a32d192ed03ULL * static_cast<std::uint64_t>(criterion)));
}

int count(const VerifyConfig& cfg, int fallback) { return cfg.samples.value_or(fallback); }

// Runs `body`, turning exceptions into a failed result.
CriterionResult guarded(int number, std::string name,
                        const std::function<void(CriterionResult&)>& body) {
  CriterionResult r{number, std::move(name), true, ""};
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

double stage_gap(const ArcOfIntersection& a, const ArcOfIntersection& b) {
  return std::max((a.on_first - b.on_first).norm(), (a.on_second - b.on_second).norm());
}

double dihedral(const HopfLink& l) { return std::acos(std::clamp(l.first.normal.dot(l.second.normal), -1.0, 1.0)); }

double radius_gap(const HopfLink& a, const HopfLink& b) {
  return std::max(std::abs(a.first.radius - b.first.radius), std::abs(a.second.radius - b.second.radius));
}

double normal_gap(const HopfLink& a, const HopfLink& b) {
  return std::max((a.first.normal - b.first.normal).norm(), (a.second.normal - b.second.normal).norm());
}

Eigen::Matrix<double, 6, 1> bivector(const Plane2in4& p) {
  const Vec4 x = to_vec4(p.x), y = to_vec4(p.y);
  Eigen::Matrix<double, 6, 1> w;
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) w[k++] = x[i] * y[j] - x[j] * y[i];
  }
  return w;
}

}  // namespace

std::string CriterionResult::line() const {
  return std::string(passed ? "PASS" : "FAIL") + " [" + std::to_string(number) + "] " + name + ": " + detail;
}

CriterionResult check_motion_group(const VerifyConfig&) {
  return guarded(1, "motion group Q8 from loop holonomies", [](CriterionResult& r) {
    constexpr int kSamples = 1000;
    const HopfLink H = oracle::basepoint();
    const Vec3 m(0.5, 0, 0);
    const auto loop_a = oracle::half_turn_loop(H, Vec3::Zero(), Vec3(1, 0, 0), kSamples);
    const auto loop_s = oracle::half_turn_loop(H, m, Vec3(0, 1, 1), kSamples);
    const auto loop_as = oracle::half_turn_loop(H, m, Vec3(0, 1, -1), kSamples);
    const Quaternion h[3] = {loop_holonomy(loop_a), loop_holonomy(loop_s), loop_holonomy(loop_as)};
    double square = 0.0, anti = 0.0;
    for (int a = 0; a < 3; ++a) {
      square = std::max(square, max_abs_diff(h[a] * h[a], -Quaternion::one()));
      for (int b = a + 1; b < 3; ++b) anti = std::max(anti, max_abs_diff(h[a] * h[b], -(h[b] * h[a])));
    }
    const auto group = QuaternionSubgroup::generated_by(h, 1e-6);
    r.passed = square <= 1e-6 && anti <= 1e-6 && group.size() == 8;
    r.detail = "|h^2+1| " + fmt(square) + ", |hh'+h'h| " + fmt(anti) + ", order " +
               std::to_string(group.size());
  });
}

CriterionResult check_quotient_coordinate(const VerifyConfig& cfg) {
  return guarded(2, "prism coordinate is deck invariant", [&](CriterionResult& r) {
    SplitMix64 rng = stream(cfg, 2);
    const int n = count(cfg, 10000);
    int mismatches = 0;
    for (int i = 0; i < n; ++i) {
      const HopfLink link = random_hopf_link(rng);
      const Quaternion base = canonical_prism_point(link).value;
      for (DeckElement g : kDeckGroup) {
        if (!(canonical_prism_point(g_act(g, link)).value == base)) ++mismatches;
      }
    }
    Rotation3 frame;
    frame << 0, 1, 0, 0, 0, 1, 1, 0, 0;
    const Quaternion expected = oracle::canonical_orbit_point(oracle::lift(frame));
    const double err = max_abs_diff(canonical_prism_point(oracle::basepoint()).value, expected);
    r.passed = mismatches == 0 && err <= 1e-9;
    r.detail = std::to_string(mismatches) + " mismatches over " + std::to_string(n) +
               " links x 4 deck elements, basepoint error " + fmt(err);
  });
}

CriterionResult check_retraction_contract(const VerifyConfig& cfg) {
  return guarded(3, "retraction stages keep their invariants", [&](CriterionResult& r) {
    SplitMix64 rng = stream(cfg, 3);
    const int n = count(cfg, 10000);
    const Vec3 target(0.5, 0, 0);
    double worst = 0.0;
    std::string where = "none";
    auto note = [&](double err, const char* what) {
      if (err > worst) {
        worst = err;
        where = what;
      }
    };
    for (int i = 0; i < n; ++i) {
      const HopfLink link = random_hopf_link(rng);
      const auto s = retraction_stages(link);
      const ArcOfIntersection arc0 = arc_of_intersection(s[0]);
      note((arc0.midpoint - target).norm(), "X0 midpoint");
      note(std::abs(dihedral(s[0]) - dihedral(link)), "X0 angle");
      note(radius_gap(s[0], link), "X0 radii");

      note(std::abs(dihedral(s[1]) - kPi / 2), "X1 angle");
      note(stage_gap(arc_of_intersection(s[1]), arc0), "X1 arc");
      note(radius_gap(s[1], s[0]), "X1 radii");

      const double rmax = std::max(s[1].first.radius, s[1].second.radius);
      note(std::max(std::abs(s[2].first.radius - rmax), std::abs(s[2].second.radius - rmax)), "X2 radii");
      note(stage_gap(arc_of_intersection(s[2]), arc0), "X2 arc");
      note(normal_gap(s[2], s[1]), "X2 planes");

      note(std::max(std::abs(s[3].first.radius - 1), std::abs(s[3].second.radius - 1)), "X3 radii");
      note(stage_gap(arc_of_intersection(s[3]), arc0), "X3 arc");
      note(normal_gap(s[3], s[2]), "X3 planes");

      const ArcOfIntersection arc4 = arc_of_intersection(s[4]);
      note(std::max((arc4.on_second - s[4].first.center).norm(),
                    (arc4.on_first - s[4].second.center).norm()), "X4 endpoints");
      note(radius_gap(s[4], s[3]), "X4 radii");
      note(std::abs(dihedral(s[4]) - dihedral(s[3])), "X4 angle");
      note((arc4.midpoint - target).norm(), "X4 midpoint");

      note(y_residuals(s[4]).max(), "Y conditions");
      note(link_distance(retract_to_Y(s[4]), s[4]), "idempotence");
    }
    r.passed = worst <= 1e-9;
    r.detail = "worst residual " + fmt(worst) + " (" + where + ") over " + std::to_string(n) + " links";
  });
}

CriterionResult check_linking_agreement(const VerifyConfig& cfg) {
  return guarded(4, "round, Gauss and crossing linking numbers agree", [&](CriterionResult& r) {
    SplitMix64 rng = stream(cfg, 4);
    const int n = count(cfg, 1000);
    int disagreements = 0, checked = 0;
    auto check = [&](const HopfLink& l, int expected) {
      int closed = linking_number_round(l.first, l.second);
      if (cfg.fault == Fault::FlipLinkingSign) closed = -closed;
      const int res = polygon_resolution(l.first, l.second);
      const Polyline3 a = sample_circle(l.first, res), b = sample_circle(l.second, res);
      const int gauss = gauss_linking_pl(a, b);
      const int cross = crossing_linking_pl(a, b);
      ++checked;
      if (closed != gauss || gauss != cross || closed != expected) ++disagreements;
    };
    const HopfLink H = oracle::basepoint();
    check(H, 1);
    check({H.first, H.second.reversed()}, -1);
    check({H.first.reversed(), H.second}, -1);
    for (int i = 0; i < n; ++i) {
      const HopfLink l = random_hopf_link(rng);
      check(l, 1);
      check({l.first, l.second.reversed()}, -1);
    }
    r.passed = disagreements == 0;
    r.detail = std::to_string(disagreements) + " disagreements over " + std::to_string(checked) + " links";
  });
}

CriterionResult check_scheduling(const VerifyConfig& cfg) {
  return guarded(5, "removal schedule ends at alpha", [&](CriterionResult& r) {
    SplitMix64 rng = stream(cfg, 5);
    const int n = count(cfg, 500);
    int failures = 0;
    for (int i = 0; i < n; ++i) {
      const IntersectionPattern p = random_pattern(rng, 20, 10);
      const ScheduleRun run = run_schedule(p);
      const auto order = innermost_order(p);
      bool ok = is_alpha_only(run.final_pattern) && run.removed == order &&
                oracle::is_linear_extension(p, order);
      const NestingForest forest = nesting_forest(p);
      for (const Chord& c : p.chords) ok = ok && forest.parent_of(c.id) == oracle::parent(p, c.id);
      const auto& e = run.schedule.entries;
      for (std::size_t k = 0; k < e.size(); ++k) {
        ok = ok && e[k].chord == order[k] && e[k].start < e[k].end && e[k].start > 0 && e[k].end < 1;
        if (k + 1 < e.size()) ok = ok && e[k].end < e[k + 1].start;
      }
      if (!ok) ++failures;
    }
    r.passed = failures == 0;
    r.detail = std::to_string(failures) + " failures over " + std::to_string(n) + " patterns";
  });
}

CriterionResult check_pattern_extraction(const VerifyConfig&) {
  return guarded(6, "basepoint disc meets the ellipsoid in alpha only", [](CriterionResult& r) {
    const RoundCircle equator = oracle::basepoint().first;
    const TriMesh mid = oracle::flat_disc(64);
    const double h = find_transverse_height(mid, equator, 0.5, 2.0);
    const Ellipsoid e(equator, h);
    const IntersectionPattern p64 = extract_intersection_pattern(mid, e);
    const bool single = is_alpha_only(p64);
    const IntersectionPattern p32 = extract_intersection_pattern(oracle::flat_disc(32), e);
    const IntersectionPattern p128 = extract_intersection_pattern(oracle::flat_disc(128), e);
    r.passed = single && p32 == p64 && p128 == p64;
    r.detail = std::string("h ") + fmt(h) + ", " + std::to_string(p64.chords.size() + 1) +
               " arc(s), " + std::to_string(p64.circles.size()) + " circle(s), resolutions 32/128 " +
               (p32 == p64 && p128 == p64 ? "agree" : "differ");
  });
}

CriterionResult check_xi_suite(const VerifyConfig& cfg) {
  return guarded(7, "xi map suite", [&](CriterionResult& r) {
    SplitMix64 rng = stream(cfg, 7);
    const int n = count(cfg, 10000);
    const Quaternion eit{std::cos(kPi / 4), std::sin(kPi / 4), 0, 0};  // e^{i pi/4}
    double unit = 0.0, so2 = 0.0, rp2 = 0.0;
    bool antipodal = true, flips = true, sign_law = true;
    int law_mu = 0, law_nu = 0;
    std::vector<Plane2in4> planes;
    std::vector<std::pair<Quaternion, Quaternion>> images;
    for (int i = 0; i < n; ++i) {
      const Plane2in4 p = random_plane(rng);
      const auto [m, v] = xi(p);
      unit = std::max({unit, std::abs(m.w), std::abs(v.w), std::abs(m.norm() - 1), std::abs(v.norm() - 1)});

      // mu is fixed by right multiplication, nu by left multiplication, and
      // the pair by rotating the basis inside the plane.
      so2 = std::max(so2, max_abs_diff(mu(p.x * eit, p.y * eit), m));
      so2 = std::max(so2, max_abs_diff(nu(eit * p.x, eit * p.y), v));
      const double c = std::cos(0.3), s = std::sin(0.3);
      const auto [m2, v2] = xi({p.x * c + p.y * s, p.y * c - p.x * s});
      so2 = std::max({so2, max_abs_diff(m2, m), max_abs_diff(v2, v)});

      const auto [ma, va] = xi({p.x, -p.y});
      antipodal = antipodal && ma == -m && va == -v;

      const RP2Pair canon = canonical_great_hopf(p);
      flips = flips && canonical_great_hopf({p.x, -p.y}) == canon &&
              canonical_great_hopf({-p.x, p.y}) == canon && canonical_great_hopf({-p.x, -p.y}) == canon;
      const Plane2in4 perp = orthogonal_complement(p);
      const RP2Pair canon_perp = canonical_great_hopf(perp);
      rp2 = std::max({rp2, rp2_distance(canon_perp.first, canon.first),
                      rp2_distance(canon_perp.second, canon.second)});

      const auto [mp, vp] = xi(perp);
      const int sm = (mp - m).norm() < 1e-9 ? 1 : ((mp + m).norm() < 1e-9 ? -1 : 0);
      const int sv = (vp - v).norm() < 1e-9 ? 1 : ((vp + v).norm() < 1e-9 ? -1 : 0);
      if (i == 0) {
        law_mu = sm;
        law_nu = sv;
      }
      sign_law = sign_law && sm != 0 && sv != 0 && sm == law_mu && sv == law_nu;
      planes.push_back(p);
      images.emplace_back(m, v);
    }

    // Empirical injectivity over all pairs of well separated planes.
    std::vector<Eigen::Matrix<double, 6, 1>> biv;
    for (const Plane2in4& p : planes) biv.push_back(bivector(p));
    double closest_image = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < planes.size(); ++i) {
      for (std::size_t j = i + 1; j < planes.size(); ++j) {
        if ((biv[i] - biv[j]).norm() <= 1e-3) continue;
        const double d = (images[i].first.coeffs() - images[j].first.coeffs()).norm() +
                         (images[i].second.coeffs() - images[j].second.coeffs()).norm();
        closest_image = std::min(closest_image, d);
      }
    }

    const Vec4 one(1, 0, 0, 0), i4(0, 1, 0, 0);
    const auto [mb, vb] = xi(Plane2in4::make(from_vec4(one), from_vec4(i4)));
    const double base = std::max((mb.coeffs() - oracle::mu(one, i4)).norm(),
                                 (vb.coeffs() - oracle::nu(one, i4)).norm());
    const double base_literal = std::max(max_abs_diff(mb, {0, -1, 0, 0}), max_abs_diff(vb, {0, 1, 0, 0}));

    r.passed = unit <= 1e-10 && so2 <= 1e-9 && antipodal && flips && rp2 <= 1e-9 && sign_law &&
               closest_image > 1e-6 && base <= 1e-12 && base_literal <= 1e-12;
    r.detail = "unit " + fmt(unit) + ", so2 " + fmt(so2) + ", antipodal " + (antipodal ? "exact" : "broken") +
               ", flips " + (flips ? "exact" : "broken") + ", complement rp2 " + fmt(rp2) +
               ", complement law (" + std::to_string(law_mu) + "," + std::to_string(law_nu) + ")" +
               (sign_law ? "" : " inconsistent") + ", min image gap " + fmt(closest_image) +
               ", basepoint " + fmt(std::max(base, base_literal));
  });
}

CriterionResult check_double_cover(const VerifyConfig&) {
  return guarded(8, "full turn lifts to -1, double turn to +1", [](CriterionResult& r) {
    constexpr int kSteps = 1000;
    std::vector<Rotation3> path;
    for (int k = 0; k <= 2 * kSteps; ++k) {
      path.push_back(Eigen::AngleAxisd(2.0 * kPi * k / kSteps, Vec3::UnitX()).toRotationMatrix());
    }
    const auto lifted = lift_path(path, Quaternion::one());
    const double once = max_abs_diff(lifted[kSteps], -Quaternion::one());
    const double twice = max_abs_diff(lifted.back(), Quaternion::one());
    r.passed = once <= 1e-9 && twice <= 1e-9;
    r.detail = "|q(1)+1| " + fmt(once) + ", |q(2)-1| " + fmt(twice);
  });
}

std::vector<CriterionResult> run_acceptance(const VerifyConfig& cfg) {
  if (cfg.samples && *cfg.samples < 1) throw Error(ErrorKind::InvalidInput, "sample count must be at least 1");
  return {check_motion_group(cfg),      check_quotient_coordinate(cfg), check_retraction_contract(cfg),
          check_linking_agreement(cfg), check_scheduling(cfg),          check_pattern_extraction(cfg),
          check_xi_suite(cfg),          check_double_cover(cfg)};
}

}  // namespace hopf
