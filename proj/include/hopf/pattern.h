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

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopf {

enum class Sign { Plus, Minus };

char to_char(Sign s);

/// Signed endpoint A_i on the boundary loop, listed in cyclic order.
struct BoundaryPoint {
  int index = 0;
  Sign sign = Sign::Plus;
  bool operator==(const BoundaryPoint&) const = default;
};

/// A same-sign intersection arc. `id` is stable under removals.
struct Chord {
  int id = 0;
  int a = 0;  // boundary indices, a < b
  int b = 0;
  bool operator==(const Chord&) const = default;
};

struct CircleComponent {
  std::optional<int> inside;  // innermost chord region containing it
  bool operator==(const CircleComponent&) const = default;
};

/// Chord-and-circle diagram of a disc meeting the ellipsoid. The special
/// mixed-sign arc is stored separately from the other chords.
struct IntersectionPattern {
  std::vector<BoundaryPoint> points;
  std::vector<Chord> chords;
  std::pair<int, int> alpha{0, 1};
  std::vector<CircleComponent> circles;

  const Chord& chord(int id) const;
  bool operator==(const IntersectionPattern&) const = default;
};

/// Pattern with only the special arc.
IntersectionPattern alpha_only_pattern();
/// Two oppositely signed points joined by alpha, nothing else.
bool is_alpha_only(const IntersectionPattern& p);

/// Throws CrossingChords, WrongAlphaCount, or InvalidInput.
void validate_pattern(const IntersectionPattern& p);

/// Boundary indices cut open at the first endpoint of alpha, so that each
/// chord's region C(k) becomes the closed interval [lo, hi].
struct ChordInterval {
  int lo = 0;
  int hi = 0;
  bool contains(const ChordInterval& o) const { return lo < o.lo && o.hi < hi; }
};
ChordInterval region_interval(const IntersectionPattern& p, const Chord& c);

struct NestingForest {
  std::vector<int> ids;                 // chord ids, same order as p.chords
  std::vector<std::optional<int>> parent;  // parent chord id per entry
  std::vector<int> roots() const;
  std::optional<int> parent_of(int id) const;
};
NestingForest nesting_forest(const IntersectionPattern& p);

/// Chord ids, each after every chord nested inside it; ties go to the chord
/// with the smaller boundary index.
std::vector<int> innermost_order(const IntersectionPattern& p);

bool is_innermost(const IntersectionPattern& p, int id);

struct ScheduleEntry {
  int chord = 0;
  double start = 0.0;
  double end = 0.0;
  bool operator==(const ScheduleEntry&) const = default;
};

struct Schedule {
  std::vector<ScheduleEntry> entries;
  double delta = 0.0;
  bool operator==(const Schedule&) const = default;
};

Schedule make_schedule(const IntersectionPattern& p);

/// Removes innermost chord `id` and the circles tagged inside it.
IntersectionPattern simulate_removal(const IntersectionPattern& p, int id);

inline constexpr const char* kStraightenDirective = "straighten alpha to the poles axis";

struct ScheduleRun {
  Schedule schedule;
  std::vector<int> removed;  // chord ids in removal order
  int stray_circles = 0;     // circles outside every chord region, cleared last
  IntersectionPattern final_pattern;
  std::string directive = kStraightenDirective;
};

ScheduleRun run_schedule(const IntersectionPattern& p);

}  // namespace hopf
