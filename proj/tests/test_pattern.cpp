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

#include <functional>

#include "doctest.h"
#include "hopf/error.h"
#include "hopf/oracles.h"
#include "hopf/pattern.h"
#include "hopf/sampling.h"

using namespace hopf;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidInput;
}

// Pattern from a sign string, chord endpoint pairs (ids by position) and
// the alpha pair.
IntersectionPattern make(const std::string& s, const std::vector<std::pair<int, int>>& chords,
                         std::pair<int, int> alpha, std::vector<CircleComponent> circles = {}) {
  IntersectionPattern p;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) p.points.push_back({i, s[i] == '+' ? Sign::Plus : Sign::Minus});
  for (int k = 0; k < static_cast<int>(chords.size()); ++k) p.chords.push_back({k, chords[k].first, chords[k].second});
  p.alpha = alpha;
  p.circles = std::move(circles);
  return p;
}

// Chain k0 in k1 in k2 with alpha = (0, 7).
IntersectionPattern chain() { return make("+++++++-", {{3, 4}, {2, 5}, {1, 6}}, {0, 7}); }

}  // namespace

TEST_CASE("validate_pattern") {
  CHECK_NOTHROW(validate_pattern(alpha_only_pattern()));
  CHECK_NOTHROW(validate_pattern(make("+++-", {{1, 2}}, {0, 3})));
  CHECK_NOTHROW(validate_pattern(chain()));
  CHECK(kind_of([] { validate_pattern(make("+-+-", {{1, 2}}, {0, 3})); }) == ErrorKind::WrongAlphaCount);
  CHECK(kind_of([] { validate_pattern(make("++--", {{0, 1}}, {2, 3})); }) == ErrorKind::WrongAlphaCount);
  CHECK(kind_of([] { validate_pattern(make("+++++-", {{1, 3}, {2, 4}}, {0, 5})); }) == ErrorKind::CrossingChords);
  CHECK(kind_of([] { validate_pattern(make("+++-", {{1, 1}}, {0, 3})); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { validate_pattern(make("++-", {}, {0, 2})); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { validate_pattern(make("+++-", {{1, 2}}, {0, 3}, {{7}})); }) == ErrorKind::InvalidInput);
}

TEST_CASE("nesting forest") {
  const NestingForest one = nesting_forest(make("+++-", {{1, 2}}, {0, 3}));
  CHECK(one.roots() == std::vector<int>{0});

  const IntersectionPattern c = chain();
  const NestingForest f = nesting_forest(c);
  CHECK(f.parent_of(0) == 1);
  CHECK(f.parent_of(1) == 2);
  CHECK(!f.parent_of(2).has_value());

  const NestingForest two = nesting_forest(make("+++++-", {{1, 2}, {3, 4}}, {0, 5}));
  CHECK(two.roots() == std::vector<int>{0, 1});

  // Alpha in the middle of the cut: regions are still taken away from it.
  const IntersectionPattern wrapped = make("+++-++", {{1, 4}, {0, 5}}, {2, 3});
  CHECK_NOTHROW(validate_pattern(wrapped));
  CHECK(nesting_forest(wrapped).parent_of(1) == 0);
  CHECK(innermost_order(wrapped) == std::vector<int>{1, 0});

  SplitMix64 rng(9);
  for (int n = 0; n < 300; ++n) {
    const IntersectionPattern p = random_pattern(rng);
    const NestingForest nf = nesting_forest(p);
    for (const Chord& k : p.chords) CHECK(nf.parent_of(k.id) == oracle::parent(p, k.id));
  }
}

TEST_CASE("innermost order") {
  CHECK(innermost_order(chain()) == std::vector<int>{0, 1, 2});
  // k0 = (2,3) and k1 = (4,5) both inside k2 = (1,6).
  const IntersectionPattern forest = make("+++++++-", {{2, 3}, {4, 5}, {1, 6}}, {0, 7});
  CHECK(innermost_order(forest) == std::vector<int>{0, 1, 2});
  const IntersectionPattern swapped = make("+++++++-", {{4, 5}, {2, 3}, {1, 6}}, {0, 7});
  CHECK(innermost_order(swapped) == std::vector<int>{1, 0, 2});
  CHECK(innermost_order(alpha_only_pattern()).empty());

  CHECK(is_innermost(chain(), 0));
  CHECK(!is_innermost(chain(), 2));

  SplitMix64 rng(10);
  for (int n = 0; n < 300; ++n) {
    const IntersectionPattern p = random_pattern(rng);
    const std::vector<int> order = innermost_order(p);
    CHECK(order.size() == p.chords.size());
    CHECK(oracle::is_linear_extension(p, order));
  }
}

TEST_CASE("schedule") {
  const Schedule empty = make_schedule(alpha_only_pattern());
  CHECK(empty.entries.empty());

  const Schedule s = make_schedule(chain());
  REQUIRE(s.entries.size() == 3);
  CHECK(s.entries[0].start == 0.25);
  CHECK(s.entries[1].start == 0.5);
  CHECK(s.entries[2].start == 0.75);
  CHECK(s.delta == 0.125);
  for (const ScheduleEntry& e : s.entries) CHECK(e.end == e.start + s.delta);

  SplitMix64 rng(12);
  for (int n = 0; n < 300; ++n) {
    const IntersectionPattern p = random_pattern(rng);
    const Schedule sc = make_schedule(p);
    std::vector<int> order;
    for (std::size_t i = 0; i < sc.entries.size(); ++i) {
      const ScheduleEntry& e = sc.entries[i];
      CHECK(0.0 <= e.start);
      CHECK(e.start < e.end);
      CHECK(e.end <= 1.0);
      if (i > 0) CHECK(sc.entries[i - 1].end < e.start);
      order.push_back(e.chord);
    }
    CHECK(oracle::is_linear_extension(p, order));
  }
}

TEST_CASE("simulate_removal") {
  const IntersectionPattern single = make("+++-", {{1, 2}}, {0, 3}, {{0}});
  CHECK(simulate_removal(single, 0) == alpha_only_pattern());

  const IntersectionPattern shorter = simulate_removal(chain(), 0);
  CHECK(shorter.chords.size() == 2);
  CHECK(shorter.points.size() == 6);
  CHECK(is_innermost(shorter, 1));
  CHECK(shorter.chord(1).a == 2);
  CHECK(shorter.chord(1).b == 3);

  CHECK(kind_of([] { simulate_removal(chain(), 2); }) == ErrorKind::NotInnermost);
}

TEST_CASE("run_schedule") {
  // A (-,-) chord inside a (+,+) chord, with a circle in each region.
  const IntersectionPattern nested = make("++--+-", {{2, 3}, {1, 4}}, {0, 5}, {{0}, {1}});
  CHECK_NOTHROW(validate_pattern(nested));
  const ScheduleRun run = run_schedule(nested);
  CHECK(run.final_pattern == alpha_only_pattern());
  CHECK(run.removed == std::vector<int>{0, 1});
  CHECK(run.stray_circles == 0);
  CHECK(run.directive == kStraightenDirective);

  const ScheduleRun clean = run_schedule(alpha_only_pattern());
  CHECK(clean.final_pattern == alpha_only_pattern());
  CHECK(clean.removed.empty());

  const ScheduleRun stray = run_schedule(make("+-", {}, {0, 1}, {{std::nullopt}}));
  CHECK(stray.stray_circles == 1);
  CHECK(stray.final_pattern == alpha_only_pattern());

  SplitMix64 rng(14);
  for (int n = 0; n < 300; ++n) {
    const IntersectionPattern p = random_pattern(rng, 20, 10);
    CHECK(is_alpha_only(run_schedule(p).final_pattern));
  }
  // Twenty nested chords and ten circles.
  std::string s(42, '+');
  s[41] = '-';
  std::vector<std::pair<int, int>> deep;
  for (int k = 0; k < 20; ++k) deep.push_back({20 - k, 21 + k});
  std::vector<CircleComponent> circles;
  for (int c = 0; c < 10; ++c) circles.push_back({c * 2});
  const IntersectionPattern big = make(s, deep, {0, 41}, circles);
  CHECK_NOTHROW(validate_pattern(big));
  CHECK(is_alpha_only(run_schedule(big).final_pattern));
}
