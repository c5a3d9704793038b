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

#include "hopf/pattern.h"

#include <algorithm>
#include <set>

#include "hopf/error.h"

namespace hopf {

namespace {

bool crosses(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

int min_index(const Chord& c) { return std::min(c.a, c.b); }

}  // namespace

char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

const Chord& IntersectionPattern::chord(int id) const {
  for (const Chord& c : chords) {
    if (c.id == id) return c;
  }
  throw Error(ErrorKind::InvalidInput, "no chord with id " + std::to_string(id));
}

IntersectionPattern alpha_only_pattern() {
  IntersectionPattern p;
  p.points = {{0, Sign::Plus}, {1, Sign::Minus}};
  p.alpha = {0, 1};
  return p;
}

bool is_alpha_only(const IntersectionPattern& p) {
  return p.points.size() == 2 && p.chords.empty() && p.circles.empty() &&
         p.points[0].sign != p.points[1].sign;
}

void validate_pattern(const IntersectionPattern& p) {
  const int n = static_cast<int>(p.points.size());
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorKind::InvalidInput, "pattern needs an even number of boundary points");
  }
  for (int i = 0; i < n; ++i) {
    if (p.points[i].index != i) {
      throw Error(ErrorKind::InvalidInput, "boundary points must be listed in index order");
    }
  }
  std::vector<int> uses(n, 0);
  auto mark = [&](int i) {
    if (i < 0 || i >= n) throw Error(ErrorKind::InvalidInput, "chord endpoint out of range");
    ++uses[i];
  };
  mark(p.alpha.first);
  mark(p.alpha.second);
  std::set<int> ids;
  for (const Chord& c : p.chords) {
    if (c.a >= c.b) throw Error(ErrorKind::InvalidInput, "chord endpoints must satisfy a < b");
    if (!ids.insert(c.id).second) throw Error(ErrorKind::InvalidInput, "duplicate chord id");
    mark(c.a);
    mark(c.b);
  }
  if (std::any_of(uses.begin(), uses.end(), [](int u) { return u != 1; })) {
    throw Error(ErrorKind::InvalidInput, "chords must match every boundary point exactly once");
  }
  for (const CircleComponent& c : p.circles) {
    if (c.inside && !ids.count(*c.inside)) {
      throw Error(ErrorKind::InvalidInput, "circle tagged with unknown chord");
    }
  }

  std::vector<std::pair<int, int>> all{p.alpha};
  for (const Chord& c : p.chords) all.emplace_back(c.a, c.b);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (crosses(all[i].first, all[i].second, all[j].first, all[j].second)) {
        throw Error(ErrorKind::CrossingChords, "chords cross");
      }
    }
  }

  auto mixed = [&](int a, int b) { return p.points[a].sign != p.points[b].sign; };
  int count = 0;
  for (const auto& [a, b] : all) count += mixed(a, b) ? 1 : 0;
  if (count != 1 || !mixed(p.alpha.first, p.alpha.second)) {
    throw Error(ErrorKind::WrongAlphaCount,
                std::to_string(count) + " mixed-sign chords, alpha must be the only one");
  }
}

ChordInterval region_interval(const IntersectionPattern& p, const Chord& c) {
  const int n = static_cast<int>(p.points.size());
  auto pos = [&](int i) { return (i - p.alpha.first + n) % n; };
  const int x = pos(c.a), y = pos(c.b);
  return {std::min(x, y), std::max(x, y)};
}

std::vector<int> NestingForest::roots() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!parent[i]) out.push_back(ids[i]);
  }
  return out;
}

std::optional<int> NestingForest::parent_of(int id) const {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return parent[i];
  }
  throw Error(ErrorKind::InvalidInput, "no chord with id " + std::to_string(id));
}

NestingForest nesting_forest(const IntersectionPattern& p) {
  NestingForest f;
  std::vector<ChordInterval> iv;
  for (const Chord& c : p.chords) {
    f.ids.push_back(c.id);
    iv.push_back(region_interval(p, c));
  }
  f.parent.resize(iv.size());
  for (std::size_t i = 0; i < iv.size(); ++i) {
    int best = -1;
    for (std::size_t j = 0; j < iv.size(); ++j) {
      if (j == i || !iv[j].contains(iv[i])) continue;
      if (best < 0 || iv[j].hi - iv[j].lo < iv[best].hi - iv[best].lo) best = static_cast<int>(j);
    }
    if (best >= 0) f.parent[i] = f.ids[best];
  }
  return f;
}

std::vector<int> innermost_order(const IntersectionPattern& p) {
  const NestingForest f = nesting_forest(p);
  const std::size_t m = f.ids.size();
  std::vector<int> pending_children(m, 0);
  auto slot = [&](int id) {
    return static_cast<std::size_t>(std::find(f.ids.begin(), f.ids.end(), id) - f.ids.begin());
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (f.parent[i]) ++pending_children[slot(*f.parent[i])];
  }
  std::vector<bool> done(m, false);
  std::vector<int> order;
  order.reserve(m);
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t pick = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (done[i] || pending_children[i] > 0) continue;
      if (pick == m || min_index(p.chords[i]) < min_index(p.chords[pick])) pick = i;
    }
    done[pick] = true;
    order.push_back(f.ids[pick]);
    if (f.parent[pick]) --pending_children[slot(*f.parent[pick])];
  }
  return order;
}

bool is_innermost(const IntersectionPattern& p, int id) {
  const ChordInterval mine = region_interval(p, p.chord(id));
  return std::none_of(p.chords.begin(), p.chords.end(), [&](const Chord& c) {
    return c.id != id && mine.contains(region_interval(p, c));
  });
}

Schedule make_schedule(const IntersectionPattern& p) {
  const std::vector<int> order = innermost_order(p);
  const double slots = static_cast<double>(order.size() + 1);
  Schedule s;
  // s values are i/(m+1); consecutive ones are 1/(m+1) apart.
  s.delta = 0.5 / slots;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const double start = static_cast<double>(i + 1) / slots;
    s.entries.push_back({order[i], start, start + s.delta});
  }
  return s;
}

IntersectionPattern simulate_removal(const IntersectionPattern& p, int id) {
  const Chord gone = p.chord(id);
  if (!is_innermost(p, id)) {
    throw Error(ErrorKind::NotInnermost, "chord " + std::to_string(id) + " encloses another chord");
  }
  const int n = static_cast<int>(p.points.size());
  std::vector<int> remap(n, -1);
  IntersectionPattern out;
  for (int i = 0; i < n; ++i) {
    if (i == gone.a || i == gone.b) continue;
    remap[i] = static_cast<int>(out.points.size());
    out.points.push_back({remap[i], p.points[i].sign});
  }
  out.alpha = {remap[p.alpha.first], remap[p.alpha.second]};
  for (const Chord& c : p.chords) {
    if (c.id != id) out.chords.push_back({c.id, remap[c.a], remap[c.b]});
  }
  for (const CircleComponent& c : p.circles) {
    if (c.inside != id) out.circles.push_back(c);
  }
  return out;
}

ScheduleRun run_schedule(const IntersectionPattern& p) {
  validate_pattern(p);
  ScheduleRun run;
  run.schedule = make_schedule(p);
  IntersectionPattern cur = p;
  for (const ScheduleEntry& e : run.schedule.entries) {
    cur = simulate_removal(cur, e.chord);
    run.removed.push_back(e.chord);
  }
  run.stray_circles = static_cast<int>(cur.circles.size());
  cur.circles.clear();
  validate_pattern(cur);
  run.final_pattern = std::move(cur);
  return run;
}

}  // namespace hopf
