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

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "hopf/error.h"
#include "hopf/plgeom.h"

namespace hopf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Edge = std::pair<int, int>;

Edge edge_key(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::map<Edge, int> edge_uses(const TriMesh& m) {
  std::map<Edge, int> uses;
  for (const auto& t : m.triangles) {
    for (int k = 0; k < 3; ++k) ++uses[edge_key(t[k], t[(k + 1) % 3])];
  }
  return uses;
}

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  const Vec2 u = b - a, v = c - a;
  return 0.5 * (u.x() * v.y() - u.y() * v.x());
}

// Closest point of the triangle to the origin (Ericson, Real-Time Collision
// Detection, 5.1.5), returned as its squared distance.
double min_sq_norm_on_triangle(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 p = Vec3::Zero();
  const Vec3 ab = b - a, ac = c - a, ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0 && d2 <= 0) return a.squaredNorm();
  const Vec3 bp = p - b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0 && d4 <= d3) return b.squaredNorm();
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) return (a + d1 / (d1 - d3) * ab).squaredNorm();
  const Vec3 cp = p - c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0 && d5 <= d6) return c.squaredNorm();
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) return (a + d2 / (d2 - d6) * ac).squaredNorm();
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) {
    return (b + (d4 - d3) / ((d4 - d3) + (d5 - d6)) * (c - b)).squaredNorm();
  }
  const double denom = 1.0 / (va + vb + vc);
  return (a + ab * (vb * denom) + ac * (vc * denom)).squaredNorm();
}

bool point_in_polygon(const Vec2& pt, const std::vector<Vec2>& poly) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[j];
    if ((a.y() > pt.y()) != (b.y() > pt.y())) {
      const double x = a.x() + (pt.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      if (pt.x() < x) inside = !inside;
    }
  }
  return inside;
}

// Zero crossing of the quadric on an edge with a sign change.
double edge_root(const Ellipsoid& e, const Vec3& p0, const Vec3& p1) {
  double lo = 0.0, hi = 1.0;
  const bool neg_at_lo = e.value(p0) < 0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((e.value(p0 + mid * (p1 - p0)) < 0) == neg_at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Crossing {
  Vec3 position;
  Vec2 uv;
  int boundary_edge = -1;  // index k of edge boundary[k] -> boundary[k+1]
  double boundary_param = 0.0;
  std::vector<int> next;
};

}  // namespace

void TriMesh::validate() const {
  const int nv = static_cast<int>(vertices.size());
  if (nv < 3 || triangles.empty()) throw Error(ErrorKind::InvalidInput, "mesh is empty");
  if (!uv.empty() && uv.size() != vertices.size()) {
    throw Error(ErrorKind::InvalidInput, "uv must have one entry per vertex");
  }
  for (const auto& t : triangles) {
    for (int k = 0; k < 3; ++k) {
      if (t[k] < 0 || t[k] >= nv) throw Error(ErrorKind::InvalidInput, "triangle index out of range");
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(ErrorKind::InvalidInput, "triangle repeats a vertex");
    }
    const Vec3 n = (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]);
    if (n.norm() <= 1e-15) throw Error(ErrorKind::InvalidInput, "degenerate triangle");
  }
  const auto uses = edge_uses(*this);
  std::size_t boundary_edges = 0;
  for (const auto& [edge, count] : uses) {
    if (count > 2) throw Error(ErrorKind::InvalidInput, "non-manifold edge");
    if (count == 1) ++boundary_edges;
  }
  std::vector<bool> used(nv, false);
  for (const auto& t : triangles) {
    for (int v : t) used[v] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw Error(ErrorKind::InvalidInput, "mesh has unused vertices");
  }
  const long euler = static_cast<long>(nv) - static_cast<long>(uses.size()) +
                     static_cast<long>(triangles.size());
  if (euler != 1) throw Error(ErrorKind::InvalidInput, "mesh is not a disc (V - E + F != 1)");
  if (boundary.size() != boundary_edges || boundary.size() < 3) {
    throw Error(ErrorKind::InvalidInput, "boundary loop does not match the mesh boundary");
  }
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    const int a = boundary[k], b = boundary[(k + 1) % boundary.size()];
    const auto it = uses.find(edge_key(a, b));
    if (it == uses.end() || it->second != 1) {
      throw Error(ErrorKind::InvalidInput, "boundary loop does not match the mesh boundary");
    }
  }
}

void TriMesh::ensure_uv() {
  if (uv.size() == vertices.size()) return;
  // Tutte embedding: boundary on the unit circle by arc length, interior
  // vertices at the average of their neighbours.
  const int nv = static_cast<int>(vertices.size());
  const std::size_t nb = boundary.size();
  uv.assign(nv, Vec2::Zero());
  std::vector<int> slot(nv, -1);
  std::vector<double> arc(nb + 1, 0.0);
  for (std::size_t k = 0; k < nb; ++k) {
    arc[k + 1] = arc[k] + (vertices[boundary[(k + 1) % nb]] - vertices[boundary[k]]).norm();
  }
  std::vector<bool> on_boundary(nv, false);
  for (std::size_t k = 0; k < nb; ++k) {
    const double t = 2.0 * kPi * arc[k] / arc[nb];
    uv[boundary[k]] = Vec2(std::cos(t), std::sin(t));
    on_boundary[boundary[k]] = true;
  }
  int ni = 0;
  for (int v = 0; v < nv; ++v) {
    if (!on_boundary[v]) slot[v] = ni++;
  }
  if (ni == 0) return;
  std::vector<std::vector<int>> nbrs(nv);
  for (const auto& [edge, count] : edge_uses(*this)) {
    nbrs[edge.first].push_back(edge.second);
    nbrs[edge.second].push_back(edge.first);
  }
  std::vector<Eigen::Triplet<double>> trips;
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(ni, 2);
  for (int v = 0; v < nv; ++v) {
    if (slot[v] < 0) continue;
    trips.emplace_back(slot[v], slot[v], static_cast<double>(nbrs[v].size()));
    for (int w : nbrs[v]) {
      if (slot[w] >= 0) {
        trips.emplace_back(slot[v], slot[w], -1.0);
      } else {
        rhs.row(slot[v]) += uv[w].transpose();
      }
    }
  }
  Eigen::SparseMatrix<double> L(ni, ni);
  L.setFromTriplets(trips.begin(), trips.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(L);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidInput, "cannot embed mesh in the plane");
  }
  const Eigen::MatrixXd x = solver.solve(rhs);
  for (int v = 0; v < nv; ++v) {
    if (slot[v] >= 0) uv[v] = x.row(slot[v]).transpose();
  }
}

Polyline3 TriMesh::boundary_polyline() const {
  Polyline3 p;
  for (int v : boundary) p.vertices.push_back(vertices[v]);
  return p;
}

TriMesh make_disc_mesh(const RoundCircle& c, int resolution) {
  if (resolution < 8) throw Error(ErrorKind::InvalidInput, "mesh resolution must be at least 8");
  const auto [u, w] = c.plane_basis();
  const int rings = std::max(2, resolution / 8);
  TriMesh m;
  std::vector<std::vector<int>> ring_ids(rings);
  std::vector<double> offsets(rings);
  for (int k = 0; k < rings; ++k) {
    const double rho = static_cast<double>(k + 1) / rings;
    const int count = k + 1 == rings
                          ? resolution
                          : std::max(6, static_cast<int>(std::lround(resolution * rho)));
    // Stagger neighbouring rings by half a step.
    offsets[k] = (rings - 1 - k) % 2 == 1 ? kPi / count : 0.0;
    for (int j = 0; j < count; ++j) {
      const double t = offsets[k] + 2.0 * kPi * j / count;
      ring_ids[k].push_back(static_cast<int>(m.vertices.size()));
      if (k + 1 == rings) {
        m.vertices.push_back(c.point_at(t));
      } else {
        m.vertices.push_back(c.center + c.radius * rho * (std::cos(t) * u + std::sin(t) * w));
      }
      m.uv.emplace_back(rho * std::cos(t), rho * std::sin(t));
    }
  }
  auto add = [&](int a, int b, int d) {
    if (signed_area(m.uv[a], m.uv[b], m.uv[d]) < 0) std::swap(b, d);
    m.triangles.push_back({a, b, d});
  };
  const auto& core = ring_ids[0];
  for (std::size_t j = 1; j + 1 < core.size(); ++j) add(core[0], core[j], core[j + 1]);
  for (int k = 0; k + 1 < rings; ++k) {
    const auto& in = ring_ids[k];
    const auto& out = ring_ids[k + 1];
    const std::size_t na = in.size(), nb = out.size();
    auto angle_in = [&](std::size_t i) { return offsets[k] + 2.0 * kPi * i / na; };
    auto angle_out = [&](std::size_t j) { return offsets[k + 1] + 2.0 * kPi * j / nb; };
    std::size_t i = 0, j = 0;
    while (i < na || j < nb) {
      const bool advance_in = j == nb || (i < na && angle_in(i + 1) <= angle_out(j + 1));
      if (advance_in) {
        add(in[i % na], in[(i + 1) % na], out[j % nb]);
        ++i;
      } else {
        add(in[i % na], out[j % nb], out[(j + 1) % nb]);
        ++j;
      }
    }
  }
  m.boundary = ring_ids.back();
  return m;
}

double transversality_margin(const TriMesh& mesh, const Ellipsoid& e) {
  std::vector<double> f(mesh.vertices.size());
  std::vector<Vec3> q(mesh.vertices.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    q[v] = e.normalized(mesh.vertices[v]);
    f[v] = q[v].squaredNorm() - 1.0;
    if (std::abs(f[v]) < 1e-9) return 0.0;  // vertex on the surface
  }
  double margin = kInf;
  for (const auto& t : mesh.triangles) {
    const int positive = (f[t[0]] > 0) + (f[t[1]] > 0) + (f[t[2]] > 0);
    if (positive == 0) continue;  // convexity: the whole triangle is inside
    if (positive == 3) {
      if (min_sq_norm_on_triangle(q[t[0]], q[t[1]], q[t[2]]) < 1.0) return 0.0;
      continue;
    }
    for (int v : t) margin = std::min(margin, std::abs(f[v]));
  }
  return margin;
}

double find_transverse_height(const TriMesh& mesh, const RoundCircle& equator, double h_min,
                              double h_max) {
  if (!(h_min > 0.0) || !(h_min < h_max) || !std::isfinite(h_max)) {
    throw Error(ErrorKind::InvalidInput, "height range must satisfy 0 < h_min < h_max");
  }
  mesh.validate();
  constexpr int kSamples = 64;
  auto margin_at = [&](double h) { return transversality_margin(mesh, Ellipsoid::make(equator, h)); };
  auto grid = [&](double lo, double hi, int k) {
    return lo * std::pow(hi / lo, static_cast<double>(k) / (kSamples - 1));
  };

  std::vector<double> coarse(kSamples);
  int best = 0;
  for (int k = 0; k < kSamples; ++k) {
    coarse[k] = margin_at(grid(h_min, h_max, k));
    if (coarse[k] > coarse[best]) best = k;
  }
  if (std::isinf(coarse[best]) &&
      std::all_of(coarse.begin(), coarse.end(), [](double m) { return std::isinf(m); })) {
    return 0.5 * (h_min + h_max);
  }
  double best_h = grid(h_min, h_max, best);
  double best_margin = coarse[best];
  const double lo = grid(h_min, h_max, std::max(0, best - 1));
  const double hi = grid(h_min, h_max, std::min(kSamples - 1, best + 1));
  for (int k = 0; k < kSamples; ++k) {
    const double h = grid(lo, hi, k);
    const double m = margin_at(h);
    if (m > best_margin) {
      best_margin = m;
      best_h = h;
    }
  }
  if (best_margin <= kMinTransversality) {
    throw Error(ErrorKind::NoTransverseHeight, "no sampled height is transverse to the disc");
  }
  return best_h;
}

IntersectionPattern extract_intersection_pattern(const TriMesh& input, const Ellipsoid& e) {
  input.validate();
  TriMesh mesh = input;
  mesh.ensure_uv();
  const double margin = transversality_margin(mesh, e);
  if (margin <= kMinTransversality) {
    throw Error(ErrorKind::NotTransverse, "transversality margin " + std::to_string(margin));
  }

  std::vector<double> f(mesh.vertices.size());
  for (std::size_t v = 0; v < f.size(); ++v) f[v] = e.value(mesh.vertices[v]);

  std::map<Edge, int> boundary_slot;
  for (std::size_t k = 0; k < mesh.boundary.size(); ++k) {
    boundary_slot[edge_key(mesh.boundary[k], mesh.boundary[(k + 1) % mesh.boundary.size()])] =
        static_cast<int>(k);
  }

  std::vector<Crossing> nodes;
  std::map<Edge, int> node_of_edge;
  auto node_on = [&](int a, int b) {
    const Edge key = edge_key(a, b);
    if (auto it = node_of_edge.find(key); it != node_of_edge.end()) return it->second;
    Crossing c;
    const double t = edge_root(e, mesh.vertices[key.first], mesh.vertices[key.second]);
    c.position = mesh.vertices[key.first] + t * (mesh.vertices[key.second] - mesh.vertices[key.first]);
    c.uv = mesh.uv[key.first] + t * (mesh.uv[key.second] - mesh.uv[key.first]);
    if (auto it = boundary_slot.find(key); it != boundary_slot.end()) {
      c.boundary_edge = it->second;
      // Parameter measured in the direction of the boundary loop.
      c.boundary_param = mesh.boundary[it->second] == key.first ? t : 1.0 - t;
    }
    nodes.push_back(c);
    node_of_edge[key] = static_cast<int>(nodes.size()) - 1;
    return static_cast<int>(nodes.size()) - 1;
  };
  for (const auto& t : mesh.triangles) {
    std::vector<int> hits;
    for (int k = 0; k < 3; ++k) {
      const int a = t[k], b = t[(k + 1) % 3];
      if ((f[a] < 0) != (f[b] < 0)) hits.push_back(node_on(a, b));
    }
    if (hits.size() == 2) {
      nodes[hits[0]].next.push_back(hits[1]);
      nodes[hits[1]].next.push_back(hits[0]);
    }
  }

  // Trace components: open ones start and end on the boundary.
  std::vector<bool> seen(nodes.size(), false);
  auto trace = [&](int start) {
    std::vector<int> path{start};
    seen[start] = true;
    int prev = -1, cur = start;
    while (true) {
      int step = -1;
      for (int n : nodes[cur].next) {
        if (n != prev && !seen[n]) {
          step = n;
          break;
        }
      }
      if (step < 0) break;
      prev = cur;
      cur = step;
      seen[cur] = true;
      path.push_back(cur);
    }
    return path;
  };
  std::vector<int> ends;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].boundary_edge >= 0) ends.push_back(static_cast<int>(i));
  }
  std::sort(ends.begin(), ends.end(), [&](int a, int b) {
    if (nodes[a].boundary_edge != nodes[b].boundary_edge) {
      return nodes[a].boundary_edge < nodes[b].boundary_edge;
    }
    return nodes[a].boundary_param < nodes[b].boundary_param;
  });
  std::vector<int> index_of(nodes.size(), -1);
  for (std::size_t i = 0; i < ends.size(); ++i) index_of[ends[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> arcs;
  for (int s : ends) {
    if (seen[s]) continue;
    arcs.push_back(trace(s));
    if (nodes[arcs.back().back()].boundary_edge < 0) {
      throw Error(ErrorKind::NotTransverse, "intersection arc ends inside the disc");
    }
  }
  std::vector<std::vector<int>> loops;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!seen[i]) loops.push_back(trace(static_cast<int>(i)));
  }

  IntersectionPattern p;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    const double z = e.elevation(nodes[ends[i]].position);
    if (std::abs(z) <= 1e-12) throw Error(ErrorKind::NotTransverse, "arc endpoint on the equator");
    p.points.push_back({static_cast<int>(i), z > 0 ? Sign::Plus : Sign::Minus});
  }
  std::vector<std::pair<int, int>> pairs;
  std::vector<const std::vector<int>*> paths;
  int mixed = 0;
  for (const auto& arc : arcs) {
    const int a = index_of[arc.front()], b = index_of[arc.back()];
    if (p.points[a].sign != p.points[b].sign) {
      ++mixed;
      p.alpha = {std::min(a, b), std::max(a, b)};
    } else {
      pairs.emplace_back(std::min(a, b), std::max(a, b));
      paths.push_back(&arc);
    }
  }
  if (mixed == 0) throw Error(ErrorKind::NoMixedChord, "no arc joins opposite hemispheres");
  if (mixed > 1) throw Error(ErrorKind::WrongAlphaCount, "several arcs join opposite hemispheres");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    p.chords.push_back({static_cast<int>(i), pairs[i].first, pairs[i].second});
  }

  // Region C(k) of each chord as a polygon in the disc's planar embedding:
  // the chord followed by the boundary walk on the side away from alpha.
  const int nb = static_cast<int>(mesh.boundary.size());
  auto boundary_walk = [&](int from, int to) {
    std::vector<Vec2> out{nodes[ends[from]].uv};
    int k = nodes[ends[from]].boundary_edge;
    const int last = nodes[ends[to]].boundary_edge;
    const bool wraps = from > to;
    if (k != last || wraps) {
      do {
        k = (k + 1) % nb;
        out.push_back(mesh.uv[mesh.boundary[k]]);
      } while (k != last);
    }
    out.push_back(nodes[ends[to]].uv);
    return out;
  };
  std::vector<std::vector<Vec2>> regions;
  std::vector<int> region_size;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    const bool alpha_between = a < p.alpha.first && p.alpha.first < b;
    const int from = alpha_between ? b : a;
    const int to = alpha_between ? a : b;
    std::vector<Vec2> poly = boundary_walk(from, to);
    const auto& path = *paths[i];
    const bool path_starts_at_to = index_of[path.front()] == to;
    for (std::size_t s = 1; s + 1 < path.size(); ++s) {
      const int n = path_starts_at_to ? path[s] : path[path.size() - 1 - s];
      poly.push_back(nodes[n].uv);
    }
    regions.push_back(std::move(poly));
    const ChordInterval iv = region_interval(p, p.chords[i]);
    region_size.push_back(iv.hi - iv.lo);
  }
  for (const auto& loop : loops) {
    CircleComponent c;
    const Vec2 probe = nodes[loop.front()].uv;
    for (std::size_t i = 0; i < regions.size(); ++i) {
      if (!point_in_polygon(probe, regions[i])) continue;
      if (!c.inside || region_size[i] < region_size[*c.inside]) c.inside = static_cast<int>(i);
    }
    p.circles.push_back(c);
  }
  validate_pattern(p);
  return p;
}

}  // namespace hopf
