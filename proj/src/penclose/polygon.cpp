// Copyright 2026 The penclose Authors
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

#include "penclose/polygon.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>
#include <utility>

#include "penclose/error.hpp"
#include "penclose/oracle.hpp"

namespace penclose {
namespace {

// q on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& q) {
  if (!orient(a, b, q).is_zero()) return false;
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool segments_meet(const Point& p1, const Point& p2, const Point& q1,
                   const Point& q2) {
  int d1 = orient(q1, q2, p1).sign();
  int d2 = orient(q1, q2, p2).sign();
  int d3 = orient(p1, p2, q1).sign();
  int d4 = orient(p1, p2, q2).sign();
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_segment(q1, q2, p1) || on_segment(q1, q2, p2) ||
         on_segment(p1, p2, q1) || on_segment(p1, p2, q2);
}

}  // namespace

Rational twice_signed_area(const std::vector<Point>& polygon) {
  Rational sum;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % polygon.size()];
    sum += a.x * b.y - b.x * a.y;
  }
  return sum;
}

ReferencePolygon::ReferencePolygon(std::vector<Point> vertices)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw Error(ErrorCode::kDegenerate,
                "polygon needs at least three vertices");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices_[i] == vertices_[j]) {
        throw Error(ErrorCode::kDegenerate, "polygon repeats a vertex");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& c = vertices_[j];
      const Point& d = vertices_[(j + 1) % n];
      bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Consecutive edges share one endpoint; they may not fold back.
        const Point& own_ij = j == i + 1 ? a : b;
        const Point& own_other = j == i + 1 ? d : c;
        if (on_segment(c, d, own_ij) || on_segment(a, b, own_other)) {
          throw Error(ErrorCode::kDegenerate, "polygon edges overlap");
        }
      } else if (segments_meet(a, b, c, d)) {
        throw Error(ErrorCode::kDegenerate, "polygon is self-intersecting");
      }
    }
  }
  if (twice_signed_area(vertices_).sign() <= 0) {
    throw Error(ErrorCode::kDegenerate,
                "polygon must be counterclockwise with positive area");
  }
}

std::vector<ReferenceTriangle> triangulate_reference(const ReferencePolygon& p) {
  const auto& v = p.vertices();
  std::vector<std::size_t> ring(v.size());
  for (std::size_t i = 0; i < ring.size(); ++i) ring[i] = i;

  std::vector<ReferenceTriangle> out;
  out.reserve(v.size() - 2);
  while (ring.size() > 3) {
    const std::size_t m = ring.size();
    bool clipped = false;
    for (std::size_t i = 0; i < m && !clipped; ++i) {
      const Point& prev = v[ring[(i + m - 1) % m]];
      const Point& cur = v[ring[i]];
      const Point& next = v[ring[(i + 1) % m]];
      if (orient(prev, cur, next).sign() <= 0) continue;
      bool empty = true;
      for (std::size_t k = 0; k < m && empty; ++k) {
        if (k == i || k == (i + 1) % m || k == (i + m - 1) % m) continue;
        if (point_in_triangle(prev, cur, next, v[ring[k]])) empty = false;
      }
      if (!empty) continue;
      out.emplace_back(prev, cur, next);
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
    }
    if (!clipped) {
      throw Error(ErrorCode::kDegenerate, "polygon has no ear to clip");
    }
  }
  out.emplace_back(v[ring[0]], v[ring[1]], v[ring[2]]);
  return out;
}

std::vector<Point> instance_vertices(const ReferencePolygon& reference,
                                     const PolygonInstance& instance) {
  const auto& ref = reference.vertices();
  std::vector<Point> out;
  out.reserve(ref.size());
  for (const auto& p : ref) {
    out.push_back(instance.anchor + instance.scale * (p - ref[0]));
  }
  return out;
}

bool point_in_polygon(const std::vector<Point>& polygon, const Point& q) {
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (on_segment(polygon[i], polygon[(i + 1) % n], q)) return true;
  }
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    if ((a.y > q.y) == (b.y > q.y)) continue;
    Rational x_cross = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (q.x < x_cross) inside = !inside;
  }
  return inside;
}

std::vector<PolygonId> oracle_query_polygons(
    const ReferencePolygon& reference,
    const std::vector<PolygonInstance>& instances, const Point& q) {
  std::vector<PolygonId> out;
  for (const auto& inst : instances) {
    if (point_in_polygon(instance_vertices(reference, inst), q)) {
      out.push_back(inst.id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolygonIndex::PolygonIndex(ReferencePolygon reference,
                           std::vector<PolygonInstance> instances)
    : reference_(std::move(reference)),
      pieces_(triangulate_reference(reference_)),
      instances_(std::move(instances)) {
  std::unordered_set<PolygonId> seen;
  for (const auto& inst : instances_) {
    if (!seen.insert(inst.id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate polygon id " + std::to_string(inst.id));
    }
    if (inst.scale.sign() <= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "polygon " + std::to_string(inst.id) +
                      " has non-positive scale " + inst.scale.to_string());
    }
  }

  // Triangle labels inside each piece family are positions in instances_.
  const Point& origin = reference_.vertices()[0];
  for (const auto& piece : pieces_) {
    Point offset = piece.v0() - origin;
    std::vector<Homothet> family;
    family.reserve(instances_.size());
    for (std::size_t i = 0; i < instances_.size(); ++i) {
      const auto& inst = instances_[i];
      family.push_back({static_cast<TriangleId>(i),
                        inst.anchor + inst.scale * offset, inst.scale});
    }
    engines_.push_back(std::make_unique<Engine>(piece, family));
  }
}

std::vector<PolygonId> PolygonIndex::query(const Point& q, QueryMode mode,
                                           QueryStats* stats) const {
  QueryStats total;
  std::vector<TriangleId> hits;
  for (const auto& engine : engines_) {
    QueryStats piece;
    auto found = engine->query(q, mode, &piece);
    hits.insert(hits.end(), found.begin(), found.end());
    total.nodes_visited += piece.nodes_visited;
    total.key_comparisons += piece.key_comparisons;
    total.rect_comparisons += piece.rect_comparisons;
    total.candidates_examined += piece.candidates_examined;
  }
  // A point on a diagonal is reported by both adjacent pieces.
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

  std::vector<PolygonId> out;
  out.reserve(hits.size());
  for (TriangleId i : hits) out.push_back(instances_[i].id);
  std::sort(out.begin(), out.end());
  total.reported = out.size();
  if (stats) *stats = total;
  return out;
}

PolygonWorkload gen_polygon_workload(const ReferencePolygon& reference,
                                     std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto between = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    gen() % (static_cast<std::uint64_t>(hi - lo) + 1));
  };
  auto rational = [&](std::int64_t lo, std::int64_t hi) {
    std::int64_t den = between(1, 4);
    return Rational(between(lo * den, hi * den), den);
  };
  const auto side = static_cast<std::int64_t>(8 * std::max<std::size_t>(n, 4));

  PolygonWorkload out;
  for (std::size_t i = 0; i < n; ++i) {
    out.instances.push_back({static_cast<PolygonId>(i + 1),
                             Point{rational(0, side), rational(0, side)},
                             rational(1, 24)});
  }
  for (std::size_t i = 0; i < n + 16; ++i) {
    out.queries.push_back({rational(-4, side + 24), rational(-4, side + 24)});
  }
  const auto pieces = triangulate_reference(reference);
  const Point& origin = reference.vertices()[0];
  for (const auto& inst : out.instances) {
    auto vs = instance_vertices(reference, inst);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Point& next = vs[(i + 1) % vs.size()];
      out.queries.push_back(vs[i]);
      out.queries.push_back({(vs[i].x + next.x) / 2, (vs[i].y + next.y) / 2});
    }
    for (const auto& piece : pieces) {
      for (int e = 0; e < 3; ++e) {
        Point u = inst.anchor + inst.scale * (piece.vertex(e) - origin);
        Point w =
            inst.anchor + inst.scale * (piece.vertex((e + 1) % 3) - origin);
        out.queries.push_back({(2 * u.x + w.x) / 3, (2 * u.y + w.y) / 3});
        out.queries.push_back({(u.x + w.x) / 2, (u.y + w.y) / 2});
      }
    }
  }
  return out;
}

}  // namespace penclose
