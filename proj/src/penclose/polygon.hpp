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

#ifndef PENCLOSE_POLYGON_HPP_
#define PENCLOSE_POLYGON_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "penclose/engine.hpp"
#include "penclose/geometry.hpp"

namespace penclose {

using PolygonId = std::int64_t;

/// Simple counterclockwise polygon with at least three vertices.
class ReferencePolygon {
 public:
  /// Throws Error(kDegenerate) for fewer than three vertices, repeated or
  /// self-intersecting boundary, or non-positive signed area.
  explicit ReferencePolygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

 private:
  std::vector<Point> vertices_;
};

/// Twice the signed area (shoelace).
Rational twice_signed_area(const std::vector<Point>& polygon);

/// Ear clipping: |vertices| - 2 counterclockwise, non-degenerate triangles
/// tiling the polygon with disjoint interiors.
std::vector<ReferenceTriangle> triangulate_reference(const ReferencePolygon& p);

/// Polygon anchor + scale * (P_i - P_0) for every reference vertex P_i.
struct PolygonInstance {
  PolygonId id = 0;
  Point anchor;
  Rational scale;
};

std::vector<Point> instance_vertices(const ReferencePolygon& reference,
                                     const PolygonInstance& instance);

/// Closed point-in-polygon test for a simple polygon: boundary points count,
/// interior decided by even-odd ray crossing.
bool point_in_polygon(const std::vector<Point>& polygon, const Point& q);

/// Brute force over all instances, ascending ids.
std::vector<PolygonId> oracle_query_polygons(
    const ReferencePolygon& reference,
    const std::vector<PolygonInstance>& instances, const Point& q);

struct PolygonWorkload {
  std::vector<PolygonInstance> instances;
  std::vector<Point> queries;
};

/// Deterministic instances with ids 1..n, anchors and scales drawn as small
/// denominator rationals. Queries are random points plus, for every
/// instance, its vertices, edge midpoints, and points on each edge of every
/// triangulation piece (which includes the internal diagonals).
PolygonWorkload gen_polygon_workload(const ReferencePolygon& reference,
                                     std::size_t n, std::uint64_t seed);

/// One Engine per triangulation piece of the reference; each polygon
/// instance contributes one homothet to every piece. Points on shared
/// diagonals are found by several pieces and merged per query.
class PolygonIndex {
 public:
  /// Throws Error(kDuplicateId) or Error(kInvalidArgument) for bad instances.
  PolygonIndex(ReferencePolygon reference,
               std::vector<PolygonInstance> instances);

  /// Ids of the polygons containing q, ascending, each once.
  std::vector<PolygonId> query(const Point& q,
                               QueryMode mode = QueryMode::kCascaded,
                               QueryStats* stats = nullptr) const;

  const ReferencePolygon& reference() const { return reference_; }
  const std::vector<ReferenceTriangle>& pieces() const { return pieces_; }
  const std::vector<PolygonInstance>& instances() const { return instances_; }
  const Engine& piece_engine(std::size_t i) const { return *engines_[i]; }

 private:
  ReferencePolygon reference_;
  std::vector<ReferenceTriangle> pieces_;
  std::vector<PolygonInstance> instances_;
  std::vector<std::unique_ptr<Engine>> engines_;
};

}  // namespace penclose

#endif  // PENCLOSE_POLYGON_HPP_
