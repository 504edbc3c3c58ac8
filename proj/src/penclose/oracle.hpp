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

#ifndef PENCLOSE_ORACLE_HPP_
#define PENCLOSE_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "penclose/geometry.hpp"

namespace penclose {

/// Brute force: ids of every canonical triangle containing q, ascending.
std::vector<TriangleId> oracle_query(const std::vector<CanonicalTriangle>& tris,
                                     const Point& q);

/// Closed containment in a counterclockwise triangle by three half-plane
/// sign tests on its vertices.
bool point_in_triangle(const Point& v0, const Point& v1, const Point& v2,
                       const Point& q);

/// Brute force in original coordinates, no canonicalization involved.
std::vector<TriangleId> oracle_query(const ReferenceTriangle& reference,
                                     const std::vector<Homothet>& tris,
                                     const Point& q);

enum class Profile { kUniform, kNested, kClustered, kDuplicates };

std::optional<Profile> parse_profile(std::string_view name);
std::string_view profile_name(Profile profile);

struct Instance {
  ReferenceTriangle reference;
  std::vector<Homothet> triangles;
  std::vector<Point> queries;
  std::uint64_t seed = 0;
};

/// Deterministic pseudo-random instance. Coordinates are rationals with
/// denominators up to 4 in canonical space. The query set holds random
/// points plus, for every triangle, its vertices, edge midpoints, and points
/// just inside and just outside each edge at an offset of 1/64.
/// Triangles and queries are expressed relative to `reference`.
Instance gen_instance(std::size_t n, std::uint64_t seed, Profile profile,
                      const ReferenceTriangle& reference =
                          ReferenceTriangle::unit());

/// Uniform random points over the region gen_instance uses for `n`
/// triangles, in `reference` coordinates. Deterministic in `seed`.
std::vector<Point> gen_random_queries(const ReferenceTriangle& reference,
                                      std::size_t n, std::size_t count,
                                      std::uint64_t seed);

}  // namespace penclose

#endif  // PENCLOSE_ORACLE_HPP_
