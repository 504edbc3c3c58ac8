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

// Text formats. Rationals are written `p/q` or as bare integers; `#` starts
// a comment; blank lines are ignored.
//
//   triangles:  ref x0 y0 x1 y1 x2 y2
//               id ax ay scale                 (anchor form)
//               id v0x v0y v1x v1y v2x v2y     (vertex form, validated)
//   polygons:   poly x0 y0 x1 y1 ... xk yk
//               id ax ay scale
//               id v0x v0y ... vkx vky         (vertex form, validated)
//   queries:    qx qy

#ifndef PENCLOSE_INSTANCE_IO_HPP_
#define PENCLOSE_INSTANCE_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "penclose/geometry.hpp"
#include "penclose/polygon.hpp"

namespace penclose {

struct TriangleFile {
  ReferenceTriangle reference;
  std::vector<Homothet> triangles;
};

struct PolygonFile {
  ReferencePolygon reference;
  std::vector<PolygonInstance> instances;
};

/// Throws ParseError with line/column for malformed text, and Error with
/// kNotHomothetic / kNonPositiveScale / kDuplicateId naming the offending id.
TriangleFile parse_triangle_file(std::istream& in);
PolygonFile parse_polygon_file(std::istream& in);
std::vector<Point> parse_query_file(std::istream& in);

/// As above, reading from `path`; throws Error(kIo) if it cannot be opened.
TriangleFile load_triangle_file(const std::string& path);
PolygonFile load_polygon_file(const std::string& path);
std::vector<Point> load_query_file(const std::string& path);

/// Anchor form.
void write_triangle_file(std::ostream& out, const ReferenceTriangle& reference,
                         const std::vector<Homothet>& triangles);
void write_polygon_file(std::ostream& out, const ReferencePolygon& reference,
                        const std::vector<PolygonInstance>& instances);
void write_query_file(std::ostream& out, const std::vector<Point>& queries);

/// `qx qy : id1 id2 ...`, or `qx qy : -` when nothing contains q.
std::string format_answer(const Point& q, const std::vector<std::int64_t>& ids);

}  // namespace penclose

#endif  // PENCLOSE_INSTANCE_IO_HPP_
