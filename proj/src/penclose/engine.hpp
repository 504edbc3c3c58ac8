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

#ifndef PENCLOSE_ENGINE_HPP_
#define PENCLOSE_ENGINE_HPP_

#include <cstddef>
#include <memory>
#include <vector>

#include "penclose/cascade.hpp"
#include "penclose/enclosure_index.hpp"
#include "penclose/geometry.hpp"

namespace penclose {

struct IndexInfo {
  std::size_t triangles = 0;
  std::size_t height = 0;
  std::size_t nodes = 0;
  std::size_t fragments = 0;   // sum of |L(v)|
  std::size_t rectangles = 0;  // non-empty trimmed rectangles
  std::size_t augmented = 0;   // sum of |M(v)|
};

/// Point-enclosure index over homothets of an arbitrary reference triangle.
/// Triangles and queries are carried to canonical space by the reference's
/// canonicalizing map; the segment tree and its cascade live there.
class Engine {
 public:
  Engine(ReferenceTriangle reference, const std::vector<Homothet>& triangles);

  /// Ids of the triangles containing q (original coordinates), ascending.
  std::vector<TriangleId> query(const Point& q,
                                QueryMode mode = QueryMode::kCascaded,
                                QueryStats* stats = nullptr) const;

  const ReferenceTriangle& reference() const { return reference_; }
  const AffineMap& to_canonical() const { return to_canonical_; }
  const EnclosureIndex& index() const { return *index_; }
  const CascadeIndex& cascade() const { return *cascade_; }
  IndexInfo info() const;

  /// Test hook for the validation harness: drops every fragment of the
  /// lowest-id triangle. No-op on an empty engine.
  void inject_fault_for_testing();

 private:
  ReferenceTriangle reference_;
  AffineMap to_canonical_;
  bool identity_;
  std::shared_ptr<EnclosureIndex> index_;
  std::unique_ptr<CascadeIndex> cascade_;
};

}  // namespace penclose

#endif  // PENCLOSE_ENGINE_HPP_
