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

#include "penclose/engine.hpp"

#include <algorithm>
#include <utility>

namespace penclose {
namespace {

std::vector<CanonicalTriangle> to_canonical_space(
    const AffineMap& map, bool identity, const std::vector<Homothet>& tris) {
  std::vector<CanonicalTriangle> out;
  out.reserve(tris.size());
  for (const auto& h : tris) {
    if (identity) {
      out.push_back({h.id, h.anchor.x, h.anchor.y, h.scale});
    } else {
      out.push_back(canonicalize(map, h));
    }
  }
  return out;
}

}  // namespace

Engine::Engine(ReferenceTriangle reference,
               const std::vector<Homothet>& triangles)
    : reference_(std::move(reference)),
      to_canonical_(canonicalizing_map(reference_)),
      identity_(to_canonical_.is_identity()),
      index_(std::make_shared<EnclosureIndex>(
          to_canonical_space(to_canonical_, identity_, triangles))),
      cascade_(std::make_unique<CascadeIndex>(index_)) {}

std::vector<TriangleId> Engine::query(const Point& q, QueryMode mode,
                                      QueryStats* stats) const {
  if (identity_) {
    return mode == QueryMode::kCascaded ? cascade_->query(q, stats)
                                        : index_->query(q, stats);
  }
  Point canonical = to_canonical_.apply(q);
  return mode == QueryMode::kCascaded ? cascade_->query(canonical, stats)
                                      : index_->query(canonical, stats);
}

IndexInfo Engine::info() const {
  IndexInfo info;
  info.triangles = index_->triangles().size();
  info.height = index_->height();
  info.nodes = index_->nodes().size();
  info.fragments = index_->fragment_count();
  info.rectangles = index_->rectangle_count();
  info.augmented = cascade_->augmented_size();
  return info;
}

void Engine::inject_fault_for_testing() {
  const auto& tris = index_->triangles();
  if (tris.empty()) return;
  auto lowest = std::min_element(
      tris.begin(), tris.end(),
      [](const CanonicalTriangle& l, const CanonicalTriangle& r) {
        return l.id < r.id;
      });
  index_->remove_owner_for_testing(lowest->id);
  cascade_ = std::make_unique<CascadeIndex>(index_);
}

}  // namespace penclose
