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

#ifndef PENCLOSE_CASCADE_HPP_
#define PENCLOSE_CASCADE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "penclose/enclosure_index.hpp"

namespace penclose {

/// Fractional cascading over the L(v) lists of an EnclosureIndex.
///
/// Each node v carries an augmented list M(v): the keys of L(v) merged with
/// every second entry (odd positions) of M(left) and M(right). Natives sort
/// before promoted copies of an equal key. Every entry keeps, for each
/// child, the position of the last child entry whose key is <= its own
/// (the bridge), plus the L(v) position of the last native at or before it.
///
/// After one binary search in M(root), the predecessor of q_y in a child is
/// at most one step past the bridge: a promoted child entry with key <= q_y
/// would already be at or before the parent predecessor. So each further
/// node costs at most two key comparisons.
class CascadeIndex {
 public:
  struct Entry {
    const Rational* key = nullptr;  // points into the index's L lists
    std::int32_t native_rank = -1;
    std::int32_t left_bridge = -1;
    std::int32_t right_bridge = -1;
    bool native = false;
  };

  struct PathStep {
    std::int32_t node = 0;
    std::ptrdiff_t list_position = -1;  // last L(v) entry with y_bot <= q_y
  };

  explicit CascadeIndex(std::shared_ptr<const EnclosureIndex> index);

  /// Root-to-leaf path for q_x with the predecessor of q_y in each L(v).
  std::vector<PathStep> locate_path(const Rational& q_x, const Rational& q_y,
                                    QueryStats& stats) const;

  /// Same answer as EnclosureIndex::query, with cascaded list positions.
  std::vector<TriangleId> query(const Point& q,
                                QueryStats* stats = nullptr) const;

  const std::vector<Entry>& augmented(std::int32_t node) const {
    return lists_[node];
  }
  /// Sum of |M(v)|.
  std::size_t augmented_size() const;

  const EnclosureIndex& index() const { return *index_; }

 private:
  std::shared_ptr<const EnclosureIndex> index_;
  std::vector<std::vector<Entry>> lists_;
};

}  // namespace penclose

#endif  // PENCLOSE_CASCADE_HPP_
