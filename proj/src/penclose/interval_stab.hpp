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

#ifndef PENCLOSE_INTERVAL_STAB_HPP_
#define PENCLOSE_INTERVAL_STAB_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "penclose/geometry.hpp"
#include "penclose/rational.hpp"

namespace penclose {

/// Half-open interval [lo, hi) tagged with the triangle it came from.
struct StabInterval {
  Rational lo;
  Rational hi;
  TriangleId owner = 0;
};

struct StabCounters {
  std::uint64_t comparisons = 0;
  std::uint64_t examined = 0;
};

/// Static centered interval tree answering "which intervals contain key".
///
/// Each node keeps a center c and the intervals with lo <= c < hi, once
/// sorted by lo ascending and once by hi descending. Intervals entirely
/// below c go left, entirely above go right. Centers are lower medians of
/// the endpoint multiset, so the depth is O(log m).
class IntervalStab {
 public:
  IntervalStab() = default;

  /// Throws Error(kInvalidArgument) if some interval has lo >= hi.
  explicit IntervalStab(std::vector<StabInterval> intervals);

  /// Appends the owner of every interval with lo <= key < hi to `out`.
  void query(const Rational& key, std::vector<TriangleId>& out,
             StabCounters& counters) const;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t depth() const;

  /// All stored intervals, in unspecified order.
  std::vector<StabInterval> intervals() const;

 private:
  struct Node {
    Rational center;
    std::vector<StabInterval> by_lo;        // lo ascending
    std::vector<std::uint32_t> by_hi;       // indices into by_lo, hi descending
    std::int32_t left = -1;
    std::int32_t right = -1;
  };

  std::int32_t build(std::vector<StabInterval> intervals);
  std::size_t depth_from(std::int32_t node) const;

  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
  std::size_t size_ = 0;
};

}  // namespace penclose

#endif  // PENCLOSE_INTERVAL_STAB_HPP_
