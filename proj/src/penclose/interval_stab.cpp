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

#include "penclose/interval_stab.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "penclose/error.hpp"

namespace penclose {

IntervalStab::IntervalStab(std::vector<StabInterval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.lo >= iv.hi) {
      throw Error(ErrorCode::kInvalidArgument,
                  "stab interval [" + iv.lo.to_string() + ", " +
                      iv.hi.to_string() + ") is empty");
    }
  }
  size_ = intervals.size();
  root_ = build(std::move(intervals));
}

std::int32_t IntervalStab::build(std::vector<StabInterval> intervals) {
  if (intervals.empty()) return -1;

  // Lower median of the 2m endpoints. It is an endpoint, so not every
  // interval can lie strictly above it; and since lo < hi, not every interval
  // can end at or below it either. Both children are strictly smaller.
  std::vector<const Rational*> ends;
  ends.reserve(2 * intervals.size());
  for (const auto& iv : intervals) {
    ends.push_back(&iv.lo);
    ends.push_back(&iv.hi);
  }
  auto mid = ends.begin() + static_cast<std::ptrdiff_t>((ends.size() - 1) / 2);
  std::nth_element(ends.begin(), mid, ends.end(),
                   [](const Rational* l, const Rational* r) { return *l < *r; });
  Rational center = **mid;

  std::vector<StabInterval> here, below, above;
  for (auto& iv : intervals) {
    if (iv.hi <= center) {
      below.push_back(std::move(iv));
    } else if (iv.lo > center) {
      above.push_back(std::move(iv));
    } else {
      here.push_back(std::move(iv));
    }
  }

  std::sort(here.begin(), here.end(),
            [](const StabInterval& l, const StabInterval& r) {
              if (l.lo != r.lo) return l.lo < r.lo;
              return l.owner < r.owner;
            });
  std::vector<std::uint32_t> by_hi(here.size());
  std::iota(by_hi.begin(), by_hi.end(), 0u);
  std::sort(by_hi.begin(), by_hi.end(), [&](std::uint32_t l, std::uint32_t r) {
    if (here[l].hi != here[r].hi) return here[l].hi > here[r].hi;
    return here[l].owner < here[r].owner;
  });

  auto self = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(Node{std::move(center), std::move(here), std::move(by_hi)});
  std::int32_t left = build(std::move(below));
  std::int32_t right = build(std::move(above));
  nodes_[self].left = left;
  nodes_[self].right = right;
  return self;
}

void IntervalStab::query(const Rational& key, std::vector<TriangleId>& out,
                         StabCounters& counters) const {
  std::int32_t at = root_;
  while (at >= 0) {
    const Node& node = nodes_[at];
    ++counters.comparisons;
    if (key < node.center) {
      // Every interval here has hi > center > key; only lo can exclude it.
      for (const auto& iv : node.by_lo) {
        ++counters.comparisons;
        ++counters.examined;
        if (iv.lo > key) break;
        out.push_back(iv.owner);
      }
      at = node.left;
    } else {
      // Every interval here has lo <= center <= key; only hi can exclude it.
      for (std::uint32_t i : node.by_hi) {
        const auto& iv = node.by_lo[i];
        ++counters.comparisons;
        ++counters.examined;
        if (iv.hi <= key) break;
        out.push_back(iv.owner);
      }
      // Intervals below the center all end at or before it.
      at = node.right;
    }
  }
}

std::size_t IntervalStab::depth() const { return depth_from(root_); }

std::size_t IntervalStab::depth_from(std::int32_t node) const {
  if (node < 0) return 0;
  return 1 + std::max(depth_from(nodes_[node].left),
                      depth_from(nodes_[node].right));
}

std::vector<StabInterval> IntervalStab::intervals() const {
  std::vector<StabInterval> out;
  out.reserve(size_);
  for (const auto& node : nodes_) {
    out.insert(out.end(), node.by_lo.begin(), node.by_lo.end());
  }
  return out;
}

}  // namespace penclose
