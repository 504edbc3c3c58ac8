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

#include "penclose/cascade.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

#include "penclose/error.hpp"

namespace penclose {
namespace {

using Entry = CascadeIndex::Entry;

std::vector<Entry> promoted_from(const std::vector<Entry>& child) {
  std::vector<Entry> out;
  out.reserve(child.size() / 2);
  for (std::size_t i = 1; i < child.size(); i += 2) {
    out.push_back(Entry{child[i].key});
  }
  return out;
}

bool key_less(const Entry& l, const Entry& r) { return *l.key < *r.key; }

// For every entry of `parent`, the last position in `child` with key <= it.
template <typename Field>
void link_bridges(std::vector<Entry>& parent, const std::vector<Entry>& child,
                  Field field) {
  std::size_t j = 0;
  for (auto& e : parent) {
    while (j < child.size() && *child[j].key <= *e.key) ++j;
    e.*field = static_cast<std::int32_t>(j) - 1;
  }
}

}  // namespace

CascadeIndex::CascadeIndex(std::shared_ptr<const EnclosureIndex> index)
    : index_(std::move(index)) {
  if (!index_) {
    throw Error(ErrorCode::kInvalidArgument, "cascade needs an index");
  }
  const auto& nodes = index_->nodes();
  lists_.resize(nodes.size());

  // Children always have larger indices than their parent.
  for (std::size_t v = nodes.size(); v-- > 0;) {
    const IndexNode& node = nodes[v];
    std::vector<Entry> natives;
    natives.reserve(node.list.size());
    for (std::size_t i = 0; i < node.list.size(); ++i) {
      natives.push_back(Entry{&node.list[i].y_bot, static_cast<std::int32_t>(i),
                              -1, -1, true});
    }
    if (node.is_leaf()) {
      lists_[v] = std::move(natives);
      continue;
    }

    auto from_left = promoted_from(lists_[node.left]);
    auto from_right = promoted_from(lists_[node.right]);
    std::vector<Entry> promoted;
    promoted.reserve(from_left.size() + from_right.size());
    std::merge(from_left.begin(), from_left.end(), from_right.begin(),
               from_right.end(), std::back_inserter(promoted), key_less);

    // std::merge takes from the first range on ties: natives first.
    auto& merged = lists_[v];
    merged.reserve(natives.size() + promoted.size());
    std::merge(natives.begin(), natives.end(), promoted.begin(),
               promoted.end(), std::back_inserter(merged), key_less);

    std::int32_t rank = -1;
    for (auto& e : merged) {
      if (e.native) rank = e.native_rank;
      e.native_rank = rank;
    }
    link_bridges(merged, lists_[node.left], &Entry::left_bridge);
    link_bridges(merged, lists_[node.right], &Entry::right_bridge);
  }
}

std::vector<CascadeIndex::PathStep> CascadeIndex::locate_path(
    const Rational& q_x, const Rational& q_y, QueryStats& stats) const {
  const auto& nodes = index_->nodes();
  auto path = index_->search_path(index_->locate_atom(q_x, stats), stats);

  std::vector<PathStep> steps;
  steps.reserve(path.size());
  std::ptrdiff_t at = -1;  // predecessor position in M of the current node
  for (std::size_t i = 0; i < path.size(); ++i) {
    std::int32_t v = path[i];
    const auto& m = lists_[v];
    if (i == 0) {
      std::size_t lo = 0;
      std::size_t hi = m.size();
      while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        ++stats.key_comparisons;
        if (*m[mid].key <= q_y) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      at = static_cast<std::ptrdiff_t>(lo) - 1;
    } else {
      std::int32_t parent = path[i - 1];
      const auto& pm = lists_[parent];
      if (at >= 0) {
        at = v == nodes[parent].left ? pm[at].left_bridge : pm[at].right_bridge;
      }
      while (at + 1 < static_cast<std::ptrdiff_t>(m.size())) {
        ++stats.key_comparisons;
        if (!(*m[at + 1].key <= q_y)) break;
        ++at;
      }
    }
    steps.push_back({v, at >= 0 ? m[at].native_rank : -1});
  }
  return steps;
}

std::vector<TriangleId> CascadeIndex::query(const Point& q,
                                            QueryStats* stats) const {
  QueryStats local;
  std::vector<TriangleId> out;
  for (const auto& step : locate_path(q.x, q.y, local)) {
    index_->node_query_rectangles(step.node, q.y, out, local);
    index_->scan_list(step.node, q, step.list_position, out, local);
  }
  std::sort(out.begin(), out.end());
  local.reported = out.size();
  if (stats) *stats = local;
  return out;
}

std::size_t CascadeIndex::augmented_size() const {
  std::size_t total = 0;
  for (const auto& m : lists_) total += m.size();
  return total;
}

}  // namespace penclose
