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

#include "penclose/enclosure_index.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "penclose/error.hpp"

namespace penclose {

TrimPieces trim(const CanonicalTriangle& t, const Slab& slab) {
  if (!slab.bounded()) {
    throw Error(ErrorCode::kInvalidArgument, "trim needs a bounded slab");
  }
  const Rational& x_l = *slab.lo;
  const Rational& x_r = *slab.hi;
  if (x_l < t.a || x_r > t.a + t.s || x_l > x_r) {
    throw Error(ErrorCode::kInvalidArgument,
                "slab [" + x_l.to_string() + ", " + x_r.to_string() +
                    "] is not inside the x-interval of triangle " +
                    std::to_string(t.id));
  }
  // The hypotenuse x + y = a + b + s meets the right wall at y_bot.
  Rational y_bot = t.b + t.s - (x_r - t.a);
  TrimPieces out{{t.id, y_bot}, std::nullopt};
  if (y_bot > t.b) {
    out.rectangle = TrimmedRectangle{t.id, t.b, std::move(y_bot)};
  }
  return out;
}

EnclosureIndex::EnclosureIndex() : EnclosureIndex(std::vector<CanonicalTriangle>{}) {}

EnclosureIndex::EnclosureIndex(std::vector<CanonicalTriangle> triangles)
    : triangles_(std::move(triangles)) {
  std::unordered_set<TriangleId> seen;
  seen.reserve(triangles_.size());
  for (const auto& t : triangles_) {
    if (!seen.insert(t.id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate triangle id " + std::to_string(t.id));
    }
    if (t.s.sign() <= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "triangle " + std::to_string(t.id) +
                      " has non-positive scale " + t.s.to_string());
    }
  }

  std::vector<Rational> x_hi;
  x_hi.reserve(triangles_.size());
  endpoints_.reserve(2 * triangles_.size());
  for (const auto& t : triangles_) {
    x_hi.push_back(t.a + t.s);
    endpoints_.push_back(t.a);
    endpoints_.push_back(x_hi.back());
  }
  std::sort(endpoints_.begin(), endpoints_.end());
  endpoints_.erase(std::unique(endpoints_.begin(), endpoints_.end()),
                   endpoints_.end());

  nodes_.reserve(2 * static_cast<std::size_t>(atom_count()));
  build_tree(0, atom_count() - 1, 1);

  auto point_atom = [&](const Rational& x) {
    auto it = std::lower_bound(endpoints_.begin(), endpoints_.end(), x);
    return static_cast<std::uint32_t>(2 * (it - endpoints_.begin()) + 1);
  };
  std::vector<std::vector<StabInterval>> pending(nodes_.size());
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    insert(root(), triangles_[i], point_atom(triangles_[i].a),
           point_atom(x_hi[i]), pending);
  }

  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    auto& list = nodes_[v].list;
    std::sort(list.begin(), list.end(),
              [](const TrimmedTriangle& l, const TrimmedTriangle& r) {
                if (l.y_bot != r.y_bot) return l.y_bot < r.y_bot;
                return l.owner_id < r.owner_id;
              });
    if (!pending[v].empty()) {
      nodes_[v].rectangles = IntervalStab(std::move(pending[v]));
    }
  }
}

Slab EnclosureIndex::atom_slab(std::uint32_t atom) const {
  Slab slab;
  if (atom % 2 == 1) {
    const Rational& x = endpoints_[atom / 2];
    slab.lo = x;
    slab.hi = x;
    slab.kind = SlabKind::kPointAtom;
    return slab;
  }
  std::size_t i = atom / 2;  // between endpoints_[i - 1] and endpoints_[i]
  if (i > 0) slab.lo = endpoints_[i - 1];
  if (i < endpoints_.size()) slab.hi = endpoints_[i];
  slab.kind = SlabKind::kOpenAtom;
  return slab;
}

std::int32_t EnclosureIndex::build_tree(std::uint32_t first,
                                        std::uint32_t last,
                                        std::size_t depth) {
  auto self = static_cast<std::int32_t>(nodes_.size());
  nodes_.emplace_back();
  nodes_[self].first_atom = first;
  nodes_[self].last_atom = last;
  height_ = std::max(height_, depth);
  if (first == last) {
    nodes_[self].slab = atom_slab(first);
    return self;
  }
  std::uint32_t mid = first + (last - first) / 2;
  std::int32_t left = build_tree(first, mid, depth + 1);
  std::int32_t right = build_tree(mid + 1, last, depth + 1);
  IndexNode& node = nodes_[self];
  node.left = left;
  node.right = right;
  node.slab.lo = nodes_[left].slab.lo;
  node.slab.hi = nodes_[right].slab.hi;
  node.slab.kind = SlabKind::kUnion;
  return self;
}

void EnclosureIndex::insert(std::int32_t v, const CanonicalTriangle& t,
                            std::uint32_t first, std::uint32_t last,
                            std::vector<std::vector<StabInterval>>& pending) {
  IndexNode& node = nodes_[v];
  if (last < node.first_atom || node.last_atom < first) return;
  if (first <= node.first_atom && node.last_atom <= last) {
    TrimPieces pieces = trim(t, node.slab);
    node.list.push_back(std::move(pieces.triangle));
    if (pieces.rectangle) {
      pending[v].push_back({std::move(pieces.rectangle->y_lo),
                            std::move(pieces.rectangle->y_hi), t.id});
    }
    return;
  }
  insert(node.left, t, first, last, pending);
  insert(node.right, t, first, last, pending);
}

std::uint32_t EnclosureIndex::locate_atom(const Rational& x,
                                          QueryStats& stats) const {
  std::size_t lo = 0;
  std::size_t hi = endpoints_.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    ++stats.key_comparisons;
    auto c = x <=> endpoints_[mid];
    if (c == 0) return static_cast<std::uint32_t>(2 * mid + 1);
    if (c < 0) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return static_cast<std::uint32_t>(2 * lo);
}

std::vector<std::int32_t> EnclosureIndex::search_path(std::uint32_t atom,
                                                      QueryStats& stats) const {
  std::vector<std::int32_t> path;
  path.reserve(height_);
  std::int32_t v = root();
  while (true) {
    path.push_back(v);
    ++stats.nodes_visited;
    const IndexNode& node = nodes_[v];
    if (node.is_leaf()) break;
    v = atom <= nodes_[node.left].last_atom ? node.left : node.right;
  }
  return path;
}

std::ptrdiff_t list_predecessor(std::span<const TrimmedTriangle> list,
                                const Rational& key, QueryStats& stats) {
  std::size_t lo = 0;
  std::size_t hi = list.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    ++stats.key_comparisons;
    if (list[mid].y_bot <= key) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return static_cast<std::ptrdiff_t>(lo) - 1;
}

void scan_list(std::span<const TrimmedTriangle> list, const Rational& x_r,
               const Point& q, std::ptrdiff_t position,
               std::vector<TriangleId>& out, QueryStats& stats) {
  if (position < 0) return;
  // Entries at or before `position` satisfy y_bot <= q_y; the hypotenuse
  // condition q_x + q_y <= y_bot + x_r holds on a suffix of them.
  Rational threshold = q.x + q.y - x_r;
  for (std::ptrdiff_t i = position; i >= 0; --i) {
    ++stats.key_comparisons;
    ++stats.candidates_examined;
    if (list[i].y_bot < threshold) break;
    out.push_back(list[i].owner_id);
  }
}

void query_list(std::span<const TrimmedTriangle> list, const Rational& x_r,
                const Point& q, std::vector<TriangleId>& out,
                QueryStats& stats) {
  if (list.empty()) return;
  scan_list(list, x_r, q, list_predecessor(list, q.y, stats), out, stats);
}

std::ptrdiff_t EnclosureIndex::list_predecessor(std::int32_t v,
                                                const Rational& key,
                                                QueryStats& stats) const {
  return penclose::list_predecessor(nodes_[v].list, key, stats);
}

void EnclosureIndex::scan_list(std::int32_t v, const Point& q,
                               std::ptrdiff_t position,
                               std::vector<TriangleId>& out,
                               QueryStats& stats) const {
  if (nodes_[v].list.empty()) return;
  penclose::scan_list(nodes_[v].list, *nodes_[v].slab.hi, q, position, out,
                      stats);
}

void EnclosureIndex::node_query_triangles(std::int32_t v, const Point& q,
                                          std::vector<TriangleId>& out,
                                          QueryStats& stats) const {
  if (nodes_[v].list.empty()) return;
  query_list(nodes_[v].list, *nodes_[v].slab.hi, q, out, stats);
}

void EnclosureIndex::node_query_rectangles(std::int32_t v, const Rational& q_y,
                                           std::vector<TriangleId>& out,
                                           QueryStats& stats) const {
  StabCounters counters;
  nodes_[v].rectangles.query(q_y, out, counters);
  stats.rect_comparisons += counters.comparisons;
  stats.candidates_examined += counters.examined;
}

std::vector<TriangleId> EnclosureIndex::query(const Point& q,
                                              QueryStats* stats) const {
  QueryStats local;
  std::vector<TriangleId> out;
  for (std::int32_t v : search_path(locate_atom(q.x, local), local)) {
    node_query_rectangles(v, q.y, out, local);
    node_query_triangles(v, q, out, local);
  }
  std::sort(out.begin(), out.end());
  local.reported = out.size();
  if (stats) *stats = local;
  return out;
}

std::size_t EnclosureIndex::fragment_count() const {
  std::size_t total = 0;
  for (const auto& node : nodes_) total += node.list.size();
  return total;
}

std::size_t EnclosureIndex::rectangle_count() const {
  std::size_t total = 0;
  for (const auto& node : nodes_) total += node.rectangles.size();
  return total;
}

void EnclosureIndex::remove_owner_for_testing(TriangleId id) {
  for (auto& node : nodes_) {
    std::erase_if(node.list,
                  [id](const TrimmedTriangle& e) { return e.owner_id == id; });
    auto kept = node.rectangles.intervals();
    std::erase_if(kept, [id](const StabInterval& e) { return e.owner == id; });
    node.rectangles = IntervalStab(std::move(kept));
  }
}

}  // namespace penclose
