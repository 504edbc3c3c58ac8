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

#ifndef PENCLOSE_ENCLOSURE_INDEX_HPP_
#define PENCLOSE_ENCLOSURE_INDEX_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "penclose/geometry.hpp"
#include "penclose/interval_stab.hpp"
#include "penclose/rational.hpp"

namespace penclose {

enum class QueryMode {
  kBinary,    // independent binary search in every L(v) on the path
  kCascaded,  // fractional cascading across the path
};

/// Operation counters for one query. Rectangle-structure work is kept apart
/// from the key comparisons spent on the search path and the L(v) lists.
struct QueryStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t key_comparisons = 0;
  std::uint64_t rect_comparisons = 0;
  std::uint64_t candidates_examined = 0;
  std::uint64_t reported = 0;
};

enum class SlabKind {
  kOpenAtom,   // (x_i, x_i+1)
  kPointAtom,  // [x_i, x_i]
  kUnion,      // internal node: union of its children
};

/// Vertical slab of a segment-tree node. Bounds are those of the closure;
/// a missing bound is infinite, which only happens on the two extreme atoms
/// and the internal nodes above them.
struct Slab {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  SlabKind kind = SlabKind::kUnion;

  bool bounded() const { return lo.has_value() && hi.has_value(); }
  /// Requires bounded().
  Rational width() const { return *hi - *lo; }
};

/// Trimmed triangle of (T, v): corners (x_l, y_bot), (x_r, y_bot),
/// (x_l, y_bot + w) with w the slab width. The leg is implied by the node.
struct TrimmedTriangle {
  TriangleId owner_id = 0;
  Rational y_bot;
};

/// Trimmed rectangle of (T, v): [x_l, x_r] x [y_lo, y_hi). Open on top so
/// that the line y = y_hi belongs to the trimmed triangle alone.
struct TrimmedRectangle {
  TriangleId owner_id = 0;
  Rational y_lo;
  Rational y_hi;
};

struct TrimPieces {
  TrimmedTriangle triangle;
  std::optional<TrimmedRectangle> rectangle;  // absent when empty
};

/// Splits t restricted to a bounded slab inside its x-interval into the
/// trimmed triangle and the (possibly empty) trimmed rectangle below it.
/// Throws Error(kInvalidArgument) if the slab is unbounded or not contained
/// in [t.a, t.a + t.s].
TrimPieces trim(const CanonicalTriangle& t, const Slab& slab);

/// Position of the last entry with y_bot <= key in a list sorted by y_bot,
/// or -1. Counts one key comparison per probe.
std::ptrdiff_t list_predecessor(std::span<const TrimmedTriangle> list,
                                const Rational& key, QueryStats& stats);

/// Scans left from `position`, reporting owners while the trimmed triangle
/// (slab right edge `x_r`) contains q, and stops at the first that does not.
/// Requires q.x in the slab and list[position].y_bot <= q.y.
void scan_list(std::span<const TrimmedTriangle> list, const Rational& x_r,
               const Point& q, std::ptrdiff_t position,
               std::vector<TriangleId>& out, QueryStats& stats);

/// Predecessor search for q.y followed by the leftward scan.
void query_list(std::span<const TrimmedTriangle> list, const Rational& x_r,
                const Point& q, std::vector<TriangleId>& out,
                QueryStats& stats);

struct IndexNode {
  Slab slab;
  std::uint32_t first_atom = 0;
  std::uint32_t last_atom = 0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  std::vector<TrimmedTriangle> list;  // L(v): y_bot ascending, ties by id
  IntervalStab rectangles;            // I(v)

  bool is_leaf() const { return left < 0; }
};

/// Segment tree over the x-intervals of a set of canonical triangles.
///
/// Leaves are the 2m+1 atoms (-inf, x_1), [x_1, x_1], (x_1, x_2), ...,
/// [x_m, x_m], (x_m, +inf) over the m distinct interval endpoints, so a query
/// abscissa equal to an endpoint lands in its own point atom.
///
/// A triangle is stored at every node whose slab its x-interval covers and
/// whose parent's slab it does not. Since every vertex abscissa of T is an
/// atom boundary, "covers the slab" is the same as "meets the slab with no
/// vertex in its interior".
class EnclosureIndex {
 public:
  /// Empty index; every query returns nothing.
  EnclosureIndex();

  /// Throws Error(kDuplicateId) for repeated ids and Error(kInvalidArgument)
  /// for a non-positive scale.
  explicit EnclosureIndex(std::vector<CanonicalTriangle> triangles);

  /// Ids of all triangles containing q, ascending. Per-node binary search.
  std::vector<TriangleId> query(const Point& q,
                                QueryStats* stats = nullptr) const;

  /// Atom holding x (point atoms catch endpoint abscissae).
  std::uint32_t locate_atom(const Rational& x, QueryStats& stats) const;

  /// Node indices from the root down to the leaf of `atom`.
  std::vector<std::int32_t> search_path(std::uint32_t atom,
                                        QueryStats& stats) const;

  /// Position of the last entry of L(v) with y_bot <= key, or -1.
  std::ptrdiff_t list_predecessor(std::int32_t node, const Rational& key,
                                  QueryStats& stats) const;

  /// Leftward scan of L(v) from `position`, reporting owners of entries
  /// containing q until the first entry that does not. Requires q.x in the
  /// node's slab.
  void scan_list(std::int32_t node, const Point& q, std::ptrdiff_t position,
                 std::vector<TriangleId>& out, QueryStats& stats) const;

  /// Position search plus leftward scan.
  void node_query_triangles(std::int32_t node, const Point& q,
                            std::vector<TriangleId>& out,
                            QueryStats& stats) const;

  void node_query_rectangles(std::int32_t node, const Rational& q_y,
                             std::vector<TriangleId>& out,
                             QueryStats& stats) const;

  const std::vector<IndexNode>& nodes() const { return nodes_; }
  std::int32_t root() const { return 0; }
  const std::vector<CanonicalTriangle>& triangles() const { return triangles_; }
  const std::vector<Rational>& endpoints() const { return endpoints_; }
  std::uint32_t atom_count() const {
    return static_cast<std::uint32_t>(2 * endpoints_.size() + 1);
  }

  /// Number of levels; a single leaf has height 1.
  std::size_t height() const { return height_; }

  /// Number of stored (triangle, node) assignments, i.e. the sum of |L(v)|.
  std::size_t fragment_count() const;

  /// Number of stored non-empty trimmed rectangles.
  std::size_t rectangle_count() const;

  /// Test hook: forgets every fragment of `id` so that queries go wrong.
  void remove_owner_for_testing(TriangleId id);

 private:
  std::int32_t build_tree(std::uint32_t first, std::uint32_t last,
                          std::size_t depth);
  Slab atom_slab(std::uint32_t atom) const;
  void insert(std::int32_t node, const CanonicalTriangle& t,
              std::uint32_t first, std::uint32_t last,
              std::vector<std::vector<StabInterval>>& pending);

  std::vector<CanonicalTriangle> triangles_;
  std::vector<Rational> endpoints_;
  std::vector<IndexNode> nodes_;
  std::size_t height_ = 0;
};

}  // namespace penclose

#endif  // PENCLOSE_ENCLOSURE_INDEX_HPP_
