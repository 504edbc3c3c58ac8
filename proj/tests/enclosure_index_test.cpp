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
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include <gtest/gtest.h>

#include "penclose/error.hpp"
#include "penclose/oracle.hpp"
#include "test_util.hpp"

namespace penclose {
namespace {

using testing::P;
using testing::R;
using testing::Tri;

Slab Closed(std::string_view lo, std::string_view hi) {
  return {R(lo), R(hi), lo == hi ? SlabKind::kPointAtom : SlabKind::kUnion};
}

std::vector<CanonicalTriangle> ThreeTriangles() {
  return {Tri(1, "0", "0", "4"), Tri(2, "2", "2", "4"), Tri(3, "5", "0", "2")};
}

std::vector<CanonicalTriangle> RandomTriangles(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, 200);
  std::uniform_int_distribution<int> scale(1, 80);
  std::vector<CanonicalTriangle> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({static_cast<TriangleId>(i + 1), Rational(coord(rng), 2),
                   Rational(coord(rng), 2), Rational(scale(rng), 2)});
  }
  return out;
}

Point RandomPoint(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-20, 440);
  return {Rational(coord(rng), 4), Rational(coord(rng), 4)};
}

TEST(TrimTest, InteriorSlab) {
  auto pieces = trim(Tri(1, "0", "0", "4"), Closed("1", "3"));
  EXPECT_EQ(pieces.triangle.y_bot, R("1"));
  ASSERT_TRUE(pieces.rectangle.has_value());
  EXPECT_EQ(pieces.rectangle->y_lo, R("0"));
  EXPECT_EQ(pieces.rectangle->y_hi, R("1"));
}

TEST(TrimTest, RightEdgeSlabHasNoRectangle) {
  auto pieces = trim(Tri(1, "0", "0", "4"), Closed("2", "4"));
  EXPECT_EQ(pieces.triangle.y_bot, R("0"));
  EXPECT_FALSE(pieces.rectangle.has_value());
}

TEST(TrimTest, PointSlabAtLeftEdge) {
  auto pieces = trim(Tri(1, "0", "0", "4"), Closed("0", "0"));
  EXPECT_EQ(pieces.triangle.y_bot, R("4"));
  ASSERT_TRUE(pieces.rectangle.has_value());
  EXPECT_EQ(pieces.rectangle->y_lo, R("0"));
  EXPECT_EQ(pieces.rectangle->y_hi, R("4"));
}

TEST(TrimTest, SlabOutsideIntervalThrows) {
  EXPECT_THROW(trim(Tri(1, "0", "0", "4"), Closed("3", "5")), Error);
  EXPECT_THROW(trim(Tri(1, "0", "0", "4"), Slab{R("0"), std::nullopt}), Error);
}

class ListQueryTest : public ::testing::Test {
 protected:
  std::vector<TriangleId> Run(const Point& q) {
    std::vector<TriangleId> out;
    QueryStats stats;
    query_list(list_, R("3"), q, out, stats);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Slab [1, 3]; ids 1..4 carry y_bot 0, 1, 2, 5.
  std::vector<TrimmedTriangle> list_{{1, R("0")}, {2, R("1")}, {3, R("2")},
                                     {4, R("5")}};
};

TEST_F(ListQueryTest, MiddleOfSlab) {
  EXPECT_EQ(Run(P("2", "2")), (std::vector<TriangleId>{2, 3}));
}

TEST_F(ListQueryTest, BelowEveryKey) { EXPECT_TRUE(Run(P("3", "-1")).empty()); }

TEST_F(ListQueryTest, HighPointOnLeftWall) {
  EXPECT_EQ(Run(P("1", "5")), std::vector<TriangleId>{4});
}

TEST_F(ListQueryTest, PredecessorPositions) {
  QueryStats stats;
  EXPECT_EQ(list_predecessor(list_, R("-1"), stats), -1);
  EXPECT_EQ(list_predecessor(list_, R("1"), stats), 1);
  EXPECT_EQ(list_predecessor(list_, R("9/2"), stats), 2);
  EXPECT_EQ(list_predecessor(list_, R("6"), stats), 3);
}

TEST(EnclosureIndexTest, ThreeTriangleQueries) {
  EnclosureIndex index(ThreeTriangles());
  EXPECT_EQ(index.query(P("5/2", "5/2")), std::vector<TriangleId>{2});
  EXPECT_EQ(index.query(P("2", "2")), (std::vector<TriangleId>{1, 2}));
  EXPECT_TRUE(index.query(P("10", "10")).empty());
  EXPECT_EQ(index.query(P("5", "0")), (std::vector<TriangleId>{3}));
  EXPECT_EQ(index.query(P("4", "0")), (std::vector<TriangleId>{1}));
}

TEST(EnclosureIndexTest, EmptyIndex) {
  EnclosureIndex index;
  EXPECT_EQ(index.height(), 1u);
  EXPECT_TRUE(index.query(P("0", "0")).empty());
  EXPECT_TRUE(EnclosureIndex(std::vector<CanonicalTriangle>{}).query(P("-3", "7/2")).empty());
}

TEST(EnclosureIndexTest, DuplicateIdThrows) {
  try {
    EnclosureIndex index({Tri(4, "0", "0", "1"), Tri(4, "1", "1", "1")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateId);
  }
}

TEST(EnclosureIndexTest, IdenticalGeometryDistinctIds) {
  EnclosureIndex index({Tri(1, "0", "0", "2"), Tri(2, "0", "0", "2")});
  EXPECT_EQ(index.query(P("1", "1")), (std::vector<TriangleId>{1, 2}));
  EXPECT_EQ(index.query(P("0", "2")), (std::vector<TriangleId>{1, 2}));
}

TEST(EnclosureIndexTest, SingleTriangleSlabsPartitionItsInterval) {
  EnclosureIndex index({Tri(1, "0", "0", "1")});
  std::vector<const IndexNode*> storing;
  for (const auto& node : index.nodes()) {
    if (!node.list.empty()) storing.push_back(&node);
  }
  std::sort(storing.begin(), storing.end(), [](auto* l, auto* r) {
    return l->first_atom < r->first_atom;
  });
  ASSERT_FALSE(storing.empty());
  EXPECT_EQ(*storing.front()->slab.lo, R("0"));
  EXPECT_EQ(*storing.back()->slab.hi, R("1"));
  EXPECT_EQ(storing.front()->first_atom, 1u);
  EXPECT_EQ(storing.back()->last_atom, 3u);
  for (std::size_t i = 1; i < storing.size(); ++i) {
    EXPECT_EQ(storing[i - 1]->last_atom + 1, storing[i]->first_atom);
    EXPECT_EQ(*storing[i - 1]->slab.hi, *storing[i]->slab.lo);
  }
}

class RandomIndexTest : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  void SetUp() override {
    triangles_ = RandomTriangles(256, GetParam());
    index_ = EnclosureIndex(triangles_);
    for (const auto& t : triangles_) by_id_[t.id] = t;
  }

  std::vector<CanonicalTriangle> triangles_;
  EnclosureIndex index_;
  std::unordered_map<TriangleId, CanonicalTriangle> by_id_;
};

TEST_P(RandomIndexTest, MatchesOracle) {
  std::mt19937_64 rng(GetParam() + 100);
  for (int i = 0; i < 1000; ++i) {
    Point q = RandomPoint(rng);
    EXPECT_EQ(index_.query(q), oracle_query(triangles_, q));
  }
  for (const auto& t : triangles_) {
    for (const Point& q : {Point{t.a, t.b}, Point{t.a + t.s, t.b},
                           Point{t.a, t.b + t.s}}) {
      EXPECT_EQ(index_.query(q), oracle_query(triangles_, q));
    }
  }
}

TEST_P(RandomIndexTest, FragmentBound) {
  EXPECT_LE(index_.fragment_count(), 2 * triangles_.size() * index_.height());
}

TEST_P(RandomIndexTest, StoredTrianglesCoverSlabButNotParent) {
  const auto& nodes = index_.nodes();
  std::vector<std::int32_t> parent(nodes.size(), -1);
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (nodes[v].is_leaf()) continue;
    parent[nodes[v].left] = static_cast<std::int32_t>(v);
    parent[nodes[v].right] = static_cast<std::int32_t>(v);
  }
  auto covers = [](const CanonicalTriangle& t, const Slab& slab) {
    return slab.bounded() && t.a <= *slab.lo && *slab.hi <= t.a + t.s;
  };
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    for (const auto& e : nodes[v].list) {
      const auto& t = by_id_.at(e.owner_id);
      EXPECT_TRUE(covers(t, nodes[v].slab));
      if (parent[v] >= 0) EXPECT_FALSE(covers(t, nodes[parent[v]].slab));
    }
  }
}

TEST_P(RandomIndexTest, TrimmedTrianglesAreCongruentPerNode) {
  for (const auto& node : index_.nodes()) {
    if (node.list.empty()) continue;
    Rational w = node.slab.width();
    for (const auto& e : node.list) {
      const auto& t = by_id_.at(e.owner_id);
      // The apex (x_l, y_bot + w) must sit on the owner's hypotenuse.
      EXPECT_EQ(*node.slab.lo + e.y_bot + w, t.a + t.b + t.s);
      EXPECT_GE(e.y_bot, t.b);
    }
  }
}

TEST_P(RandomIndexTest, TrimPiecesPartitionEachFragment) {
  std::mt19937_64 rng(GetParam() + 200);
  for (const auto& node : index_.nodes()) {
    for (const auto& e : node.list) {
      const auto& t = by_id_.at(e.owner_id);
      auto pieces = trim(t, node.slab);
      Rational x_l = *node.slab.lo, x_r = *node.slab.hi;
      for (int i = 0; i < 8; ++i) {
        std::uniform_int_distribution<int> frac(0, 16);
        Rational px = x_l + (x_r - x_l) * Rational(frac(rng), 16);
        Point p{px, RandomPoint(rng).y};
        bool in_tri = p.y >= pieces.triangle.y_bot &&
                      p.x + p.y <= x_r + pieces.triangle.y_bot;
        bool in_rect = pieces.rectangle && pieces.rectangle->y_lo <= p.y &&
                       p.y < pieces.rectangle->y_hi;
        EXPECT_EQ(point_in_canonical(t, p), in_tri != in_rect);
        EXPECT_FALSE(in_tri && in_rect);
      }
    }
  }
}

TEST_P(RandomIndexTest, QualifyingEntriesAreContiguous) {
  std::mt19937_64 rng(GetParam() + 300);
  const auto& nodes = index_.nodes();
  for (int i = 0; i < 300; ++i) {
    Point q = RandomPoint(rng);
    QueryStats stats;
    for (auto v : index_.search_path(index_.locate_atom(q.x, stats), stats)) {
      const auto& list = nodes[v].list;
      std::ptrdiff_t last = -1;
      std::vector<std::size_t> hits;
      for (std::size_t j = 0; j < list.size(); ++j) {
        if (list[j].y_bot <= q.y) last = static_cast<std::ptrdiff_t>(j);
        const auto& t = by_id_.at(list[j].owner_id);
        bool in_tri = q.y >= list[j].y_bot && q.x + q.y <= *nodes[v].slab.hi + list[j].y_bot;
        if (in_tri) {
          EXPECT_TRUE(point_in_canonical(t, q));
          hits.push_back(j);
        }
      }
      if (hits.empty()) continue;
      EXPECT_EQ(static_cast<std::ptrdiff_t>(hits.back()), last);
      EXPECT_EQ(hits.back() - hits.front() + 1, hits.size());
    }
  }
}

TEST_P(RandomIndexTest, NoIdReportedTwiceOnAPath) {
  std::mt19937_64 rng(GetParam() + 400);
  for (int i = 0; i < 500; ++i) {
    Point q = RandomPoint(rng);
    QueryStats stats;
    std::vector<TriangleId> out;
    for (auto v : index_.search_path(index_.locate_atom(q.x, stats), stats)) {
      index_.node_query_rectangles(v, q.y, out, stats);
      index_.node_query_triangles(v, q, out, stats);
    }
    std::set<TriangleId> unique(out.begin(), out.end());
    EXPECT_EQ(unique.size(), out.size());
  }
}

TEST_P(RandomIndexTest, StatsAreConsistent) {
  std::mt19937_64 rng(GetParam() + 500);
  for (int i = 0; i < 200; ++i) {
    QueryStats stats;
    auto out = index_.query(RandomPoint(rng), &stats);
    EXPECT_EQ(stats.reported, out.size());
    EXPECT_LE(stats.reported, stats.candidates_examined);
    EXPECT_LE(stats.nodes_visited, index_.height());
    EXPECT_GE(stats.nodes_visited + 1, index_.height());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomIndexTest, ::testing::Values(1, 2, 3));

TEST(EnclosureIndexTest, RemovingOwnerBreaksQueries) {
  auto tris = ThreeTriangles();
  EnclosureIndex index(tris);
  index.remove_owner_for_testing(1);
  EXPECT_TRUE(index.query(P("1", "1")).empty());
  EXPECT_EQ(index.query(P("5/2", "5/2")), std::vector<TriangleId>{2});
}

}  // namespace
}  // namespace penclose
