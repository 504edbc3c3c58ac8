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

#include "penclose/polygon.hpp"

#include <gtest/gtest.h>

#include "penclose/error.hpp"
#include "test_util.hpp"

namespace penclose {
namespace {

using testing::P;
using testing::R;

ReferencePolygon Square(std::string_view k) {
  return ReferencePolygon({P("0", "0"), P(k, "0"), P(k, k), P("0", k)});
}

ReferencePolygon Dart() {
  return ReferencePolygon({P("0", "0"), P("4", "0"), P("1", "1"), P("0", "4")});
}

ReferencePolygon Comb() {
  return ReferencePolygon({P("0", "0"), P("6", "0"), P("6", "3"), P("5", "3"),
                           P("4", "1"), P("3", "3"), P("2", "1"), P("1", "3"),
                           P("0", "3")});
}

Rational PieceAreaSum(const std::vector<ReferenceTriangle>& pieces) {
  Rational total;
  for (const auto& t : pieces) total += orient(t.v0(), t.v1(), t.v2());
  return total;
}

TEST(ReferencePolygonTest, RejectsBadInput) {
  EXPECT_THROW(ReferencePolygon({P("0", "0"), P("1", "0")}), Error);
  // Clockwise.
  EXPECT_THROW(ReferencePolygon({P("0", "0"), P("0", "1"), P("1", "1"), P("1", "0")}),
               Error);
  // Bow tie.
  EXPECT_THROW(ReferencePolygon({P("0", "0"), P("2", "2"), P("2", "0"), P("0", "2")}),
               Error);
  // Repeated vertex.
  EXPECT_THROW(ReferencePolygon({P("0", "0"), P("2", "0"), P("2", "0"), P("0", "2")}),
               Error);
  // Collinear.
  EXPECT_THROW(ReferencePolygon({P("0", "0"), P("1", "0"), P("2", "0")}), Error);
}

TEST(TriangulateTest, TriangleIsItself) {
  ReferencePolygon tri({P("0", "0"), P("2", "0"), P("0", "3")});
  auto pieces = triangulate_reference(tri);
  ASSERT_EQ(pieces.size(), 1u);
  EXPECT_EQ(orient(pieces[0].v0(), pieces[0].v1(), pieces[0].v2()), R("6"));
}

TEST(TriangulateTest, ConvexSquare) {
  auto pieces = triangulate_reference(Square("4"));
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(PieceAreaSum(pieces), R("32"));
}

TEST(TriangulateTest, NonConvexDart) {
  auto dart = Dart();
  auto pieces = triangulate_reference(dart);
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(PieceAreaSum(pieces), twice_signed_area(dart.vertices()));
  EXPECT_EQ(twice_signed_area(dart.vertices()), R("8"));
}

TEST(TriangulateTest, PiecesLieInsideAndTile) {
  auto comb = Comb();
  auto pieces = triangulate_reference(comb);
  ASSERT_EQ(pieces.size(), comb.size() - 2);
  EXPECT_EQ(PieceAreaSum(pieces), twice_signed_area(comb.vertices()));
  for (const auto& t : pieces) {
    EXPECT_GT(orient(t.v0(), t.v1(), t.v2()).sign(), 0);
    Point centroid{(t.v0().x + t.v1().x + t.v2().x) / 3,
                   (t.v0().y + t.v1().y + t.v2().y) / 3};
    EXPECT_TRUE(point_in_polygon(comb.vertices(), centroid));
  }
}

TEST(PointInPolygonTest, BoundaryAndNotch) {
  auto dart = Dart().vertices();
  EXPECT_TRUE(point_in_polygon(dart, P("1", "1")));
  EXPECT_TRUE(point_in_polygon(dart, P("2", "0")));
  EXPECT_TRUE(point_in_polygon(dart, P("1/2", "1/2")));
  EXPECT_FALSE(point_in_polygon(dart, P("2", "2")));
  EXPECT_FALSE(point_in_polygon(dart, P("3/2", "3/2")));
  EXPECT_TRUE(point_in_polygon(dart, P("5/2", "1/2")));
}

TEST(PolygonIndexTest, EmptySet) {
  PolygonIndex index(Square("1"), {});
  EXPECT_TRUE(index.query(P("0", "0")).empty());
}

TEST(PolygonIndexTest, ScaledUnitSquare) {
  PolygonIndex index(Square("1"), {{7, P("0", "0"), R("4")}});
  EXPECT_EQ(index.query(P("2", "2")), std::vector<PolygonId>{7});
  EXPECT_EQ(oracle_query_polygons(index.reference(), index.instances(), P("2", "2")),
            std::vector<PolygonId>{7});
  EXPECT_TRUE(index.query(P("5", "2")).empty());
}

TEST(PolygonIndexTest, DiagonalPointReportedOnce) {
  PolygonIndex index(Square("1"), {{7, P("0", "0"), R("4")}});
  const auto& piece = index.pieces()[0];
  // Every piece edge of a two-piece square is either a side or the diagonal;
  // probe the midpoint of each.
  for (int e = 0; e < 3; ++e) {
    Point u = R("4") * piece.vertex(e);
    Point w = R("4") * piece.vertex((e + 1) % 3);
    Point mid{(u.x + w.x) / 2, (u.y + w.y) / 2};
    QueryStats stats;
    EXPECT_EQ(index.query(mid, QueryMode::kCascaded, &stats),
              std::vector<PolygonId>{7});
    EXPECT_EQ(stats.reported, 1u);
    EXPECT_EQ(index.query(mid, QueryMode::kBinary), std::vector<PolygonId>{7});
  }
}

TEST(PolygonIndexTest, RejectsBadInstances) {
  EXPECT_THROW(PolygonIndex(Square("1"), {{1, P("0", "0"), R("1")},
                                          {1, P("2", "0"), R("1")}}),
               Error);
  EXPECT_THROW(PolygonIndex(Square("1"), {{1, P("0", "0"), R("0")}}), Error);
}

class PolygonOracleTest
    : public ::testing::TestWithParam<std::tuple<int, std::uint64_t>> {};

TEST_P(PolygonOracleTest, MatchesPointInPolygon) {
  auto [shape, seed] = GetParam();
  ReferencePolygon ref = shape == 0 ? Square("2") : shape == 1 ? Dart() : Comb();
  auto work = gen_polygon_workload(ref, 60, seed);
  PolygonIndex index(ref, work.instances);
  for (const auto& q : work.queries) {
    auto expected = oracle_query_polygons(ref, work.instances, q);
    EXPECT_EQ(index.query(q, QueryMode::kCascaded), expected);
    EXPECT_EQ(index.query(q, QueryMode::kBinary), expected);
  }
}

INSTANTIATE_TEST_SUITE_P(Shapes, PolygonOracleTest,
                         ::testing::Combine(::testing::Values(0, 1, 2),
                                            ::testing::Values(1, 2)));

}  // namespace
}  // namespace penclose
