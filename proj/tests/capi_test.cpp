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

#include "penclose/penclose.h"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

namespace {

const char* const kUnit[6] = {"0", "0", "1", "0", "0", "1"};

class CapiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ASSERT_EQ(penclose_instance_create(kUnit, &inst_), PENCLOSE_OK);
    ASSERT_EQ(penclose_instance_add_triangle(inst_, 1, "0", "0", "4"), PENCLOSE_OK);
    ASSERT_EQ(penclose_instance_add_triangle(inst_, 2, "2", "2", "4"), PENCLOSE_OK);
    const char* const v3[6] = {"5", "0", "7", "0", "5", "2"};
    ASSERT_EQ(penclose_instance_add_vertices(inst_, 3, v3), PENCLOSE_OK);
    ASSERT_EQ(penclose_engine_build(inst_, &engine_), PENCLOSE_OK);
  }
  void TearDown() override {
    penclose_engine_destroy(engine_);
    penclose_instance_destroy(inst_);
  }

  std::vector<int64_t> Query(const char* x, const char* y, penclose_mode mode) {
    int64_t ids[8];
    size_t count = 0;
    EXPECT_EQ(penclose_engine_query(engine_, x, y, mode, ids, 8, &count, nullptr),
              PENCLOSE_OK);
    return {ids, ids + count};
  }

  penclose_instance* inst_ = nullptr;
  penclose_engine* engine_ = nullptr;
};

TEST_F(CapiTest, QueriesInBothModes) {
  for (auto mode : {PENCLOSE_MODE_CASCADED, PENCLOSE_MODE_BINARY}) {
    EXPECT_EQ(Query("5/2", "5/2", mode), std::vector<int64_t>{2});
    EXPECT_EQ(Query("2", "2", mode), (std::vector<int64_t>{1, 2}));
    EXPECT_TRUE(Query("10", "10", mode).empty());
  }
}

TEST_F(CapiTest, InfoAndStats) {
  penclose_index_info info;
  ASSERT_EQ(penclose_engine_info(engine_, &info), PENCLOSE_OK);
  EXPECT_EQ(info.triangles, 3u);
  EXPECT_LE(info.augmented, 2 * info.fragments);
  penclose_query_stats stats;
  int64_t ids[4];
  size_t count = 0;
  ASSERT_EQ(penclose_engine_query(engine_, "2", "2", PENCLOSE_MODE_CASCADED, ids,
                                  4, &count, &stats),
            PENCLOSE_OK);
  EXPECT_EQ(stats.reported, 2u);
  EXPECT_GE(stats.candidates_examined, stats.reported);
}

TEST_F(CapiTest, BufferProtocol) {
  size_t count = 0;
  EXPECT_EQ(penclose_engine_query(engine_, "2", "2", PENCLOSE_MODE_CASCADED,
                                  nullptr, 0, &count, nullptr),
            PENCLOSE_ERR_BUFFER_TOO_SMALL);
  EXPECT_EQ(count, 2u);
  int64_t one[1];
  EXPECT_EQ(penclose_engine_query(engine_, "2", "2", PENCLOSE_MODE_CASCADED, one,
                                  1, &count, nullptr),
            PENCLOSE_ERR_BUFFER_TOO_SMALL);
  EXPECT_EQ(count, 2u);
  EXPECT_EQ(penclose_engine_query(engine_, "9", "9", PENCLOSE_MODE_CASCADED,
                                  nullptr, 0, &count, nullptr),
            PENCLOSE_OK);
  EXPECT_EQ(count, 0u);
}

TEST_F(CapiTest, ErrorCodes) {
  EXPECT_EQ(penclose_instance_add_triangle(inst_, 1, "0", "0", "1"),
            PENCLOSE_ERR_DUPLICATE_ID);
  EXPECT_EQ(penclose_instance_add_triangle(inst_, 9, "0", "0", "-1"),
            PENCLOSE_ERR_NON_POSITIVE_SCALE);
  EXPECT_EQ(penclose_instance_add_triangle(inst_, 9, "0", "3/0", "1"),
            PENCLOSE_ERR_PARSE);
  EXPECT_NE(std::string(penclose_last_error()).find("3/0"), std::string::npos);
  const char* const skew[6] = {"2", "3", "5", "3", "2", "7"};
  EXPECT_EQ(penclose_instance_add_vertices(inst_, 41, skew),
            PENCLOSE_ERR_NOT_HOMOTHETIC);
  EXPECT_NE(std::string(penclose_last_error()).find("41"), std::string::npos);
  const char* const flat[6] = {"0", "0", "1", "1", "2", "2"};
  penclose_instance* bad = nullptr;
  EXPECT_EQ(penclose_instance_create(flat, &bad), PENCLOSE_ERR_DEGENERATE);
  EXPECT_EQ(penclose_engine_query(nullptr, "0", "0", PENCLOSE_MODE_BINARY, nullptr,
                                  0, nullptr, nullptr),
            PENCLOSE_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(penclose_instance_load("/nonexistent/x.tri", nullptr, &bad),
            PENCLOSE_ERR_IO);
  EXPECT_STREQ(penclose_status_string(PENCLOSE_ERR_PARSE), "parse error");
}

TEST_F(CapiTest, ParseNames) {
  penclose_mode mode;
  EXPECT_EQ(penclose_parse_mode("binary", &mode), PENCLOSE_OK);
  EXPECT_EQ(mode, PENCLOSE_MODE_BINARY);
  EXPECT_EQ(penclose_parse_mode("fast", &mode), PENCLOSE_ERR_INVALID_ARGUMENT);
  penclose_profile profile;
  EXPECT_EQ(penclose_parse_profile("nested", &profile), PENCLOSE_OK);
  EXPECT_EQ(profile, PENCLOSE_PROFILE_NESTED);
}

TEST(CapiGeneratedTest, MatchesOracleFromManyThreads) {
  penclose_instance* inst = nullptr;
  ASSERT_EQ(penclose_instance_generate(200, 3, PENCLOSE_PROFILE_CLUSTERED,
                                       nullptr, &inst),
            PENCLOSE_OK);
  penclose_engine* engine = nullptr;
  ASSERT_EQ(penclose_engine_build(inst, &engine), PENCLOSE_OK);
  const size_t total = penclose_instance_query_count(inst);
  std::vector<int> mismatches(4, 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      std::vector<int64_t> a(256), b(256);
      for (size_t i = t; i < total; i += 4) {
        size_t na = 0, nb = 0;
        penclose_oracle_query(inst, i, a.data(), a.size(), &na);
        auto mode = i % 2 ? PENCLOSE_MODE_BINARY : PENCLOSE_MODE_CASCADED;
        penclose_engine_query_instance(engine, inst, i, mode, b.data(), b.size(),
                                       &nb, nullptr);
        if (na != nb || !std::equal(a.begin(), a.begin() + na, b.begin())) {
          ++mismatches[t];
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (int m : mismatches) EXPECT_EQ(m, 0);
  penclose_engine_destroy(engine);
  penclose_instance_destroy(inst);
}

TEST(CapiGeneratedTest, InjectedFaultIsDetectable) {
  penclose_instance* inst = nullptr;
  ASSERT_EQ(penclose_instance_generate(50, 1, PENCLOSE_PROFILE_UNIFORM, nullptr,
                                       &inst),
            PENCLOSE_OK);
  penclose_engine* engine = nullptr;
  ASSERT_EQ(penclose_engine_build(inst, &engine), PENCLOSE_OK);
  ASSERT_EQ(penclose_engine_inject_fault(engine), PENCLOSE_OK);
  int mismatches = 0;
  std::vector<int64_t> a(256), b(256);
  for (size_t i = 0; i < penclose_instance_query_count(inst); ++i) {
    size_t na = 0, nb = 0;
    penclose_oracle_query(inst, i, a.data(), a.size(), &na);
    penclose_engine_query_instance(engine, inst, i, PENCLOSE_MODE_CASCADED,
                                   b.data(), b.size(), &nb, nullptr);
    if (na != nb || !std::equal(a.begin(), a.begin() + na, b.begin())) ++mismatches;
  }
  EXPECT_GT(mismatches, 0);
  penclose_engine_destroy(engine);
  penclose_instance_destroy(inst);
}

TEST(CapiFilesTest, WriteLoadRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / "penclose_capi_test";
  std::filesystem::create_directories(dir);
  auto tri = (dir / "x.tri").string(), qry = (dir / "x.qry").string();
  penclose_instance* inst = nullptr;
  ASSERT_EQ(penclose_instance_generate(30, 2, PENCLOSE_PROFILE_NESTED, nullptr,
                                       &inst),
            PENCLOSE_OK);
  ASSERT_EQ(penclose_instance_write(inst, tri.c_str(), qry.c_str()), PENCLOSE_OK);
  penclose_instance* loaded = nullptr;
  ASSERT_EQ(penclose_instance_load(tri.c_str(), qry.c_str(), &loaded), PENCLOSE_OK);
  EXPECT_EQ(penclose_instance_triangle_count(loaded), 30u);
  EXPECT_EQ(penclose_instance_query_count(loaded),
            penclose_instance_query_count(inst));
  size_t len_a = 0, len_b = 0;
  penclose_instance_format_triangles(inst, nullptr, 0, &len_a);
  penclose_instance_format_triangles(loaded, nullptr, 0, &len_b);
  std::string a(len_a, '\0'), b(len_b, '\0');
  ASSERT_EQ(penclose_instance_format_triangles(inst, a.data(), a.size(), &len_a),
            PENCLOSE_OK);
  ASSERT_EQ(penclose_instance_format_triangles(loaded, b.data(), b.size(), &len_b),
            PENCLOSE_OK);
  EXPECT_EQ(a, b);
  penclose_instance_destroy(loaded);
  penclose_instance_destroy(inst);

  auto poly = (dir / "x.poly").string();
  std::ofstream(poly) << "poly 0 0 4 0 1 1 0 4\n1 0 0 1\n2 1 0 2\n";
  penclose_polygon_set* set = nullptr;
  ASSERT_EQ(penclose_polygon_set_load(poly.c_str(), &set), PENCLOSE_OK);
  EXPECT_EQ(penclose_polygon_set_size(set), 2u);
  EXPECT_EQ(penclose_polygon_set_pieces(set), 2u);
  penclose_polygon_engine* pe = nullptr;
  ASSERT_EQ(penclose_polygon_engine_build(set, &pe), PENCLOSE_OK);
  for (const auto& [x, y] : std::vector<std::pair<const char*, const char*>>{
           {"1", "1"}, {"2", "1"}, {"3/2", "3/2"}, {"3", "1/4"}, {"1/2", "1/2"}}) {
    int64_t e[4], g[4];
    size_t ne = 0, ng = 0;
    ASSERT_EQ(penclose_polygon_oracle_query(set, x, y, e, 4, &ne), PENCLOSE_OK);
    ASSERT_EQ(penclose_polygon_engine_query(pe, x, y, PENCLOSE_MODE_CASCADED, g, 4,
                                            &ng, nullptr),
              PENCLOSE_OK);
    EXPECT_EQ(std::vector<int64_t>(e, e + ne), std::vector<int64_t>(g, g + ng))
        << x << " " << y;
  }
  penclose_polygon_engine_destroy(pe);
  penclose_polygon_set_destroy(set);
  std::filesystem::remove_all(dir);
}

}  // namespace
