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

#include <algorithm>
#include <array>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "penclose/engine.hpp"
#include "penclose/error.hpp"
#include "penclose/instance_io.hpp"
#include "penclose/oracle.hpp"
#include "penclose/polygon.hpp"

struct penclose_instance {
  penclose::ReferenceTriangle reference;
  std::vector<penclose::Homothet> triangles;
  std::vector<penclose::Point> queries;
  std::unordered_set<std::int64_t> ids;
};

struct penclose_engine {
  penclose::Engine engine;
};

struct penclose_polygon_set {
  penclose::PolygonFile file;
};

struct penclose_polygon_engine {
  penclose::PolygonIndex index;
};

namespace {

using penclose::ErrorCode;

thread_local std::string g_last_error;

penclose_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return PENCLOSE_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse:
      return PENCLOSE_ERR_PARSE;
    case ErrorCode::kNotHomothetic:
      return PENCLOSE_ERR_NOT_HOMOTHETIC;
    case ErrorCode::kNonPositiveScale:
      return PENCLOSE_ERR_NON_POSITIVE_SCALE;
    case ErrorCode::kDegenerate:
      return PENCLOSE_ERR_DEGENERATE;
    case ErrorCode::kDuplicateId:
      return PENCLOSE_ERR_DUPLICATE_ID;
    case ErrorCode::kIo:
      return PENCLOSE_ERR_IO;
  }
  return PENCLOSE_ERR_INTERNAL;
}

penclose_status fail(penclose_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating every exception into a status code.
template <typename Body>
penclose_status guarded(Body&& body) noexcept {
  try {
    return body();
  } catch (const penclose::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PENCLOSE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PENCLOSE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PENCLOSE_ERR_INTERNAL, "unknown error");
  }
}

penclose::Rational rational_arg(const char* text, const char* what) {
  if (text == nullptr) {
    throw penclose::Error(ErrorCode::kInvalidArgument,
                          std::string(what) + " is NULL");
  }
  auto value = penclose::Rational::try_parse(text);
  if (!value) {
    throw penclose::Error(ErrorCode::kParse, std::string(what) +
                                                 ": malformed rational '" +
                                                 text + "'");
  }
  return std::move(*value);
}

penclose::Point point_arg(const char* x, const char* y) {
  return {rational_arg(x, "x"), rational_arg(y, "y")};
}

std::array<penclose::Point, 3> triple_arg(const char* const coords[6],
                                          const char* what) {
  if (coords == nullptr) {
    throw penclose::Error(ErrorCode::kInvalidArgument,
                          std::string(what) + " is NULL");
  }
  return {point_arg(coords[0], coords[1]), point_arg(coords[2], coords[3]),
          point_arg(coords[4], coords[5])};
}

penclose::ReferenceTriangle reference_arg(const char* const coords[6]) {
  auto v = triple_arg(coords, "reference");
  return penclose::ReferenceTriangle(v[0], v[1], v[2]);
}

penclose::QueryMode mode_arg(penclose_mode mode) {
  switch (mode) {
    case PENCLOSE_MODE_CASCADED:
      return penclose::QueryMode::kCascaded;
    case PENCLOSE_MODE_BINARY:
      return penclose::QueryMode::kBinary;
  }
  throw penclose::Error(ErrorCode::kInvalidArgument, "unknown query mode");
}

penclose::Profile profile_arg(penclose_profile profile) {
  switch (profile) {
    case PENCLOSE_PROFILE_UNIFORM:
      return penclose::Profile::kUniform;
    case PENCLOSE_PROFILE_NESTED:
      return penclose::Profile::kNested;
    case PENCLOSE_PROFILE_CLUSTERED:
      return penclose::Profile::kClustered;
    case PENCLOSE_PROFILE_DUPLICATES:
      return penclose::Profile::kDuplicates;
  }
  throw penclose::Error(ErrorCode::kInvalidArgument, "unknown profile");
}

template <typename T>
void require(const T* p, const char* what) {
  if (p == nullptr) {
    throw penclose::Error(ErrorCode::kInvalidArgument,
                          std::string(what) + " is NULL");
  }
}

penclose_status copy_ids(const std::vector<std::int64_t>& found, int64_t* ids,
                         size_t capacity, size_t* count) {
  require(count, "count");
  *count = found.size();
  if (found.size() > capacity) {
    return fail(PENCLOSE_ERR_BUFFER_TOO_SMALL,
                "id buffer holds " + std::to_string(capacity) + ", need " +
                    std::to_string(found.size()));
  }
  if (!found.empty()) require(ids, "ids");
  std::copy(found.begin(), found.end(), ids);
  return PENCLOSE_OK;
}

penclose_status copy_text(const std::string& text, char* buffer,
                          size_t capacity, size_t* length) {
  require(length, "length");
  *length = text.size() + 1;
  if (*length > capacity) {
    return fail(PENCLOSE_ERR_BUFFER_TOO_SMALL,
                "text buffer holds " + std::to_string(capacity) + ", need " +
                    std::to_string(*length));
  }
  require(buffer, "buffer");
  std::memcpy(buffer, text.c_str(), *length);
  return PENCLOSE_OK;
}

void fill_stats(const penclose::QueryStats& in, penclose_query_stats* out) {
  if (out == nullptr) return;
  out->nodes_visited = in.nodes_visited;
  out->key_comparisons = in.key_comparisons;
  out->rect_comparisons = in.rect_comparisons;
  out->candidates_examined = in.candidates_examined;
  out->reported = in.reported;
}

void add_homothet(penclose_instance& inst, penclose::Homothet h) {
  if (h.scale.sign() <= 0) {
    throw penclose::Error(ErrorCode::kNonPositiveScale,
                          "triangle " + std::to_string(h.id) + ": scale " +
                              h.scale.to_string() + " must be positive");
  }
  if (!inst.ids.insert(h.id).second) {
    throw penclose::Error(ErrorCode::kDuplicateId,
                          "duplicate triangle id " + std::to_string(h.id));
  }
  inst.triangles.push_back(std::move(h));
}

}  // namespace

extern "C" {

const char* penclose_last_error(void) { return g_last_error.c_str(); }

const char* penclose_status_string(penclose_status status) {
  switch (status) {
    case PENCLOSE_OK:
      return "ok";
    case PENCLOSE_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case PENCLOSE_ERR_PARSE:
      return "parse error";
    case PENCLOSE_ERR_NOT_HOMOTHETIC:
      return "not homothetic";
    case PENCLOSE_ERR_NON_POSITIVE_SCALE:
      return "non-positive scale";
    case PENCLOSE_ERR_DEGENERATE:
      return "degenerate geometry";
    case PENCLOSE_ERR_DUPLICATE_ID:
      return "duplicate id";
    case PENCLOSE_ERR_IO:
      return "i/o error";
    case PENCLOSE_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case PENCLOSE_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

penclose_status penclose_parse_mode(const char* name, penclose_mode* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    std::string_view s(name);
    if (s == "cascaded") {
      *out = PENCLOSE_MODE_CASCADED;
    } else if (s == "binary") {
      *out = PENCLOSE_MODE_BINARY;
    } else {
      return fail(PENCLOSE_ERR_INVALID_ARGUMENT,
                  "unknown mode '" + std::string(s) +
                      "' (expected cascaded or binary)");
    }
    return PENCLOSE_OK;
  });
}

penclose_status penclose_parse_profile(const char* name, penclose_profile* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    auto profile = penclose::parse_profile(name);
    if (!profile) {
      return fail(PENCLOSE_ERR_INVALID_ARGUMENT,
                  "unknown profile '" + std::string(name) +
                      "' (expected uniform, nested, clustered or duplicates)");
    }
    *out = static_cast<penclose_profile>(*profile);
    return PENCLOSE_OK;
  });
}

// ---- instances -------------------------------------------------------------

penclose_status penclose_instance_create(const char* const reference[6],
                                         penclose_instance** out) {
  return guarded([&] {
    require(out, "out");
    *out = new penclose_instance{reference_arg(reference), {}, {}, {}};
    return PENCLOSE_OK;
  });
}

penclose_status penclose_instance_load(const char* triangles_path,
                                       const char* queries_path,
                                       penclose_instance** out) {
  return guarded([&] {
    require(triangles_path, "triangles_path");
    require(out, "out");
    auto file = penclose::load_triangle_file(triangles_path);
    std::vector<penclose::Point> queries;
    if (queries_path != nullptr) queries = penclose::load_query_file(queries_path);
    std::unordered_set<std::int64_t> ids;
    for (const auto& t : file.triangles) ids.insert(t.id);
    *out = new penclose_instance{std::move(file.reference),
                                 std::move(file.triangles), std::move(queries),
                                 std::move(ids)};
    return PENCLOSE_OK;
  });
}

penclose_status penclose_instance_generate(uint64_t n, uint64_t seed,
                                           penclose_profile profile,
                                           const char* const reference[6],
                                           penclose_instance** out) {
  return guarded([&] {
    require(out, "out");
    auto ref = reference ? reference_arg(reference)
                         : penclose::ReferenceTriangle::unit();
    auto inst = penclose::gen_instance(n, seed, profile_arg(profile), ref);
    std::unordered_set<std::int64_t> ids;
    for (const auto& t : inst.triangles) ids.insert(t.id);
    *out = new penclose_instance{std::move(inst.reference),
                                 std::move(inst.triangles),
                                 std::move(inst.queries), std::move(ids)};
    return PENCLOSE_OK;
  });
}

void penclose_instance_destroy(penclose_instance* instance) { delete instance; }

penclose_status penclose_instance_add_triangle(penclose_instance* instance,
                                               int64_t id, const char* anchor_x,
                                               const char* anchor_y,
                                               const char* scale) {
  return guarded([&] {
    require(instance, "instance");
    add_homothet(*instance, {id, point_arg(anchor_x, anchor_y),
                             rational_arg(scale, "scale")});
    return PENCLOSE_OK;
  });
}

penclose_status penclose_instance_add_vertices(penclose_instance* instance,
                                               int64_t id,
                                               const char* const vertices[6]) {
  return guarded([&] {
    require(instance, "instance");
    auto v = triple_arg(vertices, "vertices");
    try {
      auto fit = penclose::validate_homothet(instance->reference, v[0], v[1], v[2]);
      add_homothet(*instance, {id, std::move(fit.anchor), std::move(fit.scale)});
    } catch (const penclose::Error& e) {
      throw penclose::Error(e.code(),
                            "triangle " + std::to_string(id) + ": " + e.what());
    }
    return PENCLOSE_OK;
  });
}

penclose_status penclose_instance_add_query(penclose_instance* instance,
                                            const char* x, const char* y) {
  return guarded([&] {
    require(instance, "instance");
    instance->queries.push_back(point_arg(x, y));
    return PENCLOSE_OK;
  });
}

penclose_status penclose_instance_add_random_queries(penclose_instance* instance,
                                                     uint64_t count,
                                                     uint64_t seed) {
  return guarded([&] {
    require(instance, "instance");
    auto points = penclose::gen_random_queries(
        instance->reference, instance->triangles.size(), count, seed);
    instance->queries.insert(instance->queries.end(),
                             std::make_move_iterator(points.begin()),
                             std::make_move_iterator(points.end()));
    return PENCLOSE_OK;
  });
}

penclose_status penclose_instance_load_queries(penclose_instance* instance,
                                               const char* queries_path) {
  return guarded([&] {
    require(instance, "instance");
    require(queries_path, "queries_path");
    auto points = penclose::load_query_file(queries_path);
    instance->queries.insert(instance->queries.end(),
                             std::make_move_iterator(points.begin()),
                             std::make_move_iterator(points.end()));
    return PENCLOSE_OK;
  });
}

penclose_status penclose_instance_clear_queries(penclose_instance* instance) {
  return guarded([&] {
    require(instance, "instance");
    instance->queries.clear();
    return PENCLOSE_OK;
  });
}

size_t penclose_instance_triangle_count(const penclose_instance* instance) {
  return instance ? instance->triangles.size() : 0;
}

size_t penclose_instance_query_count(const penclose_instance* instance) {
  return instance ? instance->queries.size() : 0;
}

penclose_status penclose_instance_write(const penclose_instance* instance,
                                        const char* triangles_path,
                                        const char* queries_path) {
  return guarded([&] {
    require(instance, "instance");
    auto open = [](const char* path) {
      std::ofstream out(path);
      if (!out) {
        throw penclose::Error(ErrorCode::kIo,
                              "cannot open '" + std::string(path) +
                                  "' for writing");
      }
      return out;
    };
    auto close = [](std::ofstream& out, const char* path) {
      out.close();
      if (!out) {
        throw penclose::Error(ErrorCode::kIo,
                              "failed writing '" + std::string(path) + "'");
      }
    };
    if (triangles_path != nullptr) {
      auto out = open(triangles_path);
      penclose::write_triangle_file(out, instance->reference, instance->triangles);
      close(out, triangles_path);
    }
    if (queries_path != nullptr) {
      auto out = open(queries_path);
      penclose::write_query_file(out, instance->queries);
      close(out, queries_path);
    }
    return PENCLOSE_OK;
  });
}

penclose_status penclose_instance_format_triangles(
    const penclose_instance* instance, char* buffer, size_t capacity,
    size_t* length) {
  return guarded([&] {
    require(instance, "instance");
    std::ostringstream out;
    penclose::write_triangle_file(out, instance->reference, instance->triangles);
    return copy_text(out.str(), buffer, capacity, length);
  });
}

penclose_status penclose_instance_format_query(const penclose_instance* instance,
                                               size_t index, char* buffer,
                                               size_t capacity, size_t* length) {
  return guarded([&] {
    require(instance, "instance");
    if (index >= instance->queries.size()) {
      return fail(PENCLOSE_ERR_INVALID_ARGUMENT, "query index out of range");
    }
    const auto& q = instance->queries[index];
    return copy_text(q.x.to_string() + " " + q.y.to_string(), buffer, capacity,
                     length);
  });
}

penclose_status penclose_oracle_query(const penclose_instance* instance,
                                      size_t index, int64_t* ids,
                                      size_t capacity, size_t* count) {
  return guarded([&] {
    require(instance, "instance");
    if (index >= instance->queries.size()) {
      return fail(PENCLOSE_ERR_INVALID_ARGUMENT, "query index out of range");
    }
    return copy_ids(penclose::oracle_query(instance->reference,
                                           instance->triangles,
                                           instance->queries[index]),
                    ids, capacity, count);
  });
}

// ---- engines ---------------------------------------------------------------

penclose_status penclose_engine_build(const penclose_instance* instance,
                                      penclose_engine** out) {
  return guarded([&] {
    require(instance, "instance");
    require(out, "out");
    *out = new penclose_engine{
        penclose::Engine(instance->reference, instance->triangles)};
    return PENCLOSE_OK;
  });
}

void penclose_engine_destroy(penclose_engine* engine) { delete engine; }

penclose_status penclose_engine_info(const penclose_engine* engine,
                                     penclose_index_info* info) {
  return guarded([&] {
    require(engine, "engine");
    require(info, "info");
    auto in = engine->engine.info();
    info->triangles = in.triangles;
    info->height = in.height;
    info->nodes = in.nodes;
    info->fragments = in.fragments;
    info->rectangles = in.rectangles;
    info->augmented = in.augmented;
    return PENCLOSE_OK;
  });
}

penclose_status penclose_engine_query(const penclose_engine* engine,
                                      const char* x, const char* y,
                                      penclose_mode mode, int64_t* ids,
                                      size_t capacity, size_t* count,
                                      penclose_query_stats* stats) {
  return guarded([&] {
    require(engine, "engine");
    penclose::QueryStats s;
    auto found = engine->engine.query(point_arg(x, y), mode_arg(mode), &s);
    fill_stats(s, stats);
    return copy_ids(found, ids, capacity, count);
  });
}

penclose_status penclose_engine_query_instance(
    const penclose_engine* engine, const penclose_instance* instance,
    size_t index, penclose_mode mode, int64_t* ids, size_t capacity,
    size_t* count, penclose_query_stats* stats) {
  return guarded([&] {
    require(engine, "engine");
    require(instance, "instance");
    if (index >= instance->queries.size()) {
      return fail(PENCLOSE_ERR_INVALID_ARGUMENT, "query index out of range");
    }
    penclose::QueryStats s;
    auto found =
        engine->engine.query(instance->queries[index], mode_arg(mode), &s);
    fill_stats(s, stats);
    return copy_ids(found, ids, capacity, count);
  });
}

penclose_status penclose_engine_inject_fault(penclose_engine* engine) {
  return guarded([&] {
    require(engine, "engine");
    engine->engine.inject_fault_for_testing();
    return PENCLOSE_OK;
  });
}

// ---- polygons --------------------------------------------------------------

penclose_status penclose_polygon_set_load(const char* polygons_path,
                                          penclose_polygon_set** out) {
  return guarded([&] {
    require(polygons_path, "polygons_path");
    require(out, "out");
    *out = new penclose_polygon_set{penclose::load_polygon_file(polygons_path)};
    return PENCLOSE_OK;
  });
}

void penclose_polygon_set_destroy(penclose_polygon_set* set) { delete set; }

size_t penclose_polygon_set_size(const penclose_polygon_set* set) {
  return set ? set->file.instances.size() : 0;
}

size_t penclose_polygon_set_pieces(const penclose_polygon_set* set) {
  return set ? set->file.reference.size() - 2 : 0;
}

penclose_status penclose_polygon_oracle_query(const penclose_polygon_set* set,
                                              const char* x, const char* y,
                                              int64_t* ids, size_t capacity,
                                              size_t* count) {
  return guarded([&] {
    require(set, "set");
    return copy_ids(penclose::oracle_query_polygons(set->file.reference,
                                                    set->file.instances,
                                                    point_arg(x, y)),
                    ids, capacity, count);
  });
}

penclose_status penclose_polygon_engine_build(const penclose_polygon_set* set,
                                              penclose_polygon_engine** out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    *out = new penclose_polygon_engine{
        penclose::PolygonIndex(set->file.reference, set->file.instances)};
    return PENCLOSE_OK;
  });
}

void penclose_polygon_engine_destroy(penclose_polygon_engine* engine) {
  delete engine;
}

penclose_status penclose_polygon_engine_query(
    const penclose_polygon_engine* engine, const char* x, const char* y,
    penclose_mode mode, int64_t* ids, size_t capacity, size_t* count,
    penclose_query_stats* stats) {
  return guarded([&] {
    require(engine, "engine");
    penclose::QueryStats s;
    auto found = engine->index.query(point_arg(x, y), mode_arg(mode), &s);
    fill_stats(s, stats);
    return copy_ids(found, ids, capacity, count);
  });
}

penclose_status penclose_polygon_engine_query_instance(
    const penclose_polygon_engine* engine, const penclose_instance* instance,
    size_t index, penclose_mode mode, int64_t* ids, size_t capacity,
    size_t* count, penclose_query_stats* stats) {
  return guarded([&] {
    require(engine, "engine");
    require(instance, "instance");
    if (index >= instance->queries.size()) {
      return fail(PENCLOSE_ERR_INVALID_ARGUMENT, "query index out of range");
    }
    penclose::QueryStats s;
    auto found =
        engine->index.query(instance->queries[index], mode_arg(mode), &s);
    fill_stats(s, stats);
    return copy_ids(found, ids, capacity, count);
  });
}

}  // extern "C"
