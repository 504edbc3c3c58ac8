/*
 * Copyright 2026 The penclose Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * penclose: output-sensitive point enclosure for homothetic triangles and
 * polygons, with an exact brute-force oracle.
 *
 * All coordinates cross this boundary as decimal rational strings: "3",
 * "-7", "5/2". Every function returns a penclose_status; on failure a
 * human-readable message is available from penclose_last_error() on the
 * calling thread until the next failing call on that thread.
 *
 * Handles are opaque. Built engines are immutable and may be queried from
 * many threads at once. Instances are not synchronized: do not mutate one
 * while another thread reads it.
 *
 * Result buffers: functions that return id lists take (ids, capacity,
 * count). On success *count holds the number written. If the buffer is too
 * small, PENCLOSE_ERR_BUFFER_TOO_SMALL is returned, *count holds the size
 * needed, and the buffer contents are unspecified. Passing ids = NULL with
 * capacity 0 is a valid size probe.
 */

#ifndef PENCLOSE_PENCLOSE_H_
#define PENCLOSE_PENCLOSE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PENCLOSE_BUILDING_LIBRARY)
#define PENCLOSE_API __declspec(dllexport)
#else
#define PENCLOSE_API __declspec(dllimport)
#endif
#else
#define PENCLOSE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum penclose_status {
  PENCLOSE_OK = 0,
  PENCLOSE_ERR_INVALID_ARGUMENT = 1,
  PENCLOSE_ERR_PARSE = 2,
  PENCLOSE_ERR_NOT_HOMOTHETIC = 3,
  PENCLOSE_ERR_NON_POSITIVE_SCALE = 4,
  PENCLOSE_ERR_DEGENERATE = 5,
  PENCLOSE_ERR_DUPLICATE_ID = 6,
  PENCLOSE_ERR_IO = 7,
  PENCLOSE_ERR_BUFFER_TOO_SMALL = 8,
  PENCLOSE_ERR_INTERNAL = 9
} penclose_status;

typedef enum penclose_mode {
  PENCLOSE_MODE_CASCADED = 0,
  PENCLOSE_MODE_BINARY = 1
} penclose_mode;

typedef enum penclose_profile {
  PENCLOSE_PROFILE_UNIFORM = 0,
  PENCLOSE_PROFILE_NESTED = 1,
  PENCLOSE_PROFILE_CLUSTERED = 2,
  PENCLOSE_PROFILE_DUPLICATES = 3
} penclose_profile;

typedef struct penclose_query_stats {
  uint64_t nodes_visited;
  uint64_t key_comparisons;  /* x search + L(v) searches and scans */
  uint64_t rect_comparisons; /* trimmed-rectangle structures */
  uint64_t candidates_examined;
  uint64_t reported;
} penclose_query_stats;

typedef struct penclose_index_info {
  uint64_t triangles;
  uint64_t height; /* levels of the segment tree */
  uint64_t nodes;
  uint64_t fragments; /* sum over nodes of |L(v)| */
  uint64_t rectangles;
  uint64_t augmented; /* sum over nodes of |M(v)| */
} penclose_index_info;

/* Reference triangle, homothets and query points. */
typedef struct penclose_instance penclose_instance;
/* Built index over an instance's triangles. */
typedef struct penclose_engine penclose_engine;
/* Reference polygon and its instances. */
typedef struct penclose_polygon_set penclose_polygon_set;
/* Built index over a polygon set. */
typedef struct penclose_polygon_engine penclose_polygon_engine;

PENCLOSE_API const char* penclose_last_error(void);
PENCLOSE_API const char* penclose_status_string(penclose_status status);
/* "cascaded"/"binary" and "uniform"/"nested"/"clustered"/"duplicates". */
PENCLOSE_API penclose_status penclose_parse_mode(const char* name,
                                                 penclose_mode* out);
PENCLOSE_API penclose_status penclose_parse_profile(const char* name,
                                                    penclose_profile* out);

/* ---- instances ---------------------------------------------------------- */

/* `reference` holds x0 y0 x1 y1 x2 y2, counterclockwise. */
PENCLOSE_API penclose_status penclose_instance_create(
    const char* const reference[6], penclose_instance** out);
/* Triangles from a triangle file; queries from a query file (may be NULL). */
PENCLOSE_API penclose_status penclose_instance_load(const char* triangles_path,
                                                    const char* queries_path,
                                                    penclose_instance** out);
/* Deterministic generated instance under the unit reference, or under
 * `reference` (six rationals) when it is not NULL. */
PENCLOSE_API penclose_status penclose_instance_generate(
    uint64_t n, uint64_t seed, penclose_profile profile,
    const char* const reference[6], penclose_instance** out);
PENCLOSE_API void penclose_instance_destroy(penclose_instance* instance);

PENCLOSE_API penclose_status penclose_instance_add_triangle(
    penclose_instance* instance, int64_t id, const char* anchor_x,
    const char* anchor_y, const char* scale);
/* Vertex form; validated as a homothet of the reference. */
PENCLOSE_API penclose_status penclose_instance_add_vertices(
    penclose_instance* instance, int64_t id, const char* const vertices[6]);
PENCLOSE_API penclose_status penclose_instance_add_query(
    penclose_instance* instance, const char* x, const char* y);
/* Appends `count` uniform random points over the instance's extent. */
PENCLOSE_API penclose_status penclose_instance_add_random_queries(
    penclose_instance* instance, uint64_t count, uint64_t seed);
/* Appends the points of a query file. */
PENCLOSE_API penclose_status penclose_instance_load_queries(
    penclose_instance* instance, const char* queries_path);
PENCLOSE_API penclose_status penclose_instance_clear_queries(
    penclose_instance* instance);

PENCLOSE_API size_t penclose_instance_triangle_count(
    const penclose_instance* instance);
PENCLOSE_API size_t penclose_instance_query_count(
    const penclose_instance* instance);

/* Writes the triangle file and the query file (either path may be NULL). */
PENCLOSE_API penclose_status penclose_instance_write(
    const penclose_instance* instance, const char* triangles_path,
    const char* queries_path);

/* Text of the triangle file, or of query `index` as "qx qy" (NUL
 * terminated). Same buffer protocol as id lists, counted in bytes including
 * the terminator. */
PENCLOSE_API penclose_status penclose_instance_format_triangles(
    const penclose_instance* instance, char* buffer, size_t capacity,
    size_t* length);
PENCLOSE_API penclose_status penclose_instance_format_query(
    const penclose_instance* instance, size_t index, char* buffer,
    size_t capacity, size_t* length);

/* Brute force: ids of the triangles containing query `index`, ascending. */
PENCLOSE_API penclose_status penclose_oracle_query(
    const penclose_instance* instance, size_t index, int64_t* ids,
    size_t capacity, size_t* count);

/* ---- engines ------------------------------------------------------------ */

PENCLOSE_API penclose_status penclose_engine_build(
    const penclose_instance* instance, penclose_engine** out);
PENCLOSE_API void penclose_engine_destroy(penclose_engine* engine);

PENCLOSE_API penclose_status penclose_engine_info(const penclose_engine* engine,
                                                  penclose_index_info* info);

/* Ids of the triangles containing (x, y), ascending. `stats` may be NULL. */
PENCLOSE_API penclose_status penclose_engine_query(
    const penclose_engine* engine, const char* x, const char* y,
    penclose_mode mode, int64_t* ids, size_t capacity, size_t* count,
    penclose_query_stats* stats);

/* As penclose_engine_query for query `index` of `instance`, without a
 * round trip through text. */
PENCLOSE_API penclose_status penclose_engine_query_instance(
    const penclose_engine* engine, const penclose_instance* instance,
    size_t index, penclose_mode mode, int64_t* ids, size_t capacity,
    size_t* count, penclose_query_stats* stats);

/* Validation-harness self test: drops every fragment of the lowest-id
 * triangle so that some queries answer wrongly. */
PENCLOSE_API penclose_status penclose_engine_inject_fault(
    penclose_engine* engine);

/* ---- polygons ----------------------------------------------------------- */

PENCLOSE_API penclose_status penclose_polygon_set_load(
    const char* polygons_path, penclose_polygon_set** out);
PENCLOSE_API void penclose_polygon_set_destroy(penclose_polygon_set* set);
PENCLOSE_API size_t penclose_polygon_set_size(const penclose_polygon_set* set);
/* Number of triangles in the reference triangulation. */
PENCLOSE_API size_t penclose_polygon_set_pieces(const penclose_polygon_set* set);

PENCLOSE_API penclose_status penclose_polygon_oracle_query(
    const penclose_polygon_set* set, const char* x, const char* y,
    int64_t* ids, size_t capacity, size_t* count);

PENCLOSE_API penclose_status penclose_polygon_engine_build(
    const penclose_polygon_set* set, penclose_polygon_engine** out);
PENCLOSE_API void penclose_polygon_engine_destroy(
    penclose_polygon_engine* engine);
PENCLOSE_API penclose_status penclose_polygon_engine_query(
    const penclose_polygon_engine* engine, const char* x, const char* y,
    penclose_mode mode, int64_t* ids, size_t capacity, size_t* count,
    penclose_query_stats* stats);

/* As penclose_polygon_engine_query for query `index` of `instance`; only
 * the instance's query points are used. */
PENCLOSE_API penclose_status penclose_polygon_engine_query_instance(
    const penclose_polygon_engine* engine, const penclose_instance* instance,
    size_t index, penclose_mode mode, int64_t* ids, size_t capacity,
    size_t* count, penclose_query_stats* stats);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PENCLOSE_PENCLOSE_H_ */
