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

// penclose: solve, generate, validate and benchmark point-enclosure
// instances. Exit codes: 0 ok, 1 input error, 2 validation mismatch.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "penclose/penclose.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

struct InstanceDeleter {
  void operator()(penclose_instance* p) const { penclose_instance_destroy(p); }
};
struct EngineDeleter {
  void operator()(penclose_engine* p) const { penclose_engine_destroy(p); }
};
struct PolygonSetDeleter {
  void operator()(penclose_polygon_set* p) const {
    penclose_polygon_set_destroy(p);
  }
};
struct PolygonEngineDeleter {
  void operator()(penclose_polygon_engine* p) const {
    penclose_polygon_engine_destroy(p);
  }
};
using Instance = std::unique_ptr<penclose_instance, InstanceDeleter>;
using Engine = std::unique_ptr<penclose_engine, EngineDeleter>;
using PolygonSet = std::unique_ptr<penclose_polygon_set, PolygonSetDeleter>;
using PolygonEngine =
    std::unique_ptr<penclose_polygon_engine, PolygonEngineDeleter>;

// Thrown with the library's message when a C API call fails.
struct ApiError {
  penclose_status status;
  std::string message;
};

void check(penclose_status status) {
  if (status != PENCLOSE_OK) throw ApiError{status, penclose_last_error()};
}

// Runs an id-returning query, growing the buffer as needed.
template <typename Call>
std::vector<int64_t> collect_ids(Call&& call, std::vector<int64_t>& buffer) {
  size_t count = 0;
  penclose_status st = call(buffer.data(), buffer.size(), &count);
  if (st == PENCLOSE_ERR_BUFFER_TOO_SMALL) {
    buffer.resize(count);
    st = call(buffer.data(), buffer.size(), &count);
  }
  check(st);
  return {buffer.begin(), buffer.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::string query_text(const penclose_instance* inst, size_t index) {
  std::string text(64, '\0');
  size_t length = 0;
  penclose_status st = penclose_instance_format_query(
      inst, index, text.data(), text.size(), &length);
  if (st == PENCLOSE_ERR_BUFFER_TOO_SMALL) {
    text.resize(length);
    st = penclose_instance_format_query(inst, index, text.data(), text.size(),
                                        &length);
  }
  check(st);
  text.resize(length - 1);
  return text;
}

std::string triangles_text(const penclose_instance* inst) {
  size_t length = 0;
  penclose_status st =
      penclose_instance_format_triangles(inst, nullptr, 0, &length);
  if (st != PENCLOSE_ERR_BUFFER_TOO_SMALL) check(st);
  std::string text(length, '\0');
  check(penclose_instance_format_triangles(inst, text.data(), text.size(),
                                           &length));
  text.resize(length - 1);
  return text;
}

std::string answer_line(const std::string& q, const std::vector<int64_t>& ids) {
  std::string line = q + " :";
  if (ids.empty()) return line + " -";
  for (int64_t id : ids) line += " " + std::to_string(id);
  return line;
}

std::string ids_text(const std::vector<int64_t>& ids) {
  if (ids.empty()) return "-";
  std::string out;
  for (int64_t id : ids) {
    if (!out.empty()) out += ' ';
    out += std::to_string(id);
  }
  return out;
}

penclose_mode parse_mode(const std::string& name) {
  penclose_mode mode;
  check(penclose_parse_mode(name.c_str(), &mode));
  return mode;
}

penclose_profile parse_profile(const std::string& name) {
  penclose_profile profile;
  check(penclose_parse_profile(name.c_str(), &profile));
  return profile;
}

unsigned worker_count(unsigned requested, size_t jobs) {
  unsigned n = requested ? requested : std::thread::hardware_concurrency();
  n = std::max(1u, n);
  return static_cast<unsigned>(std::min<size_t>(n, std::max<size_t>(jobs, 1)));
}

// Answers every query of `inst` on a pool of threads; `query` fills ids and
// stats for one index. Lines come back in input order.
template <typename Query>
std::vector<std::string> answer_all(const penclose_instance* inst,
                                    unsigned threads, bool with_stats,
                                    Query&& query) {
  const size_t total = penclose_instance_query_count(inst);
  std::vector<std::string> lines(total);
  std::vector<penclose_query_stats> stats(total);
  std::atomic<size_t> next{0};
  std::vector<ApiError> errors;
  std::mutex errors_mu;
  auto work = [&] {
    std::vector<int64_t> buffer(16);
    try {
      for (size_t i; (i = next.fetch_add(1)) < total;) {
        auto ids = query(i, buffer, &stats[i]);
        lines[i] = answer_line(query_text(inst, i), ids);
      }
    } catch (const ApiError& e) {
      std::lock_guard<std::mutex> lock(errors_mu);
      errors.push_back(e);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < worker_count(threads, total); ++t) {
    pool.emplace_back(work);
  }
  work();
  for (auto& t : pool) t.join();
  if (!errors.empty()) throw errors.front();

  if (with_stats) {
    std::cerr << "query\tnodes\tkey_cmp\trect_cmp\texamined\treported\n";
    for (size_t i = 0; i < total; ++i) {
      const auto& s = stats[i];
      std::cerr << i << '\t' << s.nodes_visited << '\t' << s.key_comparisons
                << '\t' << s.rect_comparisons << '\t' << s.candidates_examined
                << '\t' << s.reported << '\n';
    }
  }
  return lines;
}

int cmd_solve(const std::string& tri_path, const std::string& qry_path,
              const std::string& mode_name, const std::string& format,
              unsigned threads) {
  penclose_mode mode = parse_mode(mode_name);
  penclose_instance* raw = nullptr;
  check(penclose_instance_load(tri_path.c_str(), qry_path.c_str(), &raw));
  Instance inst(raw);
  penclose_engine* eraw = nullptr;
  check(penclose_engine_build(inst.get(), &eraw));
  Engine engine(eraw);

  auto lines = answer_all(
      inst.get(), threads, format == "stats",
      [&](size_t i, std::vector<int64_t>& buffer, penclose_query_stats* s) {
        return collect_ids(
            [&](int64_t* ids, size_t cap, size_t* count) {
              return penclose_engine_query_instance(engine.get(), inst.get(),
                                                    i, mode, ids, cap, count, s);
            },
            buffer);
      });
  for (const auto& line : lines) std::cout << line << '\n';
  return kExitOk;
}

int cmd_polygons(const std::string& poly_path, const std::string& qry_path,
                 const std::string& mode_name, const std::string& format,
                 unsigned threads) {
  penclose_mode mode = parse_mode(mode_name);
  penclose_polygon_set* sraw = nullptr;
  check(penclose_polygon_set_load(poly_path.c_str(), &sraw));
  PolygonSet set(sraw);
  // Queries only; the triangle reference is unused.
  static const char* const kUnit[6] = {"0", "0", "1", "0", "0", "1"};
  penclose_instance* iraw = nullptr;
  check(penclose_instance_create(kUnit, &iraw));
  Instance queries(iraw);
  check(penclose_instance_load_queries(queries.get(), qry_path.c_str()));
  penclose_polygon_engine* eraw = nullptr;
  check(penclose_polygon_engine_build(set.get(), &eraw));
  PolygonEngine engine(eraw);

  auto lines = answer_all(
      queries.get(), threads, format == "stats",
      [&](size_t i, std::vector<int64_t>& buffer, penclose_query_stats* s) {
        return collect_ids(
            [&](int64_t* ids, size_t cap, size_t* count) {
              return penclose_polygon_engine_query_instance(
                  engine.get(), queries.get(), i, mode, ids, cap, count, s);
            },
            buffer);
      });
  for (const auto& line : lines) std::cout << line << '\n';
  return kExitOk;
}

int cmd_gen(uint64_t n, uint64_t seed, const std::string& profile_name,
            const std::string& prefix) {
  penclose_instance* raw = nullptr;
  check(penclose_instance_generate(n, seed, parse_profile(profile_name),
                                   nullptr, &raw));
  Instance inst(raw);
  std::string tri = prefix + ".tri";
  std::string qry = prefix + ".qry";
  check(penclose_instance_write(inst.get(), tri.c_str(), qry.c_str()));
  std::cerr << "wrote " << tri << " (" << penclose_instance_triangle_count(raw)
            << " triangles) and " << qry << " ("
            << penclose_instance_query_count(raw) << " queries)\n";
  return kExitOk;
}

int cmd_validate(uint64_t n, uint64_t seed, const std::string& profile_name,
                 uint64_t trials, bool inject_fault) {
  penclose_profile profile = parse_profile(profile_name);
  uint64_t checked = 0;
  std::vector<int64_t> buf_a(16), buf_b(16);
  for (uint64_t t = 0; t < trials; ++t) {
    penclose_instance* raw = nullptr;
    check(penclose_instance_generate(n, seed + t, profile, nullptr, &raw));
    Instance inst(raw);
    penclose_engine* eraw = nullptr;
    check(penclose_engine_build(inst.get(), &eraw));
    Engine engine(eraw);
    if (inject_fault) check(penclose_engine_inject_fault(engine.get()));

    for (size_t i = 0; i < penclose_instance_query_count(raw); ++i) {
      auto expected = collect_ids(
          [&](int64_t* ids, size_t cap, size_t* count) {
            return penclose_oracle_query(raw, i, ids, cap, count);
          },
          buf_a);
      for (penclose_mode mode : {PENCLOSE_MODE_CASCADED, PENCLOSE_MODE_BINARY}) {
        auto got = collect_ids(
            [&](int64_t* ids, size_t cap, size_t* count) {
              return penclose_engine_query_instance(engine.get(), raw, i, mode,
                                                    ids, cap, count, nullptr);
            },
            buf_b);
        ++checked;
        if (got == expected) continue;
        std::cout << "FAIL seed " << seed + t << " profile " << profile_name
                  << " n " << n << " mode "
                  << (mode == PENCLOSE_MODE_CASCADED ? "cascaded" : "binary")
                  << "\nquery " << query_text(raw, i) << "\nexpected "
                  << ids_text(expected) << "\ngot " << ids_text(got)
                  << "\n# counterexample triangle file\n"
                  << triangles_text(raw)
                  << "# counterexample query file\n"
                  << query_text(raw, i) << '\n';
        return kExitMismatch;
      }
    }
  }
  std::cout << "PASS " << trials << " trials, n " << n << ", profile "
            << profile_name << ", " << checked << " query checks\n";
  return kExitOk;
}

struct Column {
  uint64_t max = 0;
  long double sum = 0;
  uint64_t count = 0;
  void add(uint64_t v) {
    max = std::max(max, v);
    sum += v;
    ++count;
  }
  long double mean() const { return count ? sum / count : 0; }
};

int cmd_bench(const std::vector<uint64_t>& ns, uint64_t seed,
              const std::string& profile_name, const std::string& mode_name,
              uint64_t queries) {
  penclose_profile profile = parse_profile(profile_name);
  std::vector<penclose_mode> modes;
  if (mode_name == "both") {
    modes = {PENCLOSE_MODE_CASCADED, PENCLOSE_MODE_BINARY};
  } else {
    modes = {parse_mode(mode_name)};
  }
  std::cout << "n\tmode\tbuild_ms\theight\tfragments\tsum_L\tsum_M\trectangles"
               "\tqueries\tk_mean\tkey_mean\tkey_max\tkey_minus_2k_max"
               "\tkey_k0_mean\tkey_k0_max\tkey_kpos_mean\tkey_kpos_max"
               "\trect_mean\trect_max\tnodes_mean\n";
  std::vector<int64_t> buffer(64);
  for (uint64_t n : ns) {
    penclose_instance* raw = nullptr;
    check(penclose_instance_generate(n, seed, profile, nullptr, &raw));
    Instance inst(raw);
    check(penclose_instance_clear_queries(raw));
    check(penclose_instance_add_random_queries(raw, queries, seed ^ 0x9e3779b9));

    auto start = std::chrono::steady_clock::now();
    penclose_engine* eraw = nullptr;
    check(penclose_engine_build(raw, &eraw));
    Engine engine(eraw);
    double build_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    penclose_index_info info;
    check(penclose_engine_info(engine.get(), &info));

    for (penclose_mode mode : modes) {
      Column k, key, excess, key0, keypos, rect, nodes;
      for (size_t i = 0; i < penclose_instance_query_count(raw); ++i) {
        penclose_query_stats s;
        collect_ids(
            [&](int64_t* ids, size_t cap, size_t* count) {
              return penclose_engine_query_instance(engine.get(), raw, i, mode,
                                                    ids, cap, count, &s);
            },
            buffer);
        k.add(s.reported);
        key.add(s.key_comparisons);
        uint64_t twice = 2 * s.reported;
        excess.add(s.key_comparisons > twice ? s.key_comparisons - twice : 0);
        (s.reported == 0 ? key0 : keypos).add(s.key_comparisons);
        rect.add(s.rect_comparisons);
        nodes.add(s.nodes_visited);
      }
      std::printf(
          "%llu\t%s\t%.1f\t%llu\t%llu\t%llu\t%llu\t%llu\t%llu\t%.3Lf\t%.3Lf\t%llu"
          "\t%llu\t%.3Lf\t%llu\t%.3Lf\t%llu\t%.3Lf\t%llu\t%.3Lf\n",
          static_cast<unsigned long long>(n),
          mode == PENCLOSE_MODE_CASCADED ? "cascaded" : "binary", build_ms,
          static_cast<unsigned long long>(info.height),
          static_cast<unsigned long long>(info.fragments),
          static_cast<unsigned long long>(info.fragments),
          static_cast<unsigned long long>(info.augmented),
          static_cast<unsigned long long>(info.rectangles),
          static_cast<unsigned long long>(key.count), k.mean(), key.mean(),
          static_cast<unsigned long long>(key.max),
          static_cast<unsigned long long>(excess.max), key0.mean(),
          static_cast<unsigned long long>(key0.max), keypos.mean(),
          static_cast<unsigned long long>(keypos.max), rect.mean(),
          static_cast<unsigned long long>(rect.max), nodes.mean());
      std::fflush(stdout);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point enclosure for homothetic triangles and polygons"};
  app.require_subcommand(1);

  std::string tri_path, qry_path, poly_path, out_prefix;
  std::string mode = "cascaded", format = "plain", profile = "uniform";
  std::string bench_mode = "both";
  uint64_t n = 300, seed = 1, trials = 1, queries = 1000;
  unsigned threads = 0;
  bool inject_fault = false;
  std::vector<uint64_t> ns{1024, 4096, 16384, 65536};

  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode, "cascaded or binary")
        ->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "answer every query of a query file");
  solve->add_option("triangles", tri_path, "triangle file")
      ->required()->check(CLI::ExistingFile);
  solve->add_option("queries", qry_path, "query file")
      ->required()->check(CLI::ExistingFile);
  add_mode(solve);
  solve->add_option("--format", format, "plain, or stats for per-query counters on stderr")
      ->check(CLI::IsMember({"plain", "stats"}))->capture_default_str();
  solve->add_option("--threads", threads, "worker threads (0: one per core)");

  auto* polygons = app.add_subcommand("polygons", "solve against a polygon file");
  polygons->add_option("polygons", poly_path, "polygon file")
      ->required()->check(CLI::ExistingFile);
  polygons->add_option("queries", qry_path, "query file")
      ->required()->check(CLI::ExistingFile);
  add_mode(polygons);
  polygons->add_option("--format", format, "plain or stats")
      ->check(CLI::IsMember({"plain", "stats"}))->capture_default_str();
  polygons->add_option("--threads", threads, "worker threads (0: one per core)");

  auto* gen = app.add_subcommand("gen", "write a generated instance");
  gen->add_option("--n", n, "number of triangles")->capture_default_str();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--profile", profile, "uniform, nested, clustered or duplicates")
      ->capture_default_str();
  gen->add_option("--out", out_prefix, "writes PREFIX.tri and PREFIX.qry")
      ->required();

  auto* validate = app.add_subcommand("validate", "compare both modes with brute force");
  validate->add_option("--n", n)->capture_default_str();
  validate->add_option("--seed", seed, "first seed")->capture_default_str();
  validate->add_option("--profile", profile)->capture_default_str();
  validate->add_option("--trials", trials, "seeds seed .. seed+trials-1")
      ->capture_default_str();
  validate->add_flag("--inject-fault", inject_fault,
                     "corrupt each index first (harness self test)");

  auto* bench = app.add_subcommand("bench", "tab-separated build and query counters");
  bench->add_option("--n", ns, "comma-separated sizes")->delimiter(',')
      ->capture_default_str();
  bench->add_option("--seed", seed)->capture_default_str();
  bench->add_option("--profile", profile)->capture_default_str();
  bench->add_option("--mode", bench_mode, "cascaded, binary or both")
      ->capture_default_str();
  bench->add_option("--queries", queries, "random queries per n")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve) return cmd_solve(tri_path, qry_path, mode, format, threads);
    if (*polygons) return cmd_polygons(poly_path, qry_path, mode, format, threads);
    if (*gen) return cmd_gen(n, seed, profile, out_prefix);
    if (*validate) return cmd_validate(n, seed, profile, trials, inject_fault);
    if (*bench) return cmd_bench(ns, seed, profile, bench_mode, queries);
  } catch (const ApiError& e) {
    std::cerr << "penclose: " << penclose_status_string(e.status) << ": "
              << e.message << '\n';
    return kExitInput;
  }
  return kExitInput;
}
