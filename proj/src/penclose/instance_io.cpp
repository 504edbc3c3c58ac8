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

#include "penclose/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <unordered_set>
#include <utility>

#include "penclose/error.hpp"

namespace penclose {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

// Iterates the non-empty lines of a stream with their 1-based numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<Token>& tokens) {
    while (std::getline(in_, line_)) {
      ++number_;
      tokens = tokenize(line_);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t number_ = 0;
};

Rational rational_at(const Token& t, std::size_t line) {
  auto value = Rational::try_parse(t.text);
  if (!value) {
    throw ParseError(line, t.column,
                     "malformed rational '" + std::string(t.text) + "'");
  }
  return std::move(*value);
}

Point point_at(const std::vector<Token>& tokens, std::size_t first,
               std::size_t line) {
  return {rational_at(tokens[first], line), rational_at(tokens[first + 1], line)};
}

std::int64_t id_at(const Token& t, std::size_t line) {
  std::int64_t id = 0;
  auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), id);
  if (ec != std::errc() || end != t.text.data() + t.text.size()) {
    throw ParseError(line, t.column,
                     "malformed id '" + std::string(t.text) + "'");
  }
  return id;
}

// Re-raises a geometry error with the line and the offending id attached.
[[noreturn]] void rethrow_for(const Error& e, std::size_t line,
                              std::string_view what, std::int64_t id) {
  throw Error(e.code(), "line " + std::to_string(line) + ": " +
                            std::string(what) + " " + std::to_string(id) +
                            ": " + e.what());
}

void check_unique(std::unordered_set<std::int64_t>& seen, std::int64_t id,
                  std::size_t line, std::string_view what) {
  if (!seen.insert(id).second) {
    throw Error(ErrorCode::kDuplicateId, "line " + std::to_string(line) +
                                             ": duplicate " + std::string(what) +
                                             " id " + std::to_string(id));
  }
}

void check_scale(const Rational& scale, std::size_t line, std::string_view what,
                 std::int64_t id) {
  if (scale.sign() <= 0) {
    throw Error(ErrorCode::kNonPositiveScale,
                "line " + std::to_string(line) + ": " + std::string(what) +
                    " " + std::to_string(id) + ": scale " + scale.to_string() +
                    " must be positive");
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return in;
}

}  // namespace

TriangleFile parse_triangle_file(std::istream& in) {
  LineReader reader(in);
  std::vector<Token> tokens;
  if (!reader.next(tokens)) {
    throw ParseError(reader.number() + 1, 0, "missing 'ref' header line");
  }
  std::size_t line = reader.number();
  if (tokens[0].text != "ref" || tokens.size() != 7) {
    throw ParseError(line, tokens[0].column,
                     "expected header 'ref x0 y0 x1 y1 x2 y2'");
  }
  std::optional<ReferenceTriangle> reference;
  {
    Point v0 = point_at(tokens, 1, line);
    Point v1 = point_at(tokens, 3, line);
    Point v2 = point_at(tokens, 5, line);
    try {
      reference.emplace(std::move(v0), std::move(v1), std::move(v2));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line) + ": " + e.what());
    }
  }

  TriangleFile file{*reference, {}};
  std::unordered_set<std::int64_t> seen;
  while (reader.next(tokens)) {
    line = reader.number();
    if (tokens.size() != 4 && tokens.size() != 7) {
      throw ParseError(line, tokens[0].column,
                       "expected 'id ax ay scale' or 'id v0x v0y v1x v1y v2x "
                       "v2y', got " + std::to_string(tokens.size()) + " fields");
    }
    std::int64_t id = id_at(tokens[0], line);
    check_unique(seen, id, line, "triangle");
    if (tokens.size() == 4) {
      Point anchor = point_at(tokens, 1, line);
      Rational scale = rational_at(tokens[3], line);
      check_scale(scale, line, "triangle", id);
      file.triangles.push_back({id, std::move(anchor), std::move(scale)});
    } else {
      Point v0 = point_at(tokens, 1, line);
      Point v1 = point_at(tokens, 3, line);
      Point v2 = point_at(tokens, 5, line);
      try {
        auto fit = validate_homothet(*reference, v0, v1, v2);
        file.triangles.push_back({id, std::move(fit.anchor), std::move(fit.scale)});
      } catch (const Error& e) {
        rethrow_for(e, line, "triangle", id);
      }
    }
  }
  return file;
}

PolygonFile parse_polygon_file(std::istream& in) {
  LineReader reader(in);
  std::vector<Token> tokens;
  if (!reader.next(tokens)) {
    throw ParseError(reader.number() + 1, 0, "missing 'poly' header line");
  }
  std::size_t line = reader.number();
  if (tokens[0].text != "poly" || tokens.size() < 7 || tokens.size() % 2 != 1) {
    throw ParseError(line, tokens[0].column,
                     "expected header 'poly x0 y0 x1 y1 ... xk yk' with at "
                     "least three vertices");
  }
  std::vector<Point> ref_vertices;
  for (std::size_t i = 1; i < tokens.size(); i += 2) {
    ref_vertices.push_back(point_at(tokens, i, line));
  }
  std::optional<ReferencePolygon> reference;
  try {
    reference.emplace(std::move(ref_vertices));
  } catch (const Error& e) {
    throw Error(e.code(), "line " + std::to_string(line) + ": " + e.what());
  }
  const auto& ref = reference->vertices();
  const std::size_t vertex_fields = 1 + 2 * ref.size();

  PolygonFile file{*reference, {}};
  std::unordered_set<std::int64_t> seen;
  while (reader.next(tokens)) {
    line = reader.number();
    if (tokens.size() != 4 && tokens.size() != vertex_fields) {
      throw ParseError(line, tokens[0].column,
                       "expected 'id ax ay scale' or 'id' followed by " +
                           std::to_string(ref.size()) + " vertices");
    }
    std::int64_t id = id_at(tokens[0], line);
    check_unique(seen, id, line, "polygon");
    if (tokens.size() == 4) {
      Point anchor = point_at(tokens, 1, line);
      Rational scale = rational_at(tokens[3], line);
      check_scale(scale, line, "polygon", id);
      file.instances.push_back({id, std::move(anchor), std::move(scale)});
      continue;
    }
    std::vector<Point> given;
    for (std::size_t i = 1; i < tokens.size(); i += 2) {
      given.push_back(point_at(tokens, i, line));
    }
    // The first edge fixes the scale; every vertex must then agree.
    Point d = given[1] - given[0];
    Point e = ref[1] - ref[0];
    Rational scale = !e.x.is_zero() ? d.x / e.x : d.y / e.y;
    PolygonInstance inst{id, given[0], scale};
    auto expected = instance_vertices(*reference, inst);
    if (expected != given) {
      throw Error(ErrorCode::kNotHomothetic,
                  "line " + std::to_string(line) + ": polygon " +
                      std::to_string(id) +
                      ": not a homothet of the reference polygon");
    }
    check_scale(scale, line, "polygon", id);
    file.instances.push_back(std::move(inst));
  }
  return file;
}

std::vector<Point> parse_query_file(std::istream& in) {
  LineReader reader(in);
  std::vector<Token> tokens;
  std::vector<Point> out;
  while (reader.next(tokens)) {
    if (tokens.size() != 2) {
      throw ParseError(reader.number(), tokens[0].column,
                       "expected 'qx qy', got " + std::to_string(tokens.size()) +
                           " fields");
    }
    out.push_back(point_at(tokens, 0, reader.number()));
  }
  return out;
}

TriangleFile load_triangle_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_triangle_file(in);
}

PolygonFile load_polygon_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_polygon_file(in);
}

std::vector<Point> load_query_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_query_file(in);
}

void write_triangle_file(std::ostream& out, const ReferenceTriangle& reference,
                         const std::vector<Homothet>& triangles) {
  out << "ref";
  for (int i = 0; i < 3; ++i) {
    out << ' ' << reference.vertex(i).x << ' ' << reference.vertex(i).y;
  }
  out << '\n';
  for (const auto& t : triangles) {
    out << t.id << ' ' << t.anchor.x << ' ' << t.anchor.y << ' ' << t.scale
        << '\n';
  }
}

void write_polygon_file(std::ostream& out, const ReferencePolygon& reference,
                        const std::vector<PolygonInstance>& instances) {
  out << "poly";
  for (const auto& v : reference.vertices()) out << ' ' << v.x << ' ' << v.y;
  out << '\n';
  for (const auto& p : instances) {
    out << p.id << ' ' << p.anchor.x << ' ' << p.anchor.y << ' ' << p.scale
        << '\n';
  }
}

void write_query_file(std::ostream& out, const std::vector<Point>& queries) {
  for (const auto& q : queries) out << q.x << ' ' << q.y << '\n';
}

std::string format_answer(const Point& q, const std::vector<std::int64_t>& ids) {
  std::string line = q.x.to_string() + " " + q.y.to_string() + " :";
  if (ids.empty()) return line + " -";
  for (auto id : ids) {
    line += ' ';
    line += std::to_string(id);
  }
  return line;
}

}  // namespace penclose
