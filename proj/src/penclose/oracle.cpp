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

#include "penclose/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

namespace penclose {

std::vector<TriangleId> oracle_query(const std::vector<CanonicalTriangle>& tris,
                                     const Point& q) {
  std::vector<TriangleId> out;
  for (const auto& t : tris) {
    if (point_in_canonical(t, q)) out.push_back(t.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool point_in_triangle(const Point& v0, const Point& v1, const Point& v2,
                       const Point& q) {
  return orient(v0, v1, q).sign() >= 0 && orient(v1, v2, q).sign() >= 0 &&
         orient(v2, v0, q).sign() >= 0;
}

std::vector<TriangleId> oracle_query(const ReferenceTriangle& reference,
                                     const std::vector<Homothet>& tris,
                                     const Point& q) {
  std::vector<TriangleId> out;
  for (const auto& h : tris) {
    auto v = vertices_of(reference, h);
    if (point_in_triangle(v.v0, v.v1, v.v2, q)) out.push_back(h.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Profile> parse_profile(std::string_view name) {
  if (name == "uniform") return Profile::kUniform;
  if (name == "nested") return Profile::kNested;
  if (name == "clustered") return Profile::kClustered;
  if (name == "duplicates") return Profile::kDuplicates;
  return std::nullopt;
}

std::string_view profile_name(Profile profile) {
  switch (profile) {
    case Profile::kUniform:
      return "uniform";
    case Profile::kNested:
      return "nested";
    case Profile::kClustered:
      return "clustered";
    case Profile::kDuplicates:
      return "duplicates";
  }
  return "unknown";
}

namespace {

// mt19937_64 output is fixed by the standard; reducing it by hand (instead of
// std::uniform_int_distribution) keeps instances identical across libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform over multiples of 1/d in [lo, hi], d drawn from 1..max_den.
  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den = 4) {
    std::int64_t den = between(1, max_den);
    return Rational(between(lo * den, hi * den), den);
  }

 private:
  std::mt19937_64 gen_;
};

// Canonical-space extent shared by every profile: anchors in [0, side],
// scales around `typical`, so a random point meets O(1) triangles.
struct Extent {
  std::int64_t side;
  std::int64_t typical;
};

Extent extent_for(std::size_t n) {
  auto m = static_cast<std::int64_t>(std::max<std::size_t>(n, 4));
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
  std::int64_t side = 16 * m;
  return {side, std::max<std::int64_t>(2, side / std::max<std::int64_t>(root, 1))};
}

std::vector<CanonicalTriangle> gen_canonical(std::size_t n, Rng& rng,
                                             Profile profile) {
  Extent ext = extent_for(n);
  std::vector<CanonicalTriangle> out;
  out.reserve(n);
  auto next_id = [&out] { return static_cast<TriangleId>(out.size() + 1); };

  switch (profile) {
    case Profile::kUniform:
      while (out.size() < n) {
        out.push_back({next_id(), rng.rational(0, ext.side),
                       rng.rational(0, ext.side),
                       rng.rational(1, 2 * ext.typical)});
      }
      break;

    case Profile::kNested:
      // Chains of up to 16 triangles, each inside its predecessor.
      while (out.size() < n) {
        Rational a = rng.rational(0, ext.side);
        Rational b = rng.rational(0, ext.side);
        Rational s = rng.rational(ext.typical + 48, 3 * ext.typical + 48);
        for (int step = 0; step < 16 && out.size() < n; ++step) {
          out.push_back({next_id(), a, b, s});
          Rational da(rng.between(0, 4), 4);
          Rational db(rng.between(0, 4), 4);
          Rational ds(rng.between(0, 4), 4);
          a += da;
          b += db;
          s -= da + db + ds;
        }
      }
      break;

    case Profile::kClustered: {
      std::size_t clusters = std::max<std::size_t>(1, n / 32);
      std::int64_t spread = std::max<std::int64_t>(2, ext.typical / 4);
      std::vector<std::pair<std::int64_t, std::int64_t>> centers;
      for (std::size_t c = 0; c < clusters; ++c) {
        centers.emplace_back(rng.between(0, ext.side), rng.between(0, ext.side));
      }
      while (out.size() < n) {
        const auto& [cx, cy] = centers[rng.below(centers.size())];
        out.push_back({next_id(), Rational(cx) + rng.rational(-spread, spread, 2),
                       Rational(cy) + rng.rational(-spread, spread, 2),
                       rng.rational(1, 2 * ext.typical, 2)});
      }
      break;
    }

    case Profile::kDuplicates:
      while (out.size() < n) {
        bool copy = out.size() == 1 || (!out.empty() && rng.below(4) == 0);
        if (copy) {
          CanonicalTriangle t = out[rng.below(out.size())];
          t.id = next_id();
          out.push_back(std::move(t));
        } else {
          out.push_back({next_id(), rng.rational(0, ext.side),
                         rng.rational(0, ext.side),
                         rng.rational(1, 2 * ext.typical)});
        }
      }
      break;
  }
  return out;
}

void add_adversarial(const CanonicalTriangle& t, std::vector<Point>& out) {
  const Rational eps(1, 64);
  Rational half = t.s / 2;
  Rational mx = t.a + half;
  Rational my = t.b + half;
  // Vertices.
  out.push_back({t.a, t.b});
  out.push_back({t.a + t.s, t.b});
  out.push_back({t.a, t.b + t.s});
  // Edge midpoints.
  out.push_back({mx, t.b});
  out.push_back({t.a, my});
  out.push_back({mx, my});
  // Just outside each edge, the hypotenuse included.
  out.push_back({mx, t.b - eps});
  out.push_back({t.a - eps, my});
  out.push_back({mx + eps, my + eps});
  // Just inside each edge.
  out.push_back({mx, t.b + eps});
  out.push_back({t.a + eps, my});
  out.push_back({mx - eps, my - eps});
}

std::vector<Point> random_points(std::size_t n, std::size_t count, Rng& rng) {
  Extent ext = extent_for(n);
  std::int64_t hi = ext.side + 3 * ext.typical;
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rational x = rng.rational(-2, hi);
    Rational y = rng.rational(-2, hi);
    out.push_back({std::move(x), std::move(y)});
  }
  return out;
}

}  // namespace

Instance gen_instance(std::size_t n, std::uint64_t seed, Profile profile,
                      const ReferenceTriangle& reference) {
  Rng rng(seed);
  auto canonical = gen_canonical(n, rng, profile);

  std::vector<Point> queries;
  if (n > 0) queries = random_points(n, n + 16, rng);
  for (const auto& t : canonical) add_adversarial(t, queries);

  AffineMap from_canonical = canonicalizing_map(reference).inverse();
  bool identity = from_canonical.is_identity();
  Instance instance{reference, {}, {}, seed};
  instance.triangles.reserve(canonical.size());
  for (auto& t : canonical) {
    Point anchor{std::move(t.a), std::move(t.b)};
    if (!identity) anchor = from_canonical.apply(anchor);
    instance.triangles.push_back({t.id, std::move(anchor), std::move(t.s)});
  }
  instance.queries.reserve(queries.size());
  for (auto& q : queries) {
    instance.queries.push_back(identity ? std::move(q) : from_canonical.apply(q));
  }
  return instance;
}

std::vector<Point> gen_random_queries(const ReferenceTriangle& reference,
                                      std::size_t n, std::size_t count,
                                      std::uint64_t seed) {
  Rng rng(seed);
  auto points = random_points(n, count, rng);
  AffineMap from_canonical = canonicalizing_map(reference).inverse();
  if (!from_canonical.is_identity()) {
    for (auto& p : points) p = from_canonical.apply(p);
  }
  return points;
}

}  // namespace penclose
