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

#ifndef PENCLOSE_GEOMETRY_HPP_
#define PENCLOSE_GEOMETRY_HPP_

#include <cstdint>
#include <iosfwd>

#include "penclose/rational.hpp"

namespace penclose {

using TriangleId = std::int64_t;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

Point operator+(const Point& p, const Point& q);
Point operator-(const Point& p, const Point& q);
Point operator*(const Rational& k, const Point& p);

/// Twice the signed area of (p, q, r); positive when counterclockwise.
Rational orient(const Point& p, const Point& q, const Point& r);

/// Closed axis-parallel right-isosceles triangle
/// { (x, y) : x >= a, y >= b, (x - a) + (y - b) <= s } with s > 0.
/// Vertices are (a, b), (a + s, b) and (a, b + s).
struct CanonicalTriangle {
  TriangleId id = 0;
  Rational a;
  Rational b;
  Rational s;

  Rational x_lo() const { return a; }
  Rational x_hi() const { return a + s; }
  Rational y_lo() const { return b; }
  Rational y_hi() const { return b + s; }
};

/// Closed containment; boundary points count as inside.
bool point_in_canonical(const CanonicalTriangle& t, const Point& q);

/// Invertible affine map p -> M p + t. The inverse is computed once at
/// construction and carried along.
class AffineMap {
 public:
  /// Identity.
  AffineMap();

  /// Throws Error(kDegenerate) if the matrix is singular.
  AffineMap(Rational m00, Rational m01, Rational m10, Rational m11,
            Rational tx, Rational ty);

  Point apply(const Point& p) const;
  AffineMap inverse() const;
  /// (*this) after `inner`: p -> this(inner(p)).
  AffineMap compose(const AffineMap& inner) const;
  bool is_identity() const;

  const Rational& m00() const { return m00_; }
  const Rational& m01() const { return m01_; }
  const Rational& m10() const { return m10_; }
  const Rational& m11() const { return m11_; }
  const Rational& tx() const { return tx_; }
  const Rational& ty() const { return ty_; }

  friend bool operator==(const AffineMap& lhs, const AffineMap& rhs);

 private:
  struct Raw {};
  AffineMap(Raw, Rational m00, Rational m01, Rational m10, Rational m11,
            Rational tx, Rational ty);

  Rational m00_, m01_, m10_, m11_, tx_, ty_;
};

/// Reference shape of a homothetic family, vertices counterclockwise.
class ReferenceTriangle {
 public:
  /// Throws Error(kDegenerate) unless the signed area is positive.
  ReferenceTriangle(Point v0, Point v1, Point v2);

  /// The axis-parallel right-isosceles unit triangle (0,0), (1,0), (0,1).
  static ReferenceTriangle unit();

  const Point& v0() const { return v0_; }
  const Point& v1() const { return v1_; }
  const Point& v2() const { return v2_; }
  const Point& vertex(int i) const;

 private:
  Point v0_, v1_, v2_;
};

/// Positive homothet of a reference triangle: vertex i sits at
/// anchor + scale * (ref.v_i - ref.v0).
struct Homothet {
  TriangleId id = 0;
  Point anchor;
  Rational scale;
};

struct HomothetVertices {
  Point v0, v1, v2;
};

HomothetVertices vertices_of(const ReferenceTriangle& ref, const Homothet& h);

/// Map sending ref.v0, ref.v1, ref.v2 to (0,0), (1,0), (0,1).
AffineMap canonicalizing_map(const ReferenceTriangle& ref);

inline Point apply_map(const AffineMap& m, const Point& p) {
  return m.apply(p);
}

struct AnchorScale {
  Point anchor;
  Rational scale;
};

/// Recovers anchor and scale of a vertex triple against `ref`, matching
/// vertices in the given order. Throws Error(kNotHomothetic) when the edge
/// vectors are not one common multiple of the reference edges, and
/// Error(kNonPositiveScale) when that multiple is <= 0.
AnchorScale validate_homothet(const ReferenceTriangle& ref, const Point& v0,
                              const Point& v1, const Point& v2);

/// Image of a homothet under the canonicalizing map of its reference.
CanonicalTriangle canonicalize(const AffineMap& to_canonical,
                               const Homothet& h);

}  // namespace penclose

#endif  // PENCLOSE_GEOMETRY_HPP_
