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

#include "penclose/geometry.hpp"

#include <optional>
#include <ostream>
#include <utility>

#include "penclose/error.hpp"

namespace penclose {

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
Point operator*(const Rational& k, const Point& p) { return {k * p.x, k * p.y}; }

Rational orient(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

bool point_in_canonical(const CanonicalTriangle& t, const Point& q) {
  if (q.x < t.a || q.y < t.b) return false;
  return (q.x - t.a) + (q.y - t.b) <= t.s;
}

// ---------------------------------------------------------------------------
// AffineMap

AffineMap::AffineMap() : AffineMap(Raw{}, 1, 0, 0, 1, 0, 0) {}

AffineMap::AffineMap(Rational m00, Rational m01, Rational m10, Rational m11,
                     Rational tx, Rational ty)
    : AffineMap(Raw{}, std::move(m00), std::move(m01), std::move(m10),
                std::move(m11), std::move(tx), std::move(ty)) {
  if ((m00_ * m11_ - m01_ * m10_).is_zero()) {
    throw Error(ErrorCode::kDegenerate, "affine map with singular matrix");
  }
}

AffineMap::AffineMap(Raw, Rational m00, Rational m01, Rational m10,
                     Rational m11, Rational tx, Rational ty)
    : m00_(std::move(m00)),
      m01_(std::move(m01)),
      m10_(std::move(m10)),
      m11_(std::move(m11)),
      tx_(std::move(tx)),
      ty_(std::move(ty)) {}

Point AffineMap::apply(const Point& p) const {
  return {m00_ * p.x + m01_ * p.y + tx_, m10_ * p.x + m11_ * p.y + ty_};
}

AffineMap AffineMap::inverse() const {
  Rational det = m00_ * m11_ - m01_ * m10_;
  Rational i00 = m11_ / det;
  Rational i01 = -m01_ / det;
  Rational i10 = -m10_ / det;
  Rational i11 = m00_ / det;
  Rational itx = -(i00 * tx_ + i01 * ty_);
  Rational ity = -(i10 * tx_ + i11 * ty_);
  return AffineMap(Raw{}, std::move(i00), std::move(i01), std::move(i10),
                   std::move(i11), std::move(itx), std::move(ity));
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  return AffineMap(Raw{}, m00_ * inner.m00_ + m01_ * inner.m10_,
                   m00_ * inner.m01_ + m01_ * inner.m11_,
                   m10_ * inner.m00_ + m11_ * inner.m10_,
                   m10_ * inner.m01_ + m11_ * inner.m11_,
                   m00_ * inner.tx_ + m01_ * inner.ty_ + tx_,
                   m10_ * inner.tx_ + m11_ * inner.ty_ + ty_);
}

bool AffineMap::is_identity() const { return *this == AffineMap(); }

bool operator==(const AffineMap& lhs, const AffineMap& rhs) {
  return lhs.m00_ == rhs.m00_ && lhs.m01_ == rhs.m01_ &&
         lhs.m10_ == rhs.m10_ && lhs.m11_ == rhs.m11_ && lhs.tx_ == rhs.tx_ &&
         lhs.ty_ == rhs.ty_;
}

// ---------------------------------------------------------------------------
// Reference triangles and homothets

ReferenceTriangle::ReferenceTriangle(Point v0, Point v1, Point v2)
    : v0_(std::move(v0)), v1_(std::move(v1)), v2_(std::move(v2)) {
  if (orient(v0_, v1_, v2_).sign() <= 0) {
    throw Error(ErrorCode::kDegenerate,
                "reference triangle must have positive signed area "
                "(non-degenerate, counterclockwise)");
  }
}

ReferenceTriangle ReferenceTriangle::unit() {
  return ReferenceTriangle({0, 0}, {1, 0}, {0, 1});
}

const Point& ReferenceTriangle::vertex(int i) const {
  switch (i) {
    case 0:
      return v0_;
    case 1:
      return v1_;
    case 2:
      return v2_;
  }
  throw Error(ErrorCode::kInvalidArgument, "triangle vertex index out of range");
}

HomothetVertices vertices_of(const ReferenceTriangle& ref, const Homothet& h) {
  return {h.anchor, h.anchor + h.scale * (ref.v1() - ref.v0()),
          h.anchor + h.scale * (ref.v2() - ref.v0())};
}

AffineMap canonicalizing_map(const ReferenceTriangle& ref) {
  // Columns of E are the reference edge vectors; the map is E^-1 (p - v0).
  Point e1 = ref.v1() - ref.v0();
  Point e2 = ref.v2() - ref.v0();
  AffineMap to_reference(e1.x, e2.x, e1.y, e2.y, ref.v0().x, ref.v0().y);
  return to_reference.inverse();
}

namespace {

// The k with d = k * e, if one exists. `e` must be nonzero.
std::optional<Rational> edge_multiple(const Point& d, const Point& e) {
  Rational k = !e.x.is_zero() ? d.x / e.x : d.y / e.y;
  if (k * e.x != d.x || k * e.y != d.y) return std::nullopt;
  return k;
}

}  // namespace

AnchorScale validate_homothet(const ReferenceTriangle& ref, const Point& v0,
                              const Point& v1, const Point& v2) {
  auto k1 = edge_multiple(v1 - v0, ref.v1() - ref.v0());
  auto k2 = edge_multiple(v2 - v0, ref.v2() - ref.v0());
  if (!k1 || !k2 || *k1 != *k2) {
    throw Error(ErrorCode::kNotHomothetic,
                "triangle is not a homothet of the reference");
  }
  if (k1->sign() <= 0) {
    throw Error(ErrorCode::kNonPositiveScale,
                "triangle is a homothet of the reference with scale " +
                    k1->to_string() + " (must be positive)");
  }
  return {v0, std::move(*k1)};
}

CanonicalTriangle canonicalize(const AffineMap& to_canonical,
                               const Homothet& h) {
  Point anchor = to_canonical.apply(h.anchor);
  return {h.id, std::move(anchor.x), std::move(anchor.y), h.scale};
}

}  // namespace penclose
