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

#include "penclose/rational.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <utility>

#include "penclose/error.hpp"

namespace penclose {
namespace {

using i128 = Int128;
using u128 = UInt128;

// Inline values keep |num| <= INT64_MAX so negation never overflows.
constexpr i128 kInlineMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    if (a <= std::numeric_limits<std::uint64_t>::max() &&
        b <= std::numeric_limits<std::uint64_t>::max()) {
      return std::gcd(static_cast<std::uint64_t>(a),
                      static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 magnitude(i128 v) { return v < 0 ? -static_cast<u128>(v) : v; }

mpz_class to_mpz(i128 v) {
  u128 mag = magnitude(v);
  std::uint64_t words[2] = {static_cast<std::uint64_t>(mag),
                            static_cast<std::uint64_t>(mag >> 64)};
  mpz_class out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (v < 0) out = -out;
  return out;
}

bool fits_inline(const mpz_class& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 63;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw Error(ErrorCode::kInvalidArgument, "rational with zero denominator");
  }
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  *this = make(n, d);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

Rational Rational::make(i128 num, i128 den) {
  u128 g = gcd_u128(magnitude(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational out;
  if (num >= -kInlineMax && num <= kInlineMax && den <= kInlineMax) {
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
  } else {
    // Already reduced, so no canonicalize() needed.
    out.big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
  }
  return out;
}

Rational Rational::from_mpq(mpq_class value) {
  value.canonicalize();
  Rational out;
  if (fits_inline(value.get_num()) && fits_inline(value.get_den())) {
    out.num_ = value.get_num().get_si();
    out.den_ = value.get_den().get_si();
  } else {
    out.big_ = std::make_unique<mpq_class>(std::move(value));
  }
  return out;
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num_text = body;
  std::string_view den_text = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
  }
  if (!all_digits(num_text) || !all_digits(den_text)) return std::nullopt;

  // 18 decimal digits always fit in int64.
  if (num_text.size() <= 18 && den_text.size() <= 18) {
    i128 n = 0;
    i128 d = 0;
    for (char c : num_text) n = n * 10 + (c - '0');
    for (char c : den_text) d = d * 10 + (c - '0');
    if (d == 0) return std::nullopt;
    return make(negative ? -n : n, d);
  }
  mpz_class n(std::string(num_text), 10);
  mpz_class d(std::string(den_text), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return from_mpq(mpq_class(n, d));
}

Rational Rational::parse(std::string_view text) {
  auto value = try_parse(text);
  if (!value) {
    throw Error(ErrorCode::kParse,
                "malformed rational '" + std::string(text) + "'");
  }
  return std::move(*value);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class out;
  mpz_set_si(mpq_numref(out.get_mpq_t()), num_);
  mpz_set_si(mpq_denref(out.get_mpq_t()), den_);
  return out;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational operator+(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    if (lhs.den_ == rhs.den_) {
      return Rational::make(static_cast<i128>(lhs.num_) + rhs.num_, lhs.den_);
    }
    return Rational::make(
        static_cast<i128>(lhs.num_) * rhs.den_ +
            static_cast<i128>(rhs.num_) * lhs.den_,
        static_cast<i128>(lhs.den_) * rhs.den_);
  }
  return Rational::from_mpq(lhs.to_mpq() + rhs.to_mpq());
}

Rational operator-(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    if (lhs.den_ == rhs.den_) {
      return Rational::make(static_cast<i128>(lhs.num_) - rhs.num_, lhs.den_);
    }
    return Rational::make(
        static_cast<i128>(lhs.num_) * rhs.den_ -
            static_cast<i128>(rhs.num_) * lhs.den_,
        static_cast<i128>(lhs.den_) * rhs.den_);
  }
  return Rational::from_mpq(lhs.to_mpq() - rhs.to_mpq());
}

Rational operator*(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    return Rational::make(static_cast<i128>(lhs.num_) * rhs.num_,
                          static_cast<i128>(lhs.den_) * rhs.den_);
  }
  return Rational::from_mpq(lhs.to_mpq() * rhs.to_mpq());
}

Rational operator/(const Rational& lhs, const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "rational division by zero");
  }
  if (!lhs.big_ && !rhs.big_) {
    i128 num = static_cast<i128>(lhs.num_) * rhs.den_;
    i128 den = static_cast<i128>(lhs.den_) * rhs.num_;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational::make(num, den);
  }
  return Rational::from_mpq(lhs.to_mpq() / rhs.to_mpq());
}

Rational& Rational::operator+=(const Rational& rhs) {
  return *this = *this + rhs;
}
Rational& Rational::operator-=(const Rational& rhs) {
  return *this = *this - rhs;
}
Rational& Rational::operator*=(const Rational& rhs) {
  return *this = *this * rhs;
}
Rational& Rational::operator/=(const Rational& rhs) {
  return *this = *this / rhs;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
    return static_cast<i128>(lhs.num_) * rhs.den_ <=>
           static_cast<i128>(rhs.num_) * lhs.den_;
  }
  int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c <=> 0;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
  // Canonical form makes representation equality value equality.
  if (!lhs.big_ && !rhs.big_) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  return false;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace penclose
