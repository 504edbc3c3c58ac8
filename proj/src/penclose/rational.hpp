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

#ifndef PENCLOSE_RATIONAL_HPP_
#define PENCLOSE_RATIONAL_HPP_

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace penclose {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

/// Exact signed rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are held
/// inline and operated on with 128-bit intermediates; anything larger is
/// promoted to a GMP rational and demoted again as soon as it fits. The
/// representation is always canonical: denominator > 0, gcd(|num|, den) = 1,
/// and a value is big only if it does not fit the inline form.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
  {
    *this = make(static_cast<Int128>(value), 1);
  }

  /// Throws Error(kInvalidArgument) when `den` is zero.
  Rational(std::int64_t num, std::int64_t den);

  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  /// Parses `p`, `-p`, `p/q` or `-p/q` with decimal digits of any length.
  /// `q` must be positive. Non-reduced input such as `2/4` is accepted.
  static std::optional<Rational> try_parse(std::string_view text);

  /// As try_parse, but throws Error(kParse) naming the offending text.
  static Rational parse(std::string_view text);

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  bool is_inline() const { return big_ == nullptr; }

  mpq_class to_mpq() const;

  /// `p` for integers, `p/q` otherwise, always reduced.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws Error(kInvalidArgument) on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& lhs, const Rational& rhs);
  friend Rational operator-(const Rational& lhs, const Rational& rhs);
  friend Rational operator*(const Rational& lhs, const Rational& rhs);
  friend Rational operator/(const Rational& lhs, const Rational& rhs);

  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs);
  friend bool operator==(const Rational& lhs, const Rational& rhs);

 private:
  // Requires den > 0.
  static Rational make(Int128 num, Int128 den);

  static Rational from_mpq(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace penclose

#endif  // PENCLOSE_RATIONAL_HPP_
