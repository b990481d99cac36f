// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRDUAL_RATIONAL_HPP_
#define FAIRDUAL_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "fairdual/errors.hpp"

namespace fairdual {

// Exact rational number, always in lowest terms with a positive denominator.
// All fairness decisions in this library are made on Rationals; doubles only
// appear when formatting for humans.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit
  Rational(long numerator, long denominator) {
    if (denominator == 0) throw InputError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  // Accepts "7", "-3", "p/q", and decimal strings such as "0.01", "-2.5" or
  // "1e-6". Decimal strings convert exactly.
  static Rational Parse(std::string_view text);
  static std::optional<Rational> TryParse(std::string_view text) {
    try {
      return Parse(text);
    } catch (const InputError&) {
      return std::nullopt;
    }
  }

  // "p" when integral, otherwise "p/q". Parse(ToString()) round-trips.
  std::string ToString() const { return value_.get_str(); }
  double ToDouble() const { return value_.get_d(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

inline Rational Abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

namespace internal {

inline bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Exponents beyond this are rejected rather than expanded.
inline constexpr long kMaxDecimalExponent = 4096;

}  // namespace internal

inline Rational Rational::Parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&original]() -> InputError {
    return InputError("malformed rational '" + original + "'");
  };
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw fail();

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!internal::AllDigits(num) || !internal::AllDigits(den)) throw fail();
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InputError("rational with zero denominator: " + original);
    mpq_class q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!internal::AllDigits(exp_text) || exp_text.size() > 6) throw fail();
    exponent = std::stol(std::string(exp_text));
    if (exponent > internal::kMaxDecimalExponent) throw fail();
    if (exp_negative) exponent = -exponent;
  }

  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    if (!whole.empty() && !internal::AllDigits(whole)) throw fail();
    if (!frac.empty() && !internal::AllDigits(frac)) throw fail();
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!internal::AllDigits(text)) throw fail();
    digits = std::string(text);
  }

  mpz_class num(digits, 10);
  mpz_class den = 1;
  mpz_class ten = 10;
  if (exponent > 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(),
               static_cast<unsigned long>(exponent));
    num *= scale;
  } else if (exponent < 0) {
    mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(),
               static_cast<unsigned long>(-exponent));
  }
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

}  // namespace fairdual

#endif  // FAIRDUAL_RATIONAL_HPP_
