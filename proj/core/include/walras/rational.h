// Copyright 2026 The Walras Authors
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

#ifndef WALRAS_RATIONAL_H_
#define WALRAS_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace walras {

// Exact arbitrary-precision fraction, always in lowest terms with a positive
// denominator. Backed by GMP's mpq.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT
  // Throws InputError when den == 0.
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Accepts "p", "-p", "p/q" with decimal integers. Rejects decimals,
  // exponents, whitespace and zero denominators with InputError.
  static Rational Parse(std::string_view text);

  // "p/q", or "p" when the denominator is 1.
  std::string ToString() const;
  // Fixed-point decimal rendering for display only.
  std::string ToDecimal(int digits = 6) const;
  double ToDouble() const { return q_.get_d(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }
  const mpq_class& mpq() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  // Throws PreconditionError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.q_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.ToString();
  }

 private:
  mpq_class q_;
};

inline const Rational& Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}
inline const Rational& Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

}  // namespace walras

#endif  // WALRAS_RATIONAL_H_
