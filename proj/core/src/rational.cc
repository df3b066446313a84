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

#include "walras/rational.h"

#include <cctype>
#include <sstream>

#include "walras/errors.h"

namespace walras {
namespace {

bool IsDecimalInteger(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)),
                 mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsDecimalInteger(num) || !IsDecimalInteger(den) ||
      (den.front() == '-' || den.front() == '+')) {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  mpz_class n(strip_plus(num), 10);
  mpz_class d(strip_plus(den), 10);
  if (d == 0) {
    throw InputError("rational with zero denominator \"" + std::string(text) +
                     "\"");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::ToString() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::ToDecimal(int digits) const {
  // Round half away from zero at the requested digit.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class scaled = abs(q_) * scale;
  mpz_class whole = scaled.get_num() / scaled.get_den();
  mpq_class frac = scaled - mpq_class(whole);
  if (frac * 2 >= 1) whole += 1;
  std::string body = whole.get_str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, static_cast<std::size_t>(digits + 1 - body.size()), '0');
  }
  std::string out;
  if (sign() < 0 && whole != 0) out.push_back('-');
  out += body.substr(0, body.size() - digits);
  if (digits > 0) {
    out.push_back('.');
    out += body.substr(body.size() - digits);
  }
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace walras
