// Copyright 2026 The gbm Authors.
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

#include "gbm/rational.h"

#include <cctype>

namespace gbm {

std::string ToString(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational ParseRational(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    const bool negative = s[0] == '-';
    const std::string whole = s.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
    const std::string frac = s.substr(dot + 1);
    for (char ch : whole + frac) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw std::invalid_argument("bad decimal literal: " + text);
      }
    }
    mpz_class num(whole.empty() ? "0" : whole);
    mpz_class den = 1;
    for (char ch : frac) {
      num = num * 10 + (ch - '0');
      den *= 10;
    }
    Rational r(num, den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
  r.canonicalize();
  return r;
}

Rational Frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational Pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return Pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace gbm
