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

#ifndef GBM_RATIONAL_H_
#define GBM_RATIONAL_H_

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gbm {

using Rational = mpq_class;

// Raised when an input exceeds a documented compute budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for inputs outside the supported mathematical domain.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// num/den in canonical form; den may be negative but not zero.
Rational Frac(long num, long den);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string ToString(const Rational& q);

// Parses "p", "p/q" or a decimal literal such as "-0.25".
Rational ParseRational(const std::string& text);

// Integer power with negative exponents allowed for nonzero bases.
Rational Pow(const Rational& base, long exponent);

}  // namespace gbm

#endif  // GBM_RATIONAL_H_
