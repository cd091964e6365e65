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

#ifndef GBM_IDENTITIES_H_
#define GBM_IDENTITIES_H_

#include <vector>

#include "gbm/rational.h"
#include "gbm/word.h"

namespace gbm {

// rho_N(A) as the sum of t_N over compatible partitions. Any nonzero N.
Rational RhoN(const Word& a, int n);

struct ExclusionReport {
  long words_checked = 0;
  long words_exceeding = 0;  // profile entry above |N|
  long failures = 0;         // rho_N(A* A) != 0 among the exceeding words
  std::vector<Word> failing;
};

// All one-color words of length 1..max_length over indices 1..num_indices;
// checks rho_N(A* A) = 0 whenever some profile entry exceeds |N|.
ExclusionReport ExclusionCheck(int n, int max_length, int num_indices,
                               int color = 1);

struct IdentityResult {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

// rho_N(B* a a* A) against (1 + w^A_b(i)/N) rho_N(B* A). Throws
// std::invalid_argument unless |w^A_b| >= |w^A_{-b}|.
IdentityResult CommutationCheck(const Word& a, const Word& b_word, int b, int i,
                                int n);

// The padded word B* a_{2n}..a_{n+1} <middle> a*_{n+1}..a*_{2n} A.
Word PaddedWord(const Word& a, const Word& b_word, int b, const Word& middle,
                int pad);

// Exact identity for the a* a middle: lhs against w^A_b(i)/N^2 rho_N(B* A).
// Throws std::invalid_argument if the padding collides with indices of A or
// B or pad + |w^A_b| <= |w^A_{-b}|.
IdentityResult WlimIdentityCheck(const Word& a, const Word& b_word, int b,
                                 int i, int n, int pad);

struct BoundResult {
  Rational value;
  Rational bound;
  long compatible = 0;
  bool within = false;
};

// a* a* middle: |value| <= C |N|^{1-r} with C the compatible count.
BoundResult WlimCreatorBound(const Word& a, const Word& b_word, int b, int i,
                             int n, int pad, int r);

}  // namespace gbm

#endif  // GBM_IDENTITIES_H_
