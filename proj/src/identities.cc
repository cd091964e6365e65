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

#include "gbm/identities.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "gbm/moments.h"

namespace gbm {

Rational RhoN(const Word& a, int n) {
  return FockMoment(a, [n](const ColoredPairPartition& p) { return TN(n, p); });
}

ExclusionReport ExclusionCheck(int n, int max_length, int num_indices,
                               int color) {
  if (n >= 0) throw std::invalid_argument("exclusion requires N < 0");
  ExclusionReport rep;
  const int letters = 2 * num_indices;
  for (int len = 1; len <= max_length; ++len) {
    long total = 1;
    for (int k = 0; k < len; ++k) total *= letters;
    for (long code = 0; code < total; ++code) {
      Word a(len);
      long c = code;
      for (int k = 0; k < len; ++k) {
        const int letter = static_cast<int>(c % letters);
        c /= letters;
        a[k] = Letter{color, letter / 2 + 1, letter % 2 == 1};
      }
      ++rep.words_checked;
      bool exceeds = false;
      for (const auto& [key, w] : WordProfile(a)) exceeds |= w > -n;
      if (!exceeds) continue;
      ++rep.words_exceeding;
      const Word adj = Adjoint(a);
      const Word aa = Concat({&adj, &a});
      if (RhoN(aa, n) != 0) {
        ++rep.failures;
        rep.failing.push_back(a);
      }
    }
  }
  return rep;
}

IdentityResult CommutationCheck(const Word& a, const Word& b_word, int b, int i,
                                int n) {
  if (std::abs(ProfileTotal(a, b)) < std::abs(ProfileTotal(a, 1 - b))) {
    throw std::invalid_argument("hypothesis |w_b| >= |w_-b| violated");
  }
  const Word bs = Adjoint(b_word);
  const Word middle = {An(b, i), Cr(b, i)};
  IdentityResult res;
  res.lhs = RhoN(Concat({&bs, &middle, &a}), n);
  const int w = WordProfile(a)[{b, i}];
  res.rhs = (1 + Frac(w, n)) * RhoN(Concat({&bs, &a}), n);
  res.equal = res.lhs == res.rhs;
  return res;
}

Word PaddedWord(const Word& a, const Word& b_word, int b, const Word& middle,
                int pad) {
  Word out = Adjoint(b_word);
  for (int k = 2 * pad; k >= pad + 1; --k) out.push_back(An(b, k));
  out.insert(out.end(), middle.begin(), middle.end());
  for (int k = pad + 1; k <= 2 * pad; ++k) out.push_back(Cr(b, k));
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

namespace {

void CheckPadding(const Word& a, const Word& b_word, int b, int i, int pad) {
  if (pad < 1) throw std::invalid_argument("padding must be positive");
  for (const Word* w : {&a, &b_word}) {
    for (const Letter& x : *w) {
      if (x.i > pad) throw std::invalid_argument("padding collides with word");
    }
  }
  if (i > pad) throw std::invalid_argument("padding collides with index i");
  if (pad + std::abs(ProfileTotal(a, b)) <= std::abs(ProfileTotal(a, 1 - b))) {
    throw std::invalid_argument("padding too small");
  }
}

}  // namespace

IdentityResult WlimIdentityCheck(const Word& a, const Word& b_word, int b,
                                 int i, int n, int pad) {
  CheckPadding(a, b_word, b, i, pad);
  IdentityResult res;
  res.lhs = RhoN(PaddedWord(a, b_word, b, {Cr(b, i), An(b, i)}, pad), n);
  const Word bs = Adjoint(b_word);
  const int w = WordProfile(a)[{b, i}];
  res.rhs = Frac(w, static_cast<long>(n) * n) * RhoN(Concat({&bs, &a}), n);
  res.equal = res.lhs == res.rhs;
  return res;
}

BoundResult WlimCreatorBound(const Word& a, const Word& b_word, int b, int i,
                             int n, int pad, int r) {
  CheckPadding(a, b_word, b, i, pad);
  const Word x = PaddedWord(a, b_word, b, {Cr(b, i), Cr(b, i)}, pad);
  BoundResult res;
  res.value = 0;
  ForEachCompatible(x, [&](const ColoredPairPartition& p) {
    res.value += TN(n, p);
    ++res.compatible;
  });
  res.bound = Rational(res.compatible) * Pow(Rational(std::abs(n)), 1 - r);
  res.within = abs(res.value) <= res.bound;
  return res;
}

}  // namespace gbm
