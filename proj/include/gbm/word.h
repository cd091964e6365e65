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

#ifndef GBM_WORD_H_
#define GBM_WORD_H_

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gbm/pair_partition.h"
#include "gbm/rational.h"

namespace gbm {

struct Letter {
  int b = 0;  // color, 0 or 1
  int i = 1;  // basis index, >= 1
  bool create = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Letter Cr(int b, int i) { return {b, i, true}; }
inline Letter An(int b, int i) { return {b, i, false}; }

// Net creators minus annihilators per (color, index); zero entries kept.
std::map<std::pair<int, int>, int> WordProfile(const Word& a);

// Sum over indices of the profile of one color.
int ProfileTotal(const Word& a, int b);

// Reverses the word and swaps creators with annihilators.
Word Adjoint(const Word& a);

Word Concat(std::initializer_list<const Word*> parts);

// Annihilator at left points, creator at right points, basis index equal to
// the 1-based pair ordinal.
Word CanonicalWord(const ColoredPairPartition& p);

// All two-colored partitions whose pairs join an annihilator to a later
// creator of the same color and index.
std::vector<ColoredPairPartition> CompatiblePartitions(const Word& a);

// Visits the compatible partitions without materializing them.
void ForEachCompatible(const Word& a,
                       const std::function<void(const ColoredPairPartition&)>& f);

std::string ToString(const Word& a);

}  // namespace gbm

#endif  // GBM_WORD_H_
