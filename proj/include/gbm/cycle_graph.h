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

#ifndef GBM_CYCLE_GRAPH_H_
#define GBM_CYCLE_GRAPH_H_

#include <map>
#include <utility>
#include <vector>

#include "gbm/pair_partition.h"

// Two-colored cycle graphs. Color 0 stands for the orientation-reversing
// color -1 and color 1 for the color +1.

namespace gbm {

struct ColorProfile {
  // p[b][u] for u in [0, 2m+1].
  std::vector<int> p[2];
  // r[k] = p[c(k)][k] for k in [1, 2m]; r[0] is unused.
  std::vector<int> r;
};

enum class PointClass { kD, kS };

using Arc = std::pair<int, int>;

struct CycleGraphAnalysis {
  ColorProfile profile;
  std::vector<PointClass> classification;  // index k-1
  std::vector<int> z;                      // index k-1
  PairPartition bar_pairs;
  std::vector<int> bar_colors;  // aligned with bar_pairs.pairs()
  std::vector<Arc> arcs_f;
  std::vector<Arc> arcs_bar_f;
  // Each cycle starts at its smallest vertex and follows the arcs.
  std::vector<std::vector<int>> cycles;
  std::vector<int> inc_paths;  // per cycle
  std::vector<int> dec_paths;  // per cycle
  // Maximal increasing path count -> number of cycles.
  std::map<int, int> gamma;

  int TotalIncreasingPaths() const;
  int NumCycles() const { return static_cast<int>(cycles.size()); }
};

// Throws UnsupportedError unless num_colors == 2.
ColorProfile Profile(const ColoredPairPartition& p);
std::vector<PointClass> Classify(const ColoredPairPartition& p);
std::vector<int> ZMap(const ColoredPairPartition& p);
std::pair<PairPartition, std::vector<int>> BarPartition(
    const ColoredPairPartition& p);
CycleGraphAnalysis BuildGraph(const ColoredPairPartition& p);

// Maximal increasing paths of a cycle given as a vertex sequence.
int CountIncreasingRuns(const std::vector<int>& cycle);
int CountDecreasingRuns(const std::vector<int>& cycle);

}  // namespace gbm

#endif  // GBM_CYCLE_GRAPH_H_
