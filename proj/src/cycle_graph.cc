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

#include "gbm/cycle_graph.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "gbm/rational.h"

namespace gbm {
namespace {

void RequireTwoColors(const ColoredPairPartition& p) {
  if (p.num_colors != 2) {
    throw UnsupportedError("cycle graphs are defined for exactly two colors");
  }
}

Arc Orient(int u, int v, int color) {
  return color == 0 ? Arc(v, u) : Arc(u, v);
}

}  // namespace

int CycleGraphAnalysis::TotalIncreasingPaths() const {
  int total = 0;
  for (int n : inc_paths) total += n;
  return total;
}

ColorProfile Profile(const ColoredPairPartition& p) {
  RequireTwoColors(p);
  const int n = p.base.size();
  ColorProfile out;
  for (int b = 0; b < 2; ++b) out.p[b].assign(n + 2, 0);
  for (int i = 0; i < p.m(); ++i) {
    const auto [l, r] = p.base.pairs()[i];
    for (int u = l; u <= r; ++u) ++out.p[p.colors[i]][u];
  }
  out.r.assign(n + 1, 0);
  for (int k = 1; k <= n; ++k) out.r[k] = out.p[p.ColorOfPoint(k)][k];
  return out;
}

std::vector<PointClass> Classify(const ColoredPairPartition& p) {
  const ColorProfile prof = Profile(p);
  std::vector<PointClass> out(p.base.size());
  for (int k = 1; k <= p.base.size(); ++k) {
    const int other = 1 - p.ColorOfPoint(k);
    out[k - 1] = prof.r[k] > prof.p[other][k] ? PointClass::kD : PointClass::kS;
  }
  return out;
}

std::vector<int> ZMap(const ColoredPairPartition& p) {
  const ColorProfile prof = Profile(p);
  const std::vector<PointClass> cls = Classify(p);
  const int n = p.base.size();
  std::vector<int> z(n, 0);
  for (int k = 1; k <= n; ++k) {
    const bool left = p.base.IsLeft(k);
    const bool dom = cls[k - 1] == PointClass::kD;
    // Search upward for (L,D) and (R,S); downward otherwise.
    const bool up = left == dom;
    int found = 0;
    if (up) {
      for (int j = k + 1; j <= n && found == 0; ++j) {
        if (prof.r[j] == prof.r[k]) found = j;
      }
    } else {
      for (int j = k - 1; j >= 1 && found == 0; --j) {
        if (prof.r[j] == prof.r[k]) found = j;
      }
    }
    if (found == 0) {
      throw std::logic_error("Z-map search set empty; invalid partition");
    }
    z[k - 1] = found;
  }
  for (int k = 1; k <= n; ++k) {
    if (z[z[k - 1] - 1] != k) throw std::logic_error("Z-map is not involutive");
  }
  return z;
}

std::pair<PairPartition, std::vector<int>> BarPartition(
    const ColoredPairPartition& p) {
  const std::vector<int> z = ZMap(p);
  const std::vector<PointClass> cls = Classify(p);
  auto bar_color = [&](int k) {
    const int c = p.ColorOfPoint(k);
    return cls[k - 1] == PointClass::kS ? c : 1 - c;
  };
  std::vector<Pair> pairs;
  std::vector<int> colors;
  for (int k = 1; k <= p.base.size(); ++k) {
    if (k < z[k - 1]) {
      if (bar_color(k) != bar_color(z[k - 1])) {
        throw std::logic_error("bar coloring depends on the endpoint");
      }
      pairs.emplace_back(k, z[k - 1]);
      colors.push_back(bar_color(k));
    }
  }
  return {PairPartition(std::move(pairs)), std::move(colors)};
}

int CountIncreasingRuns(const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 2) return 0;
  auto up = [&](int i) { return cycle[(i + 1) % len] > cycle[i]; };
  int runs = 0;
  for (int i = 0; i < len; ++i) {
    if (up(i) && !up((i + len - 1) % len)) ++runs;
  }
  return runs;
}

int CountDecreasingRuns(const std::vector<int>& cycle) {
  std::vector<int> negated(cycle.size());
  for (size_t i = 0; i < cycle.size(); ++i) negated[i] = -cycle[i];
  return CountIncreasingRuns(negated);
}

CycleGraphAnalysis BuildGraph(const ColoredPairPartition& p) {
  CycleGraphAnalysis g;
  g.profile = Profile(p);
  g.classification = Classify(p);
  g.z = ZMap(p);
  std::tie(g.bar_pairs, g.bar_colors) = BarPartition(p);
  const int n = p.base.size();
  for (int i = 0; i < p.m(); ++i) {
    const auto [l, r] = p.base.pairs()[i];
    g.arcs_f.push_back(Orient(l, r, p.colors[i]));
  }
  for (int i = 0; i < g.bar_pairs.m(); ++i) {
    const auto [l, r] = g.bar_pairs.pairs()[i];
    g.arcs_bar_f.push_back(Orient(l, r, g.bar_colors[i]));
  }
  std::vector<int> succ(n + 1, 0);
  std::vector<int> indeg(n + 1, 0);
  for (const auto* arcs : {&g.arcs_f, &g.arcs_bar_f}) {
    for (const auto& [u, v] : *arcs) {
      if (succ[u] != 0) throw std::logic_error("vertex with out-degree 2");
      succ[u] = v;
      ++indeg[v];
    }
  }
  for (int k = 1; k <= n; ++k) {
    if (succ[k] == 0 || indeg[k] != 1) {
      throw std::logic_error("graph is not a union of cycles");
    }
  }
  std::vector<bool> seen(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = succ[v]) {
      seen[v] = true;
      cycle.push_back(v);
    }
    g.inc_paths.push_back(CountIncreasingRuns(cycle));
    g.dec_paths.push_back(CountDecreasingRuns(cycle));
    ++g.gamma[g.inc_paths.back()];
    g.cycles.push_back(std::move(cycle));
  }
  return g;
}

}  // namespace gbm
