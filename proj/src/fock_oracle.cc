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

#include "gbm/fock_oracle.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gbm/moments.h"

namespace gbm {
namespace {

long Factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void AddTo(FockVector& v, const FockKey& k, const Rational& a) {
  if (a == 0) return;
  auto [it, inserted] = v.emplace(k, a);
  if (!inserted) {
    it->second += a;
    if (it->second == 0) v.erase(it);
  }
}

void CheckN(int n) {
  if (n < 1) throw UnsupportedError("the oracle requires N >= 1");
  if (n > kDenseMaxN) {
    throw CapacityError("oracle limited to N <= " + std::to_string(kDenseMaxN));
  }
}

}  // namespace

DenseFock::DenseFock(int n) : n_(n) { CheckN(n); }

FockVector DenseFock::Vacuum() const {
  FockVector v;
  v[FockKey{}] = 1;
  return v;
}

FockVector DenseFock::Create(int b, int i, const FockVector& v) const {
  FockVector out;
  for (const auto& [key, amp] : v) {
    const int nb = key.Level(b);
    const int grows = nb >= key.Level(1 - b);
    const Rational coeff = amp * (nb + 1);
    FockKey next = key;
    next.w[b].push_back(static_cast<int8_t>(i));
    if (!grows) {
      AddTo(out, next, coeff);
      continue;
    }
    next.x.push_back(0);
    next.y.push_back(0);
    for (int z = 0; z < n_; ++z) {
      next.x.back() = static_cast<int8_t>(z);
      next.y.back() = static_cast<int8_t>(z);
      AddTo(out, next, coeff);
    }
  }
  return Symmetrize(out);
}

FockVector DenseFock::Annihilate(int b, int i, const FockVector& v) const {
  FockVector out;
  for (const auto& [key, amp] : v) {
    const int nb = key.Level(b);
    if (nb == 0 || key.w[b].back() != i) continue;
    FockKey next = key;
    next.w[b].pop_back();
    if (nb > key.Level(1 - b)) {
      if (key.x.back() != key.y.back()) continue;
      next.x.pop_back();
      next.y.pop_back();
      AddTo(out, next, amp / n_);
    } else {
      AddTo(out, next, amp);
    }
  }
  return out;
}

FockVector DenseFock::Symmetrize(const FockVector& v) const {
  FockVector out;
  for (const auto& [key, amp] : v) {
    const int n0 = key.Level(0);
    const int n1 = key.Level(1);
    const Rational weight = amp / (Factorial(n0) * Factorial(n1));
    std::vector<int> s0(n0), s1(n1);
    std::iota(s0.begin(), s0.end(), 0);
    do {
      std::iota(s1.begin(), s1.end(), 0);
      do {
        FockKey next = key;
        for (int j = 0; j < n0; ++j) {
          next.x[s0[j]] = key.x[j];
          next.w[0][s0[j]] = key.w[0][j];
        }
        for (int j = 0; j < n1; ++j) {
          next.y[s1[j]] = key.y[j];
          next.w[1][s1[j]] = key.w[1][j];
        }
        AddTo(out, next, weight);
      } while (std::next_permutation(s1.begin(), s1.end()));
    } while (std::next_permutation(s0.begin(), s0.end()));
  }
  return out;
}

Rational DenseFock::Inner(const FockVector& u, const FockVector& v) const {
  Rational sum = 0;
  for (const auto& [key, amp] : u) {
    auto it = v.find(key);
    if (it == v.end()) continue;
    Rational w = amp * it->second;
    w /= Factorial(key.Level(0)) * Factorial(key.Level(1));
    sum += w / Pow(Rational(n_), key.n());
  }
  return sum;
}

FockVector DenseFock::Apply(const Word& a, const FockVector& v) const {
  FockVector cur = v;
  for (auto it = a.rbegin(); it != a.rend() && !cur.empty(); ++it) {
    cur = it->create ? Create(it->b, it->i, cur) : Annihilate(it->b, it->i, cur);
  }
  return cur;
}

int MaxLevel(const Word& a) {
  int level[2] = {0, 0};
  int best = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    level[it->b] += it->create ? 1 : -1;
    if (level[it->b] < 0) return best;  // the vector vanishes from here on
    best = std::max(best, level[it->b]);
  }
  return best;
}

Rational VacuumExpectationDense(const Word& a, int n) {
  for (const Letter& x : a) {
    if (x.b != 0 && x.b != 1) throw std::invalid_argument("color must be 0 or 1");
    if (x.i < 1 || x.i > 127) throw std::invalid_argument("index out of range");
  }
  CheckN(n);
  if (MaxLevel(a) > kDenseMaxLevel) {
    throw CapacityError("dense oracle limited to level <= " +
                        std::to_string(kDenseMaxLevel));
  }
  const DenseFock fock(n);
  const FockVector out = fock.Apply(a, fock.Vacuum());
  auto it = out.find(FockKey{});
  return it == out.end() ? Rational(0) : it->second;
}

namespace {

// Elementary vector: D times the symmetrization of
// delta_(x0, x1) tensor (words w0, w1), all indices distinct.
struct Elementary {
  Rational d = 1;
  std::vector<int> x[2];
  std::vector<int> w[2];
};

class LambdaSum {
 public:
  LambdaSum(const Word& word, int n) : word_(word), n_(n) {}

  Rational Run() {
    Elementary start;
    Step(static_cast<int>(word_.size()) - 1, start);
    return total_;
  }

 private:
  void Step(int pos, Elementary& e) {
    if (e.d == 0) return;
    if (pos < 0) {
      total_ += e.d;
      return;
    }
    const Letter& l = word_[pos];
    const int b = l.b;
    const int nb = static_cast<int>(e.w[b].size());
    const int nother = static_cast<int>(e.w[1 - b].size());
    if (l.create) {
      Elementary next = e;
      next.w[b].push_back(l.i);
      next.d *= nb + 1;
      if (nb < nother) {
        Step(pos - 1, next);
        return;
      }
      next.x[0].push_back(0);
      next.x[1].push_back(0);
      for (int z = 0; z < n_; ++z) {
        next.x[0].back() = z;
        next.x[1].back() = z;
        Elementary branch = next;
        Step(pos - 1, branch);
      }
      return;
    }
    auto found = std::find(e.w[b].begin(), e.w[b].end(), l.i);
    if (found == e.w[b].end()) return;
    Elementary next = e;
    const int at = static_cast<int>(found - e.w[b].begin());
    std::swap(next.w[b][at], next.w[b][nb - 1]);
    std::swap(next.x[b][at], next.x[b][nb - 1]);
    next.w[b].pop_back();
    next.d /= nb;
    if (nb > nother) {
      if (next.x[0].back() != next.x[1].back()) return;
      next.d /= n_;
      next.x[0].pop_back();
      next.x[1].pop_back();
    }
    Step(pos - 1, next);
  }

  const Word& word_;
  int n_;
  Rational total_ = 0;
};

}  // namespace

Rational VacuumExpectationLambda(const ColoredPairPartition& p, int n) {
  CheckN(n);
  const Word word = CanonicalWord(AsTwoColored(p));
  if (MaxLevel(word) > kLambdaMaxLevel) {
    throw CapacityError("lambda oracle limited to level <= " +
                        std::to_string(kLambdaMaxLevel));
  }
  return LambdaSum(word, n).Run();
}

}  // namespace gbm
