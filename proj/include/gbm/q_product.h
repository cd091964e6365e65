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

#ifndef GBM_Q_PRODUCT_H_
#define GBM_Q_PRODUCT_H_

#include <utility>
#include <vector>

#include "gbm/broken_partition.h"
#include "gbm/moments.h"
#include "gbm/pair_partition.h"
#include "gbm/rational.h"

namespace gbm {

// Symmetric matrix with entries in [-1, 1].
class QMatrix {
 public:
  // Throws std::invalid_argument if not square, symmetric and bounded.
  explicit QMatrix(std::vector<std::vector<Rational>> q);
  static QMatrix Constant(int k, const Rational& q);

  int size() const { return static_cast<int>(q_.size()); }
  const Rational& operator()(int i, int j) const { return q_[i][j]; }
  // Periodic extension; indices are 0-based.
  const Rational& Periodic(int i, int j) const {
    return q_[i % size()][j % size()];
  }

 private:
  std::vector<std::vector<Rational>> q_;
};

// Product of q over crossings times the per-color t-values of the color
// classes.
Rational QProductEval(const std::vector<UncoloredT>& ts, const QMatrix& q,
                      const ColoredPairPartition& p);

inline constexpr long kMaxColoringSum = 1L << 24;

// n^{-|V|} sum over c: V -> [n] of the periodic crossing weights times the
// t-values of the classes.
Rational TQStarN(const UncoloredT& t, const QMatrix& q_base, int n,
                 const PairPartition& v);

// N^{-|V|} sum over d: V -> [N] of the crossing weights.
Rational TQLimit(const QMatrix& q_base, const PairPartition& v);

struct CltPoint {
  int n;
  Rational value;
  Rational error;
};

std::vector<CltPoint> CltErrorCurve(const UncoloredT& t, const QMatrix& q_base,
                                    const PairPartition& v,
                                    const std::vector<int>& n_list);

struct PsdResult {
  double min_eigenvalue;
  bool symmetric;
  bool pass;
};

inline constexpr double kPsdTolerance = -1e-9;

PsdResult GramPsdCheck(const std::vector<BrokenPairPartition>& family,
                       const TFunction& t);

struct StirlingResult {
  Rational by_enumeration;
  Rational by_stirling_numbers;
  Rational rising_factorial;
  bool pass;
};

// Sum over S_{|N|+1} of N^{cycles}; |N| <= 7.
StirlingResult StirlingCheck(int n);

}  // namespace gbm

#endif  // GBM_Q_PRODUCT_H_
